"""Root data and structure constants for a few types.

Run with ``python demos/root_systems.py``.
"""

from weakclosure import chevalley, parabolics, rootsys


def main():
    for t, n in [("B", 2), ("G", 2), ("F", 4), ("E", 8)]:
        rs = rootsys.get(t, n)
        basis = chevalley.get(t, n)
        print(f"{rs.name}: |Psi|={rs.num_roots} dim g={rs.dim_g} "
              f"highest root {rs.format_root(rs.roots[rs.highest_root])}")
        print(f"  primes dividing commutator coefficients: {sorted(basis.dividing_primes())}"
              f"  very bad: {sorted(parabolics.very_bad_primes(t))}")
    g2 = chevalley.get("G", 2)
    rs = g2.system
    a, b = rs.simple
    print("\nG2 commutator [x_a(t), x_b(u)] for the simple roots:")
    for i, j, c in g2.commutator_table[a, b]:
        root = tuple(i * x + j * y for x, y in zip(a, b))
        print(f"  x_{rs.format_root(root)}({c} t^{i} u^{j})")


if __name__ == "__main__":
    main()
