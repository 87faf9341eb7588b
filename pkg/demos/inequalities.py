"""Walk through the dimension inequalities for the rank-two groups.

Run with ``python demos/inequalities.py``.
"""

from weakclosure import chevalley, parabolics, rootsys, verify


def show_gamma(type_label, rank, p):
    rs = rootsys.get(type_label, rank)
    basis = chevalley.get(type_label, rank)
    for d in parabolics.all_parabolics(rs, proper_only=True):
        generic = parabolics.RootSubset(rs, d.gamma_generic.mask)
        modp = parabolics.centralizer_roots(d, p, basis)
        lie = chevalley.lie_centralizer_dim(basis, d, p)
        print(f"  J={d.J_labels}  dim P_u={d.dim_pu}  Gamma={generic.formatted()}"
              f"  Gamma mod {p}={modp.formatted()}  lie={lie}")


def main():
    for t, n, p in [("A", 2, 5), ("B", 2, 2), ("G", 2, 2), ("G", 2, 3)]:
        print(f"{t}{n}, p = {p}")
        show_gamma(t, n, p)
        rep = verify.check_2F(t, n, p)
        for r in rep.records:
            mark = "<" if r.lhs < r.rhs else "=" if r.lhs == r.rhs else ">"
            print(f"  2F  J={list(r.J)}: {r.lhs} {mark} {r.rhs}")
        print(f"  verdict={rep.verdict} matches recorded boundary={rep.as_expected}\n")

    w = verify.r2F_window("E", 8)
    print(f"E8 module dimensions excluded by the 2F bound: {w.low} .. {w.high}")


if __name__ == "__main__":
    main()
