"""Weakly closed subgroups of U in small finite groups.

Run with ``python demos/weak_closure.py``.  SL3(3) shows the clean
classification; SL3(2) and SU3(2) show the extra members.
"""

from weakclosure.finitegrp import groups, weak


def survey(kind, q, n=None):
    G = groups.get_group(kind, q, n)
    subs = weak.subgroups_of(G, G.U)
    wc = weak.enumerate_weakly_closed(G)
    print(f"{G.label}: |G|={G.order} |U|={G.U.order}, "
          f"{len(subs)} subgroups of U, {len(wc)} weakly closed")
    for X in wc:
        label = weak.radical_label(G, X)
        where = f"P_u(J={label})" if label is not None else "not a radical"
        gens = ", ".join(G.describe(g) for g in X.generators) or "1"
        print(f"  order {X.order:3d}  {where:18s} <{gens}>")
    print()
    return G


def main():
    survey("SL", 3, 3)
    G = survey("SL", 2, 3)
    X = weak.example1_subgroup(G)
    print(f"example in {G.label}: X = <u, Y> has order {X.order}, "
          f"weakly closed = {weak.is_weakly_closed(G, X)}\n")
    G = survey("SU3", 2)
    Z = G.center_of(G.U)
    print(f"Z(U) in {G.label}: order {Z.order}, fixed points on G/N_G(Z) = "
          f"{weak.fixed_point_count(G, Z)}")


if __name__ == "__main__":
    main()
