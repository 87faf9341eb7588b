import pytest

from weakclosure.finitegrp import weak
from weakclosure.finitegrp.groups import get_group

INSTANCES = [("SL", 3, 3), ("SL", 2, 3), ("Sp4", 2, None), ("SU3", 2, None), ("SU3", 3, None),
             ("SL", 2, 4), ("Sp4", 3, None), ("SL", 5, 2)]


@pytest.fixture(scope="module")
def sl33():
    return get_group("SL", 3, 3)


def test_radical_is_weakly_closed(sl33):
    assert weak.is_weakly_closed(sl33, sl33.parabolic_radical({0}))


def test_highest_root_subgroup_not_weakly_closed(sl33):
    Z = sl33.root_subgroup((1, 1))
    assert Z == sl33.center_of(sl33.U)
    assert not weak.is_weakly_closed(sl33, Z)
    assert weak.fixed_point_count(sl33, Z) == 7
    assert not weak.is_weakly_closed_via_fixed_point(sl33, Z)


def test_u_has_one_fixed_point(sl33):
    assert weak.fixed_point_count(sl33, sl33.U) == 1
    assert weak.is_weakly_closed_via_fixed_point(sl33, sl33.U)


def test_su3_center_of_u():
    G = get_group("SU3", 2)
    Z = G.center_of(G.U)
    assert Z.order == 2
    assert weak.is_weakly_closed(G, Z)
    assert weak.is_weakly_closed_via_fixed_point(G, Z)


@pytest.mark.parametrize("root", [(1, 0), (0, 1), (1, 1)])
def test_weak_closure_of_root_subgroups(sl33, root):
    X = weak.weak_closure(sl33, sl33.root_subgroup(root))
    assert X == sl33.U
    assert weak.is_weakly_closed(sl33, X)


def test_weak_closure_fixes_weakly_closed(sl33):
    for X in weak.enumerate_weakly_closed(sl33):
        assert weak.weak_closure(sl33, X) == X


@pytest.mark.parametrize("kind,q,n,n_subgroups,n_wc", [
    ("SL", 3, 3, 19, 4),
    ("SL", 2, 3, 10, 5),
    ("SL", 2, 4, 225, 14),
    ("Sp4", 2, None, 35, 13),
    ("Sp4", 3, None, 50, 4),
    ("SU3", 2, None, 6, 6),
    ("SU3", 3, None, 19, 3),
    ("SL", 5, 2, 2, 2),
    ("SL", 4, 2, 5, 2),
])
def test_weakly_closed_counts(kind, q, n, n_subgroups, n_wc):
    # counts found by exhaustion
    G = get_group(kind, q, n)
    assert len(weak.subgroups_of(G, G.U)) == n_subgroups
    assert len(weak.enumerate_weakly_closed(G)) == n_wc


def test_sl33_classification(sl33):
    wc = weak.enumerate_weakly_closed(sl33)
    assert set(wc) == set(sl33.parabolic_radicals().values())
    assert sorted(weak.radical_label(sl33, X) for X in wc) == [[], [1], [1, 2], [2]]


@pytest.mark.parametrize("kind,q,n", [("SL", 2, 2), ("SL", 3, 2), ("SL", 5, 2)])
def test_rank_one(kind, q, n):
    G = get_group(kind, q, n)
    assert weak.enumerate_weakly_closed(G) == [G.trivial, G.U]


@pytest.mark.parametrize("kind,q,n", INSTANCES)
def test_definitions_agree(kind, q, n):
    G = get_group(kind, q, n)
    for X in weak.subgroups_of(G, G.U):
        assert weak.is_weakly_closed(G, X) == weak.is_weakly_closed_via_fixed_point(G, X)


@pytest.mark.parametrize("kind,q,n", INSTANCES)
def test_weakly_closed_normalizers(kind, q, n):
    G = get_group(kind, q, n)
    for X in weak.enumerate_weakly_closed(G):
        N = G.normalizer(X)
        assert G.B <= N
        assert G.normalizer(N) == N
        assert weak.is_normal_in(G, X, G.U)


@pytest.mark.parametrize("kind,q,n", INSTANCES)
def test_radicals_weakly_closed(kind, q, n):
    G = get_group(kind, q, n)
    for R in G.parabolic_radicals().values():
        assert weak.is_weakly_closed(G, R)


@pytest.mark.parametrize("kind,q,n,y_order,x_order", [
    ("SL", 2, 3, 2, 4),
    ("Sp4", 2, None, 4, 8),
    ("SL", 2, 4, 8, 16),
])
def test_example1(kind, q, n, y_order, x_order):
    G = get_group(kind, q, n)
    X = weak.example1_subgroup(G)
    assert weak.example1_Y(G).order == y_order
    assert X.order == x_order
    assert weak.is_weakly_closed(G, X)
    assert weak.radical_label(G, X) is None


def test_example1_refused_off_f2(sl33):
    with pytest.raises(weak.PreconditionError):
        weak.example1_subgroup(sl33)
    with pytest.raises(weak.PreconditionError):
        weak.example1_subgroup(get_group("SU3", 2))


@pytest.mark.parametrize("kind,q,n", [("SL", 2, 3), ("Sp4", 2, None), ("SL", 3, 3), ("SL", 5, 2)])
def test_regular_unipotent(kind, q, n):
    G = get_group(kind, q, n)
    u = weak.regular_unipotent(G)
    assert u in G.U
    assert weak.borels_containing(G, u) == 1


def test_regular_unipotent_order_sl32():
    G = get_group("SL", 2, 3)
    assert G.element_order(weak.regular_unipotent(G)) == 4


def test_non_regular_lies_in_several_borels(sl33):
    assert weak.borels_containing(sl33, sl33.x((1, 1), 1)) > 1


def test_f_mult(sl33):
    assert weak.f_mult(sl33, sl33.trivial) == sl33.order
    assert weak.f_mult(sl33, sl33.U) == 27**2 * sl33.center_of(sl33.U).order == 2187


@pytest.mark.parametrize("kind,q,n", [("SL", 3, 3), ("Sp4", 2, None)])
def test_f_mult_maximizers_transfer(kind, q, n):
    G = get_group(kind, q, n)
    subs = weak.subgroups_of(G, G.U)
    for pool in (subs, [X for X in subs if X.order > 1]):
        values = [weak.f_mult(G, X) for X in pool]
        top = max(values)
        for X, v in zip(pool, values):
            if v == top:
                assert weak.f_mult(G, weak.weak_closure(G, X)) == top


def test_lemma_centralizer_in_radical_times_center():
    for kind, q, n in [("SL", 3, 3), ("Sp4", 2, None), ("Sp4", 3, None)]:
        G = get_group(kind, q, n)
        for J, R in G.parabolic_radicals().items():
            if len(J) == G.system.rank:
                continue
            PZ = G.subgroup(list(R.generators) + list(G.center.generators))
            assert G.centralizer(R) <= PZ


def test_enumeration_cap():
    G = get_group("SL", 2, 4)
    with pytest.raises(weak.EnumerationCapExceeded):
        weak.subgroups_of(G, G.U, cap=32)


def test_orbit_cap():
    G = get_group("SL", 3, 3)
    with pytest.raises(weak.OrbitCapExceeded):
        list(weak.conjugacy_orbit(G, G.root_subgroup((1, 0)), cap=3))
