import numpy as np
import pytest

from weakclosure import chevalley, parabolics, rootsys
from weakclosure.parabolics import parabolic

ALL = rootsys.supported_types(8)
SMALL = [tn for tn in ALL if tn[1] <= 4]
SAMPLES = [(1, 1), (2, 3), (3, 1), (4, 2)]


def basis(t, n):
    return chevalley.get(t, n)


@pytest.mark.parametrize("t,n", ALL)
def test_jacobi_adjoint_lattice(t, n):
    assert chevalley.jacobi_violations(basis(t, n), "adjoint") == []


@pytest.mark.parametrize("t,n", SMALL)
def test_jacobi_coroot_lattice(t, n):
    assert chevalley.jacobi_violations(basis(t, n), "sc") == []


@pytest.mark.parametrize("t,n", SMALL + [("E", 6)])
def test_structure_constant_invariants(t, n):
    b = basis(t, n)
    rs = b.system
    for a in rs.roots:
        for c in rs.roots:
            if rs.sum(a, c) is None:
                continue
            nab = b.n(a, c)
            assert abs(nab) == rs.string_down(a, c) + 1
            assert b.n(c, a) == -nab
            assert b.n(tuple(-x for x in a), tuple(-x for x in c)) == -nab


def test_documented_magnitudes():
    assert abs(basis("A", 2).n((1, 0), (0, 1))) == 1
    assert abs(basis("B", 2).n((0, 1), (1, 1))) == 2
    assert abs(basis("G", 2).n((1, 0), (2, 1))) == 3


def test_extraspecial_signs_positive():
    b = basis("F", 4)
    assert b.extraspecial
    for xi, (r, s) in b.extraspecial.items():
        assert b.n(r, s) > 0
        assert tuple(x + y for x, y in zip(r, s)) == xi


def test_a2_commutators():
    b = basis("A", 2)
    assert [(i, j, abs(c)) for i, j, c in b.commutator_coeffs((1, 0), (0, 1))] == [(1, 1, 1)]
    assert b.commutator_coeffs((1, 0), (1, 1)) == []


def test_g2_commutator_alpha1_alpha2():
    # frozen from the adjoint computation; magnitudes 1, 1, 1, 2
    entries = basis("G", 2).commutator_coeffs((1, 0), (0, 1))
    assert [(i, j) for i, j, _ in entries] == [(1, 1), (2, 1), (3, 1), (3, 2)]
    assert [abs(c) for _, _, c in entries] == [1, 1, 1, 2]


@pytest.mark.parametrize("t,n", SMALL)
def test_table_shape(t, n):
    b = basis(t, n)
    rs = b.system
    for (a, c), entries in b.commutator_table.items():
        expected = [(i, j) for i in range(1, 5) for j in range(1, 5)
                    if rs.is_root(tuple(i * x + j * y for x, y in zip(a, c)))]
        expected.sort(key=lambda e: (e[0] + e[1], e[0]))
        assert [(i, j) for i, j, _ in entries] == expected
        assert all(abs(v) in (1, 2, 3) for _, _, v in entries)
        assert entries[0][2] == b.n(a, c)


def _mul(ms, p):
    out = ms[0]
    for m in ms[1:]:
        out = out @ m % p
    return out


@pytest.mark.parametrize("t,n", SMALL)
@pytest.mark.parametrize("p", [5, 7])
def test_commutator_table_matrix_oracle(t, n, p):
    b = basis(t, n)
    for (a, c), entries in b.commutator_table.items():
        for tt, uu in SAMPLES:
            lhs = _mul([b.adjoint_matrix(a, tt, p), b.adjoint_matrix(c, uu, p),
                        b.adjoint_matrix(a, -tt, p), b.adjoint_matrix(c, -uu, p)], p)
            rhs = np.eye(b.dim, dtype=np.int64)
            for i, j, v in entries:
                root = tuple(i * x + j * y for x, y in zip(a, c))
                rhs = rhs @ b.adjoint_matrix(root, v * tt**i * uu**j, p) % p
            assert np.array_equal(lhs, rhs), (a, c, tt, uu)


@pytest.mark.parametrize("t,n", [("A", 2), ("B", 2), ("G", 2), ("C", 3)])
def test_exp_additivity(t, n):
    b = basis(t, n)
    p = 5
    for g in b.system.roots:
        m1 = b.adjoint_matrix(g, 1, p)
        assert np.array_equal(b.adjoint_matrix(g, 0, p), np.eye(b.dim, dtype=np.int64))
        assert np.array_equal(b.adjoint_matrix(g, 2, p), m1 @ m1 % p)
        assert np.array_equal(b.adjoint_matrix(g, 3, p) @ b.adjoint_matrix(g, 4, p) % p,
                              b.adjoint_matrix(g, 2, p))


def test_a2_adjoint_moves_e_alpha2():
    b = basis("A", 2)
    m = b.adjoint_matrix((1, 0), 1, 5)
    col = m[:, b.basis_index[(0, 1)]]
    nz = {k: int(v) for k, v in enumerate(col) if v}
    assert set(nz) == {b.basis_index[(0, 1)], b.basis_index[(1, 1)]}
    assert nz[b.basis_index[(0, 1)]] == 1 and nz[b.basis_index[(1, 1)]] in (1, 4)


@pytest.mark.parametrize("t,n", ALL)
def test_dividing_primes_are_very_bad(t, n):
    assert basis(t, n).dividing_primes() == parabolics.very_bad_primes(t)


def test_rank_mod_p():
    m = np.array([[1, 2], [2, 4]])
    assert chevalley.rank_mod_p(m, 5) == 1
    assert chevalley.rank_mod_p(np.array([[2, 0], [0, 2]]), 2) == 0
    assert chevalley.rank_mod_p(np.eye(3, dtype=int), 7) == 3


@pytest.mark.parametrize("t,n,J,p,expected", [
    ("A", 2, [0], 5, 2),
    ("B", 2, [], 2, 2),
    ("E", 6, [], 5, 1),
])
def test_lie_centralizer_examples(t, n, J, p, expected):
    d = parabolic(rootsys.get(t, n), J)
    assert chevalley.lie_centralizer_dim(basis(t, n), d, p) == expected


@pytest.mark.parametrize("t,n", [tn for tn in SMALL if tn[1] >= 2])
@pytest.mark.parametrize("p", [2, 3])
def test_lie_centralizer_matches_gamma_mod_p(t, n, p):
    # observed in every bad and good case up to rank 4
    rs, b = rootsys.get(t, n), basis(t, n)
    for d in parabolics.all_parabolics(rs, proper_only=True):
        assert chevalley.lie_centralizer_dim(b, d, p) == len(parabolics.centralizer_roots(d, p))


def test_coroot_lattice_sees_the_center():
    # sl_5 has a one-dimensional center in characteristic 5
    d = parabolic(rootsys.get("A", 4), [])
    b = basis("A", 4)
    assert chevalley.lie_centralizer_dim(b, d, 5, lattice="sc") == 2
    assert chevalley.lie_centralizer_dim(b, d, 5) == 1


def test_lie_full_radical_trivial():
    rs = rootsys.get("B", 3)
    d = parabolic(rs, [0, 1, 2])
    assert chevalley.lie_centralizer_dim(basis("B", 3), d, 5) == rs.dim_g


def test_lie_rejects_composite():
    with pytest.raises(ValueError):
        chevalley.lie_centralizer_dim(basis("A", 2), parabolic(rootsys.get("A", 2), []), 6)
