"""Chevalley basis structure constants, commutator coefficients and the
integral adjoint representation.

Signs follow the extraspecial-pair convention: positive roots are totally
ordered by the canonical order of :mod:`weakclosure.rootsys`; for every
non-simple positive root xi the extraspecial pair (r, s) has r minimal with
xi - r positive, and N_{r,s} is taken positive.  Every other N is forced by
the standard identities, and N_{-a,-b} = -N_{a,b}.

Two integral forms of the Lie algebra are available:

``"adjoint"``
    Cartan part spanned by the fundamental coweights; the Lie algebra of the
    adjoint group.  This is the default, matching the adjoint Chevalley
    groups used elsewhere in the package.
``"sc"``
    Cartan part spanned by the simple coroots h_i; the Lie algebra of the
    simply connected group.

Commutator coefficients use ``[x, y] = x y x^-1 y^-1`` and the product order
of increasing ``i + j`` (ties by increasing ``i``)::

    [x_a(t), x_b(u)] = prod x_{ia+jb}(C_ij t^i u^j)
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

import numpy as np

from .rootsys import Root, RootSystem
from . import rootsys as _rootsys

LATTICES = ("adjoint", "sc")


class StructureConstantError(RuntimeError):
    """Internal consistency failure (non-integral value where an integer is
    forced).  Signals a bug in the structure constants."""


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Root) -> Root:
    return tuple(-x for x in a)


def _scale(k: int, a: Root) -> Root:
    return tuple(k * x for x in a)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise StructureConstantError(f"non-integral {what}: {x}")
    return int(x)


class ChevalleyBasis:
    """Structure constants of a Chevalley basis for ``system``.

    Basis order: h_1..h_r (coroots or coweights, see module docstring), then
    e_gamma for every root gamma in canonical root order.
    """

    def __init__(self, system: RootSystem):
        self.system = system
        self._order = {r: k for k, r in enumerate(system.positive)}
        self.extraspecial: dict[Root, tuple[Root, Root]] = {}
        self._special: dict[tuple[Root, Root], int] = {}
        self._build_special()
        self.N: dict[tuple[Root, Root], int] = {}
        for a in system.roots:
            for b in system.roots:
                if system.sum(a, b) is not None:
                    self.N[a, b] = self._n(a, b)

    # -- construction ------------------------------------------------------

    def _build_special(self) -> None:
        rs = self.system
        for xi in rs.positive:
            if sum(xi) == 1:
                continue
            pairs = []
            for r in rs.positive:
                s = tuple(x - y for x, y in zip(xi, r))
                if s in rs.index and sum(s) > 0 and self._order[r] < self._order[s]:
                    pairs.append((r, s))
            pairs.sort(key=lambda rs_: self._order[rs_[0]])
            r1, s1 = pairs[0]
            self.extraspecial[xi] = (r1, s1)
            n1 = rs.string_down(r1, s1) + 1
            self._special[r1, s1] = n1
            for r, s in pairs[1:]:
                val = Fraction(0)
                t = _add(s, _neg(r1))
                if t in rs.index:
                    val += Fraction(self._n(s, _neg(r1)) * self._n(r, _neg(s1)), rs.norm(t))
                t = _add(r, _neg(r1))
                if t in rs.index:
                    val += Fraction(self._n(_neg(r1), r) * self._n(s, _neg(s1)), rs.norm(t))
                val = val * rs.norm(xi) / n1
                self._special[r, s] = _as_int(val, f"N{r},{s}")

    def _n(self, a: Root, b: Root) -> int:
        rs = self.system
        c = _add(a, b)
        if c not in rs.index:
            return 0
        pa, pb = sum(a) > 0, sum(b) > 0
        if pa and pb:
            if self._order[a] < self._order[b]:
                return self._special[a, b]
            return -self._special[b, a]
        if not pa and not pb:
            return -self._n(_neg(a), _neg(b))
        # a + b + t = 0:  N_ab/(t,t) = N_bt/(a,a) = N_ta/(b,b)
        t = _neg(c)
        if (sum(t) > 0) == pb:
            val = Fraction(rs.norm(t), rs.norm(a)) * self._n(b, t)
        else:
            val = Fraction(rs.norm(t), rs.norm(b)) * self._n(t, a)
        return _as_int(val, f"N{a},{b}")

    # -- queries -----------------------------------------------------------

    def n(self, a: Root, b: Root) -> int:
        """N_{a,b}, or 0 when a + b is not a root."""
        return self.N.get((tuple(a), tuple(b)), 0)

    @property
    def dim(self) -> int:
        return self.system.dim_g

    @cached_property
    def basis_index(self) -> dict[Root, int]:
        r = self.system.rank
        return {root: r + k for k, root in enumerate(self.system.roots)}

    def coroot(self, gamma: Root, lattice: str = "adjoint") -> dict[int, int]:
        """h_gamma = [e_gamma, e_-gamma] in the Cartan basis of ``lattice``."""
        rs = self.system
        out = {}
        for i in range(rs.rank):
            if lattice == "sc":
                v = Fraction(gamma[i] * rs.gram[i][i], rs.norm(gamma))
                v = _as_int(v, "coroot coefficient")
            else:
                v = rs.coroot_pairing(rs.unit(i), gamma)
            if v:
                out[i] = v
        return out

    def cartan_weight(self, i: int, gamma: Root, lattice: str = "adjoint") -> int:
        """Eigenvalue of the i-th Cartan basis vector on e_gamma."""
        if lattice == "sc":
            return self.system.pairing(gamma, i)
        return gamma[i]

    def bracket(self, x: int, y: int, lattice: str = "adjoint") -> dict[int, int]:
        """[b_x, b_y] for basis indices x, y, as a sparse integer vector."""
        rs = self.system
        r = rs.rank
        if x < r and y < r:
            return {}
        if x < r:
            g = rs.roots[y - r]
            w = self.cartan_weight(x, g, lattice)
            return {y: w} if w else {}
        if y < r:
            g = rs.roots[x - r]
            w = self.cartan_weight(y, g, lattice)
            return {x: -w} if w else {}
        a, b = rs.roots[x - r], rs.roots[y - r]
        c = _add(a, b)
        if not any(c):
            return self.coroot(a, lattice)
        if c in rs.index:
            return {self.basis_index[c]: self.N[a, b]}
        return {}

    def ad_matrix(self, x: int, lattice: str = "adjoint") -> np.ndarray:
        """Integer matrix of ad(b_x); column j holds [b_x, b_j]."""
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for j in range(self.dim):
            for k, v in self.bracket(x, j, lattice).items():
                m[k, j] = v
        return m

    def ad_root(self, gamma: Root, lattice: str = "adjoint") -> np.ndarray:
        return self.ad_matrix(self.basis_index[tuple(gamma)], lattice)

    def exp_terms(self, gamma: Root, lattice: str = "adjoint") -> list[np.ndarray]:
        """Integer matrices M_k = ad(e_gamma)^k / k! for k = 0, 1, ... while
        nonzero, so that Ad(x_gamma(t)) = sum_k t^k M_k."""
        key = (tuple(gamma), lattice)
        cache = self.__dict__.setdefault("_exp_cache", {})
        if key in cache:
            return cache[key]
        ad = self.ad_root(gamma, lattice)
        terms = [np.eye(self.dim, dtype=np.int64)]
        power = np.eye(self.dim, dtype=np.int64)
        k = 0
        while True:
            k += 1
            power = ad @ power
            if not power.any():
                break
            fact = 1
            for i in range(2, k + 1):
                fact *= i
            if np.any(power % fact):
                raise StructureConstantError(
                    f"ad(e_{gamma})^{k}/{k}! is not integral"
                )
            terms.append(power // fact)
            if k > 4:
                raise StructureConstantError(f"ad(e_{gamma}) not nilpotent of index <= 4")
        cache[key] = terms
        return terms

    def adjoint_matrix(self, gamma: Root, t: int, p: int, lattice: str = "adjoint") -> np.ndarray:
        """Ad(x_gamma(t)) reduced mod p."""
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        tk = 1
        for m in self.exp_terms(gamma, lattice):
            out = (out + tk * m) % p
            tk = tk * t % p
        return out

    # -- commutator coefficients --------------------------------------------

    def _exp_apply(self, gamma: Root, t: Fraction, vec: dict[int, Fraction],
                   lattice: str = "adjoint") -> dict[int, Fraction]:
        """exp(t ad e_gamma) applied to a sparse vector."""
        x = self.basis_index[gamma]
        out = dict(vec)
        term = dict(vec)
        k = 0
        while term:
            k += 1
            nxt: dict[int, Fraction] = {}
            for j, c in term.items():
                for i, v in self.bracket(x, j, lattice).items():
                    nxt[i] = nxt.get(i, 0) + c * v * t / k
            term = {i: c for i, c in nxt.items() if c}
            for i, c in term.items():
                out[i] = out.get(i, 0) + c
        return {i: c for i, c in out.items() if c}

    def commutator_coeffs(self, a: Root, b: Root) -> list[tuple[int, int, int]]:
        """Coefficients (i, j, C_ij) of [x_a(t), x_b(u)] for positive a != b.

        Derived from the adjoint action: the commutator at t = u = 1 is
        applied to a Cartan element and the root factors are peeled off in
        product order.  Empty list means the root subgroups commute.
        """
        rs = self.system
        a, b = tuple(a), tuple(b)
        combos = []
        for i in range(1, 5):
            for j in range(1, 5):
                c = _add(_scale(i, a), _scale(j, b))
                if c in rs.index:
                    combos.append((i, j, c))
        if not combos:
            return []
        combos.sort(key=lambda e: (e[0] + e[1], e[0]))
        one = Fraction(1)
        out = []
        # product for g = x_a(1) x_b(1) x_a(-1) x_b(-1); Ad(g) = Ad(x_a)Ad(x_b)...
        factors = [(a, one), (b, one), (a, -one), (b, -one)]
        peeled: list[tuple[Root, Fraction]] = []
        for i, j, c in combos:
            h = next(k for k in range(rs.rank) if self.cartan_weight(k, c))
            vec = {h: Fraction(1)}
            for root, coeff in reversed(factors):
                vec = self._exp_apply(root, coeff, vec)
            for root, coeff in peeled:
                vec = self._exp_apply(root, -coeff, vec)
            # coefficient of e_c in Ad(x_c(C)) h is -C * c(h)
            coef = vec.get(self.basis_index[c], Fraction(0))
            val = -coef / self.cartan_weight(h, c)
            C = _as_int(val, f"C_{i}{j} for ({a}, {b})")
            peeled.append((c, Fraction(C)))
            if C:
                out.append((i, j, C))
        return out

    @cached_property
    def commutator_table(self) -> dict[tuple[Root, Root], list[tuple[int, int, int]]]:
        """Coefficients for every ordered pair of distinct positive roots with
        some ia + jb a root."""
        rs = self.system
        table = {}
        for a in rs.positive:
            for b in rs.positive:
                if a == b or rs.sum(a, b) is None:
                    continue
                table[a, b] = self.commutator_coeffs(a, b)
        return table

    def dividing_primes(self) -> set[int]:
        """Primes dividing some commutator coefficient."""
        primes = set()
        for entries in self.commutator_table.values():
            for _, _, c in entries:
                c, d = abs(c), 2
                while c > 1:
                    while c % d == 0:
                        primes.add(d)
                        c //= d
                    d += 1
        return primes


_CACHE: dict[tuple[str, int], ChevalleyBasis] = {}


def build_basis(system: RootSystem) -> ChevalleyBasis:
    return ChevalleyBasis(system)


def get(type_label: str, rank: int) -> ChevalleyBasis:
    """Cached Chevalley basis for a (type, rank)."""
    key = (type_label, rank)
    if key not in _CACHE:
        _CACHE[key] = ChevalleyBasis(_rootsys.get(type_label, rank))
    return _CACHE[key]


def jacobi_violations(basis: ChevalleyBasis, lattice: str = "adjoint", limit: int = 10):
    """Basis pairs (x, y) with ad[b_x, b_y] != [ad b_x, ad b_y].

    Equivalent to the Jacobi identity on all basis triples.  Returns at most
    ``limit`` offending pairs.
    """
    from scipy import sparse

    dim = basis.dim
    ads = []
    for x in range(dim):
        rows, cols, vals = [], [], []
        for j in range(dim):
            for k, v in basis.bracket(x, j, lattice).items():
                rows.append(k)
                cols.append(j)
                vals.append(v)
        ads.append(sparse.csr_matrix((vals, (rows, cols)), shape=(dim, dim), dtype=np.int64))
    bad = []
    for x in range(dim):
        for y in range(x + 1, dim):
            lhs = ads[x] @ ads[y] - ads[y] @ ads[x]
            rhs = sparse.csr_matrix((dim, dim), dtype=np.int64)
            for k, v in basis.bracket(x, y, lattice).items():
                rhs = rhs + v * ads[k]
            if (lhs - rhs).count_nonzero():
                bad.append((x, y))
                if len(bad) >= limit:
                    return bad
    return bad


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p} is not a prime")


def rank_mod_p(m: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        r += 1
    return r


def lie_centralizer_dim(basis: ChevalleyBasis, desc, p: int, lattice: str = "adjoint") -> int:
    """dim over F_p of the subspace fixed by every x_gamma(t), gamma in
    Psi(P_u), t in the algebraic closure.

    Ad(x_gamma(t)) = sum_k t^k M_k, so a vector is fixed for all t exactly
    when it lies in the kernel of every M_k with k >= 1 (reduced mod p).
    """
    require_prime(p)
    dim = basis.dim
    blocks = [m % p for g in desc.psi_Pu for m in basis.exp_terms(g, lattice)[1:]]
    if not blocks:
        return dim
    return dim - rank_mod_p(np.vstack(blocks), p)
