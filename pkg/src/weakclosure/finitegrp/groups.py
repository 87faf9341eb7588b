"""Enumerated finite matrix groups: SL_n(q), Sp_4(q), SU_3(q0).

Every element is stored as a matrix of field codes.  Elements are sorted by
their integer key (row-major base-q digits), so an element id is its rank in
that order and a sorted id list is the canonical form of a subset.

Realizations
------------
SL_n(q)   natural matrices; x_gamma(t) = 1 + t E_ij for gamma = e_i - e_j.
Sp_4(q)   form J = antidiag(1, 1, -1, -1), type C2 with alpha_1 short:

              alpha_1   = e1 - e2  ->  E_01 - E_23
              alpha_2   = 2 e2     ->  E_12
              a1 + a2   = e1 + e2  ->  E_02 + E_13
              2a1 + a2  = 2 e1     ->  E_03

          and x_{-gamma}(t) = x_gamma(t)^T.
SU_3(q0)  over F_{q0^2}, Hermitian form antidiag(1, 1, 1) with the q0-power
          Frobenius; U is the set of upper unitriangular members.

With these choices B = T U is the upper triangular part of the group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .. import rootsys
from ..rootsys import Root
from .field import GF

DEFAULT_CAP = 10**6

SUPPORTED = {
    ("SL", 2): (2, 3, 4, 5),
    ("SL", 3): (2, 3),
    ("SL", 4): (2,),
    ("Sp4", 4): (2, 3),
    ("SU3", 3): (2, 3),
}


class UnsupportedGroupError(ValueError):
    """Instance outside the supported list, or above the element cap."""


def group_order(kind: str, q: int, n: int | None = None) -> int:
    """Classical order formula."""
    if kind == "SL":
        order = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            order *= q**i - 1
        return order
    if kind == "Sp4":
        return q**4 * (q**2 - 1) * (q**4 - 1)
    if kind == "SU3":
        return q**3 * (q**3 + 1) * (q**2 - 1)
    raise UnsupportedGroupError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class SubgroupHandle:
    """A subgroup as its sorted element ids plus a generating list."""

    elements: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def key(self) -> bytes:
        return np.asarray(self.elements, dtype=np.int64).tobytes()

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self._set

    def __le__(self, other: "SubgroupHandle") -> bool:
        return self._set <= other._set

    def __eq__(self, other) -> bool:
        return isinstance(other, SubgroupHandle) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def mask(self, size: int) -> np.ndarray:
        m = np.zeros(size, dtype=bool)
        m[list(self.elements)] = True
        return m


class MatrixGroup:
    """A fully enumerated finite matrix group with its Borel structure."""

    def __init__(self, kind: str, q: int, n: int, field: GF, gen_mats: list[np.ndarray],
                 cap: int = DEFAULT_CAP):
        self.kind = kind
        self.q = q
        self.n = n
        self.field = field
        self.cap = cap
        self._weights = np.array([field.q**k for k in range(n * n)][::-1], dtype=np.int64)
        self._enumerate(gen_mats)
        self.identity = self.index(np.eye(n, dtype=np.int64))
        self.generators = tuple(int(i) for i in self.index(np.array(gen_mats)))
        self.system: rootsys.RootSystem | None = None
        self.root_elements: dict[Root, dict[int, int]] = {}

    # -- enumeration and lookup -------------------------------------------

    def _keys(self, mats: np.ndarray) -> np.ndarray:
        flat = np.asarray(mats, dtype=np.int64).reshape(-1, self.n * self.n)
        return flat @ self._weights

    def _enumerate(self, gen_mats) -> None:
        gens = np.array(gen_mats, dtype=np.int64)
        ident = np.eye(self.n, dtype=np.int64)[None]
        seen = {int(self._keys(ident)[0])}
        mats = [ident]
        frontier = ident
        while len(frontier):
            prods = self.field.matmul(frontier[:, None], gens[None]).reshape(-1, self.n, self.n)
            keys = self._keys(prods)
            keys, first = np.unique(keys, return_index=True)
            fresh = [k not in seen for k in keys.tolist()]
            frontier = prods[first[np.array(fresh, dtype=bool)]] if any(fresh) else prods[:0]
            seen.update(keys[np.array(fresh, dtype=bool)].tolist())
            mats.append(frontier)
            if len(seen) > self.cap:
                raise UnsupportedGroupError(
                    f"{self.label} exceeds the element cap of {self.cap}"
                )
        allm = np.concatenate(mats)
        keys = self._keys(allm)
        order = np.argsort(keys)
        self.elements = allm[order]
        self.keys = keys[order]
        self.elements.setflags(write=False)

    @property
    def label(self) -> str:
        if self.kind == "SL":
            return f"SL{self.n}({self.q})"
        if self.kind == "SU3":
            return f"SU3({self.field.p if self.field.e == 2 else self.q})"
        return f"{self.kind}({self.q})"

    @property
    def order(self) -> int:
        return len(self.keys)

    def __len__(self) -> int:
        return len(self.keys)

    def index(self, mats) -> np.ndarray | int:
        """Element ids of the given matrices (a single id for one matrix)."""
        mats = np.asarray(mats, dtype=np.int64)
        single = mats.ndim == 2
        keys = self._keys(mats)
        pos = np.searchsorted(self.keys, keys)
        pos = np.minimum(pos, len(self.keys) - 1)
        if np.any(self.keys[pos] != keys):
            raise KeyError("matrix is not an element of the group")
        return int(pos[0]) if single else pos

    def mul(self, a, b):
        """Ids of the products a*b (broadcasting over id arrays)."""
        return self.index(self.field.matmul(self.elements[a], self.elements[b]))

    @cached_property
    def inverse(self) -> np.ndarray:
        """Inverse ids, via g^(|G|-1) by repeated squaring."""
        e = self.order - 1
        result = np.broadcast_to(np.eye(self.n, dtype=np.int64), self.elements.shape).copy()
        base = self.elements.astype(np.int64)
        while e:
            if e & 1:
                result = self.field.matmul(result, base)
            base = self.field.matmul(base, base)
            e >>= 1
        return self.index(result)

    def conj_all(self, x: int) -> np.ndarray:
        """ids of g^-1 x g for every g in G (indexed by g)."""
        cache = self.__dict__.setdefault("_conj_all", {})
        if x not in cache:
            ginv = self.elements[self.inverse]
            m = self.field.matmul(self.field.matmul(ginv, self.elements[x]), self.elements)
            cache[x] = self.index(m)
        return cache[x]

    def conj_perm(self, s: int) -> np.ndarray:
        """ids of s^-1 g s for every g in G (indexed by g)."""
        cache = self.__dict__.setdefault("_conj_perm", {})
        if s not in cache:
            sinv = self.elements[self.inverse[s]]
            m = self.field.matmul(self.field.matmul(sinv, self.elements), self.elements[s])
            cache[s] = self.index(m)
        return cache[s]

    def right_perm(self, s: int) -> np.ndarray:
        """ids of g s for every g in G."""
        cache = self.__dict__.setdefault("_right_perm", {})
        if s not in cache:
            cache[s] = self.index(self.field.matmul(self.elements, self.elements[s]))
        return cache[s]

    def conjugate(self, X: SubgroupHandle, g: int) -> SubgroupHandle:
        """X^g = g^-1 X g."""
        perm = self.conj_perm(g)
        return SubgroupHandle(
            tuple(sorted(int(i) for i in perm[list(X.elements)])),
            tuple(int(perm[i]) for i in X.generators),
        )

    def element_order(self, g: int) -> int:
        k, cur = 1, g
        while cur != self.identity:
            cur = self.mul(cur, g)
            k += 1
        return k

    # -- subgroups --------------------------------------------------------

    def subgroup(self, gens) -> SubgroupHandle:
        """Subgroup generated by the given element ids."""
        gens = tuple(sorted({int(g) for g in gens} - {self.identity}))
        seen = np.zeros(self.order, dtype=bool)
        seen[self.identity] = True
        frontier = np.array([self.identity])
        while frontier.size:
            nxt = np.concatenate([self.right_perm(s)[frontier] for s in gens]) if gens else frontier[:0]
            nxt = np.unique(nxt)
            nxt = nxt[~seen[nxt]]
            seen[nxt] = True
            frontier = nxt
        return SubgroupHandle(tuple(int(i) for i in np.nonzero(seen)[0]), gens)

    def from_mask(self, mask: np.ndarray) -> SubgroupHandle:
        """Handle for a subgroup given by a boolean mask; builds a small
        generating set greedily."""
        elems = np.nonzero(mask)[0]
        gens = []
        cur = np.zeros(self.order, dtype=bool)
        cur[self.identity] = True
        for g in elems:
            if not cur[g]:
                gens.append(int(g))
                cur = self.subgroup(gens).mask(self.order)
        return SubgroupHandle(tuple(int(i) for i in elems), tuple(gens))

    def normalizer(self, X: SubgroupHandle) -> SubgroupHandle:
        inx = X.mask(self.order)
        ok = np.ones(self.order, dtype=bool)
        for x in X.generators:
            ok &= inx[self.conj_all(x)]
        return self.from_mask(ok)

    def centralizer(self, X: SubgroupHandle) -> SubgroupHandle:
        ok = np.ones(self.order, dtype=bool)
        for x in X.generators:
            ok &= self.conj_all(x) == x
        return self.from_mask(ok)

    def center_of(self, X: SubgroupHandle) -> SubgroupHandle:
        """Z(X) = X meet C_G(X)."""
        c = self.centralizer(X).mask(self.order)
        return self.from_mask(X.mask(self.order) & c)

    @cached_property
    def whole(self) -> SubgroupHandle:
        return SubgroupHandle(tuple(range(self.order)), self.generators)

    @cached_property
    def trivial(self) -> SubgroupHandle:
        return SubgroupHandle((self.identity,), ())

    @cached_property
    def center(self) -> SubgroupHandle:
        return self.centralizer(self.whole)

    def _triangular_mask(self, unitriangular: bool) -> np.ndarray:
        m = self.elements
        lower = np.tril(np.ones((self.n, self.n), dtype=bool), -1)
        ok = ~np.any(m[:, lower], axis=1)
        if unitriangular:
            ok &= np.all(np.diagonal(m, axis1=1, axis2=2) == 1, axis=1)
        return ok

    @cached_property
    def U(self) -> SubgroupHandle:
        """Upper unitriangular elements: a Sylow p-subgroup."""
        return self.from_mask(self._triangular_mask(True))

    @cached_property
    def B(self) -> SubgroupHandle:
        """Upper triangular elements."""
        return self.from_mask(self._triangular_mask(False))

    @cached_property
    def T(self) -> SubgroupHandle:
        """Diagonal elements."""
        m = self.elements
        off = ~np.eye(self.n, dtype=bool)
        return self.from_mask(~np.any(m[:, off], axis=1))

    # -- root subgroups ---------------------------------------------------

    def x(self, root, t: int) -> int:
        """Id of the root element x_root(t) (split kinds only)."""
        return self.root_elements[tuple(root)][t]

    def root_subgroup(self, root) -> SubgroupHandle:
        ids = self.root_elements[tuple(root)]
        return SubgroupHandle(tuple(sorted(ids.values())),
                              tuple(ids[b] for b in self.field.basis))

    def parabolic_radical(self, J) -> SubgroupHandle:
        """<x_gamma(t) : gamma in Psi(P_u), t in F_q> for J a set of 0-based
        simple indices."""
        if self.system is None:
            # SU3: relative rank one, radicals are U (J empty) and 1
            return self.U if not set(J) else self.trivial
        from ..parabolics import parabolic

        desc = parabolic(self.system, J)
        gens = [self.x(g, b) for g in desc.psi_Pu for b in self.field.basis]
        return self.subgroup(gens)

    @cached_property
    def _root_words(self) -> dict[int, tuple[tuple[Root, int], ...]]:
        # unique factorization of U as an ordered product of root subgroups
        pos = self.system.positive
        words = {self.identity: ()}
        for ts in itertools.product(self.field.elements, repeat=len(pos)):
            g = self.identity
            for r, t in zip(pos, ts):
                if t:
                    g = int(self.mul(g, self.x(r, t)))
            words[g] = tuple((r, t) for r, t in zip(pos, ts) if t)
        return words

    def describe(self, g: int) -> str:
        """Element as a word in root elements when it lies in U of a split
        group, otherwise as its matrix rows."""
        if self.system is not None and self.U.order <= 256 and g in self.U:
            word = self._root_words[g]
            if not word:
                return "1"
            return "*".join(f"x[{self.system.format_root(r)}]({t})" for r, t in word)
        return str(self.elements[g].tolist())

    def parabolic_radicals(self) -> dict[frozenset[int], SubgroupHandle]:
        """P_u for every J, keyed by J (0-based)."""
        rank = self.system.rank if self.system is not None else 1
        out = {}
        for m in range(1 << rank):
            J = frozenset(i for i in range(rank) if m >> i & 1)
            out[J] = self.parabolic_radical(J)
        return out


# -- constructors -----------------------------------------------------------

def _elem(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.int64)
    m[i, j] = 1
    return m


def _sl_root_matrices(n: int) -> dict[Root, tuple[tuple[int, int, int], ...]]:
    """Root -> list of (row, col, sign) entries of the nilpotent generator."""
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = tuple(1 if i <= k < j else 0 for k in range(n - 1))
            out[coeffs] = ((i, j, 1),)
            out[tuple(-c for c in coeffs)] = ((j, i, 1),)
    return out


_SP4_POSITIVE = {
    (1, 0): ((0, 1, 1), (2, 3, -1)),
    (0, 1): ((1, 2, 1),),
    (1, 1): ((0, 2, 1), (1, 3, 1)),
    (2, 1): ((0, 3, 1),),
}


def _sp4_root_matrices() -> dict[Root, tuple[tuple[int, int, int], ...]]:
    out = {}
    for r, entries in _SP4_POSITIVE.items():
        out[r] = entries
        out[tuple(-c for c in r)] = tuple((j, i, s) for i, j, s in entries)
    return out


def _root_element(field: GF, n: int, entries, t: int) -> np.ndarray:
    m = np.eye(n, dtype=np.int64)
    for i, j, s in entries:
        m[i, j] = t if s == 1 else int(field.neg[t])
    return m


def sp4_form(field: GF) -> np.ndarray:
    J = np.zeros((4, 4), dtype=np.int64)
    m1 = int(field.neg[1])
    J[0, 3] = J[1, 2] = 1
    J[2, 1] = J[3, 0] = m1
    return J


def hermitian_form(field: GF) -> np.ndarray:
    return np.fliplr(np.eye(3, dtype=np.int64))


def _split_group(kind: str, q: int, n: int, system: rootsys.RootSystem,
                 table: dict, cap: int) -> MatrixGroup:
    field = GF(q)
    gens = []
    for r in system.simple:
        for sign in (1, -1):
            root = tuple(sign * c for c in r)
            for b in field.basis:
                gens.append(_root_element(field, n, table[root], b))
    G = MatrixGroup(kind, q, n, field, gens, cap)
    G.system = system
    for root, entries in table.items():
        mats = np.array([_root_element(field, n, entries, t) for t in field.elements])
        G.root_elements[root] = dict(enumerate(int(i) for i in G.index(mats)))
    return G


def _su3(q0: int, cap: int) -> MatrixGroup:
    field = GF(q0 * q0)
    sig = field.frob  # x -> x^q0 since q0 is prime
    H = hermitian_form(field)
    mats = []
    for a in field.elements:
        for b in field.elements:
            for c in field.elements:
                mats.append([[1, a, b], [0, 1, c], [0, 0, 1]])
    mats = np.array(mats, dtype=np.int64)
    conjT = np.swapaxes(sig[mats], 1, 2)
    lhs = field.matmul(field.matmul(conjT, H), mats)
    upper = mats[np.all(lhs == H, axis=(1, 2))]
    # w = -H has determinant 1 and swaps U with the lower unitriangular group
    w = np.array(field.neg[H])
    gens = list(upper[1:]) + [w]
    # diagonal torus diag(a, b, c) with a^sig c = 1, b^sig b = 1, abc = 1
    for a in range(1, field.q):
        c = int(field.inv[sig[a]])
        for b in range(1, field.q):
            if field.mul[sig[b], b] == 1 and field.mul[field.mul[a, b], c] == 1:
                gens.append(np.diag([a, b, c]))
    G = MatrixGroup("SU3", q0, 3, field, gens, cap)
    return G


def build_group(kind: str, q: int, n: int | None = None, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Enumerate a supported group.

    ``kind`` is ``"SL"`` (with ``n``), ``"Sp4"`` or ``"SU3"``; for SU3, ``q``
    is q0 and the matrices live over F_{q0^2}.
    """
    if kind in ("SL2", "SL3", "SL4"):
        kind, n = "SL", int(kind[2])
    if kind == "SL":
        if n is None:
            raise UnsupportedGroupError("SL requires a dimension n")
    elif kind == "Sp4":
        n = 4
    elif kind == "SU3":
        n = 3
    else:
        raise UnsupportedGroupError(f"unknown kind {kind!r}; expected SL, Sp4 or SU3")
    allowed = SUPPORTED.get((kind, n), ())
    if q not in allowed:
        supported = ", ".join(
            f"{k}{'' if k != 'SL' else d}(q in {qs})" for (k, d), qs in SUPPORTED.items()
        )
        raise UnsupportedGroupError(f"{kind}{n if kind == 'SL' else ''}({q}) unsupported; supported: {supported}")
    expected = group_order(kind, q, n)
    if expected > cap:
        raise UnsupportedGroupError(f"|G| = {expected} exceeds the element cap of {cap}")
    if kind == "SL":
        G = _split_group(kind, q, n, rootsys.get("A", n - 1), _sl_root_matrices(n), cap)
    elif kind == "Sp4":
        G = _split_group(kind, q, 4, rootsys.get("C", 2), _sp4_root_matrices(), cap)
    else:
        G = _su3(q, cap)
    if G.order != expected:
        raise RuntimeError(f"{G.label}: enumerated {G.order} elements, expected {expected}")
    return G


_CACHE: dict[tuple, MatrixGroup] = {}


def get_group(kind: str, q: int, n: int | None = None) -> MatrixGroup:
    """Cached :func:`build_group` with the default cap."""
    if kind in ("SL2", "SL3", "SL4"):
        kind, n = "SL", int(kind[2])
    key = (kind, q, n if kind == "SL" else None)
    if key not in _CACHE:
        _CACHE[key] = build_group(kind, q, n)
    return _CACHE[key]
