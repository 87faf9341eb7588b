"""Weak closure in the Sylow subgroup U of an enumerated matrix group.

H <= U is weakly closed in U when H is the only G-conjugate of itself
contained in U.  Two independent tests are provided: an orbit search over
conjugates (:func:`is_weakly_closed`) and the unique-fixed-point criterion on
G/N_G(X) (:func:`is_weakly_closed_via_fixed_point`).
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np

from .groups import MatrixGroup, SubgroupHandle

ORBIT_CAP = 10**6
SUBGROUP_ENUM_CAP = 2**7


class OrbitCapExceeded(RuntimeError):
    pass


class EnumerationCapExceeded(RuntimeError):
    pass


class PreconditionError(ValueError):
    pass


def conjugacy_orbit(G: MatrixGroup, X: SubgroupHandle, cap: int = ORBIT_CAP):
    """Yield the distinct conjugates of X (breadth first over the group
    generators, deduplicated by canonical form)."""
    seen = {X.key}
    queue = deque([X])
    yield X
    while queue:
        H = queue.popleft()
        for s in G.generators:
            K = G.conjugate(H, s)
            if K.key in seen:
                continue
            seen.add(K.key)
            if len(seen) > cap:
                raise OrbitCapExceeded(f"more than {cap} conjugates of a subgroup of order {X.order}")
            queue.append(K)
            yield K


def is_weakly_closed(G: MatrixGroup, X: SubgroupHandle, K: SubgroupHandle | None = None) -> bool:
    """True iff no conjugate X^g != X lies in K (default K = U)."""
    K = G.U if K is None else K
    for Y in conjugacy_orbit(G, X):
        if Y != X and Y <= K:
            return False
    return True


def fixed_point_count(G: MatrixGroup, X: SubgroupHandle) -> int:
    """Number of points of G/N_G(X) fixed by X."""
    P = G.normalizer(X)
    inp = P.mask(G.order)
    ok = np.ones(G.order, dtype=bool)
    for x in X.generators:
        ok &= inp[G.conj_all(x)]
    return int(ok.sum()) // P.order


def is_normal_in(G: MatrixGroup, X: SubgroupHandle, K: SubgroupHandle) -> bool:
    inx = X.mask(G.order)
    return all(inx[G.conj_all(x)[list(K.generators)]].all() for x in X.generators)


def is_weakly_closed_via_fixed_point(G: MatrixGroup, X: SubgroupHandle) -> bool:
    """True iff X has a unique fixed point on G/N_G(X)."""
    return fixed_point_count(G, X) == 1


def weak_closure(G: MatrixGroup, X: SubgroupHandle) -> SubgroupHandle:
    """Subgroup of U generated by the conjugates of X lying in U, iterated
    until it is weakly closed."""
    cur = X
    while True:
        gens = set(cur.generators)
        for Y in conjugacy_orbit(G, cur):
            if Y <= G.U:
                gens.update(Y.generators)
        nxt = G.subgroup(gens)
        if nxt == cur:
            return cur
        cur = nxt


class LocalTable:
    """Multiplication table of a small subgroup in local indices."""

    def __init__(self, G: MatrixGroup, H: SubgroupHandle):
        self.ids = np.array(H.elements)
        m = len(self.ids)
        a = np.repeat(self.ids, m)
        b = np.tile(self.ids, m)
        prod = G.mul(a, b)
        self.table = np.searchsorted(self.ids, prod).reshape(m, m)
        self.identity = int(np.searchsorted(self.ids, G.identity))
        self.size = m

    def closure(self, gens) -> int:
        """Bitmask of the subgroup generated by local indices ``gens``."""
        mask = 1 << self.identity
        frontier = [self.identity]
        tab = self.table
        while frontier:
            nxt = []
            for f in frontier:
                row = tab[f]
                for g in gens:
                    h = int(row[g])
                    if not mask >> h & 1:
                        mask |= 1 << h
                        nxt.append(h)
            frontier = nxt
        return mask

    def handle(self, mask: int, gens) -> SubgroupHandle:
        elems = tuple(int(self.ids[i]) for i in range(self.size) if mask >> i & 1)
        return SubgroupHandle(elems, tuple(int(self.ids[g]) for g in gens))


def subgroups_of(G: MatrixGroup, H: SubgroupHandle, cap: int = SUBGROUP_ENUM_CAP) -> list[SubgroupHandle]:
    """All subgroups of a small subgroup H, ordered by (order, elements).

    Starts from the trivial group and adds one generator at a time until no
    new subgroup appears, so the result is exhaustive.
    """
    if H.order > cap:
        raise EnumerationCapExceeded(f"|H| = {H.order} exceeds the enumeration cap {cap}")
    loc = LocalTable(G, H)
    found: dict[int, tuple[int, ...]] = {1 << loc.identity: ()}
    queue = deque([1 << loc.identity])
    while queue:
        mask = queue.popleft()
        gens = found[mask]
        covered = mask
        for x in range(loc.size):
            if covered >> x & 1:
                continue
            # x' in the coset <H> x gives the same extension
            coset = 0
            for h in range(loc.size):
                if mask >> h & 1:
                    coset |= 1 << int(loc.table[h, x])
            covered |= coset
            new = loc.closure(gens + (x,))
            if new not in found:
                found[new] = gens + (x,)
                queue.append(new)
    subs = [loc.handle(m, g) for m, g in found.items()]
    subs.sort(key=lambda S: (S.order, S.elements))
    return subs


def enumerate_weakly_closed(G: MatrixGroup, cap: int = SUBGROUP_ENUM_CAP) -> list[SubgroupHandle]:
    """Every weakly closed subgroup of U, in canonical order."""
    return [X for X in subgroups_of(G, G.U, cap) if is_weakly_closed(G, X)]


def regular_unipotent(G: MatrixGroup) -> int:
    """prod_{alpha simple} x_alpha(1), checked to lie in a unique conjugate of U."""
    if G.system is None:
        raise PreconditionError(f"{G.label} is not split")
    u = G.identity
    for a in G.system.simple:
        u = int(G.mul(u, G.x(a, 1)))
    count = sum(1 for V in conjugacy_orbit(G, G.U) if u in V)
    if count != 1:
        raise RuntimeError(f"{G.label}: u lies in {count} conjugates of U")
    return u


def borels_containing(G: MatrixGroup, g: int) -> int:
    """Number of conjugates of U containing g."""
    return sum(1 for V in conjugacy_orbit(G, G.U) if g in V)


def example1_subgroup(G: MatrixGroup) -> SubgroupHandle:
    """X = <u, Y> with u regular unipotent and Y generated by the root
    subgroups of the non-simple positive roots (split groups over F_2)."""
    if G.system is None or G.q != 2 or G.system.rank < 2:
        raise PreconditionError(
            f"{G.label}: needs a split group of rank >= 2 over F_2"
        )
    u = regular_unipotent(G)
    gens = [G.x(g, 1) for g in G.system.positive if sum(g) > 1]
    X = G.subgroup(gens + [u])
    if not is_weakly_closed(G, X):
        raise RuntimeError(f"{G.label}: <u, Y> is not weakly closed")
    if X in G.parabolic_radicals().values():
        raise RuntimeError(f"{G.label}: <u, Y> is a unipotent radical")
    return X


def example1_Y(G: MatrixGroup) -> SubgroupHandle:
    gens = [G.x(g, 1) for g in G.system.positive if sum(g) > 1]
    return G.subgroup(gens)


def radical_label(G: MatrixGroup, X: SubgroupHandle) -> list[int] | None:
    """J (1-based) with X = P_u(J), or None."""
    for J, R in G.parabolic_radicals().items():
        if R == X:
            return sorted(i + 1 for i in J)
    return None


def f_mult(G: MatrixGroup, X: SubgroupHandle) -> int:
    """|X|^2 |C_G(X)|."""
    return X.order**2 * G.centralizer(X).order


def matrix_commutator_coeffs(G: MatrixGroup, a, b) -> list[tuple[int, int, int]]:
    """Coefficients c_ij (as field codes) with
    [x_a(1), x_b(1)] = prod x_{ia+jb}(c_ij), product by increasing i + j.

    Found by exhaustive search over the coefficients; returns nonzero
    entries only.
    """
    rs = G.system
    a, b = tuple(a), tuple(b)
    combos = []
    for i in range(1, 5):
        for j in range(1, 5):
            c = tuple(i * x + j * y for x, y in zip(a, b))
            if c in rs.index:
                combos.append((i, j, c))
    combos.sort(key=lambda e: (e[0] + e[1], e[0]))
    xa, xb = G.x(a, 1), G.x(b, 1)
    inv = G.inverse
    comm = int(G.mul(G.mul(G.mul(xa, xb), inv[xa]), inv[xb]))
    for coeffs in itertools.product(G.field.elements, repeat=len(combos)):
        g = G.identity
        for (i, j, c), t in zip(combos, coeffs):
            g = int(G.mul(g, G.x(c, t)))
        if g == comm:
            return [(i, j, t) for (i, j, _), t in zip(combos, coeffs) if t]
    raise RuntimeError(f"commutator of {a}, {b} is not a product of root elements")
