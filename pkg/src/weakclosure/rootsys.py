"""Irreducible reduced root systems as exact integer combinatorics.

Roots are tuples of integers giving coordinates over the simple roots
(Bourbaki numbering).  Geometry is carried by an integer Gram matrix of the
simple roots, scaled so that every inner product is an integer; the Cartan
integers are derived from it.  No floating point is used anywhere.

Bourbaki numbering used throughout::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n        (alpha_n short)
    C_n   1 - 2 - ... - (n-1) <= n        (alpha_n long)
    D_n   1 - 2 - ... - (n-2) < (n-1), n
    E_n   1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
    F_4   1 - 2 => 3 - 4                  (alpha_1, alpha_2 long)
    G_2   1 <= 2                          (alpha_1 short)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

Root = tuple[int, ...]

TYPE_LABELS = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGES = {
    "A": "n >= 1",
    "B": "n >= 2",
    "C": "n >= 2",
    "D": "n >= 3",
    "E": "n in {6, 7, 8}",
    "F": "n = 4",
    "G": "n = 2",
}


class RootSystemError(ValueError):
    """Raised for an invalid (type, rank) combination."""


def validate_type(type_label: str, rank: int) -> None:
    if type_label not in TYPE_LABELS:
        raise RootSystemError(
            f"unknown type {type_label!r}; expected one of {', '.join(TYPE_LABELS)}"
        )
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[type_label]
    if not ok:
        raise RootSystemError(
            f"type {type_label}{rank} is not valid; {type_label}_n requires "
            f"{_RANK_RANGES[type_label]}"
        )


def supported_types(max_rank: int = 8) -> list[tuple[str, int]]:
    """All valid (type, rank) pairs with rank <= max_rank, in a fixed order."""
    out = []
    for t in TYPE_LABELS:
        for n in range(1, max_rank + 1):
            try:
                validate_type(t, n)
            except RootSystemError:
                continue
            out.append((t, n))
    return out


def _gram(type_label: str, n: int) -> list[list[int]]:
    """Integer Gram matrix (alpha_i, alpha_j) of the simple roots."""
    g = [[0] * n for _ in range(n)]

    def link(i, j, v):
        g[i][j] = g[j][i] = v

    if type_label in "ADE":
        for i in range(n):
            g[i][i] = 2
        if type_label == "A":
            for i in range(n - 1):
                link(i, i + 1, -1)
        elif type_label == "D":
            for i in range(n - 2):
                link(i, i + 1, -1)
            link(n - 3, n - 1, -1)
        else:
            link(0, 2, -1)
            link(1, 3, -1)
            for i in range(2, n - 1):
                link(i, i + 1, -1)
    elif type_label == "B":
        for i in range(n - 1):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(n - 1):
            link(i, i + 1, -2)
    elif type_label == "C":
        for i in range(n - 1):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 2, n - 1, -2)
    elif type_label == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    elif type_label == "G":
        g[0][0] = 2
        g[1][1] = 6
        link(0, 1, -3)
    return g


def _sort_key(root: Root):
    # height first; within a height, alpha_1 before alpha_2 etc.
    return (sum(root), tuple(-c for c in root))


@dataclass(frozen=True)
class RootSystem:
    """Full combinatorial root datum of a simple type.

    ``roots`` lists every root in canonical order: by height, then by
    descending coefficient vector (so the simple roots appear as
    alpha_1, ..., alpha_n).  Index sets refer to positions in ``roots``.
    """

    type_label: str
    rank: int
    gram: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    index: dict = field(repr=False, compare=False)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """Cartan matrix a_ij = <alpha_i, alpha_j^vee> = 2(a_i, a_j)/(a_j, a_j)."""
        g = self.gram
        n = self.rank
        return tuple(
            tuple(2 * g[i][j] // g[j][j] for j in range(n)) for i in range(n)
        )

    @cached_property
    def positive_roots(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roots) if sum(r) > 0)

    @cached_property
    def positive(self) -> tuple[Root, ...]:
        """Positive roots in canonical order."""
        return tuple(self.roots[i] for i in self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roots) if sum(r) == 1)

    @cached_property
    def simple(self) -> tuple[Root, ...]:
        return tuple(self.roots[i] for i in self.simple_roots)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.roots)

    @cached_property
    def highest_root(self) -> int:
        return max(range(len(self.roots)), key=lambda i: _sort_key(self.roots[i]))

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    @property
    def dim_g(self) -> int:
        return len(self.roots) + self.rank

    @property
    def dim_b(self) -> int:
        return len(self.roots) // 2 + self.rank

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def unit(self, i: int) -> Root:
        """The simple root alpha_{i+1} as a coefficient vector (0-based i)."""
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def inner(self, a: Root, b: Root) -> int:
        g = self.gram
        return sum(
            a[i] * g[i][j] * b[j]
            for i in range(self.rank) if a[i]
            for j in range(self.rank) if b[j]
        )

    def norm(self, a: Root) -> int:
        return self.inner(a, a)

    def pairing(self, a: Root, i: int) -> int:
        """<a, alpha_i^vee> for the simple coroot with 0-based index i."""
        return 2 * self.inner(a, self.unit(i)) // self.gram[i][i]

    def coroot_pairing(self, a: Root, b: Root) -> int:
        """<a, b^vee> = 2(a, b)/(b, b)."""
        return 2 * self.inner(a, b) // self.norm(b)

    def is_root(self, coeffs) -> bool:
        return tuple(coeffs) in self.index

    def sum(self, a: Root, b: Root) -> Root | None:
        """a + b if it is a root, else None."""
        c = tuple(x + y for x, y in zip(a, b))
        return c if c in self.index else None

    def reflect(self, a: Root, i: int) -> Root:
        """Image of a under the simple reflection s_{alpha_i} (0-based i)."""
        k = self.pairing(a, i)
        out = list(a)
        out[i] -= k
        return tuple(out)

    def is_positive(self, a: Root) -> bool:
        return sum(a) > 0

    def support(self, a: Root) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(a) if c)

    def string_down(self, a: Root, b: Root) -> int:
        """max{k >= 0 : b - k a is a root}."""
        k = 0
        cur = b
        while True:
            nxt = tuple(y - x for x, y in zip(a, cur))
            if nxt not in self.index:
                return k
            k += 1
            cur = nxt

    def format_root(self, a: Root) -> str:
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append((sign, f"{mag}a{i + 1}"))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            s += f"{sign}{t}"
        return s


def _reflection_closure(gram: list[list[int]], n: int) -> set[Root]:
    units = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(units)
    frontier = list(units)
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(n):
                ip = sum(a[j] * gram[j][i] for j in range(n))
                k = 2 * ip // gram[i][i]
                if k == 0:
                    continue
                b = list(a)
                b[i] -= k
                b = tuple(b)
                if b not in found:
                    found.add(b)
                    nxt.append(b)
        frontier = nxt
    return found


def build(type_label: str, rank: int) -> RootSystem:
    """Root system of the given type, generated by closing the simple roots
    under simple reflections."""
    validate_type(type_label, rank)
    gram = _gram(type_label, rank)
    roots = sorted(_reflection_closure(gram, rank), key=_sort_key)
    return RootSystem(
        type_label=type_label,
        rank=rank,
        gram=tuple(tuple(r) for r in gram),
        roots=tuple(roots),
        index={r: i for i, r in enumerate(roots)},
    )


_CACHE: dict[tuple[str, int], RootSystem] = {}


def get(type_label: str, rank: int) -> RootSystem:
    """Cached :func:`build`."""
    key = (type_label, rank)
    if key not in _CACHE:
        _CACHE[key] = build(type_label, rank)
    return _CACHE[key]


def parse_type(text: str) -> tuple[str, int]:
    """Parse labels such as ``"E8"`` or ``"B2"``."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise RootSystemError(f"cannot parse type label {text!r}")
    t, n = text[0].upper(), int(text[1:])
    validate_type(t, n)
    return t, n
