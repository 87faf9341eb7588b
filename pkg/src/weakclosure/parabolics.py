"""Standard parabolic subgroups in root-combinatorial form.

Subsets of the positive roots are stored as Python ``int`` bitmasks: bit k
stands for the k-th positive root in canonical order.  A parabolic is given
by a set J of simple-root indices (0-based); J is also encoded as a bitmask
and sweeps run over J = 0, 1, ..., 2**rank - 1 so that reports are stable.

The centralizer root set Gamma of a unipotent radical comes in two modes:
``p=None`` (generic characteristic, combinatorial test gamma + beta not a
root) and ``p`` a prime (all commutator coefficients vanish mod p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .rootsys import Root, RootSystem

_VERY_BAD = {"A": (), "D": (), "E": (), "B": (2,), "C": (2,), "F": (2,), "G": (2, 3)}


def very_bad_primes(type_label: str) -> frozenset[int]:
    """Primes dividing some structure constant of the commutator relations."""
    return frozenset(_VERY_BAD[type_label])


@dataclass(frozen=True)
class RootSubset:
    """A subset of the positive roots of ``system`` (bitset semantics)."""

    system: RootSystem
    mask: int

    @classmethod
    def of(cls, system: RootSystem, roots: Iterable[Root]) -> "RootSubset":
        pos = _positions(system)
        mask = 0
        for r in roots:
            r = tuple(r)
            if r not in pos:
                raise ValueError(f"{r} is not a positive root of {system.name}")
            mask |= 1 << pos[r]
        return cls(system, mask)

    @property
    def members(self) -> tuple[Root, ...]:
        return tuple(r for k, r in enumerate(self.system.positive) if self.mask >> k & 1)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, root) -> bool:
        k = _positions(self.system).get(tuple(root))
        return k is not None and bool(self.mask >> k & 1)

    def __le__(self, other: "RootSubset") -> bool:
        return self.mask & ~other.mask == 0

    def formatted(self) -> list[str]:
        return [self.system.format_root(r) for r in self.members]


# -- per-system caches ------------------------------------------------------

_POS: dict[int, dict[Root, int]] = {}
_PARTNERS: dict[tuple[int, int | None], tuple[int, ...]] = {}


def _positions(system: RootSystem) -> dict[Root, int]:
    key = id(system)
    if key not in _POS:
        _POS[key] = {r: k for k, r in enumerate(system.positive)}
    return _POS[key]


def sum_partners(system: RootSystem) -> tuple[int, ...]:
    """For each positive root gamma, the mask of positive beta with
    gamma + beta a root."""
    key = (id(system), None)
    if key not in _PARTNERS:
        pos = system.positive
        out = []
        for g in pos:
            m = 0
            for k, b in enumerate(pos):
                if system.sum(g, b) is not None:
                    m |= 1 << k
            out.append(m)
        _PARTNERS[key] = tuple(out)
    return _PARTNERS[key]


def commutator_partners(system: RootSystem, p: int, basis=None) -> tuple[int, ...]:
    """For each positive root gamma, the mask of positive beta such that
    some commutator coefficient of (gamma, beta) is nonzero mod p."""
    from . import chevalley

    chevalley.require_prime(p)
    if basis is None:
        basis = chevalley.get(system.type_label, system.rank)
    elif basis.system.name != system.name:
        raise ValueError(
            f"structure constants for {basis.system.name} are not available "
            f"for {system.name}"
        )
    key = (id(system), p)
    if key not in _PARTNERS:
        pos = system.positive
        out = []
        for g in pos:
            m = 0
            for k, b in enumerate(pos):
                entries = basis.commutator_table.get((g, b), ())
                if any(c % p for _, _, c in entries):
                    m |= 1 << k
            out.append(m)
        _PARTNERS[key] = tuple(out)
    return _PARTNERS[key]


def _mask_roots(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- operations -------------------------------------------------------------

def is_closed(subset: RootSubset) -> bool:
    """True iff gamma, delta in the subset and gamma + delta a root implies
    gamma + delta in the subset."""
    rs = subset.system
    pos = _positions(rs)
    members = subset.members
    for i, g in enumerate(members):
        for d in members[i:]:
            s = rs.sum(g, d)
            if s is not None and not subset.mask >> pos[s] & 1:
                return False
    return True


def is_ideal(subset: RootSubset) -> bool:
    """True iff gamma in the subset, delta positive and gamma + delta a root
    implies gamma + delta in the subset."""
    rs = subset.system
    pos = _positions(rs)
    for g in subset.members:
        for d in rs.positive:
            s = rs.sum(g, d)
            if s is not None and not subset.mask >> pos[s] & 1:
                return False
    return True


@dataclass(frozen=True)
class ParabolicDescriptor:
    """Standard parabolic P_J = L_J P_u with its root sets and dimensions."""

    system: RootSystem
    J: frozenset[int]
    psi_L: RootSubset
    psi_Pu: RootSubset

    @property
    def j_mask(self) -> int:
        return sum(1 << i for i in self.J)

    @property
    def J_labels(self) -> list[int]:
        """J in 1-based Bourbaki numbering."""
        return sorted(i + 1 for i in self.J)

    @cached_property
    def gamma_generic(self) -> RootSubset:
        return centralizer_roots(self)

    @property
    def dim_pu(self) -> int:
        return len(self.psi_Pu)

    @property
    def dim_l(self) -> int:
        return 2 * len(self.psi_L) + self.system.rank

    @property
    def dim_p(self) -> int:
        return self.dim_l + self.dim_pu

    @property
    def dim_b(self) -> int:
        return self.system.dim_b

    @property
    def dim_g(self) -> int:
        return self.system.dim_g

    @property
    def is_proper(self) -> bool:
        return len(self.J) < self.system.rank

    def dims(self) -> dict[str, int]:
        return {
            "dim_pu": self.dim_pu,
            "dim_l": self.dim_l,
            "dim_p": self.dim_p,
            "dim_b": self.dim_b,
            "dim_g": self.dim_g,
        }


def parabolic(system: RootSystem, J: Iterable[int] | int) -> ParabolicDescriptor:
    """Standard parabolic for J, given as 0-based simple indices or a bitmask."""
    if isinstance(J, int):
        jmask = J
        J = frozenset(i for i in range(system.rank) if J >> i & 1)
    else:
        J = frozenset(J)
        jmask = sum(1 << i for i in J)
    if any(not 0 <= i < system.rank for i in J) or jmask >> system.rank:
        raise ValueError(f"J must be a subset of the {system.rank} simple roots")
    lmask = 0
    for k, r in enumerate(system.positive):
        if all(c == 0 or i in J for i, c in enumerate(r)):
            lmask |= 1 << k
    full = (1 << len(system.positive)) - 1
    return ParabolicDescriptor(
        system=system,
        J=J,
        psi_L=RootSubset(system, lmask),
        psi_Pu=RootSubset(system, full & ~lmask),
    )


def all_parabolics(system: RootSystem, proper_only: bool = False) -> list[ParabolicDescriptor]:
    """Every standard parabolic, in J-bitmask order."""
    top = 1 << system.rank
    out = [parabolic(system, m) for m in range(top)]
    if proper_only:
        out = out[:-1]
    return out


def centralizer_roots(desc: ParabolicDescriptor, p: int | None = None, basis=None) -> RootSubset:
    """Root set Gamma of the centralizer of P_u inside P_u.

    ``p=None``: gamma in Psi(P_u) with gamma + beta not a root for every
    beta in Psi(P_u).  ``p`` prime: gamma whose commutator coefficients with
    every beta in Psi(P_u) all vanish mod p.
    """
    rs = desc.system
    pu = desc.psi_Pu.mask
    if p is None:
        partners = sum_partners(rs)
    else:
        partners = commutator_partners(rs, p, basis)
    gmask = 0
    for k in _mask_roots(pu):
        if partners[k] & pu == 0:
            gmask |= 1 << k
    return RootSubset(rs, gmask)


def radical_root_generators(desc: ParabolicDescriptor) -> frozenset[int]:
    """Simple roots lying in P_u (0-based indices): Pi minus J."""
    return frozenset(range(desc.system.rank)) - desc.J
