"""Dimension inequalities over parabolic radicals, and finite-group suites.

Every check returns a report whose records compare a left-hand side with a
right-hand side for one parabolic (given by J, 1-based).  ``verdict`` is the
conjunction of the records; ``as_expected`` additionally compares the failing
records against the recorded boundary table, which is what the command line
exit code uses.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from . import chevalley, parabolics, rootsys
from .finitegrp import groups as fgroups
from .finitegrp import weak

# 2 dim U + dim Z(U) = dim G at J = empty: rank 2 in very bad characteristic.
# G2 at p = 2 is absent on purpose: Gamma mod 2 has one root there, so the
# inequality stays strict.
BOUNDARY_2F: dict[tuple[str, int, int], tuple[tuple[int, ...], ...]] = {
    ("B", 2, 2): ((),),
    ("C", 2, 2): ((),),
    ("G", 2, 3): ((),),
}

PRIMES = (2, 3, 5, 7)
LIE_MAX_RANK = 4


@dataclass(frozen=True)
class Record:
    J: tuple[int, ...]
    lhs: int
    rhs: int
    strict: bool

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs if self.strict else self.lhs <= self.rhs

    def to_dict(self) -> dict:
        return {"J": list(self.J), "lhs": self.lhs, "rhs": self.rhs,
                "strict": self.strict, "holds": self.holds}


@dataclass
class InequalityReport:
    check: str
    type_label: str
    rank: int
    p: int | None
    records: list[Record]
    expected_boundaries: list[tuple[int, ...]] = field(default_factory=list)
    deviations: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(r.holds for r in self.records)

    @property
    def counterexamples(self) -> list[Record]:
        return [r for r in self.records if not r.holds]

    @property
    def as_expected(self) -> bool:
        failing = sorted(r.J for r in self.counterexamples)
        return failing == sorted(self.expected_boundaries)

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "type": self.type_label,
            "rank": self.rank,
            "p": self.p,
            "records": [r.to_dict() for r in self.records],
            "verdict": self.verdict,
            "as_expected": self.as_expected,
            "expected_boundaries": [list(J) for J in self.expected_boundaries],
        }
        if self.deviations:
            out["deviations"] = self.deviations
        if self.notes:
            out["notes"] = self.notes
        return out


def _gamma_size(desc, p: int | None) -> int:
    if p is not None and p not in parabolics.very_bad_primes(desc.system.type_label):
        p = None
    return len(parabolics.centralizer_roots(desc, p))


def check_p2(type_label: str, rank: int, p: int | None = None) -> InequalityReport:
    """dim P_u + dim C_G(P_u) <= dim B for every proper parabolic."""
    rs = rootsys.get(type_label, rank)
    recs = [
        Record(tuple(d.J_labels), d.dim_pu + _gamma_size(d, p), d.dim_b, False)
        for d in parabolics.all_parabolics(rs, proper_only=True)
    ]
    return InequalityReport("p2", type_label, rank, p, recs)


def check_richardson(type_label: str, rank: int, p: int | None = None) -> InequalityReport:
    """dim P_u + dim C_G(P_u) <= dim P for every proper parabolic."""
    rs = rootsys.get(type_label, rank)
    recs = [
        Record(tuple(d.J_labels), d.dim_pu + _gamma_size(d, p), d.dim_p, False)
        for d in parabolics.all_parabolics(rs, proper_only=True)
    ]
    return InequalityReport("richardson", type_label, rank, p, recs)


def _require_rank2(rank: int) -> None:
    if rank < 2:
        raise ValueError("this check needs rank >= 2")


def check_2F(type_label: str, rank: int, p: int) -> InequalityReport:
    """2 dim P_u + dim C_G(P_u) < dim G for every proper J, with the
    centralizer computed in characteristic p."""
    _require_rank2(rank)
    rs = rootsys.get(type_label, rank)
    recs = [
        Record(tuple(d.J_labels), 2 * d.dim_pu + _gamma_size(d, p), d.dim_g, True)
        for d in parabolics.all_parabolics(rs, proper_only=True)
    ]
    expected = list(BOUNDARY_2F.get((type_label, rank, p), ()))
    return InequalityReport("2F", type_label, rank, p, recs, expected)


def check_2F_lie(type_label: str, rank: int, p: int) -> InequalityReport:
    """2 dim P_u + dim c_g(P_u) < dim g over F_p, the Lie centralizer found
    by linear algebra.  J with a centralizer larger than the generic root
    count are listed as deviations."""
    _require_rank2(rank)
    if rank > LIE_MAX_RANK:
        raise ValueError(f"Lie algebra check limited to rank <= {LIE_MAX_RANK}")
    rs = rootsys.get(type_label, rank)
    basis = chevalley.get(type_label, rank)
    recs, dev = [], []
    for d in parabolics.all_parabolics(rs, proper_only=True):
        c = chevalley.lie_centralizer_dim(basis, d, p)
        g = len(d.gamma_generic)
        recs.append(Record(tuple(d.J_labels), 2 * d.dim_pu + c, d.dim_g, True))
        if c != g:
            dev.append({"J": d.J_labels, "lie_dim": c, "generic": g})
    rep = InequalityReport("2F_lie", type_label, rank, p, recs,
                           list(BOUNDARY_2F.get((type_label, rank, p), ())), dev)
    return rep


def lie_as_expected(rep: InequalityReport) -> bool:
    """Deviations from the generic count are allowed only at very bad p."""
    bad = rep.p in parabolics.very_bad_primes(rep.type_label)
    return rep.as_expected and (bad or not rep.deviations)


class Window(NamedTuple):
    low: int
    high: int
    f_v_u: int
    note: str


def r2F_window(type_label: str, rank: int) -> Window:
    """Dimension window dim G - r + 1 < dim V <= 2 dim G for 2F-modules,
    with f_V(U) = dim G - r + 1 for the module attaining the lower end."""
    rs = rootsys.get(type_label, rank)
    low = rs.dim_g - rank + 1
    note = "rank 1: the window argument does not apply" if rank == 1 else ""
    return Window(low, 2 * rs.dim_g, low, note)


# -- finite groups ------------------------------------------------------------

def dagger_holds(G: fgroups.MatrixGroup) -> bool:
    """Field restrictions under which weakly closed subgroups of U are
    exactly the unipotent radicals (split groups only)."""
    if G.system is None:
        return False
    t, n, q = G.system.type_label, G.system.rank, G.q
    if t == "A" and n == 1:
        return True
    if t == "A" and n == 2:
        return q not in (2, 4)
    if (t == "A" and n == 3) or t in ("B", "C", "F", "G") or (t == "D" and n >= 3):
        return q not in (2, 3)
    return q != 2


@dataclass(frozen=True)
class Claim:
    name: str
    holds: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "detail": self.detail}


@dataclass
class FiniteSuiteReport:
    kind: str
    q: int
    label: str
    p: int
    claims: list[Claim]
    weakly_closed: list[dict]

    @property
    def verdict(self) -> bool:
        return all(c.holds for c in self.claims)

    as_expected = verdict

    def to_dict(self) -> dict:
        return {
            "check": "finite",
            "type": self.kind,
            "rank": None,
            "p": self.p,
            "group": self.label,
            "records": [c.to_dict() for c in self.claims],
            "weakly_closed": self.weakly_closed,
            "verdict": self.verdict,
            "as_expected": self.verdict,
            "expected_boundaries": [],
        }


def subgroup_record(G: fgroups.MatrixGroup, X: fgroups.SubgroupHandle) -> dict:
    return {
        "order": X.order,
        "generators": [G.describe(g) for g in X.generators],
        "weakly_closed": weak.is_weakly_closed(G, X),
        "equals_radical_J": weak.radical_label(G, X),
    }


def verify_finite_suite(kind: str, q: int, n: int | None = None,
                        cap: int = fgroups.DEFAULT_CAP) -> FiniteSuiteReport:
    """Exhaustive checks on one enumerated group."""
    if cap == fgroups.DEFAULT_CAP:
        G = fgroups.get_group(kind, q, n)
    else:
        G = fgroups.build_group(kind, q, n, cap=cap)
    claims: list[Claim] = []
    subs = weak.subgroups_of(G, G.U)
    wc = [X for X in subs if weak.is_weakly_closed(G, X)]
    radicals = G.parabolic_radicals()
    rad_set = set(radicals.values())

    claims.append(Claim("radicals_weakly_closed",
                        all(weak.is_weakly_closed(G, R) for R in rad_set)))
    claims.append(Claim("B_is_normalizer_of_U", G.normalizer(G.U) == G.B))
    fp_bad = [X.order for X in subs
              if weak.is_weakly_closed_via_fixed_point(G, X) != (X in wc)]
    claims.append(Claim("fixed_point_criterion_agrees", not fp_bad,
                        f"{len(subs)} subgroups of U"))
    nn = all(G.normalizer(G.normalizer(X)) == G.normalizer(X) and G.B <= G.normalizer(X)
             for X in wc)
    claims.append(Claim("normalizers_self_normalizing", nn))

    f = [weak.f_mult(G, X) for X in subs]
    top = max(f)
    maxi = [X for X, v in zip(subs, f) if v == top]
    claims.append(Claim("f_mult_maximizers_transfer",
                        all(weak.f_mult(G, weak.weak_closure(G, X)) == top for X in maxi),
                        f"max {top} at orders {[X.order for X in maxi]}"))

    if G.system is not None:
        rs, p = G.system, G.field.p
        sizes = extra = True
        for J, R in radicals.items():
            d = parabolics.parabolic(rs, J)
            zr = G.centralizer(R)
            z_order = sum(1 for e in R.elements if e in zr)
            gamma = parabolics.centralizer_roots(d, p)
            sizes &= R.order == q ** d.dim_pu
            if d.is_proper:
                sizes &= z_order == q ** len(gamma)
                extra &= zr <= G.subgroup(list(R.generators) + list(G.center.generators))
        claims.append(Claim("radical_orders_match_roots", sizes))
        claims.append(Claim("centralizer_in_radical_times_center", extra))
        exact = set(wc) == rad_set
        if dagger_holds(G):
            claims.append(Claim("classification_exact", exact,
                                f"{len(wc)} weakly closed, {len(rad_set)} radicals"))
        if q == 2 and rs.rank >= 2:
            X = weak.example1_subgroup(G)
            claims.append(Claim("example1_extra_member", X in wc and X not in rad_set,
                                f"|X| = {X.order}"))
    else:
        Z = G.center_of(G.U)
        claims.append(Claim("center_of_U_weakly_closed",
                            Z.order == q and weak.is_weakly_closed(G, Z),
                            f"|Z(U)| = {Z.order}"))

    return FiniteSuiteReport(
        G.kind, q, G.label, G.field.p, claims,
        [subgroup_record(G, X) for X in wc],
    )


FINITE_SUITE: tuple[tuple[str, int, int | None], ...] = (
    ("SL", 2, 2), ("SL", 3, 2), ("SL", 4, 2), ("SL", 5, 2),
    ("SL", 2, 3), ("SL", 3, 3), ("SL", 2, 4),
    ("Sp4", 2, None), ("Sp4", 3, None),
    ("SU3", 2, None), ("SU3", 3, None),
)


# -- sweeps -------------------------------------------------------------------

def _tasks(max_rank: int, finite: bool, cap: int) -> list[tuple]:
    tasks: list[tuple] = []
    for t, n in rootsys.supported_types(max_rank):
        modes = [None] + sorted(parabolics.very_bad_primes(t))
        for p in modes:
            tasks.append(("p2", t, n, p))
            tasks.append(("richardson", t, n, p))
        if n >= 2:
            for p in PRIMES:
                tasks.append(("2F", t, n, p))
            if n <= LIE_MAX_RANK:
                for p in PRIMES:
                    tasks.append(("2F_lie", t, n, p))
        tasks.append(("r2F_window", t, n, None))
    if finite:
        tasks.extend(("finite",) + spec + (cap,) for spec in FINITE_SUITE)
    return tasks


def _window_report(t: str, n: int) -> InequalityReport:
    w = r2F_window(t, n)
    rep = InequalityReport("r2F_window", t, n, None, [Record((), w.low, w.high, True)])
    if w.note:
        rep.notes.append(w.note)
    return rep


def run_task(task: tuple) -> dict:
    """Evaluate one sweep task and return its JSON-ready dict."""
    name = task[0]
    if name == "finite":
        return verify_finite_suite(*task[1:]).to_dict()
    _, t, n, p = task
    if name == "p2":
        rep = check_p2(t, n, p)
    elif name == "richardson":
        rep = check_richardson(t, n, p)
    elif name == "2F":
        rep = check_2F(t, n, p)
    elif name == "2F_lie":
        rep = check_2F_lie(t, n, p)
        out = rep.to_dict()
        out["as_expected"] = lie_as_expected(rep)
        return out
    else:
        rep = _window_report(t, n)
    return rep.to_dict()


def verify_all(max_rank: int = 8, threads: int = 1, finite: bool = True,
               cap: int = fgroups.DEFAULT_CAP) -> list[dict]:
    """Run every sweep; the result order depends only on the arguments."""
    tasks = _tasks(max_rank, finite, cap)
    if threads <= 1:
        return [run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(run_task, tasks))
