"""Command-line front end.

Exit codes: 0 when every verdict is as expected, 1 when some verdict is not,
2 for usage or internal errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import chevalley, parabolics, rootsys, verify
from .finitegrp import groups as fgroups
from .finitegrp import weak

FORMATS = ("text", "json", "tsv")


@dataclass(frozen=True)
class RunConfig:
    command: tuple[str, ...]
    threads: int
    cap: int
    fmt: str
    out: str | None

    def __post_init__(self):
        if self.threads < 1 or self.cap < 1:
            raise ValueError("--threads and --cap must be positive")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _prime(text: str) -> int:
    v = int(text)
    if not chevalley.is_prime(v):
        raise argparse.ArgumentTypeError(f"expected a prime, got {text}")
    return v


def _add_output(p: argparse.ArgumentParser, tsv: bool = True) -> None:
    p.add_argument("--json", action="store_true", help="JSON output")
    if tsv:
        p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.add_argument("--out", help="write the report to this path")


def _add_type(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="Lie type letter A-G")
    p.add_argument("--rank", required=True, type=int, help="rank, up to 8")


def _add_group(p: argparse.ArgumentParser, q_required: bool = True) -> None:
    p.add_argument("--kind", required=True, help="SL, SL2, SL3, SL4, Sp4 or SU3")
    p.add_argument("--q", type=int, required=q_required,
                   help="field size (q0 for SU3)")
    p.add_argument("--dim", type=int, help="matrix size for --kind SL")
    p.add_argument("--cap", type=_positive, default=fgroups.DEFAULT_CAP,
                   help="largest group order to enumerate")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weakclosure",
                                 description="Weakly closed unipotent subgroups and 2F inequalities.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("roots", help="root system data")
    _add_type(p)
    _add_output(p)

    p = sub.add_parser("parabolics", help="standard parabolics and centralizer roots")
    _add_type(p)
    p.add_argument("--p", type=_prime, help="characteristic for the centralizer roots")
    _add_output(p)

    p = sub.add_parser("lie", help="Lie centralizer dimensions of unipotent radicals mod p")
    _add_type(p)
    p.add_argument("--p", type=_prime, required=True, help="prime characteristic")
    _add_output(p)

    fin = sub.add_parser("finite", help="enumerated finite groups")
    fsub = fin.add_subparsers(dest="fcmd", required=True)
    for name, text in [
        ("build", "orders of the named subgroups"),
        ("enumerate-wc", "weakly closed subgroups of U"),
        ("verify-mainthm", "weakly closed subgroups of U are exactly the radicals"),
        ("suite", "all finite checks on one group"),
    ]:
        p = fsub.add_parser(name, help=text)
        _add_group(p)
        _add_output(p)
    p = fsub.add_parser("example1", help="weakly closed <u, Y> over F_2")
    _add_group(p, q_required=False)
    _add_output(p)

    ver = sub.add_parser("verify", help="inequality sweeps")
    vsub = ver.add_subparsers(dest="vcmd", required=True)
    p = vsub.add_parser("all", help="every sweep up to the given rank")
    p.add_argument("--max-rank", type=int, default=8, help="largest rank swept")
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                   help="worker processes")
    p.add_argument("--cap", type=_positive, default=fgroups.DEFAULT_CAP,
                   help="largest group order to enumerate")
    p.add_argument("--skip-finite", action="store_true", help="omit the finite-group suites")
    _add_output(p)
    return ap


# -- rendering ----------------------------------------------------------------

def _fmt(args) -> str:
    if getattr(args, "json", False) and getattr(args, "tsv", False):
        raise UsageError("--json and --tsv are exclusive")
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "tsv", False):
        return "tsv"
    return "text"


def _tsv(header: list[str], rows: list[list]) -> str:
    lines = ["\t".join(header)]
    for r in rows:
        lines.append("\t".join("" if v is None else str(v) for v in r))
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------

def _system(args) -> rootsys.RootSystem:
    rootsys.validate_type(args.type, args.rank)
    return rootsys.get(args.type, args.rank)


def cmd_roots(args, fmt: str) -> tuple[str, int]:
    rs = _system(args)
    hr = rs.roots[rs.highest_root]
    data = {
        "type": rs.type_label, "rank": rs.rank, "num_roots": rs.num_roots,
        "num_positive": len(rs.positive), "dim_g": rs.dim_g, "dim_b": rs.dim_b,
        "cartan": [list(r) for r in rs.cartan], "highest_root_coeffs": list(hr),
        "positive_roots": [{"root": list(r), "height": sum(r), "label": rs.format_root(r)}
                           for r in rs.positive],
    }
    if fmt == "json":
        return _dump(data), 0
    if fmt == "tsv":
        return _tsv(["root", "height", "label"],
                    [[" ".join(map(str, r)), sum(r), rs.format_root(r)] for r in rs.positive]), 0
    lines = [f"{rs.name}: {rs.num_roots} roots, {len(rs.positive)} positive, "
             f"dim G = {rs.dim_g}, dim B = {rs.dim_b}",
             f"highest root: {rs.format_root(hr)}", "Cartan matrix:"]
    lines += ["  " + " ".join(f"{a:2d}" for a in row) for row in rs.cartan]
    lines += [f"  {sum(r):2d}  {rs.format_root(r)}" for r in rs.positive]
    return "\n".join(lines) + "\n", 0


def cmd_parabolics(args, fmt: str) -> tuple[str, int]:
    rs = _system(args)
    rows = []
    for d in parabolics.all_parabolics(rs):
        g = parabolics.centralizer_roots(d, args.p)
        rows.append({"J": d.J_labels, **d.dims(), "gamma_size": len(g),
                     "gamma_roots": g.formatted()})
    if fmt == "json":
        return _dump({"type": rs.type_label, "rank": rs.rank, "p": args.p, "parabolics": rows}), 0
    if fmt == "tsv":
        return _tsv(["J", "dim_pu", "dim_l", "dim_p", "gamma_size", "gamma_roots"],
                    [[",".join(map(str, r["J"])), r["dim_pu"], r["dim_l"], r["dim_p"],
                      r["gamma_size"], " ".join(r["gamma_roots"])] for r in rows]), 0
    mode = "generic" if args.p is None else f"p = {args.p}"
    lines = [f"{rs.name}, centralizer roots in {mode}"]
    for r in rows:
        lines.append(f"  J={r['J']}: dim P_u={r['dim_pu']} dim P={r['dim_p']} "
                     f"|Gamma|={r['gamma_size']} {r['gamma_roots']}")
    return "\n".join(lines) + "\n", 0


LIE_KEYS = ["J", "dim_pu", "gamma_generic", "gamma_mod_p", "lie_centralizer_dim", "agree",
            "lhs", "dim_g"]


def cmd_lie(args, fmt: str) -> tuple[str, int]:
    rs = _system(args)
    basis = chevalley.get(rs.type_label, rs.rank)
    rows = []
    for d in parabolics.all_parabolics(rs, proper_only=True):
        c = chevalley.lie_centralizer_dim(basis, d, args.p)
        gp = len(parabolics.centralizer_roots(d, args.p, basis))
        rows.append({"J": d.J_labels, "dim_pu": d.dim_pu, "gamma_generic": len(d.gamma_generic),
                     "gamma_mod_p": gp, "lie_centralizer_dim": c, "agree": c == gp,
                     "lhs": 2 * d.dim_pu + c, "dim_g": rs.dim_g})
    if fmt == "json":
        return _dump({"type": rs.type_label, "rank": rs.rank, "p": args.p, "records": rows}), 0
    if fmt == "tsv":
        return _tsv(LIE_KEYS, [[",".join(map(str, r["J"])) if k == "J" else r[k] for k in LIE_KEYS]
                               for r in rows]), 0
    lines = [f"{rs.name} over F_{args.p}: dim c_g(P_u) per proper J"]
    for r in rows:
        flag = "" if r["lie_centralizer_dim"] == r["gamma_generic"] else "  (differs from generic)"
        lines.append(f"  J={r['J']}: {r['lie_centralizer_dim']} (|Gamma| generic "
                     f"{r['gamma_generic']}, mod p {r['gamma_mod_p']}), "
                     f"2 dim P_u + dim c = {r['lhs']} / dim g = {r['dim_g']}{flag}")
    return "\n".join(lines) + "\n", 0


def _group(args) -> fgroups.MatrixGroup:
    return fgroups.build_group(args.kind, args.q, args.dim, cap=args.cap)


def _records_text(G, recs: list[dict]) -> list[str]:
    out = []
    for r in recs:
        rad = "-" if r["equals_radical_J"] is None else f"P_u(J={r['equals_radical_J']})"
        out.append(f"  order {r['order']:4d}  radical {rad}  gens {', '.join(r['generators'])}")
    return out


def cmd_finite(args, fmt: str) -> tuple[str, int]:
    if args.fcmd == "example1":
        q = 2 if args.q is None else args.q
        G = fgroups.build_group(args.kind, q, args.dim, cap=args.cap)
        try:
            X = weak.example1_subgroup(G)
        except weak.PreconditionError as exc:
            raise UsageError(str(exc)) from exc
        rec = verify.subgroup_record(G, X)
        ok = rec["weakly_closed"] and rec["equals_radical_J"] is None
        Y = weak.example1_Y(G)
        data = {"group": G.label, "Y_order": Y.order, "X": rec, "holds": ok}
        if fmt == "json":
            return _dump(data), 0 if ok else 1
        text = (f"{G.label}: |Y| = {Y.order}, |X| = {X.order}, "
                f"weakly closed = {rec['weakly_closed']}, radical = {rec['equals_radical_J']}\n")
        return text, 0 if ok else 1

    G = _group(args)
    if args.fcmd == "build":
        data = {"group": G.label, "G": G.order, "U": G.U.order, "B": G.B.order,
                "T": G.T.order, "Z": G.center.order, "Z(U)": G.center_of(G.U).order}
        if fmt == "json":
            return _dump(data), 0
        if fmt == "tsv":
            return _tsv(list(data), [list(data.values())]), 0
        return "".join(f"{k:6s} {v}\n" for k, v in data.items()), 0

    if args.fcmd == "suite":
        rep = verify.verify_finite_suite(args.kind, args.q, args.dim, cap=args.cap)
        return _render_reports([rep.to_dict()], fmt), 0 if rep.verdict else 1

    wc = weak.enumerate_weakly_closed(G)
    recs = [verify.subgroup_record(G, X) for X in wc]
    radicals = set(G.parabolic_radicals().values())
    exact = set(wc) == radicals
    code = 0
    if args.fcmd == "verify-mainthm":
        code = 0 if exact else 1
    if fmt == "json":
        return _dump({"group": G.label, "weakly_closed": recs, "equals_radicals": exact}), code
    if fmt == "tsv":
        return _tsv(["order", "equals_radical_J", "generators"],
                    [[r["order"], "" if r["equals_radical_J"] is None
                      else ",".join(map(str, r["equals_radical_J"])), " ".join(r["generators"])]
                     for r in recs]), code
    lines = [f"{G.label}: {len(wc)} weakly closed subgroups of U, {len(radicals)} radicals"]
    lines += _records_text(G, recs)
    lines.append(f"weakly closed set equals radical set: {exact}")
    return "\n".join(lines) + "\n", code


def _render_reports(reports: list[dict], fmt: str) -> str:
    if fmt == "json":
        return _dump(reports)
    if fmt == "tsv":
        rows = []
        for r in reports:
            if r["check"] == "finite":
                for c in r["records"]:
                    rows.append([r["check"], r["group"], "", r["p"], c["name"], "", "", "",
                                 c["holds"]])
            else:
                for c in r["records"]:
                    rows.append([r["check"], r["type"], r["rank"], r["p"],
                                 ",".join(map(str, c["J"])), c["lhs"], c["rhs"], c["strict"],
                                 c["holds"]])
        return _tsv(["check", "type", "rank", "p", "J", "lhs", "rhs", "strict", "holds"], rows)
    lines = []
    for r in reports:
        what = r["group"] if r["check"] == "finite" else f"{r['type']}{r['rank']}"
        p = "-" if r["p"] is None else r["p"]
        status = "expected" if r["as_expected"] else "UNEXPECTED"
        verdict = "holds" if r["verdict"] else "fails"
        extra = ""
        if r["expected_boundaries"]:
            extra = f"  boundary J={r['expected_boundaries']}"
        lines.append(f"{r['check']:<10} {what:<8} p={p:<2} records={len(r['records']):<4} "
                     f"{verdict:<5} {status}{extra}")
    bad = sum(1 for r in reports if not r["as_expected"])
    lines.append(f"{len(reports)} reports, {bad} unexpected")
    return "\n".join(lines) + "\n"


def cmd_verify(args, fmt: str) -> tuple[str, int]:
    cfg = RunConfig(("verify", "all"), args.threads, args.cap, fmt, args.out)
    if not 1 <= args.max_rank <= 8:
        raise UsageError("--max-rank must be between 1 and 8")
    reports = verify.verify_all(args.max_rank, cfg.threads, finite=not args.skip_finite,
                                cap=cfg.cap)
    code = 0 if all(r["as_expected"] for r in reports) else 1
    return _render_reports(reports, fmt), code


COMMANDS = {"roots": cmd_roots, "parabolics": cmd_parabolics, "lie": cmd_lie,
            "finite": cmd_finite, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        fmt = _fmt(args)
        text, code = COMMANDS[args.cmd](args, fmt)
    except (UsageError, rootsys.RootSystemError, fgroups.UnsupportedGroupError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2
    _emit(text, getattr(args, "out", None))
    return code


if __name__ == "__main__":
    sys.exit(main())
