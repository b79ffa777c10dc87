"""Command line entry point: ``sqhspectrum <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import constructions as cons
from .dsl import parse_diagram, render_terms, render_vertices
from .geometry import newton_number, twice_area_under
from .oracle import Budget, BudgetExceeded, EnumerationConstraints, attainable_spectrum, verify
from .predictor import predicted_report
from .serialize import deformation_document, dumps, report_document, sweep_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt_values(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values, reverse=True)) + "}"


def _report_text(rep) -> str:
    p = rep.params
    lines = [
        f"weights (1/{p.p}, 1/{p.q})  k={p.k} r={p.r} m={p.m}",
        f"mu = {rep.mu}",
        f"mu(p,kp) = {rep.mu_pkp}",
        f"applicability: {rep.applicability}",
        "guaranteed: " + (", ".join(f"{lo}..{hi}" if lo != hi else str(lo) for lo, hi in rep.guaranteed) or "-"),
    ]
    if rep.possible_gaps:
        lines.append("possible gaps:")
        for g in rep.possible_gaps:
            lines.append(f"  {g.value:>6}  {g.case}{'  (definitive)' if g.definitive else ''}")
    else:
        lines.append("possible gaps: none")
    return "\n".join(lines) + "\n"


def cmd_newton(args, out) -> int:
    d = parse_diagram(args.spec)
    if not d.is_convenient:
        raise UsageError(f"diagram {d} does not meet both axes")
    out.write(f"nu = {newton_number(d)}\n")
    out.write(f"twice_area = {twice_area_under(d)}\n")
    out.write(f"x_intercept = {d.x_intercept}\n")
    out.write(f"y_intercept = {d.y_intercept}\n")
    out.write(f"vertices = {render_vertices(d)}\n")
    out.write(f"terms = {render_terms(d)}\n")
    return EXIT_OK


def cmd_report(args, out) -> int:
    rep = predicted_report(args.p, args.q)
    out.write(dumps(report_document(rep)) if args.json else _report_text(rep))
    return EXIT_OK


def _budget(args) -> Budget:
    return Budget(args.max_small, args.max_large)


def cmd_oracle(args, out) -> int:
    c = EnumerationConstraints(min_total_degree=args.min_degree)
    spec = attainable_spectrum(args.p, args.q, c, _budget(args), jobs=args.jobs)
    rep = predicted_report(args.p, args.q)
    if args.json:
        out.write(dumps(report_document(rep, spec)))
        return EXIT_OK
    mu = rep.mu
    missing = [v for v in range(1, mu + 1) if v not in set(spec.attainable)]
    out.write(f"base tr({args.p},{args.q}), nu = {mu}, {spec.chains_seen} deformations enumerated\n")
    out.write(f"not attained: {_fmt_values(missing)}\n")
    for nu in sorted(spec.witnesses, reverse=True):
        out.write(f"  {nu:>6}  {render_terms(spec.witnesses[nu])}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rep = verify(args.p, args.q, budget=_budget(args), jobs=args.jobs)
    if args.json:
        out.write(dumps(report_document(rep.predicted, rep.observed, rep)))
    else:
        out.write(f"verify ({args.p},{args.q}): {rep.status}  [{rep.predicted.applicability}]\n")
        out.write(f"predicted gaps: {_fmt_values(rep.predicted.gap_values)}\n")
        out.write(f"observed gaps:  {_fmt_values(rep.observed_gaps)}\n")
        out.write(f"missing guaranteed: {_fmt_values(rep.missing_guaranteed)}\n")
        out.write(f"closed gaps: {_fmt_values(rep.closed_gaps)}\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def _family_items(label: str, p: int, q: int, kappa: Optional[int]):
    params = cons.SQHParams(p, q)
    if label == "eq-3.1":
        return [cons.first_jump_diagram(params)]
    if label == "staircase":
        return cons.staircase_brackets(params)
    if label == "extended":
        fam = cons.extended_family(params)
        items = []
        for step in fam.steps:
            items.extend(step.staircase)
        return items
    if q % p:
        raise ValueError(f"family {label} needs p | q, got p={p}, q={q}")
    k = q // p
    if label == "pkp":
        kappas = [kappa] if kappa is not None else range(1, k + 1)
        return [it for kap in kappas for it in cons.pkp_family(p, k, kap)]
    if label == "small-p":
        if p == 2:
            return cons.small_p_family(2, k)
        kappas = [kappa] if kappa is not None else range(2, k + 1)
        return [it for kap in kappas for it in cons.small_p_family(p, k, kap)]
    raise ValueError(f"unknown family {label!r}; choose from {', '.join(cons.FAMILY_LABELS)}")


def cmd_family(args, out) -> int:
    try:
        items = _family_items(args.label, args.p, args.q, args.kappa)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        out.write(dumps({"schema_version": "1", "family": args.label, "deformations": deformation_document(items)}))
        return EXIT_OK
    for it in items:
        claim = "" if it.claimed_nu is None else f"  claimed {it.claimed_nu}"
        out.write(f"{it.label:<28} nu {it.nu:>5}{claim}  {render_terms(it.diagram)}\n")
    return EXIT_OK


def _sweep_row(pq, budget):
    p, q = pq
    t0 = time.perf_counter()
    rep = verify(p, q, budget=budget)
    ms = int((time.perf_counter() - t0) * 1000)
    return {
        "p": p,
        "q": q,
        "mu": rep.predicted.mu,
        "status": rep.status,
        "n_gaps_predicted": len(rep.predicted.gap_values),
        "n_gaps_observed": len(rep.observed_gaps),
        "runtime_ms": ms,
    }


def cmd_sweep(args, out) -> int:
    budget = _budget(args)
    pairs = [(p, q) for p in range(2, args.pmax + 1) for q in range(p, args.qmax + 1)]
    for p, q in pairs:
        budget.check(cons.triangle(p, q))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            rows = list(ex.map(_sweep_row, pairs, [budget] * len(pairs)))
    else:
        rows = [_sweep_row(pq, budget) for pq in pairs]
    text = sweep_csv(rows)
    if args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        failed = sum(r["status"] != "pass" for r in rows)
        out.write(f"wrote {len(rows)} rows to {args.out}; {failed} failing\n")
    return EXIT_OK if all(r["status"] == "pass" for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sqhspectrum", description="Newton numbers and Milnor number spectra of SQH plane curve singularities")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("newton", help="Newton number of a diagram")
    s.add_argument("spec", help='"(0,7) (2,1) (4,0)" or "tr(2,6) + tr(2,1) @ (0,7)"')
    s.set_defaults(func=cmd_newton)

    s = sub.add_parser("report", help="predicted gaps for weights (1/p, 1/q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true")
    s.set_defaults(func=cmd_report)

    def budget_opts(s):
        s.add_argument("--jobs", type=int, default=1, help="worker processes")
        s.add_argument("--max-small", type=int, default=12, help="budget for the smaller intercept")
        s.add_argument("--max-large", type=int, default=14, help="budget for the larger intercept")

    s = sub.add_parser("oracle", help="exhaustive spectrum of tr(p, q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--min-degree", type=int, default=2)
    s.add_argument("--json", action="store_true")
    budget_opts(s)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", help="compare prediction and oracle; exit 1 on failure")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--json", action="store_true")
    budget_opts(s)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("family", help="explicit deformations of a named construction")
    s.add_argument("label", choices=cons.FAMILY_LABELS)
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--kappa", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("sweep", help="verify every (p, q) in a range and write CSV")
    s.add_argument("--pmax", type=int, required=True)
    s.add_argument("--qmax", type=int, required=True)
    s.add_argument("--out", required=True, help="CSV path, or - for stdout")
    budget_opts(s)
    s.set_defaults(func=cmd_sweep)
    return ap


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
