"""Command line front end.

Exit codes: 0 when every verdict is as expected, 1 on a deviation,
2 when a Groebner computation ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import containment as ct
from .arith import TermOrder, xyz_ring
from .groebner import DEFAULT_BUDGET, STRETCH_BUDGET, Budget, ResourceLimit, budget
from .linverify import (
    CertificatePrereqFailed,
    express_b3,
    fermat_report_json,
    fermat_suite,
    generic_residual,
    random_evaluations,
    verify_theorem51_instance,
)
from .manifest import ManifestError, RunReport, example_6_4, field_from, resolve_target, run_manifest
from .moncurve import CompleteIntersection, curve_kernel_oracle, herzog_presentation
from .symbolic import closed_form_power, symbolic_power

log = logging.getLogger("sympow")

EXIT_OK, EXIT_DEVIATION, EXIT_BUDGET = 0, 1, 2


def _emit(args, payload: dict, table: list[tuple[str, object]] | None = None) -> None:
    if args.json or not table:
        print(json.dumps(payload, indent=2, default=str))
        return
    width = max(len(k) for k, _ in table)
    for k, v in table:
        print(f"{k:<{width}}  {v}")


def _target_spec(text: str) -> dict:
    """'3,4,5' or '3 4 5' for a curve, otherwise a named example."""
    parts = text.replace(",", " ").split()
    if len(parts) == 3 and all(p.isdigit() for p in parts):
        return {"curve": [int(p) for p in parts]}
    if text.endswith(".json"):
        return json.loads(Path(text).read_text())
    return {"named": text}


def _order(args) -> TermOrder | None:
    return None if args.order is None else TermOrder(args.order)


# -- subcommands ------------------------------------------------------------------

def cmd_curve(args) -> int:
    fld = field_from(args.char)
    if args.action == "oracle":
        P = curve_kernel_oracle(args.a, args.b, args.c, field=fld)
        _emit(args, {"curve": [args.a, args.b, args.c], "generators": [str(g) for g in P.gens],
                     "complete_intersection": len(P.gens) == 2},
              [("curve", (args.a, args.b, args.c))] + [(f"g{i + 1}", g) for i, g in enumerate(P.gens)])
        return EXIT_OK
    try:
        curve = herzog_presentation(args.a, args.b, args.c, field=fld)
    except CompleteIntersection as exc:
        _emit(args, {"curve": [args.a, args.b, args.c], "complete_intersection": True, "detail": str(exc)},
              [("curve", (args.a, args.b, args.c)), ("complete intersection", True)])
        return EXIT_OK
    d = curve.describe()
    _emit(args, d, [(k, v) for k, v in d.items()])
    return EXIT_OK


def cmd_symbolic(args) -> int:
    fld = field_from(args.char)
    curve = herzog_presentation(args.a, args.b, args.c, field=fld)
    out: dict = {"curve": [args.a, args.b, args.c], "working_curve": list(curve.abc), "case": curve.case}
    if args.route in ("sat", "both"):
        out["saturation"] = symbolic_power(curve.ideal(), args.n).to_json()
    if args.route in ("closed", "both"):
        res = closed_form_power(curve, args.n, crosscheck=args.route == "both")
        out["closed_form"] = res.to_json()
        out["crosscheck"] = res.crosscheck
    _emit(args, out)
    return EXIT_DEVIATION if out.get("crosscheck") == "fail" else EXIT_OK


def _expect_code(verdict, expect) -> int:
    if expect is None:
        return EXIT_OK
    return EXIT_OK if str(verdict) == str(expect) else EXIT_DEVIATION


def cmd_contain(args) -> int:
    target = resolve_target(_target_spec(args.target), field_from(args.char))
    rep = ct.symbolic_containment(target.ideal, args.m, args.s)
    rep.query["target"] = target.name
    _emit(args, rep.to_json(), [("query", rep.query), ("verdict", rep.verdict), ("witness", rep.witness),
                                ("ms", round(rep.ms, 1))])
    return _expect_code(rep.verdict, args.expect)


def cmd_resurgence(args) -> int:
    target = resolve_target(_target_spec(args.target), field_from(args.char))
    est = ct.resurgence_search(target.ideal, args.box[0], args.box[1])
    payload = {"query": {"op": "resurgence", "target": target.name}, **est.to_json()}
    _emit(args, payload, [("target", target.name), ("lower bound", est.lower_bound),
                          ("witnesses", est.witnesses), ("thresholds", est.thresholds),
                          ("box", est.search_box)])
    if est.partial:
        return EXIT_BUDGET
    return _expect_code(est.lower_bound, args.expect)


def cmd_harbourne(args) -> int:
    target = resolve_target(_target_spec(args.target), field_from(args.char))
    reps = ct.harbourne_window(target.ideal, args.c, args.n)
    payload = {"query": {"op": "harbourne", "target": target.name, "c": args.c, "n": args.n},
               "reports": [r.to_json() for r in reps]}
    _emit(args, payload, [(f"n={r.query['n']}", f"{r.verdict}  {r.witness or ''}") for r in reps])
    verdict = "holds" if all(r.holds for r in reps) else "fails"
    return _expect_code(verdict, args.expect)


def cmd_fourthirds(args) -> int:
    curve = herzog_presentation(args.a, args.b, args.c, field=field_from(args.char))
    rep = ct.four_thirds_suite(curve, m_max=args.m_max)
    _emit(args, rep.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.instance:
        data = json.loads(Path(args.instance).read_text())
        spec = {"ring": data["ring"], "generators": data["entries"]} if "ring" in data else \
            {"generators": data["entries"]}
        ring = resolve_target(spec, field_from(args.char)).ideal.ring
        entries = [ring.parse(e) for e in data["entries"]]
        xs = [ring.parse(x) for x in data["xs"]] if "xs" in data else express_b3(entries)
        if xs is None:
            print(json.dumps({"error": "b3 is not a combination of the other entries by division"}))
            return EXIT_DEVIATION
        try:
            rep = verify_theorem51_instance(entries, xs)
        except CertificatePrereqFailed as exc:
            print(json.dumps({"error": str(exc)}))
            return EXIT_DEVIATION
        _emit(args, rep.to_json())
        return EXIT_OK if rep.query["certificate"] and rep.holds else EXIT_DEVIATION
    residual = generic_residual()
    good = random_evaluations(args.trials)
    ok = all(not r for r in residual) and good == args.trials
    _emit(args, {"residual": [str(r) for r in residual], "random_evaluations": f"{good}/{args.trials}",
                 "verdict": "holds" if ok else "fails"},
          [("residual", [str(r) for r in residual]), ("random evaluations", f"{good}/{args.trials}")])
    return EXIT_OK if ok else EXIT_DEVIATION


def cmd_fermat(args) -> int:
    rows = fermat_suite(xyz_ring(field_from(args.char)))
    payload = fermat_report_json(rows)
    code = EXIT_OK
    for row in rows:
        rep = row["I3_in_I2"]
        if rep is None or row["corner"] != "z^2":
            continue
        expected = "fails" if row["matrix"] == "M" else "holds"
        if rep.verdict != expected:
            code = EXIT_DEVIATION
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for d in payload:
            rep = d["I3_in_I2"]
            verdict = rep["verdict"] if rep else "skipped (inhomogeneous)"
            print(f"{d['matrix']} {d['corner']:<4} classical={d['classical_fermat']!s:<5} I^(3)⊆I^2: {verdict}")
    return code


def _emit_run(args, report: RunReport) -> int:
    payload = report.to_json(deterministic=args.deterministic)
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        for it in report.items:
            mark = {True: "ok", False: "DEVIATION", None: "-"}[it.get("matches")]
            print(f"{it['op']:<24} {it['status']:<16} verdict={it.get('verdict')!s:<12} {mark}")
    return report.exit_code()


def cmd_run(args) -> int:
    report = run_manifest(args.manifest, field=None if args.char is None else field_from(args.char),
                          workers=args.workers, limit=_budget_from(args))
    return _emit_run(args, report)


def cmd_example64(args) -> int:
    report = example_6_4(field_from(args.char), _budget_from(args) or STRETCH_BUDGET)
    code = _emit_run(args, report)
    # running out of budget is an accepted outcome for this workload
    return EXIT_OK if code == EXIT_BUDGET else code


def _budget_from(args) -> Budget | None:
    if args.budget is None:
        return None
    if args.budget == "stretch":
        return STRETCH_BUDGET
    return Budget(max_pairs=int(args.budget))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=None, help="field characteristic (0 for the rationals)")
    common.add_argument("--order", choices=["degrevlex", "lex"], default=None,
                        help="term order for containment checks")
    common.add_argument("--budget", default=None, help="S-pair budget per Groebner basis, or 'stretch'")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--deterministic", action="store_true", help="drop timings from run reports")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="sympow", description="Symbolic power containment experiments")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("curve", parents=[common], help="presentation or kernel of a monomial curve")
    s.add_argument("action", choices=["present", "oracle"])
    for name in "abc":
        s.add_argument(name, type=int)
    s.set_defaults(func=cmd_curve)

    s = sub.add_parser("symbolic", parents=[common], help="symbolic power of a curve prime")
    for name in "abc":
        s.add_argument(name, type=int)
    s.add_argument("n", type=int)
    s.add_argument("--route", choices=["sat", "closed", "both"], default="both")
    s.set_defaults(func=cmd_symbolic)

    s = sub.add_parser("contain", parents=[common], help="decide I^(m) ⊆ I^s")
    s.add_argument("target", help="'a,b,c' curve, named example or ideal JSON file")
    s.add_argument("m", type=int)
    s.add_argument("s", type=int)
    s.add_argument("--expect", choices=["holds", "fails"])
    s.set_defaults(func=cmd_contain)

    s = sub.add_parser("resurgence", parents=[common], help="search failures of I^(m) ⊆ I^s")
    s.add_argument("target")
    s.add_argument("--box", type=int, nargs=2, default=[6, 4], metavar=("M", "S"))
    s.add_argument("--expect", type=Fraction)
    s.set_defaults(func=cmd_resurgence)

    s = sub.add_parser("harbourne", parents=[common], help="I^(cn-c+1) ⊆ I^n over a window")
    s.add_argument("target")
    s.add_argument("--c", type=int, default=2)
    s.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    s.add_argument("--expect", choices=["holds", "fails"])
    s.set_defaults(func=cmd_harbourne)

    s = sub.add_parser("fourthirds", parents=[common], help="degree-two hypotheses and guarantee table")
    for name in "abc":
        s.add_argument(name, type=int)
    s.add_argument("--m-max", type=int, default=5)
    s.set_defaults(func=cmd_fourthirds)

    s = sub.add_parser("verify-thm51", parents=[common], help="linear certificate, generic or on an instance")
    s.add_argument("--instance", help="JSON with entries (six) and optionally xs (five)")
    s.add_argument("--trials", type=int, default=100)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("fermat", parents=[common], help="the Fermat matrix and its reordering")
    s.set_defaults(func=cmd_fermat)

    s = sub.add_parser("run", parents=[common], help="run an experiment manifest")
    s.add_argument("manifest")
    s.set_defaults(func=cmd_run)

    s = sub.add_parser("example-6-4", parents=[common], help="the self-linked curve with P^(4) not in P^3")
    s.set_defaults(func=cmd_example64)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    lim = _budget_from(args) or DEFAULT_BUDGET
    try:
        with budget(lim), ct.containment_order(_order(args)):
            return args.func(args)
    except ResourceLimit as exc:
        print(json.dumps({"status": "budget-exceeded", "detail": str(exc)}))
        return EXIT_BUDGET
    except (ManifestError, CompleteIntersection, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEVIATION


if __name__ == "__main__":
    sys.exit(main())
