"""``popcert`` command line.

Exit codes: 0 pass / certified / holds, 1 fail / rejected / counterexample,
2 bad input. Indices in all output are 1-based. ``-`` reads stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import pipeline as cert
from .criterion import InequalitySpec, Mode, check_conditions
from .errors import ParseError, PopcertError
from .families import cyclic_spec, jensen_spec, popoviciu_spec, zhao_spec
from .interpolation import interpolate_abs, read_samples_csv
from .karamata import WeightedPointSystem, check_symmetric_condition
from .numerics import ConvexFunction, format_rational, parse_rational_list
from .zerosum import decompose


def _read_text(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc


def _read_json(path: str, stdin, what: str):
    try:
        return json.loads(_read_text(path, stdin))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what} {path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


class _Printer:
    def __init__(self, args, out):
        self.json = args.json
        self.decimal = args.decimal
        self.out = out

    def q(self, value) -> str:
        return format_rational(value, self.decimal)

    def line(self, text=""):
        print(text, file=self.out)

    def dump(self, obj):
        print(json.dumps(obj, indent=2, sort_keys=True), file=self.out)


def _load_spec(args, stdin) -> InequalitySpec:
    return InequalitySpec.from_json(_read_json(args.spec, stdin, "spec"))


def _report_json(report) -> dict:
    return {
        "passed": report.passed,
        "mode": report.mode.value,
        "residuals": [str(r) for r in report.equality_residuals],
        "pair_slacks": [
            {"i": i + 1, "j": j + 1, "slack": str(s)} for (i, j), s in report.pair_slacks.items()
        ],
    }


def _print_report(p: _Printer, report):
    p.line(f"verdict: {'PASS' if report.passed else 'FAIL'} (mode {report.mode.value})")
    p.line("residuals a_i + a - sum_s b_s r_s,i:")
    strict = report.mode is Mode.STRICT
    for i, res in enumerate(report.equality_residuals):
        ok = res == 0 if strict else res >= 0
        p.line(f"  i={i + 1}: {p.q(res)}{'' if ok else '   <-- violated'}")
    if report.pair_slacks:
        p.line("pair slacks a_i + a_j - sum_s b_s |r_s,i - r_s,j|:")
        for (i, j), slack in report.pair_slacks.items():
            p.line(f"  ({i + 1},{j + 1}): {p.q(slack)}{'' if slack >= 0 else '   <-- violated'}")


def cmd_check(args, p, stdin):
    spec = _load_spec(args, stdin)
    report = check_conditions(spec, Mode(args.mode))
    if p.json:
        p.dump({"command": "check", **_report_json(report)})
    else:
        _print_report(p, report)
    return 0 if report else 1


def cmd_certify(args, p, stdin):
    spec = _load_spec(args, stdin)
    report = cert.certify(spec)
    payload = {"command": "certify", "certified": report.passed, **_report_json(report)}
    sweep = None
    if args.trials and report:
        value, inst, f = cert.soundness_sweep(spec, args.trials, args.seed)
        sweep = {"trials": args.trials, "seed": args.seed, "min_value": str(value)}
        payload["sweep"] = sweep
    if p.json:
        p.dump(payload)
    else:
        p.line("certified" if report else "rejected")
        if not report:
            for failure in report.failures():
                p.line(f"  {failure}")
        if sweep:
            p.line(f"random sweep: {args.trials} trials (seed {args.seed}), min LHS - RHS = {p.q(Fraction(sweep['min_value']))}")
    return 0 if report else 1


def cmd_evaluate(args, p, stdin):
    spec = _load_spec(args, stdin)
    inst = cert.Instance.from_json(_read_json(args.instance, stdin, "instance"))
    f = ConvexFunction.from_json(_read_json(args.function, stdin, "function"))
    lhs, rhs = cert.instance_sides(spec, inst, f)
    value = lhs - rhs
    holds = value >= 0 if f.is_exact else cert.holds_within_tolerance(lhs, rhs)
    if p.json:
        enc = str if f.is_exact else float
        p.dump({"command": "evaluate", "lhs": enc(lhs), "rhs": enc(rhs), "value": enc(value),
                "exact": f.is_exact, "holds": holds})
    else:
        p.line(p.q(value))
    return 0 if holds else 1


def cmd_falsify(args, p, stdin):
    spec = _load_spec(args, stdin)
    wit = cert.falsify(spec)
    if wit is None:
        if p.json:
            p.dump({"command": "falsify", "certified": True, "witness": None})
        else:
            p.line("certified: no counterexample exists")
        return 0
    value = cert.verify_witness(spec, wit)
    if p.json:
        p.dump({"command": "falsify", "certified": False, "witness": wit.to_json(), "value": str(value)})
    else:
        p.line("counterexample found")
        p.line(f"  violated: {wit.violated_condition}")
        p.line(f"  f: {json.dumps(wit.f.to_json())}")
        p.line(f"  x: {', '.join(p.q(v) for v in wit.x)}")
        p.line(f"  w: {', '.join(p.q(v) for v in wit.w)}")
        p.line(f"  LHS - RHS = {p.q(value)}")
    return 1


def cmd_meanpoints(args, p, stdin):
    spec = _load_spec(args, stdin)
    inst = cert.Instance.from_json(_read_json(args.instance, stdin, "instance"))
    certificate = cert.mean_point_system(spec, inst)
    report = check_symmetric_condition(certificate.system)
    if p.json:
        p.dump({
            "command": "meanpoints",
            "u": [str(v) for v in certificate.u],
            "z": [str(v) for v in certificate.z],
            "symmetric_condition": report.passed,
        })
    else:
        p.line(f"{'k':>4}  {'u_k':>16}  {'z_k':>16}")
        for k, (u, z) in enumerate(certificate.rows(), start=1):
            p.line(f"{k:>4}  {p.q(u):>16}  {p.q(z):>16}")
        p.line(f"sum u_k = {p.q(report.weight_sum)}; symmetric condition {'holds' if report else 'fails'}")
    return 0 if report else 1


def cmd_family(args, p, stdin):
    if args.name == "jensen":
        spec = jensen_spec(_need(args.n, "--n"))
    elif args.name == "zhao":
        spec = zhao_spec(_need(args.n, "--n"), _need(args.m, "--m"))
    elif args.name == "cyclic":
        spec = cyclic_spec(_need(args.n, "--n"), _need(args.r, "--r"))
    else:
        spec = popoviciu_spec()
    text = json.dumps(spec.to_json(), indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        p.line(text)
    return 0


def _need(value, flag):
    if value is None:
        raise ParseError(f"{flag}: required for this family")
    return value


def cmd_decompose(args, p, stdin):
    x = parse_rational_list(args.vector, "vector")
    pairs = decompose(x)
    if p.json:
        p.dump({"command": "decompose", "pairs": [
            {"i": i + 1, "j": j + 1, "coefficient": str(c)} for (i, j), c in pairs.items()
        ]})
    else:
        p.line(", ".join(f"e{i + 1}-e{j + 1}: {p.q(c)}" for (i, j), c in pairs.items()) or "(zero vector)")
    return 0


def cmd_interpolate(args, p, stdin):
    samples = read_samples_csv(_read_text(args.samples, stdin))
    interp = interpolate_abs(samples)
    p.line(json.dumps(interp.to_convex_function().to_json(), indent=None if p.json else 2))
    return 0


def cmd_karamata(args, p, stdin):
    system = WeightedPointSystem(parse_rational_list(args.z, "z"), parse_rational_list(args.w, "w"))
    report = check_symmetric_condition(system)
    if p.json:
        p.dump({
            "command": "karamata",
            "passed": report.passed,
            "weight_sum": str(report.weight_sum),
            "failure": report.failure,
            "table": [{"t": str(t), "sum": str(v)} for t, v in report.table],
        })
    else:
        p.line(f"verdict: {'PASS' if report else 'FAIL'}")
        p.line(f"sum w_k = {p.q(report.weight_sum)}{'' if report.weight_sum == 0 else '   <-- must be 0'}")
        p.line(f"{'t':>12}  {'sum w_k |z_k - t|':>20}")
        for t, v in report.table:
            p.line(f"{p.q(t):>12}  {p.q(v):>20}{'' if v >= 0 else '   <-- negative'}")
    return 0 if report else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--decimal", type=int, metavar="N", help="show rationals as N-digit decimals")

    parser = argparse.ArgumentParser(prog="popcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", parents=[common], help="run the finite criterion on a spec")
    sp.add_argument("spec")
    sp.add_argument("--mode", choices=["13", "14"], default="14",
                    help="14: a_i + a must equal sum b r (default); 13: only >=")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("certify", parents=[common], help="certify a spec for all convex f")
    sp.add_argument("spec")
    sp.add_argument("--trials", type=int, default=0, help="also run a random soundness sweep")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("evaluate", parents=[common], help="LHS - RHS on one instance")
    sp.add_argument("spec")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--function", required=True)
    sp.set_defaults(func=cmd_evaluate)

    sp = sub.add_parser("falsify", parents=[common], help="counterexample for a rejected spec")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_falsify)

    sp = sub.add_parser("meanpoints", parents=[common], help="print the u_k / z_k certificate")
    sp.add_argument("spec")
    sp.add_argument("--instance", required=True)
    sp.set_defaults(func=cmd_meanpoints)

    sp = sub.add_parser("family", parents=[common], help="emit a named family spec")
    sp.add_argument("name", choices=["jensen", "zhao", "cyclic", "popoviciu"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("decompose", parents=[common], help="split a zero-sum vector into e_i - e_j")
    sp.add_argument("vector", help='comma-separated rationals, e.g. "2,-1,-1"')
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("interpolate", parents=[common], help="absolute-value interpolant of CSV samples")
    sp.add_argument("samples")
    sp.set_defaults(func=cmd_interpolate)

    sp = sub.add_parser("karamata", parents=[common], help="symmetric weighted Karamata check")
    sp.add_argument("--z", required=True)
    sp.add_argument("--w", required=True, help='weights; write --w=-1,1 when the list starts with a minus')
    sp.set_defaults(func=cmd_karamata)
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, _Printer(args, stdout), stdin)
    except PopcertError as exc:
        print(f"popcert {args.command}: error: {exc}", file=stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
