"""Command-line front end.

Every command takes its operands as text in the scalar or matrix grammar of
:mod:`extnum.parse`, or as a path to a file holding that text.  Row and
column indices on the command line start at 1.

Exit status is 0 on success, 1 when the answer to a yes/no question is no
(``compare``) or a law check fails (``check``), and 2 on usage, parse or
domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .determinant import add_multiple_row, det, laplace
from .errors import ExtNumError, TheoremViolation
from .external import eleq, subset
from .harness import SUITES, GenConfig, run_containment, run_suite
from .inverse import near_inverse
from .parse import parse_matrix, parse_scalar
from .rank import Defined, UndefinedEvidence, rank_report

__all__ = ["main", "build_parser"]

CHECKABLE = sorted(SUITES) + ["containment", "all"]


def _source(arg: str) -> str:
    """The argument itself, or the contents of the file it names."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


class _Out:
    def __init__(self, fmt: str, unicode: bool):
        self.fmt = fmt
        self.unicode = unicode

    def text(self, value) -> str:
        return value.to_text(self.unicode) if hasattr(value, "to_text") else str(value)

    def emit(self, lines: list[str], payload: dict) -> None:
        if self.fmt == "json":
            print(json.dumps(payload, ensure_ascii=not self.unicode))
        else:
            for line in lines:
                print(line)


def _relation_payload(out: _Out, report) -> dict:
    return {
        "left": out.text(report.left),
        "right": out.text(report.right),
        "relation": report.relation.value,
        "conditions": report.conditions,
        "guaranteed": report.guaranteed,
    }


def _relation_lines(out: _Out, report) -> list[str]:
    lines = [f"left: {out.text(report.left)}", f"right: {out.text(report.right)}", f"relation: {report.relation.value}"]
    lines += [f"condition {k}: {'holds' if v else 'unmet'}" for k, v in report.conditions.items()]
    return lines


# commands --------------------------------------------------------------------------


def cmd_eval(args, out: _Out) -> int:
    x = parse_scalar(_source(args.expr))
    out.emit([out.text(x)], {"value": out.text(x), "zeroless": x.zeroless})
    return 0


def cmd_det(args, out: _Out) -> int:
    d = det(parse_matrix(_source(args.matrix)))
    out.emit([out.text(d)], {"det": out.text(d), "zeroless": d.zeroless})
    return 0


def cmd_laplace(args, out: _Out) -> int:
    a = parse_matrix(_source(args.matrix))
    report = laplace(a, args.col - 1)
    lines = [f"expansion along column {args.col}: {out.text(report.left)}", f"det: {out.text(report.right)}"]
    lines.append(f"expansion vs det: {report.relation.value}")
    lines += [f"condition {k}: {'holds' if v else 'unmet'}" for k, v in report.conditions.items()]
    payload = _relation_payload(out, report)
    payload["col"] = args.col
    out.emit(lines, payload)
    return 0


def cmd_rowop(args, out: _Out) -> int:
    a = parse_matrix(_source(args.matrix))
    t = parse_scalar(args.times)
    report = add_multiple_row(a, args.add - 1, args.to - 1, t, strict=not args.lenient)
    payload = {
        "matrix": out.text(report.matrix),
        "det_before": out.text(report.det_before),
        "det_after": out.text(report.det_after),
        "bound": out.text(report.bound),
        "bound_relation": report.bound_relation.value,
        "conditions": report.conditions,
        "unchanged_guaranteed": report.unchanged_guaranteed,
    }
    lines = [
        f"matrix: {payload['matrix']}",
        f"det before: {payload['det_before']}",
        f"det after: {payload['det_after']}",
        f"bound: {payload['bound']}",
        f"det after vs bound: {payload['bound_relation']}",
    ]
    lines += [f"condition {k}: {'holds' if v else 'unmet'}" for k, v in report.conditions.items()]
    lines.append(f"determinant unchanged: {'guaranteed' if report.unchanged_guaranteed else 'not guaranteed'}")
    out.emit(lines, payload)
    return 0


def cmd_inv(args, out: _Out) -> int:
    a = parse_matrix(_source(args.matrix))
    r = near_inverse(a)
    payload = {
        "candidate": None if r.candidate is None else out.text(r.candidate),
        "tolerance": out.text(r.tolerance),
        "hypotheses": r.hypotheses,
        "left_product": None if r.left_product is None else out.text(r.left_product),
        "right_product": None if r.right_product is None else out.text(r.right_product),
        "left_ok": r.left_ok,
        "right_ok": r.right_ok,
        "tight_tolerance": None if r.tight_tolerance is None else out.text(r.tight_tolerance),
    }
    lines = [f"candidate: {payload['candidate'] or 'none (determinant not zeroless)'}", f"tolerance: {payload['tolerance']}"]
    lines += [f"hypothesis {k}: {'holds' if v else 'violated'}" for k, v in r.hypotheses.items()]
    if r.candidate is not None:
        lines += [
            f"A*B: {payload['left_product']}",
            f"B*A: {payload['right_product']}",
            f"A*B inside I(N): {str(r.left_ok).lower()}",
            f"B*A inside I(N): {str(r.right_ok).lower()}",
            f"smallest working tolerance: {payload['tight_tolerance']}",
        ]
    out.emit(lines, payload)
    return 0


def cmd_rank(args, out: _Out) -> int:
    a = parse_matrix(_source(args.matrix))
    rep = rank_report(a, seed=args.seed, samples=args.samples)
    mr, rr, sr = rep.minor_rank, rep.row_rank, rep.strict_rank
    strict = {"variant": sr.name}
    if isinstance(sr, Defined):
        strict.update(value=sr.value, representative=out.text(sr.representative), via=sr.via)
    elif isinstance(sr, UndefinedEvidence):
        strict.update(samples=sr.samples, seed=sr.seed)
    payload = {
        "minor_rank": mr.value,
        "minor_witness": None
        if mr.witness is None
        else {
            "rows": [i + 1 for i in mr.witness.rows],
            "cols": [j + 1 for j in mr.witness.cols],
            "minor": out.text(mr.minor),
        },
        "row_rank": [rr.lo, rr.hi],
        "independent_rows": [i + 1 for i in rr.independent_rows],
        "independent_certificate": None if rr.independent_verdict is None else str(rr.independent_verdict.kind),
        "dependent_rows": [
            {
                "rows": [i + 1 for i in sub],
                "coefficients": [out.text(t) for t in v.witness],
                "combination": out.text(v.residual),
            }
            for sub, v in rr.dependent.items()
        ],
        "strict_rank": strict,
    }
    out.emit(rep.lines(), payload)
    return 0


def cmd_check(args, out: _Out) -> int:
    names = sorted(SUITES) + ["containment"] if args.suite == "all" else [args.suite]
    status = 0
    for name in names:
        if name == "containment":
            report = run_containment(count=args.trials, samples=args.samples, seed=args.seed)
        else:
            report = run_suite(name, GenConfig(seed=args.seed, trials=args.trials))
        if out.fmt == "json":
            print(report.to_json())
        else:
            line = f"{name}: {report.trials} trials, {report.failures} failures, {report.vacuous} vacuous"
            if report.counterexample:
                line += f"; first counterexample {report.counterexample}"
            print(line)
        if not report.ok:
            status = 1
    return status


def cmd_compare(args, out: _Out) -> int:
    a = parse_scalar(_source(args.left))
    b = parse_scalar(_source(args.right))
    if args.relation == "subset":
        verdict = subset(a, b)
    elif args.relation == "eq":
        verdict = a == b
    else:
        verdict = eleq(a, b)
    payload = {"relation": args.relation, "left": out.text(a), "right": out.text(b), "result": verdict}
    out.emit([str(verdict).lower()], payload)
    return 0 if verdict else 1


# parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--unicode", action="store_true", default=argparse.SUPPRESS, help="print eps, o, L as ε, ⊘, £")

    p = argparse.ArgumentParser(prog="extnum", description="Exact arithmetic of external numbers and flexible matrices.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--unicode", action="store_true", help="print eps, o, L as ε, ⊘, £")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate a scalar expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("det", parents=[common], help="determinant of a square matrix")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("laplace", parents=[common], help="cofactor expansion along a column, compared with det")
    s.add_argument("matrix")
    s.add_argument("--col", type=int, default=1, help="column index, starting at 1")
    s.set_defaults(func=cmd_laplace)

    s = sub.add_parser("rowop", parents=[common], help="add a multiple of one row to another and bound the det")
    s.add_argument("matrix")
    s.add_argument("--add", type=int, required=True, metavar="P", help="source row, starting at 1")
    s.add_argument("--to", type=int, required=True, metavar="K", help="target row, starting at 1")
    s.add_argument("--times", default="1", metavar="T", help="multiplier expression (default 1)")
    s.add_argument("--lenient", action="store_true", help="report unmet preconditions instead of failing")
    s.set_defaults(func=cmd_rowop)

    s = sub.add_parser("inv", parents=[common], help="adjugate near-inverse with its hypotheses")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_inv)

    s = sub.add_parser("rank", parents=[common], help="minor, row and strict rank")
    s.add_argument("matrix")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=200, help="representative matrices drawn for the strict rank")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("check", parents=[common], help="run a randomized law suite")
    s.add_argument("suite", choices=CHECKABLE)
    s.add_argument("--trials", type=int, default=500)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=50, help="representatives per expression (containment only)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("compare", parents=[common], help="decide a relation between two scalars")
    rel = s.add_mutually_exclusive_group(required=True)
    rel.add_argument("--subset", dest="relation", action="store_const", const="subset", help="left is included in right")
    rel.add_argument("--eq", dest="relation", action="store_const", const="eq", help="equal as sets")
    rel.add_argument("--leq", dest="relation", action="store_const", const="leq", help="left <= right")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_compare)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.format, args.unicode)
    try:
        return args.func(args, out)
    except TheoremViolation as exc:
        print(f"error: law violated: {exc}", file=sys.stderr)
        return 1
    except (ExtNumError, IndexError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
