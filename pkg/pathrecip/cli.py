"""
Command-line front end.

Every subcommand prints an aligned text table (or a single value) by default and
the matching JSON document with ``--json``. Exit codes: 0 on success or a
passing check, 1 on a failing check, 2 on usage, parse or domain errors.
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from pathrecip.core.config import resolve_nmax, settings
from pathrecip.core.errors import PathRecipError
from pathrecip.core.exact import SubsetIndex, format_rational
from pathrecip.data.network import PlanarNetwork, oracle_nonintersecting_sum
from pathrecip.data.network_file import load_network_file, matrix_to_document
from pathrecip.data.reciprocity import reciprocity_engine
from pathrecip.models.schemas import CountResult, DyckValue, ProctorValue, SchurValue
from pathrecip.apps.dyck import check_dyck_reciprocity, d_value, proctor_count
from pathrecip.apps.partitions import Partition, SkewShape
from pathrecip.apps.schur import EvalPoint, check_schur_reciprocity, schur_eval

logger = logging.getLogger(__name__)


@dataclass
class CommandOutput:
    payload: BaseModel
    text: str
    exit_code: int = 0


def _table(rows: List[Dict[str, object]]) -> str:
    if not rows:
        return "(no rows)"
    return pd.DataFrame(rows).to_string(index=False)


def _verdict(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _network_and_subsets(args):
    net = load_network_file(args.file)
    sources = SubsetIndex.parse(args.sources, net.m)
    sinks = SubsetIndex.parse(args.sinks, net.m)
    return net, sources, sinks


def _skew_shape(args) -> SkewShape:
    return SkewShape(Partition.parse(args.lam), Partition.parse(args.mu))


def cmd_validate(args) -> CommandOutput:
    net = load_network_file(args.file, require_valid=False)
    report = net.validate()
    if report.valid:
        text = f"{net.name}: valid ({net.m} sources, {len(net.vertices)} vertices, {len(net.edges)} edges)"
    else:
        text = _table([v.model_dump() for v in report.violations])
    return CommandOutput(report, text, 0 if report.valid else 1)


def cmd_path_matrix(args) -> CommandOutput:
    net = load_network_file(args.file)
    matrix = reciprocity_engine.path_matrix(net)
    frame = pd.DataFrame(
        [[format_rational(x) for x in row] for row in matrix.to_rows()],
        index=list(net.sources),
        columns=list(net.sinks),
    )
    return CommandOutput(matrix_to_document(matrix), frame.to_string())


def cmd_count(args) -> CommandOutput:
    net, sources, sinks = _network_and_subsets(args)
    value = reciprocity_engine.f_at(net, sources, sinks, args.n)
    result = CountResult(
        network_id=net.name, sources=list(sources), sinks=list(sinks), n=args.n, value=value
    )
    return CommandOutput(result, format_rational(value))


def cmd_recurrence(args) -> CommandOutput:
    net, sources, sinks = _network_and_subsets(args)
    summary = reciprocity_engine.recurrence_summary(net, sources, sinks)
    text = "\n".join(
        [
            f"order: {summary.order}",
            "coefficients: " + " ".join(format_rational(a) for a in summary.coefficients),
            "initial values: " + " ".join(format_rational(v) for v in summary.initial_values),
            f"generating function: {summary.generating_function}",
        ]
    )
    return CommandOutput(summary, text)


def cmd_check(args) -> CommandOutput:
    net, sources, sinks = _network_and_subsets(args)
    report = reciprocity_engine.check_reciprocity(net, sources, sinks, resolve_nmax(args.nmax))
    rows = [
        {
            "n": r.n,
            "f(I,J;-n)": format_rational(r.negative_value),
            "sign": r.sign,
            "det^-n": format_rational(r.det_power),
            "f(Jc,Ic;n)": format_rational(r.complementary_value),
            "pass": r.passed,
        }
        for r in report.records
    ]
    text = f"{_table(rows)}\n{_verdict(report.passed)}"
    return CommandOutput(report, text, 0 if report.passed else 1)


def cmd_oracle(args) -> CommandOutput:
    net, sources, sinks = _network_and_subsets(args)
    glued: PlanarNetwork = net.glue_power(args.n)
    value = oracle_nonintersecting_sum(glued, sources, sinks)
    result = CountResult(
        network_id=net.name, sources=list(sources), sinks=list(sinks), n=args.n, value=value
    )
    return CommandOutput(result, format_rational(value))


def cmd_dyck(args) -> CommandOutput:
    value = d_value(args.m, args.k, args.n)
    return CommandOutput(DyckValue(m=args.m, k=args.k, n=args.n, value=value), format_rational(value))


def cmd_dyck_check(args) -> CommandOutput:
    report = check_dyck_reciprocity(args.m, args.k, resolve_nmax(args.nmax))
    rows = [
        {
            "n": r.n,
            "d(m,k;-n)": format_rational(r.negative_value),
            "d(k,m;n+1)": format_rational(r.shifted_value),
            "pass": r.passed,
        }
        for r in report.records
    ]
    text = f"{_table(rows)}\n{_verdict(report.passed)}"
    return CommandOutput(report, text, 0 if report.passed else 1)


def cmd_schur(args) -> CommandOutput:
    shape = _skew_shape(args)
    z = EvalPoint.parse(args.z)
    value = schur_eval(shape, z, args.n)
    result = SchurValue(
        outer=list(shape.outer.parts), inner=list(shape.inner.parts), z=list(z.values), n=args.n, value=value
    )
    return CommandOutput(result, format_rational(value))


def cmd_schur_check(args) -> CommandOutput:
    report = check_schur_reciprocity(
        _skew_shape(args), EvalPoint.parse(args.z), resolve_nmax(args.nmax)
    )
    rows = [
        {
            "n": r.n,
            "s(z^-n)": format_rational(r.negative_value),
            "sign": r.sign,
            "s_t(z_rev^n)": format_rational(r.transpose_reversed),
            "s_t(z^n)": format_rational(r.transpose_unreversed),
            "pass": r.passed,
        }
        for r in report.records
    ]
    text = f"{_table(rows)}\n{_verdict(report.passed)}"
    return CommandOutput(report, text, 0 if report.passed else 1)


def cmd_proctor(args) -> CommandOutput:
    value = proctor_count(args.n, args.m)
    return CommandOutput(ProctorValue(n=args.n, m=args.m, value=value), format_rational(value))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON document instead of text")

    parser = argparse.ArgumentParser(
        prog="pathrecip",
        description="Non-intersecting path counts on glued planar networks and their reciprocity at negative n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def network_command(name: str, handler: Callable, help_text: str, subsets: bool = False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="network JSON file")
        if subsets:
            p.add_argument("--sources", required=True, help="1-based source indices, e.g. 1,3")
            p.add_argument("--sinks", required=True, help="1-based sink indices, e.g. 2,4")
        p.set_defaults(handler=handler)
        return p

    network_command("validate", cmd_validate, "validate a network file")
    network_command("path-matrix", cmd_path_matrix, "print the path matrix P_G")
    network_command("count", cmd_count, "f(I,J;n) for any integer n", True).add_argument(
        "--n", type=int, required=True
    )
    network_command("recurrence", cmd_recurrence, "the linear recurrence satisfied by f(I,J;n)", True)
    network_command("check", cmd_check, "reciprocity report for n = 1..nmax", True).add_argument(
        "--nmax", type=int
    )
    network_command("oracle", cmd_oracle, "brute-force count on G^n", True).add_argument(
        "--n", type=int, required=True
    )

    p = sub.add_parser("dyck", parents=[common], help="d(m,k;n), fans of (2k+1)-bounded Dyck paths")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_dyck)

    p = sub.add_parser("dyck-check", parents=[common], help="check d(m,k;-n) = d(k,m;n+1)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int)
    p.set_defaults(handler=cmd_dyck_check)

    for name, handler, last in (("schur", cmd_schur, "--n"), ("schur-check", cmd_schur_check, "--nmax")):
        p = sub.add_parser(name, parents=[common], help=f"skew Schur function ({name})")
        p.add_argument("--lambda", dest="lam", required=True, help="outer partition, e.g. 3,2")
        p.add_argument("--mu", default="", help="inner partition, e.g. 1")
        p.add_argument("--z", required=True, help="evaluation point, e.g. 1,1/2")
        p.add_argument(last, type=int, required=(last == "--n"))
        p.set_defaults(handler=handler)

    p = sub.add_parser("proctor", parents=[common], help="plane partitions of the staircase with entries <= m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=cmd_proctor)

    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse has already written usage or help
        return 0 if e.code in (0, None) else 2

    try:
        output = args.handler(args)
    except (PathRecipError, ValueError, ZeroDivisionError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2

    if args.json:
        print(output.payload.model_dump_json(indent=2))
    else:
        print(output.text)
    return output.exit_code


def main():
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
