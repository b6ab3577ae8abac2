"""
Command-line interface

    python -m app compute --family path:4 --k 1
    python -m app verify max-bound --n 6
    python -m app table --n 4 --format tsv
    python -m app serve

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""
from typing import List, Optional, Sequence, Tuple
import argparse
import logging
import sys

from pydantic import ValidationError

from app import __version__
from app.core.config import LOG_LEVELS, settings
from app.core.counting import ensure_within
from app.core.exceptions import SigmaKError
from app.models.graph import Graph
from app.models.schemas import (
    CommandSpec,
    DistributionFilter,
    FamilySpec,
    OutputFormat,
    VerificationSuite,
)
from app.services.export_service import export_service
from app.services.extremal_service import extremal_service
from app.services.family_service import family_service
from app.services.graph6_service import graph6_service
from app.services.sigma_service import sigma_service
from app.services.verification_service import verification_service

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Invalid invocation detected after argument parsing"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigmak",
        description="Count vertex subsets inducing exactly k edges and verify extremal bounds",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, type=str.upper, choices=LOG_LEVELS,
                        help="Override LOG_LEVEL")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="output_format", default=OutputFormat.TABLE.value,
                       choices=[f.value for f in OutputFormat])
        p.add_argument("--jobs", type=int, default=settings.JOBS, help="Worker processes for enumeration")

    compute = sub.add_parser("compute", help="σ_k of input graphs")
    compute.add_argument("--graph6", help="One graph6 string")
    compute.add_argument("--family", help="Family spec such as broom:7:3")
    compute.add_argument("--file", help="File of graph6 lines, '-' for stdin")
    compute.add_argument("--k", type=int, default=1)
    add_output(compute)

    verify = sub.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=[s.value for s in VerificationSuite])
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--n", type=int, default=None)
    add_output(verify)

    table = sub.add_parser("table", help="σ1 over every isomorphism class of order n")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--filter", default="all", help="all, connected or size:m")
    add_output(table)

    serve = sub.add_parser("serve", help="Run the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=settings.PORT)

    return parser


def read_inputs(spec: CommandSpec) -> List[Tuple[str, Graph]]:
    """(source label, graph) for the single input source of a command"""
    if spec.graph6 is not None:
        return [(spec.graph6, graph6_service.parse(spec.graph6))]
    if spec.family is not None:
        return [(spec.family, family_service.construct(FamilySpec.parse(spec.family)))]
    if spec.reads_stdin:
        graphs = list(graph6_service.read_lines(sys.stdin))
    else:
        graphs = graph6_service.read_file(spec.file)
    if not graphs:
        raise UsageError("No graphs on input")
    return [(graph6_service.emit(g), g) for g in graphs]


def cmd_compute(args: argparse.Namespace) -> int:
    spec = CommandSpec(
        subcommand="compute",
        graph6=args.graph6,
        family=args.family,
        file=args.file,
        output_format=args.output_format,
        jobs=args.jobs,
    )
    results = [sigma_service.compute(source, graph, args.k) for source, graph in read_inputs(spec)]
    print(export_service.render_compute(results, spec.output_format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = verification_service.run(
        VerificationSuite(args.suite),
        max_n=args.max_n,
        n=args.n,
        jobs=args.jobs,
    )
    print(export_service.render_report(report, OutputFormat(args.output_format)))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_table(args: argparse.Namespace) -> int:
    ensure_within("table order", args.n, settings.TABLE_MAX_N, "TABLE_MAX_N")
    distribution = extremal_service.sigma1_distribution(
        args.n, DistributionFilter.parse(args.filter), jobs=args.jobs
    )
    print(export_service.render_distribution(distribution, OutputFormat(args.output_format)))
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn
    uvicorn.run("app.main:app", host=args.host, port=args.port, log_level=settings.LOG_LEVEL.lower())
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "table": cmd_table,
    "serve": cmd_serve,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=(args.log_level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.subcommand](args)
    except (SigmaKError, ValidationError, UsageError, ValueError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
