"""Command-line interface for the good set analyzer."""

import argparse
import logging
import sys
import time
from typing import Any, Callable, Dict, List, NoReturn, Optional

from .analysis.goodness import (
    addable_points,
    associated_full_set,
    extend_to_maximal,
    full_closure,
    is_full,
    is_good,
    theorem4_split,
)
from .analysis.structure import (
    boundary,
    geodesic,
    related_components,
    split_boundary,
    verify_boundary,
)
from .catalog.examples import emit_examples
from .config.analyzer_config import AnalyzerConfig
from .errors import CertificateError, InstanceParseError, PreconditionError
from .measures.finite_measure import FiniteMeasure, is_mu_set, is_simplicial
from .models.functions import FunctionTable, PinSet, to_scalar
from .models.instance import Instance
from .models.space import Point
from .parsers import INSTANCE_EXTENSIONS, get_instance_parser
from .reports import payloads
from .reports.report_writer import OUTPUT_FORMATS, ReportWriter
from .solvers import SOLVE_METHODS, bound_diagnostics, get_solver
from .utils.file_utils import require_instance_file
from .utils.logging_config import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PRECONDITION = 2
EXIT_PARSE = 3


class UsageErrorParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the parse-error code instead of 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def create_parser() -> argparse.ArgumentParser:
    """Create the command-line argument parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", "-o", help="Write the report to this file instead of stdout")
    common.add_argument(
        "--output-format",
        choices=list(OUTPUT_FORMATS),
        default="json",
        help="Report format (default: json)",
    )
    common.add_argument("--config", help="YAML analyzer configuration file")
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging level (default: WARNING)",
    )
    common.add_argument("--log-file", help="Log file path")
    common.add_argument(
        "--timing", action="store_true", help="Add elapsed time to the report"
    )

    # Subcommand parsers inherit the class, so their usage errors exit 3 too
    parser = UsageErrorParser(
        prog="good-set-analyzer",
        description="Good set analyzer - decide whether every function on a finite set of "
        "n-tuples is a sum of univariate functions, with certificates and exact solvers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Ship the example instances
  gsa emit-examples examples_out

  # Goodness with a loop certificate
  gsa check-good examples_out/e5plus.json

  # Geodesic between points 0 and 3
  gsa geodesic examples_out/t4.json --from 0 --to 3

  # Solve with the pins stored in the file
  gsa solve examples_out/ex10_depth2.json --method direct

  # Geodesic method from point 1 with pins on its first two coordinates, text report
  gsa solve examples_out/t4.json --method geodesic --base 1 --pins x1:1=0,x2:1=1 --output-format txt

Exit codes: 0 computed, 2 precondition violated, 3 parse or usage error, 1 other failure.
        """,
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if name != "emit-examples":
            sub.add_argument("instance", help="Instance file (.json, .yaml, .yml)")
        return sub

    add("check-good", "Decide goodness; a loop certifies a negative answer")
    add("find-loop", "Report a loop of the set, if any")
    add("is-full", "Decide fullness by deficiency and by span membership")
    add("fullify", "Extend a good set to a full set with the same projections")
    add("split", "Full F containing S with F minus S full")
    add("maximalize", "Extend a good set to a maximal good set of the whole space")
    add("components", "Related components of a good set")
    sub = add("geodesic", "Geodesic between two points")
    sub.add_argument("--from", dest="source", type=int, required=True, help="Point index")
    sub.add_argument("--to", dest="target", type=int, required=True, help="Point index")
    sub = add("boundary", "Boundary set of a good set")
    sub.add_argument(
        "--split",
        action="store_true",
        help="Use the boundary read off the split instead of the E_i construction",
    )
    sub = add("solve", "Solve u1(x1)+...+un(xn) = f on the set")
    sub.add_argument("--method", choices=list(SOLVE_METHODS), default="direct")
    sub.add_argument(
        "--pins",
        help="Comma-separated axis:value=rational pins, overriding pins in the file",
    )
    sub.add_argument("--base", type=int, help="Base point index for the geodesic method")
    add("simplicial", "Decide whether the measure of the file is simplicial")
    add("stats", "Sizes, projections, deficiency and flags")
    sub = add("diagnostics", "Geodesic lengths and worst indicator solution")
    sub.add_argument("--base", type=int, help="Base point index")
    sub = add("emit-examples", "Write the shipped instances to a directory")
    sub.add_argument("directory", help="Output directory")
    sub.add_argument("--format", dest="file_format", choices=["json", "yaml"], default="json")
    return parser


def parse_pins(text: str, instance: Instance) -> PinSet:
    """Parse ``axis:value=rational,...`` against the instance's space."""
    space = instance.space
    values = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        try:
            target, rational = item.split("=", 1)
            axis, label = target.split(":", 1)
        except ValueError:
            raise InstanceParseError(f"Pin '{item}' is not of the form axis:value=rational") from None
        try:
            c = space.coordinate(space.axis_index(axis.strip()), label.strip())
        except PreconditionError as e:
            raise InstanceParseError(str(e)) from e
        values[c] = to_scalar(rational.strip())
    return PinSet(values)


def _point(instance: Instance, index: int) -> Point:
    if not 0 <= index < len(instance.points):
        raise PreconditionError(
            f"Point index {index} out of range (0..{len(instance.points) - 1})"
        )
    return instance.points[index]


def _optional_point(instance: Instance, index: Optional[int]) -> Optional[Point]:
    return None if index is None else _point(instance, index)


def _function(instance: Instance) -> FunctionTable:
    if instance.function is None:
        logger.warning("Instance has no 'f'; solving for the zero function")
        return FunctionTable.zero(instance.points)
    return instance.function


def _measure(instance: Instance) -> FiniteMeasure:
    points = instance.points
    if instance.measure_weights is None:
        logger.info("Instance has no 'measure'; using the uniform measure")
        return FiniteMeasure.uniform(points)
    weights = {points[k]: w for k, w in instance.measure_weights.items()}
    return FiniteMeasure(points.subset(weights), weights)


class CommandRunner:
    """Dispatches one parsed command against a loaded instance."""

    def __init__(self, config: AnalyzerConfig):
        self.config = config
        self.logger = logger

    def handler(self, command: str) -> Callable[[argparse.Namespace, Instance], Dict[str, Any]]:
        return getattr(self, "cmd_" + command.replace("-", "_"))

    def cmd_check_good(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        verdict = is_good(instance.points)
        return payloads.goodness_payload(instance.points, verdict, self.config.verify_certificates)

    def cmd_find_loop(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        verdict = is_good(instance.points)
        if verdict.loop is None:
            return {"loop": None}
        return {"loop": payloads.loop_payload(instance.points, verdict.loop, self.config.verify_certificates)}

    def cmd_is_full(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        s = instance.points
        good = is_good(s).good
        result: Dict[str, Any] = {
            "good": good,
            "full": is_full(s),
            "full_by_span": is_full(s, method="span"),
            "deficiency": s.deficiency(),
        }
        if result["full"] != result["full_by_span"]:
            raise CertificateError("Fullness by deficiency and by span disagree")
        if good:
            result["addable"] = [list(p.coords) for p in addable_points(s)]
        return result

    def cmd_fullify(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        return payloads.point_set_payload(instance.points, full_closure(instance.points))

    def cmd_split(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        s = instance.points
        f = theorem4_split(s)
        result = payloads.point_set_payload(s, f)
        result["boundary"] = [
            payloads.coordinate_payload(s.space, c) for c in f.difference(s).coordinates()
        ]
        return result

    def cmd_maximalize(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        return payloads.point_set_payload(instance.points, extend_to_maximal(instance.points))

    def cmd_components(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        partition = related_components(
            instance.points, verify=self.config.verify_components, max_points=self.config.max_points
        )
        return payloads.partition_payload(instance.points, partition)

    def cmd_geodesic(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        x, y = _point(instance, args.source), _point(instance, args.target)
        g = geodesic(instance.points, x, y, self.config.max_points)
        result = payloads.geodesic_payload(instance.points, g)
        result.update({"from": args.source, "to": args.target})
        return result

    def cmd_boundary(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        s = instance.points
        if args.split:
            b = split_boundary(s)
            f = associated_full_set(s, b)
            return {
                "boundary": [payloads.coordinate_payload(s.space, c) for c in b],
                "associated_full_set": payloads.point_set_payload(s, f),
            }
        construction = boundary(
            s, verify=self.config.verify_boundary, max_points=self.config.max_points
        )
        if self.config.verify_certificates and not self.config.verify_boundary:
            verify_boundary(s, construction)
        return payloads.boundary_payload(s, construction)

    def cmd_solve(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        pins = parse_pins(args.pins, instance) if args.pins else instance.pins
        options: Dict[str, Any] = {"max_points": self.config.max_points}
        if args.method == "geodesic":
            options["base"] = _optional_point(instance, args.base)
        elif args.base is not None:
            raise PreconditionError("--base applies to the geodesic method only")
        if args.method == "boundary":
            options["verify"] = self.config.verify_boundary
        solver = get_solver(args.method, **options)
        report = solver.solve(instance.points, _function(instance), pins)
        return payloads.solve_payload(instance.points, report)

    def cmd_simplicial(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        m = _measure(instance)
        result = payloads.simplicial_payload(instance.points, m, is_simplicial(m))
        result["mu_set"] = is_mu_set(instance.points)
        return result

    def cmd_stats(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        s = instance.points
        space = s.space
        good = is_good(s).good
        result: Dict[str, Any] = {
            "n": space.n,
            "size": len(s),
            "axis_sizes": {axis.name: len(axis.values) for axis in space.axes},
            "projection_sizes": {
                space.axes[i].name: len(s.projection(i)) for i in range(space.n)
            },
            "deficiency": s.deficiency(),
            "good": good,
            "full": good and s.deficiency() == space.n - 1,
            "components": None,
        }
        max_points = self.config.max_points
        if good and (max_points is None or len(s) <= max_points):
            result["components"] = len(related_components(s, verify=self.config.verify_components))
        return result

    def cmd_diagnostics(self, args: argparse.Namespace, instance: Instance) -> Dict[str, Any]:
        diagnostics = bound_diagnostics(
            instance.points, _optional_point(instance, args.base), self.config.max_points
        )
        return payloads.diagnostics_payload(instance.points, diagnostics)


def _options(args: argparse.Namespace) -> Dict[str, Any]:
    keep = {"source": "from", "target": "to", "method": "method", "pins": "pins", "base": "base", "split": "split"}
    options = {}
    for attribute, name in keep.items():
        value = getattr(args, attribute, None)
        # index 0 is a real option value; only unset flags are dropped
        if value is not None and value is not False:
            options[name] = value
    return options


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse ``argv``, execute the command and emit its report.

    Returns:
        The process exit code
    """
    parser = create_parser()
    args = parser.parse_args(argv)
    setup_logging(level=args.log_level, log_file=args.log_file)

    try:
        # Load config and build report writer
        config = AnalyzerConfig.from_file(args.config) if args.config else AnalyzerConfig()
        writer = ReportWriter(args.output_format, config.include_timing or args.timing)
        started = time.perf_counter()

        # Run the command
        if args.command == "emit-examples":
            extension = ".json" if args.file_format == "json" else ".yaml"
            written = emit_examples(args.directory, extension)
            instance = None
            result: Dict[str, Any] = {"written": written}
        else:
            require_instance_file(args.instance, INSTANCE_EXTENSIONS)
            instance = get_instance_parser(args.instance).parse_file(args.instance)
            logger.info(f"Running {args.command} on '{instance.name}'")
            result = CommandRunner(config).handler(args.command)(args, instance)

        # Emit the report
        elapsed = time.perf_counter() - started
        logger.info(f"{args.command} finished in {elapsed:.3f}s")
        report = writer.build(args.command, instance, result, _options(args), elapsed)
        text = writer.write(report, args.out)
        if not args.out:
            sys.stdout.write(text)
        return EXIT_OK

    except PreconditionError as e:
        logger.error(f"Precondition violated: {e}")
        return EXIT_PRECONDITION
    except InstanceParseError as e:
        logger.error(f"Parse error: {e}")
        return EXIT_PARSE
    except Exception as e:
        logger.error(f"Error: {e}")
        return EXIT_FAILURE


def main() -> None:
    """Main CLI entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
