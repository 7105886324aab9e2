"""
Command-line driver for the monomial quiver pipeline.

Commands:
    check       parse, validate and classify an input
    classify    print every class an input belongs to
    ufgraph     build the weighted Ufnarovskii graph Q(A)
    normalize   split arrows until every degree is 1
    connectify  present k + A_{>=1} as a connected monomial algebra
    hilbert     path and word counts by degree
    pipeline    chain constructions to reach a target class
    verify      run a verification suite

Usage:
    python -m cli.main check data/weighted_xy_presentation.json
    python -m cli.main ufgraph data/three_letter_presentation.json --dot
    python -m cli.main normalize data/free_loops_quiver.json --json
    python -m cli.main pipeline data/weighted_xy_presentation.json --to CMA1
    python -m cli.main verify data/three_letter_presentation.json --suite ufgraph

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 validation error,
4 enumeration budget exceeded.

Run `python -m cli.main --help` for full options.
"""

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional

# Ensure project root is on sys.path when run as `python -m cli.main`
_src_dir = str(Path(__file__).resolve().parent.parent)
if _src_dir not in sys.path:
    sys.path.insert(0, _src_dir)

from analysis.arrow_split import SplitError, normalize_to_degree_one
from analysis.graded_reps import RepresentationError, WindowError
from analysis.hilbert import compare_series, length_series, monomial_path_counts
from analysis.legal_words import BudgetExceededError, UnknownLetterError
from analysis.suites import SUITES, UnknownSuiteError, run_suite
from analysis.ufnarovskii import build_ufnarovskii, classify_growth
from config import SPLIT_POLICIES, VerificationConfig, get_pipeline_config, reload_pipeline_config
from core.logging_config import get_logger, setup_logging
from core.models import AlgebraClass, MonomialPresentation, QuiverMonomialAlgebra, WeightedQuiver
from data_processing.parsing import (
    AlgebraInput,
    InputValidationError,
    ParseError,
    emit_json,
    load_input,
    to_document,
)
from data_processing.pipeline import UnreachableTargetError, run_pipeline
from data_processing.transforms import ConnectifyError, classify, connectify, reduce_forbidden
from visualization.dot_export import quiver_to_dot, ufgraph_to_dot
from visualization.tables import comparison_table, report_table, series_table

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_VALIDATION_ERROR = 3
EXIT_BUDGET_EXCEEDED = 4


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {out}")


def _dump(data, indent: int) -> str:
    return json.dumps(data, indent=indent, ensure_ascii=False) + "\n"


def _presentation(value: AlgebraInput, reduce: bool) -> MonomialPresentation:
    presentation = value if isinstance(value, MonomialPresentation) else connectify(value)
    return reduce_forbidden(presentation) if reduce else presentation


def _quiver(value: AlgebraInput, reduce: bool) -> WeightedQuiver:
    if isinstance(value, MonomialPresentation):
        return build_ufnarovskii(_presentation(value, reduce)).quiver
    if isinstance(value, QuiverMonomialAlgebra):
        return value.quiver
    return value


def cmd_check(args: argparse.Namespace) -> int:
    value = load_input(args.path)
    print(f"class: {classify(value).describe()}")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    classification = classify(load_input(args.path))
    if args.json:
        data = {
            "primary": classification.primary.value,
            "labels": [label.value for label in classification.ordered_labels],
        }
        _write(_dump(data, args.indent), args.out)
    else:
        _write("\n".join(label.value for label in classification.ordered_labels) + "\n", args.out)
    return EXIT_OK


def cmd_ufgraph(args: argparse.Namespace) -> int:
    presentation = _presentation(load_input(args.path), args.reduce_forbidden)
    graph = build_ufnarovskii(presentation)
    if args.dot:
        _write(ufgraph_to_dot(graph), args.out)
    elif args.json:
        data = {
            "ell": graph.ell,
            "growth": str(classify_growth(graph)),
            "labels": {arrow.name: graph.label(arrow.name) for arrow in graph.quiver.arrows},
            "quiver": to_document(graph.quiver),
        }
        _write(_dump(data, args.indent), args.out)
    else:
        _write(emit_json(graph.quiver, args.indent), args.out)
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace) -> int:
    quiver = _quiver(load_input(args.path), args.reduce_forbidden)
    normalized, trace = normalize_to_degree_one(quiver, policy=args.policy)
    if args.dot:
        _write(quiver_to_dot(normalized, highlight=set(trace.new_vertices)), args.out)
    elif args.json:
        data = {"quiver": to_document(normalized), "trace": trace.to_list()}
        _write(_dump(data, args.indent), args.out)
    else:
        _write(emit_json(normalized, args.indent), args.out)
    return EXIT_OK


def cmd_connectify(args: argparse.Namespace) -> int:
    value = load_input(args.path)
    if isinstance(value, MonomialPresentation):
        raise ConnectifyError("input is already a connected presentation")
    presentation = connectify(value)
    if args.reduce_forbidden:
        presentation = reduce_forbidden(presentation)
    _write(emit_json(presentation, args.indent), args.out)
    return EXIT_OK


def cmd_hilbert(args: argparse.Namespace) -> int:
    value = load_input(args.path)
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = get_pipeline_config().verification.max_degree

    if isinstance(value, MonomialPresentation):
        comparison = compare_series(_presentation(value, args.reduce_forbidden), max_degree)
        if args.json:
            _write(_dump(comparison.to_dict(), args.indent), args.out)
        else:
            _write(comparison_table(comparison) + "\n" + str(comparison.report) + "\n", args.out)
        return EXIT_OK if comparison.report.passed else EXIT_VERIFICATION_FAILED

    # Relations cut paths by factor, so only relation-free quivers get a length column
    columns = {"by degree": monomial_path_counts(value, max_degree)}
    if isinstance(value, WeightedQuiver):
        columns["by length"] = length_series(value, max_degree)
    if args.json:
        data = {name.replace(" ", "_"): series.to_list() for name, series in columns.items()}
        _write(_dump(data, args.indent), args.out)
    else:
        _write(series_table(columns) + "\n", args.out)
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    value = load_input(args.path)
    report = run_pipeline(
        value,
        AlgebraClass(args.to),
        max_degree=args.max_degree,
        seed=args.seed,
        reduce=args.reduce_forbidden or None,
    )
    if args.json:
        _write(_dump(report.to_dict(), args.indent), args.out)
    else:
        _write(str(report) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def verification_settings(
    max_degree: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> VerificationConfig:
    """
    Configured verification settings with command-line overrides applied.

    --trials sets both the sampled representations per split arrow and the
    random word pairs of the multiplicativity check.
    """
    settings = get_pipeline_config().verification
    if max_degree is not None:
        settings = replace(settings, max_degree=max_degree, split_max_degree=max_degree)
    if trials is not None:
        settings = replace(settings, trials=trials, multiplicativity_pairs=trials)
    if seed is not None:
        settings = replace(settings, seed=seed)
    return settings


def cmd_verify(args: argparse.Namespace) -> int:
    value = load_input(args.path)
    settings = verification_settings(args.max_degree, args.trials, args.seed)

    golden = None
    if args.against is not None:
        golden = load_input(args.against)
        if not isinstance(golden, WeightedQuiver):
            raise InputValidationError(["golden file must be a quiver without relations"])

    reports = run_suite(
        args.suite,
        value,
        settings=settings,
        golden=golden,
        reduce=args.reduce_forbidden or None,
        policy=args.policy,
    )
    passed = all(report.passed for report in reports)

    if args.json:
        data = {"suite": args.suite, "passed": passed, "reports": [r.to_dict() for r in reports]}
        _write(_dump(data, args.indent), args.out)
    else:
        lines = [report_table(reports)]
        for report in reports:
            lines.extend(f"  {report.name}: {witness}" for witness in report.failures)
            lines.extend(f"  {report.name} note: {note}" for note in report.notes)
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILED


def _add_output_flags(parser: argparse.ArgumentParser, dot: bool = False) -> None:
    parser.add_argument("--json", action="store_true", help="Emit the extended JSON form")
    if dot:
        parser.add_argument("--dot", action="store_true", help="Emit Graphviz DOT")
    parser.add_argument("--out", type=Path, default=None, help="Write to FILE instead of stdout")
    parser.add_argument(
        "--reduce-forbidden",
        action="store_true",
        help="Drop forbidden words that contain another forbidden word",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverpipe",
        description="Transformations and checks between monomial algebras and weighted quivers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    # Validate and classify an input
    python -m cli.main check data/weighted_xy_presentation.json

    # Ufnarovskii graph as DOT
    python -m cli.main ufgraph data/three_letter_presentation.json --dot

    # Degree-one normalization with its split trace
    python -m cli.main normalize data/free_loops_quiver.json --json

    # Full chain to a degree-one connected presentation
    python -m cli.main pipeline data/weighted_xy_presentation.json --to CMA1

    # Check a stored normalization
    python -m cli.main verify data/free_loops_quiver.json --suite split --against golden.json
        """,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument("--config", type=Path, default=None, help="Alternative TOML config file")
    parser.add_argument("--log-file", type=Path, default=None, help="Also write log records to this file")

    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Parse, validate and classify an input")
    check.add_argument("path", type=Path)
    check.set_defaults(handler=cmd_check)

    classify_cmd = commands.add_parser("classify", help="List every class of an input")
    classify_cmd.add_argument("path", type=Path)
    classify_cmd.add_argument("--json", action="store_true")
    classify_cmd.add_argument("--out", type=Path, default=None)
    classify_cmd.set_defaults(handler=cmd_classify)

    ufgraph = commands.add_parser("ufgraph", help="Build the weighted Ufnarovskii graph")
    ufgraph.add_argument("path", type=Path)
    _add_output_flags(ufgraph, dot=True)
    ufgraph.set_defaults(handler=cmd_ufgraph)

    normalize = commands.add_parser("normalize", help="Normalize a weighted quiver to degree one")
    normalize.add_argument("path", type=Path)
    normalize.add_argument("--policy", choices=SPLIT_POLICIES, default=None)
    _add_output_flags(normalize, dot=True)
    normalize.set_defaults(handler=cmd_normalize)

    connectify_cmd = commands.add_parser("connectify", help="Connected presentation of kQ/I")
    connectify_cmd.add_argument("path", type=Path)
    _add_output_flags(connectify_cmd)
    connectify_cmd.set_defaults(handler=cmd_connectify)

    hilbert = commands.add_parser("hilbert", help="Counts by degree and length")
    hilbert.add_argument("path", type=Path)
    hilbert.add_argument("--max-degree", type=int, default=None)
    _add_output_flags(hilbert)
    hilbert.set_defaults(handler=cmd_hilbert)

    pipeline = commands.add_parser("pipeline", help="Chain constructions to a target class")
    pipeline.add_argument("path", type=Path)
    pipeline.add_argument("--to", required=True, choices=[c.value for c in AlgebraClass])
    pipeline.add_argument("--max-degree", type=int, default=None)
    pipeline.add_argument("--seed", type=int, default=None)
    _add_output_flags(pipeline)
    pipeline.set_defaults(handler=cmd_pipeline)

    verify = commands.add_parser("verify", help="Run a verification suite")
    verify.add_argument("path", type=Path)
    verify.add_argument("--suite", required=True, help=f"One of: {', '.join(SUITES)}")
    verify.add_argument("--max-degree", type=int, default=None)
    verify.add_argument(
        "--trials",
        type=int,
        default=None,
        help="Random samples per split arrow (adjunction) and word pairs (ufgraph)",
    )
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--against", type=Path, default=None, help="Golden normalized quiver (split suite)")
    verify.add_argument("--policy", choices=SPLIT_POLICIES, default=None)
    _add_output_flags(verify)
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Configure logging
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    setup_logging(level=level, simple_console=not args.verbose, log_file=args.log_file)

    config = reload_pipeline_config(args.config) if args.config else get_pipeline_config()
    errors = config.validate()
    if errors:
        for error in errors:
            logger.error(f"config: {error}")
        return EXIT_VALIDATION_ERROR
    args.indent = config.output.indent

    try:
        return args.handler(args)
    except ParseError as exc:
        logger.error(f"parse error: {exc}")
        return EXIT_PARSE_ERROR
    except InputValidationError as exc:
        for error in exc.errors:
            logger.error(f"invalid input: {error}")
        return EXIT_VALIDATION_ERROR
    except BudgetExceededError as exc:
        logger.error(str(exc))
        return EXIT_BUDGET_EXCEEDED
    except (
        ConnectifyError,
        SplitError,
        UnknownSuiteError,
        UnreachableTargetError,
        UnknownLetterError,
        WindowError,
        RepresentationError,
    ) as exc:
        logger.error(str(exc))
        return EXIT_VALIDATION_ERROR
    except OSError as exc:
        logger.error(f"cannot read input: {exc}")
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
