"""
hypergt command line

    hypergt [--seed S] [--alpha A] [--attempts N] [--output PATH] [-v|-q] <command> ...

Exit codes: 0 success, 1 validity failure, 2 usage error, 3 I/O or parse error.
Diagnostics go to stderr; stdout only carries the command's result.
"""
import argparse
import logging
import math
import sys
from pathlib import Path
from typing import List, Optional

from ..adaptive import HiddenEdgeOracle, StreamOracle, adaptive_identify
from ..config import BenchConfig, ConstructionConfig, GeneratorConfig
from ..construct import (
    SIZE_RULES,
    ConstructionParams,
    optimal_bruteforce,
    randomized_construct,
    required_k,
    tight_k,
    traditional_reference,
)
from ..core import (
    Hypergraph,
    TestFamily,
    compute_beta,
    compute_d,
    decode,
    estimate_beta,
    info_lower_bound,
    lint_family,
    verify,
)
from ..errors import (
    AmbiguousError,
    BadEdgeCountError,
    ExhaustedAttemptsError,
    InvariantViolation,
    NoMatchError,
    NotProperError,
    NotThreeColorsError,
    NotValidFamilyError,
    OracleInconsistentError,
    ParseError,
    SingleEdgeError,
    SupportTooLargeError,
    TooLargeError,
)
from ..generators import GENERATOR_KINDS, GenSpec, generate
from ..reduction import (
    ReductionInstance,
    coloring_to_tests,
    extend_coloring,
    extract_coloring,
    pad_and_reduce,
    reduce_3col_to_gt,
)
from .bench import BenchSettings, load_sweep, reports_to_csv, run_bench
from .formats import (
    emit_coloring,
    emit_graph,
    emit_hypergraph,
    emit_tests,
    emit_transcript,
    parse_coloring,
    parse_graph,
    parse_hypergraph,
    parse_outcomes,
    parse_tests,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3

_EXIT_CODES = (
    ((NoMatchError, AmbiguousError, SupportTooLargeError, NotValidFamilyError,
      ExhaustedAttemptsError, OracleInconsistentError), EXIT_INVALID),
    ((ParseError, InvariantViolation, OSError), EXIT_IO),
    ((ValueError, TooLargeError, BadEdgeCountError, SingleEdgeError,
      NotProperError, NotThreeColorsError), EXIT_USAGE),
)


def _read(path: str) -> str:
    return Path(path).read_text()


def _write(args: argparse.Namespace, text: str):
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _load_hypergraph(path: str) -> Hypergraph:
    return parse_hypergraph(_read(path))


def _load_tests(path: str) -> TestFamily:
    family = parse_tests(_read(path))
    empty = lint_family(family)
    if empty:
        logger.warning(f"{path}: tests {empty} are empty and separate nothing")
    return family


def _beta_for(args: argparse.Namespace, hypergraph: Hypergraph) -> int:
    if args.sample_beta and hypergraph.m > ConstructionConfig.EXACT_BETA_MAX_EDGES:
        return estimate_beta(hypergraph, args.beta_samples, args.seed)
    return compute_beta(hypergraph)


def _is_traditional(hypergraph: Hypergraph, d: int) -> bool:
    """All d-subsets of the ground set (edges are distinct, so counting suffices)."""
    return all(len(edge) == d for edge in hypergraph.edges) and hypergraph.m == math.comb(hypergraph.n, d)


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(args.kind, n=args.n, d=args.d, n_prime=args.n_prime, m=args.m, seed=args.seed)
    hypergraph = generate(spec, args.max_edges)
    logger.info(f"Generated {spec.describe()} with {hypergraph.m} edges")
    _write(args, emit_hypergraph(hypergraph))
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    hypergraph = _load_hypergraph(args.hypergraph)
    d = compute_d(hypergraph)
    lines = [f"n: {hypergraph.n}", f"edges: {hypergraph.m}", f"d: {d}",
             f"info_lower_bound: {info_lower_bound(hypergraph)}"]
    if hypergraph.m >= 2:
        sampled = args.sample_beta and hypergraph.m > ConstructionConfig.EXACT_BETA_MAX_EDGES
        beta = _beta_for(args, hypergraph)
        lines.append(f"{'beta_sampled' if sampled else 'beta'}: {beta}")
        lines.append(f"required_k: {required_k(hypergraph.m, d, beta, args.alpha)}")
        lines.append(f"tight_k: {tight_k(hypergraph.m, d, beta, args.alpha)}")
    if _is_traditional(hypergraph, d):
        lines.append(f"traditional_reference: {traditional_reference(hypergraph.n, d):.4f}")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    hypergraph = _load_hypergraph(args.hypergraph)
    if hypergraph.m < 2:
        logger.info("Single edge: the empty family identifies it")
        _write(args, emit_tests(TestFamily(hypergraph.n, ())))
        return EXIT_OK
    params = ConstructionParams(alpha=args.alpha, seed=args.seed, max_attempts=args.attempts,
                                p_override=args.p, size_rule=args.size_rule)
    result = randomized_construct(hypergraph, params, beta=_beta_for(args, hypergraph))
    logger.info(f"k={result.k}, attempts={result.attempts_used}, d={result.d_used}, beta={result.beta_used}")
    empty = lint_family(result.family)
    if empty:
        logger.warning(f"Constructed family has empty tests {empty}")
    _write(args, emit_tests(result.family))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify(_load_hypergraph(args.hypergraph), _load_tests(args.tests))
    if report.valid:
        _write(args, "valid\n")
        return EXIT_OK
    a, b = report.counterexample
    _write(args, f"invalid {a} {b}\n")
    return EXIT_INVALID


def cmd_decode(args: argparse.Namespace) -> int:
    hypergraph = _load_hypergraph(args.hypergraph)
    index = decode(hypergraph, _load_tests(args.tests), parse_outcomes(_read(args.outcomes)))
    vertices = " ".join(str(v) for v in sorted(hypergraph.edges[index]))
    _write(args, f"index: {index}\nvertices: {vertices}\n")
    return EXIT_OK


def cmd_optimal(args: argparse.Namespace) -> int:
    family = optimal_bruteforce(_load_hypergraph(args.hypergraph), args.k_max)
    if family is None:
        logger.error(f"No separating family with at most {args.k_max} tests")
        return EXIT_INVALID
    _write(args, emit_tests(family))
    return EXIT_OK


def cmd_adaptive(args: argparse.Namespace) -> int:
    hypergraph = _load_hypergraph(args.hypergraph)
    if args.interactive:
        oracle = StreamOracle(sys.stdin, sys.stdout)
    else:
        if not 0 <= args.oracle_edge < hypergraph.m:
            raise ValueError(f"--oracle-edge must lie in 0..{hypergraph.m - 1}, got {args.oracle_edge}")
        oracle = HiddenEdgeOracle(hypergraph.edges[args.oracle_edge])
    index, transcript = adaptive_identify(hypergraph, oracle, seed=args.seed, alpha=args.alpha,
                                          max_attempts=args.attempts)
    if args.transcript:
        Path(args.transcript).write_text(emit_transcript(transcript, hypergraph.n))
    summary = [f"edge: {index}", f"tests: {transcript.num_tests}", f"loop_tests: {transcript.loop_tests}",
               f"fallback: {'yes' if transcript.fallback_used else 'no'}"]
    _write(args, "\n".join(summary) + "\n")
    return EXIT_OK


def _reduction(args: argparse.Namespace) -> ReductionInstance:
    graph = parse_graph(_read(args.graph))
    if args.pad or args.force_3chromatic:
        instance = pad_and_reduce(graph, args.force_3chromatic)
    else:
        instance = reduce_3col_to_gt(graph)
    logger.info(f"l={instance.ell}: {instance.hypergraph.n} vertices, {instance.hypergraph.m} edges")
    if args.padded_graph:
        Path(args.padded_graph).write_text(emit_graph(instance.graph))
    return instance


def cmd_reduce(args: argparse.Namespace) -> int:
    _write(args, emit_hypergraph(_reduction(args).hypergraph))
    return EXIT_OK


def cmd_tests_from_coloring(args: argparse.Namespace) -> int:
    instance = _reduction(args)
    coloring = parse_coloring(_read(args.coloring))
    if instance.padding_record is not None:
        coloring = extend_coloring(coloring, instance.padding_record)
    _write(args, emit_tests(coloring_to_tests(instance, coloring)))
    return EXIT_OK


def cmd_extract_coloring(args: argparse.Namespace) -> int:
    instance = _reduction(args)
    extraction = extract_coloring(instance, _load_tests(args.tests))
    logger.info(f"delta={extraction.delta}, support={list(extraction.support)}, "
                f"colors used={extraction.coloring.num_colors}")
    _write(args, emit_coloring(extraction.coloring))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    path = Path(args.sweep)
    sweep = load_sweep(path.read_text(), base_dir=path.parent)
    settings = BenchSettings(alpha=args.alpha, max_attempts=args.attempts, k_max=args.k_max)
    reports = run_bench(sweep, settings, num_workers=args.workers)
    _write(args, reports_to_csv(reports, timing=args.timing))
    return EXIT_OK


def _add_reduction_flags(parser: argparse.ArgumentParser):
    parser.add_argument("graph", help="Graph file (.g)")
    parser.add_argument("--pad", action="store_true",
                        help="Pad with a disjoint path to 2^l - 1 edges")
    parser.add_argument("--force-3chromatic", action="store_true",
                        help="Add a disjoint triangle before padding (implies --pad)")
    parser.add_argument("--padded-graph", metavar="PATH", help="Also write the padded graph here")


def _add_beta_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--sample-beta", action="store_true",
                        help=f"Estimate beta from sampled pairs above {ConstructionConfig.EXACT_BETA_MAX_EDGES} edges")
    parser.add_argument("--beta-samples", type=int, default=ConstructionConfig.BETA_SAMPLES,
                        help="Number of sampled edge pairs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypergt", description="Generalized group testing toolkit")
    parser.add_argument("--seed", type=int, default=0, help="Base seed (default: 0)")
    parser.add_argument("--alpha", type=float, default=ConstructionConfig.ALPHA,
                        help=f"Confidence parameter (default: {ConstructionConfig.ALPHA})")
    parser.add_argument("--attempts", type=int, default=ConstructionConfig.MAX_ATTEMPTS,
                        help=f"Las Vegas retry budget (default: {ConstructionConfig.MAX_ATTEMPTS})")
    parser.add_argument("-o", "--output", metavar="PATH", help="Write the result here instead of stdout")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings and errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate an instance (.hg)")
    gen.add_argument("kind", choices=GENERATOR_KINDS)
    gen.add_argument("--n", type=int, default=0, help="Ground-set size")
    gen.add_argument("--d", type=int, default=1, help="Edge size")
    gen.add_argument("--n-prime", type=int, help="Sub-ground-set size (claim6)")
    gen.add_argument("--m", type=int, help="Edge count (random)")
    gen.add_argument("--max-edges", type=int, default=GeneratorConfig.MAX_EDGES)
    gen.set_defaults(handler=cmd_gen)

    stats = sub.add_parser("stats", help="d, beta, info_lower_bound, required_k")
    stats.add_argument("hypergraph")
    _add_beta_flags(stats)
    stats.set_defaults(handler=cmd_stats)

    construct = sub.add_parser("construct", help="Randomized separating family (.tests)")
    construct.add_argument("hypergraph")
    construct.add_argument("--p", type=float, help="Entry probability (default: 1/d)")
    construct.add_argument("--size-rule", choices=SIZE_RULES, default="closed",
                           help="closed: closed-form k; tight: smallest k meeting the union bound")
    _add_beta_flags(construct)
    construct.set_defaults(handler=cmd_construct)

    verify_cmd = sub.add_parser("verify", help="Check that a family separates every edge pair")
    verify_cmd.add_argument("hypergraph")
    verify_cmd.add_argument("tests")
    verify_cmd.set_defaults(handler=cmd_verify)

    decode_cmd = sub.add_parser("decode", help="Recover the edge behind an outcome vector")
    decode_cmd.add_argument("hypergraph")
    decode_cmd.add_argument("tests")
    decode_cmd.add_argument("outcomes", help="File with one line of outcome bits")
    decode_cmd.set_defaults(handler=cmd_decode)

    optimal = sub.add_parser("optimal", help="Exhaustive minimum family (tiny instances)")
    optimal.add_argument("hypergraph")
    optimal.add_argument("--k-max", type=int, default=BenchConfig.OPTIMAL_K_MAX)
    optimal.set_defaults(handler=cmd_optimal)

    adaptive = sub.add_parser("adaptive", help="Adaptive identification")
    adaptive.add_argument("hypergraph")
    oracle = adaptive.add_mutually_exclusive_group(required=True)
    oracle.add_argument("--oracle-edge", type=int, metavar="INDEX", help="Simulate this hidden edge")
    oracle.add_argument("--interactive", action="store_true",
                        help="Ask over stdin/stdout: prints `TEST v1 v2 ...`, reads 0 or 1")
    adaptive.add_argument("--transcript", metavar="PATH", help="Write the transcript CSV here")
    adaptive.set_defaults(handler=cmd_adaptive)

    reduce_cmd = sub.add_parser("reduce", help="3-coloring instance to group-testing instance")
    _add_reduction_flags(reduce_cmd)
    reduce_cmd.set_defaults(handler=cmd_reduce)

    forward = sub.add_parser("tests-from-coloring", help="Family of l+2 tests from a proper 3-coloring")
    _add_reduction_flags(forward)
    forward.add_argument("coloring", help="Coloring file (.col)")
    forward.set_defaults(handler=cmd_tests_from_coloring)

    backward = sub.add_parser("extract-coloring", help="Coloring from a separating family")
    _add_reduction_flags(backward)
    backward.add_argument("tests")
    backward.set_defaults(handler=cmd_extract_coloring)

    bench = sub.add_parser("bench", help="Run a JSON sweep and print CSV")
    bench.add_argument("sweep")
    bench.add_argument("--workers", type=int, default=BenchConfig.NUM_WORKERS)
    bench.add_argument("--k-max", type=int, default=BenchConfig.OPTIMAL_K_MAX)
    bench.add_argument("--timing", action="store_true", help="Add the wall_time column")
    bench.set_defaults(handler=cmd_bench)
    return parser


def exit_code_for(exc: Exception) -> Optional[int]:
    for classes, code in _EXIT_CODES:
        if isinstance(exc, classes):
            return code
    return None


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    try:
        return args.handler(args)
    except Exception as exc:
        code = exit_code_for(exc)
        if code is None:
            raise
        logger.error(f"{args.command}: {exc}")
        return code


if __name__ == "__main__":
    sys.exit(main())
