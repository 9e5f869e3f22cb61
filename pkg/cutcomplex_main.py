"""Command-line entry point for building, analysing and recognizing cut
complexes, and for running the brute-force oracle sweeps.
"""
import argparse
import os
import sys

import cutcomplex_oracle as oracle
from cutcomplex.complexes import builders, realization, recognition
from cutcomplex.complexes import structure
from cutcomplex.complexes.model import SimplicialComplex, vertex_set
from cutcomplex.complexes.shared_definition import CONSTRUCTION_FAMILIES
from cutcomplex.complexes.shared_definition import EXIT_CODES
from cutcomplex.complexes.shared_definition import LARGE_D_POLICIES
from cutcomplex.complexes.shared_definition import ORACLE_MODES
from cutcomplex.complexes.shared_definition import STEP5_BOTH_PATTERNS
from cutcomplex.complexes.shared_definition import STEP5_TIE_BREAKS
from cutcomplex.complexes.shared_definition import STEP7_TRIPLE
from cutcomplex.complexes.shared_definition import STEP7_TRIPLES
from cutcomplex.utils import formats, run_utils

# Sample counts when --sample_size is not given.
DEFAULT_SAMPLES = {"uniqueness": 1000, "recognition": 10000, "complexity": 3}


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer.")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1.")
    return value


def _labels(text):
    """Comma or space separated vertex labels; may be empty."""
    tokens = text.replace(",", " ").split()
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a label list.")


def get_args(argv=None):
    """Parse command line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log_dir",
        type=str,
        default=os.environ.get("CUTCOMPLEX_SCRATCH"),
        help="directory for log.txt, params.json and input snapshots "
        "(default: $CUTCOMPLEX_SCRATCH, unset disables)",
    )

    parser = argparse.ArgumentParser(
        description="Cut complexes of graphs: build, check, recognize and "
        "verify."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser(
        "build", parents=[common], help="cut complex of a graph file."
    )
    build.add_argument(
        "--graph", type=str, required=True, help="input graph file."
    )
    build.add_argument(
        "--k", type=int, required=True, help="size of the removed sets."
    )
    build.add_argument(
        "--total",
        action="store_true",
        help="build the total cut complex (independent k-sets) instead.",
    )
    build.add_argument(
        "--cofacets",
        action="store_true",
        help="write facet complements (a cocomplex file).",
    )
    build.add_argument(
        "--output",
        type=str,
        default=None,
        help="output path (default: stdout)",
    )

    recognize = commands.add_parser(
        "recognize",
        parents=[common],
        help="reconstruct a graph from its 3-cut complex.",
    )
    recognize.add_argument(
        "--complex", type=str, required=True, help="complex or cocomplex file."
    )
    recognize.add_argument(
        "--strict",
        action="store_true",
        help="reject duplicate and non-maximal facets.",
    )
    recognize.add_argument(
        "--step7_triple",
        type=str,
        default=STEP7_TRIPLE,
        choices=sorted(STEP7_TRIPLES),
        help=f"triple deciding the last step (default: {STEP7_TRIPLE})",
    )
    recognize.add_argument(
        "--step5_tie_break",
        type=str,
        default=STEP5_BOTH_PATTERNS,
        choices=STEP5_TIE_BREAKS,
        help="verdict when several witness pairs disagree in both "
        f"coordinates (default: {STEP5_BOTH_PATTERNS})",
    )
    recognize.add_argument(
        "--output",
        type=str,
        default=None,
        help="output path (default: stdout)",
    )
    recognize.add_argument(
        "--report", type=str, default=None, help="JSON report path."
    )

    check = commands.add_parser(
        "check",
        parents=[common],
        help="twins, P4 witness, dominating pairs and uniqueness verdicts.",
    )
    check.add_argument(
        "--graph", type=str, required=True, help="input graph file."
    )
    check.add_argument(
        "--report", type=str, default=None, help="JSON report path."
    )

    conditions = commands.add_parser(
        "conditions",
        parents=[common],
        help="necessary conditions for a complex to be a cut complex.",
    )
    conditions.add_argument(
        "--complex", type=str, required=True, help="complex or cocomplex file."
    )
    conditions.add_argument(
        "--report", type=str, default=None, help="JSON report path."
    )

    construct = commands.add_parser(
        "construct",
        parents=[common],
        help="realizing graphs and counterexample complexes.",
    )
    construct.add_argument(
        "--family", type=str, required=True, choices=CONSTRUCTION_FAMILIES
    )
    construct.add_argument("--n", type=int, default=None, help="vertex count.")
    construct.add_argument("--d", type=int, default=None, help="dimension.")
    construct.add_argument(
        "--facets",
        type=_labels,
        default=None,
        help="dim0: the facet vertices; codim2: the vertices a whose "
        "complement is a facet.",
    )
    construct.add_argument(
        "--complex",
        type=str,
        default=None,
        help="read the dim0 or codim2 input from a file instead.",
    )
    construct.add_argument(
        "--policy",
        type=str,
        default="strict",
        choices=LARGE_D_POLICIES,
        help="counter-large second excluded set (default: strict)",
    )
    construct.add_argument(
        "--output",
        type=str,
        default=None,
        help="output path (default: stdout)",
    )

    run = commands.add_parser(
        "oracle", parents=[common], help="brute-force verification sweeps."
    )
    run.add_argument("--mode", type=str, required=True, choices=ORACLE_MODES)
    run.add_argument("--n", type=int, default=None, help="vertex count.")
    run.add_argument(
        "--d", type=int, default=1, help="lower-bound dimension (default: 1)"
    )
    run.add_argument(
        "--family",
        type=str,
        default="counter-small",
        choices=["counter-small", "counter-large"],
        help="lower-bound family (default: counter-small)",
    )
    run.add_argument(
        "--policy",
        type=str,
        default="strict",
        choices=LARGE_D_POLICIES,
        help="counter-large second excluded set (default: strict)",
    )
    run.add_argument(
        "--jobs",
        type=_positive_int,
        default=os.environ.get("CUTCOMPLEX_JOBS", "1"),
        help="worker processes (default: $CUTCOMPLEX_JOBS or 1)",
    )
    run.add_argument(
        "--sample_size",
        type=int,
        default=None,
        help="sampled graphs per run (default: uniqueness 1000, "
        "recognition 10000, complexity 3 per size)",
    )
    run.add_argument(
        "--seed", type=int, default=1, help="sampling seed (default: 1)"
    )
    run.add_argument(
        "--full",
        action="store_true",
        help="allow full enumeration of the 2^21 graphs on 7 vertices.",
    )
    run.add_argument(
        "--sizes",
        type=int,
        nargs="+",
        default=[50, 100, 200],
        help="complexity vertex counts (default: 50 100 200)",
    )
    run.add_argument(
        "--step7_triple",
        type=str,
        default=STEP7_TRIPLE,
        choices=sorted(STEP7_TRIPLES),
        help=f"recognition last-step triple (default: {STEP7_TRIPLE})",
    )
    run.add_argument(
        "--report", type=str, default=None, help="JSON report path."
    )

    return parser.parse_args(argv)


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def cmd_build(args, logger):
    graph = formats.load_graph(args.graph)
    if args.total:
        cplx = builders.total_cut_complex(graph, args.k)
    else:
        cplx = builders.cut_complex(graph, args.k)
    logger.info("%d facets", cplx.num_facets)
    _emit(formats.format_complex(cplx, cofacets=args.cofacets), args.output)
    return EXIT_CODES["ok"]


def cmd_recognize(args, logger):
    cplx = formats.load_complex(args.complex, strict=args.strict)
    result = recognition.recognize_3cut(
        cplx,
        step7_triple=args.step7_triple,
        step5_tie_break=args.step5_tie_break,
    )
    if isinstance(result, recognition.RecognitionFailure):
        logger.error("%s: %s", result.kind.value, result.detail)
        if args.report:
            run_utils.save_report(
                {"command": "recognize", "failure": result.to_dict()},
                args.report,
            )
        return EXIT_CODES[result.kind]
    if args.report:
        run_utils.save_report(
            {"command": "recognize", "edges": result.edges()}, args.report
        )
    _emit(formats.format_graph(result), args.output)
    return EXIT_CODES["ok"]


def _yes_no(verdict):
    if verdict is None:
        return "n/a"
    return "yes" if verdict.unique else "no"


def cmd_check(args, logger):
    graph = formats.load_graph(args.graph)
    twins = structure.find_twins(graph)
    witness = structure.is_in_p4_family(graph)
    dominating = structure.find_dominating_pairs(graph)
    unique = structure.is_unique_3cut(graph) if graph.n >= 5 else None
    unique_total = None
    if graph.n >= 3:
        unique_total = structure.is_unique_total_3cut(graph)

    def pairs(found):
        return ", ".join(f"{u}-{v}" for u, v in found) or "none"

    lines = [
        f"vertices: {graph.n}",
        f"twins: {pairs(twins)}",
        "P4 witness: "
        + (
            "none"
            if witness is None
            else f"{witness.x}-{witness.y}-{witness.z}-{witness.w} "
            f"V'={sorted(witness.vprime)}"
        ),
        f"dominating pairs: {pairs(dominating)}",
        f"unique (3-cut): {_yes_no(unique)}",
        f"unique (total 3-cut): {_yes_no(unique_total)}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    if args.report:
        run_utils.save_report(
            {
                "command": "check",
                "n": graph.n,
                "twins": [list(p) for p in twins],
                "p4_witness": None if witness is None else witness.to_dict(),
                "dominating_pairs": [list(p) for p in dominating],
                "unique_3cut": None if unique is None else unique.unique,
                "unique_total_3cut": None
                if unique_total is None
                else unique_total.unique,
            },
            args.report,
        )
    return EXIT_CODES["ok"]


def cmd_conditions(args, logger):
    cplx = formats.load_complex(args.complex)
    report = realization.realization_report(cplx)
    sys.stdout.write(
        f"chain condition: {'holds' if report.chain_condition else 'fails'}\n"
        f"neighbor condition: "
        f"{'holds' if report.neighbor_condition else 'fails'}\n"
    )
    if args.report:
        run_utils.save_report(
            {"command": "conditions", **report.to_dict()}, args.report
        )
    if report.chain_condition and report.neighbor_condition:
        return EXIT_CODES["ok"]
    return EXIT_CODES["conditions_fail"]


def _require(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(
            f"family {args.family} needs {', '.join(missing)}."
        )


def _construction_input(args, complemented):
    """The dim0 or codim2 input, from --complex or from --n and --facets."""
    if args.complex is not None:
        return formats.load_complex(args.complex)
    _require(args, "n", "facets")
    members = vertex_set(args.facets, args.n)
    if complemented:
        return SimplicialComplex(
            args.n, [{a} for a in members], complemented=True
        )
    return SimplicialComplex(args.n, [{x} for x in members])


def cmd_construct(args, logger):
    if args.family == "dim0":
        cplx = _construction_input(args, complemented=False)
        text = formats.format_graph(realization.realize_dim0(cplx, cplx.n))
    elif args.family == "codim2":
        cplx = _construction_input(args, complemented=True)
        text = formats.format_graph(realization.realize_codim2(cplx))
    elif args.family == "counter-small":
        _require(args, "n", "d")
        cplx = realization.counterexample_small_d(args.n, args.d)
        text = formats.format_complex(cplx)
    else:
        _require(args, "n", "d")
        cplx = realization.counterexample_large_d(
            args.n, args.d, policy=args.policy
        )
        text = formats.format_complex(cplx)
    _emit(text, args.output)
    return EXIT_CODES["ok"]


def _run_oracle(args):
    mode = args.mode
    samples = args.sample_size
    if samples is None:
        samples = DEFAULT_SAMPLES.get(mode)
    if mode == "constructions":
        return oracle.verify_constructions(jobs=args.jobs)
    if mode == "complexity":
        return oracle.measure_recognition_scaling(
            sizes=args.sizes, samples=samples, seed=args.seed
        )
    if args.n is None:
        raise ValueError(f"mode {mode} needs --n.")
    n = args.n
    if mode == "uniqueness":
        return oracle.verify_uniqueness_theorem(
            n,
            jobs=args.jobs,
            sample_size=samples,
            seed=args.seed,
            full=args.full,
        )
    if mode == "total-uniqueness":
        return oracle.verify_total_uniqueness_theorem(n, jobs=args.jobs)
    if mode == "recognition":
        return oracle.verify_recognition(
            n,
            sample_size=samples,
            seed=args.seed,
            jobs=args.jobs,
            full=args.full,
            step7_triple=args.step7_triple,
        )
    if mode == "lower-bound":
        return oracle.verify_lower_bound(
            n,
            args.d,
            family=args.family,
            policy=args.policy,
            allow_large=args.full,
            jobs=args.jobs,
        )
    if mode == "flip-search":
        return oracle.search_flip_connectivity(n, jobs=args.jobs)
    if mode == "invariance":
        return oracle.verify_move_invariance(n, jobs=args.jobs)
    if mode == "twin-corollary":
        return oracle.verify_twin_corollary(n, jobs=args.jobs)
    if mode == "conditions":
        return oracle.verify_necessary_conditions(n, jobs=args.jobs)
    return oracle.verify_duality(n, jobs=args.jobs)


def cmd_oracle(args, logger):
    report = _run_oracle(args)
    sys.stdout.write(report.to_text() + "\n")
    if args.report:
        run_utils.save_report(report.to_dict(), args.report)
    if report.ok:
        return EXIT_CODES["ok"]
    return EXIT_CODES["oracle_violations"]


COMMANDS = {
    "build": cmd_build,
    "recognize": cmd_recognize,
    "check": cmd_check,
    "conditions": cmd_conditions,
    "construct": cmd_construct,
    "oracle": cmd_oracle,
}


def main(argv=None):
    try:
        args = get_args(argv)
    except SystemExit as e:
        return EXIT_CODES["ok"] if not e.code else EXIT_CODES["bad_input"]

    logger = run_utils.get_logger(log_dir=args.log_dir)
    if args.log_dir:
        run_utils.save_params(args, args.log_dir)
        inputs = [
            path
            for path in (
                getattr(args, "graph", None),
                getattr(args, "complex", None),
            )
            if path is not None and os.path.isfile(path)
        ]
        run_utils.snapshot_files(inputs, args.log_dir)
    logger.info("%s", repr(args))

    try:
        return COMMANDS[args.command](args, logger)
    except (OSError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_CODES["bad_input"]


if __name__ == "__main__":
    sys.exit(main())
