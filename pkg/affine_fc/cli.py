"""Command line for FC elements of affine D~ and B~, their reductions and diagrams."""

import argparse
import json
import logging
import sys

from . import config
from .coxeter import build_graph, element, heap_of, n_value
from .diagrams import a_tilde, a_value, diagram_of
from .errors import AffineFcError, InvalidParameter, WrongFamily
from .harness import SUITES, SuiteConfig, print_report, run_suite
from .model import Family
from .oracle import EnumerationConfig, enumerate_fc
from .render import (
    classification_to_dict,
    diagram_ascii,
    diagram_to_dict,
    fc_to_dict,
    heap_ascii,
    trace_ascii,
    trace_to_dict,
)
from .star import (
    Mode,
    Policy,
    classify_irreducible_B,
    classify_irreducible_D,
    phi,
    reduce_to_irreducible,
)
from .utils import format_layers, parse_word


def emit(args, data: dict | list, text: str):
    if args.format == "json":
        print(json.dumps(data, ensure_ascii=False))
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", choices=["D", "B"], default="D", help="Affine type (default: D)")
    common.add_argument("--n", type=int, default=2, help="Type parameter, at least 2 (default: 2)")
    common.add_argument(
        "--format", choices=["json", "ascii"], default="ascii", help="Output format"
    )
    common.add_argument("--verbose", action="store_true", help="Log progress to stderr")

    with_word = argparse.ArgumentParser(add_help=False, parents=[common])
    with_word.add_argument(
        "word", nargs="*", help="Generator indices of a reduced word, space or comma separated"
    )

    parser = argparse.ArgumentParser(
        description="Fully commutative elements of affine Coxeter groups of type D and B",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s cfnf --type D --n 5 0 4 3 5 2 4 6 7 1
  %(prog)s reduce --type B --n 5 --mode weak --policy exhaustive 3 2 4 1 3 5 2 4 6 0 3 5 2 6
  %(prog)s afunc --type D --n 2 0 1
  %(prog)s enumerate --type B --n 3 --max-len 4
  %(prog)s verify classification-D --n 2 --max-len 10
""",
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    subparsers.add_parser("cfnf", parents=[with_word], help="Print the Cartier-Foata layers")
    subparsers.add_parser("heap", parents=[with_word], help="Draw the heap")

    reduce_parser = subparsers.add_parser(
        "reduce", parents=[with_word], help="Reduce to an irreducible"
    )
    reduce_parser.add_argument("--mode", choices=[m.value for m in Mode], default="star")
    reduce_parser.add_argument("--policy", choices=[p.value for p in Policy], default="first")

    classify_parser = subparsers.add_parser(
        "classify", parents=[with_word], help="Name the family of an irreducible element"
    )
    classify_parser.add_argument("--mode", choices=[m.value for m in Mode], default="star")

    subparsers.add_parser("phi", parents=[with_word], help="Map a B~ element into D~")
    subparsers.add_parser("diagram", parents=[with_word], help="Print the canonical diagram")
    subparsers.add_parser("afunc", parents=[with_word], help="Compare heap width and a-value")

    enumerate_parser = subparsers.add_parser(
        "enumerate", parents=[common], help="List FC elements by length"
    )
    enumerate_parser.add_argument(
        "--max-len", type=int, default=4, help="Length bound (default: 4)"
    )

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Run a named suite")
    verify_parser.add_argument("suite", choices=list(SUITES), help="Suite name")
    verify_parser.add_argument("--max-len", type=int, default=8, help="Length bound (default: 8)")
    verify_parser.add_argument("--seed", type=int, default=None, help="Seed of randomized checks")
    verify_parser.add_argument("--samples", type=int, default=200, help="Randomized samples")
    return parser


def run(args) -> int:
    family = Family(args.type)
    graph = build_graph(family, args.n)

    if args.command == "enumerate":
        for fc in enumerate_fc(EnumerationConfig(graph, args.max_len)):
            emit(args, fc_to_dict(fc), format_layers(fc.layers))
        return 0

    if args.command == "verify":
        seed = config.default_seed() if args.seed is None else args.seed
        cfg = SuiteConfig(family, args.n, args.max_len, seed, args.samples)
        report = run_suite(args.suite, cfg)
        if args.format == "json":
            print(json.dumps(report.to_dict(), ensure_ascii=False))
        else:
            print_report(report)
        return 0 if report.passed else 1

    try:
        letters = parse_word(" ".join(args.word))
    except ValueError as e:
        raise InvalidParameter(str(e)) from e
    fc = element(graph, letters)

    if args.command == "cfnf":
        emit(args, fc_to_dict(fc), format_layers(fc.layers))
    elif args.command == "heap":
        heap = heap_of(fc)
        data = {"labels": list(heap.labels), "covers": sorted(list(c) for c in heap.covers)}
        emit(args, data, heap_ascii(fc))
    elif args.command == "reduce":
        result = reduce_to_irreducible(fc, Mode(args.mode), Policy(args.policy))
        traces = result if isinstance(result, list) else [result]
        data = [trace_to_dict(t) for t in traces]
        text = "\n\n".join(trace_ascii(t) for t in traces)
        emit(args, data if isinstance(result, list) else data[0], text)
    elif args.command == "classify":
        if family is Family.AFFINE_D:
            classification = classify_irreducible_D(fc)
        else:
            classification = classify_irreducible_B(fc, Mode(args.mode))
        data = classification_to_dict(classification)
        params = " ".join(f"{k}={v}" for k, v in data["params"].items())
        emit(args, data, f"{data['class']} {params}".strip())
    elif args.command == "phi":
        if family is not Family.AFFINE_B:
            raise WrongFamily("phi maps B~ elements; use --type B")
        image = phi(fc)
        emit(args, fc_to_dict(image), format_layers(image.layers))
    elif args.command == "diagram":
        diagram = diagram_of(fc)
        emit(args, diagram_to_dict(diagram), diagram_ascii(diagram))
    elif args.command == "afunc":
        diagram = diagram_of(fc)
        width, tilde = n_value(fc), a_tilde(diagram)
        data = {"n": width, "a": a_value(diagram), "a_tilde": tilde, "agree": width == tilde}
        agree = str(data["agree"]).lower()
        emit(args, data, f"n={width} a={data['a']} a_tilde={tilde} agree={agree}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 2

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")

    try:
        return run(args)
    except AffineFcError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
