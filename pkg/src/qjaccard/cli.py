"""Command-line front end.

    qjaccard jaccard --x 1010 --y 1101
    qjaccard intersect --x 1010 --y 1101 --shots 1024 --output json
    qjaccard export-qasm --circuit union --x 1010 --y 1101 --out union.qasm
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .circuits import JaccardResult, build_intersection_circuit, build_union_circuit, layout_for
from .qasm import UnsupportedExportError, circuit_stats, to_qasm
from .qcore import BackendCapacityError, measure_register, resolve_backend, run

EXIT_OK, EXIT_USAGE, EXIT_BACKEND = 0, 1, 2

BUILDERS = {"intersect": build_intersection_circuit, "union": build_union_circuit}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bits(text: str) -> str:
    if not text or set(text) - {"0", "1"}:
        raise argparse.ArgumentTypeError(f"{text!r} is not a non-empty string of 0s and 1s")
    return text


def build_parser() -> argparse.ArgumentParser:
    vectors = argparse.ArgumentParser(add_help=False)
    vectors.add_argument("--x", required=True, type=_bits, help="first vector, MSB first (leftmost is x_{N-1})")
    vectors.add_argument("--y", required=True, type=_bits, help="second vector, same length as --x")

    sim = argparse.ArgumentParser(add_help=False)
    sim.add_argument("--backend", choices=("dense", "basis", "auto"), default="auto",
                     help="auto uses dense up to 24 qubits, basis beyond")
    sim.add_argument("--shots", type=int, default=1024)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--output", choices=("text", "json"), default="text")

    parser = _Parser(prog="qjaccard", description="Quantum counting circuits for Jaccard similarity.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("jaccard", parents=[vectors, sim], help="a, b and J = a/b")
    sub.add_parser("intersect", parents=[vectors, sim], help="run the intersection counter")
    sub.add_parser("union", parents=[vectors, sim], help="run the union counter")

    export = sub.add_parser("export-qasm", parents=[vectors], help="write OpenQASM 2.0")
    export.add_argument("--circuit", choices=tuple(BUILDERS), required=True)
    export.add_argument("--out", help="file to write; stdout if omitted")

    stats = sub.add_parser("stats", parents=[vectors], help="gate counts by class")
    stats.add_argument("--circuit", choices=tuple(BUILDERS), default="intersect")
    stats.add_argument("--output", choices=("text", "json"), default="text")
    return parser


def _check(args):
    if len(args.x) != len(args.y):
        raise UsageError(f"--x and --y differ in length ({len(args.x)} vs {len(args.y)})")
    if getattr(args, "shots", 1) < 1:
        raise UsageError(f"--shots must be >= 1, got {args.shots}")


def render_histogram(histogram: dict[str, int]) -> list[str]:
    w = max(len(str(c)) for c in histogram.values())
    return [f"{bits}  {count:>{w}}" for bits, count in sorted(histogram.items())]


def _sample(circuit, backend, shots, seed):
    state = run(circuit, backend)
    return measure_register(state, circuit.layout, circuit.measured_register, shots, seed)


def _payload(a, b, jaccard, histogram, backend, args) -> str:
    doc = {"a": a, "b": b, "jaccard": jaccard, "histogram": histogram,
           "backend": backend, "shots": args.shots, "seed": args.seed}
    return json.dumps(doc, indent=2)


def cmd_counter(args, out) -> None:
    circuit = BUILDERS[args.command](args.x, args.y)
    backend = resolve_backend(args.backend, circuit.width)
    res = _sample(circuit, backend, args.shots, args.seed)
    name = "a" if args.command == "intersect" else "b"
    if args.output == "json":
        a, b = (res.value, None) if name == "a" else (None, res.value)
        print(_payload(a, b, None, res.histogram, backend, args), file=out)
        return
    print(f"counter: {res.bitstring} ({name}={res.value})", file=out)
    print(f"backend={backend} shots={args.shots} seed={args.seed}", file=out)
    for row in render_histogram(res.histogram):
        print(row, file=out)


def cmd_jaccard(args, out) -> None:
    backend = resolve_backend(args.backend, layout_for(len(args.x)).width)
    inter = _sample(build_intersection_circuit(args.x, args.y), backend, args.shots, args.seed)
    union = _sample(build_union_circuit(args.x, args.y), backend, args.shots, args.seed)
    result = JaccardResult(inter.value, union.value)
    if args.output == "json":
        m = len(inter.bitstring)
        # joint outcome per shot, keyed "<a bits>/<b bits>"
        joint = Counter(f"{int(a):0{m}b}/{int(b):0{m}b}" for a, b in zip(inter.samples, union.samples))
        j = result.value
        print(_payload(result.intersection_count, result.union_count,
                       None if j is None else f"{j.numerator}/{j.denominator}",
                       dict(sorted(joint.items())), backend, args), file=out)
        return
    print(result, file=out)


def cmd_export(args, out) -> None:
    text = to_qasm(BUILDERS[args.circuit](args.x, args.y))
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_stats(args, out) -> None:
    stats = circuit_stats(BUILDERS[args.circuit](args.x, args.y)).as_dict()
    if args.output == "json":
        print(json.dumps(stats, indent=2), file=out)
        return
    for key, value in stats.items():
        if key == "mcx_gates":
            value = " ".join(f"{k}-ctrl:{v}" for k, v in value.items()) or "none"
        print(f"{key}: {value}", file=out)


COMMANDS = {"jaccard": cmd_jaccard, "intersect": cmd_counter, "union": cmd_counter,
            "export-qasm": cmd_export, "stats": cmd_stats}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check(args)
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qjaccard: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BackendCapacityError, UnsupportedExportError) as exc:
        print(f"qjaccard: {exc}", file=sys.stderr)
        return EXIT_BACKEND
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
