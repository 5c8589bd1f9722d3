"""Command-line surface: parse expressions, run decisions, emit JSON or DOT.

Exit codes: 0 success; 2 parse or validation error; 3 the input does not
define a compactification; 4 an operation precondition failed (for example
the requested witness kind is unavailable).  All numbers inside JSON
payloads are decimal strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import AlgebraError
from .algebra import semidegree as semidegree_value
from .decide import NotACompactificationError, cousin_decide, decide_algebraic
from .graphs import (
    GraphError,
    WitnessError,
    algebraic_witness,
    classify,
    export_dot,
    nonalgebraic_witness,
    resolution_graph,
)
from .keyforms import KeyFormError, KeyFormSeq, compute_key_forms
from .parsing import ParseError, dps_to_str, laurent_to_str, parse_dps, parse_laurent
from .puiseux import FormalPuiseuxPairs, GenericDPS, PuiseuxError, formal_pairs

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_COMPACTIFICATION = 3
EXIT_PRECONDITION = 4


def _exit_code(error: Exception) -> int:
    if isinstance(error, NotACompactificationError):
        return EXIT_NOT_COMPACTIFICATION
    if isinstance(error, (WitnessError, KeyFormError)):
        return EXIT_PRECONDITION
    if isinstance(error, (ParseError, PuiseuxError, AlgebraError, GraphError, ValueError)):
        return EXIT_INVALID
    raise error


def _parse_rational(text: str):
    from fractions import Fraction

    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}", 0) from None


def _parse_pairs(text: str) -> FormalPuiseuxPairs:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("empty pair", 0)
        if "/" in chunk:
            q_text, p_text = chunk.split("/", 1)
        else:
            q_text, p_text = chunk, "1"
        try:
            pairs.append((int(q_text), int(p_text)))
        except ValueError:
            raise ParseError(f"bad pair {chunk!r}", 0) from None
    return FormalPuiseuxPairs(tuple(pairs))


def _generic_series(args) -> GenericDPS:
    return GenericDPS(parse_dps(args.phi), _parse_rational(args.r))


def _sequence_payload(seq: KeyFormSeq) -> dict:
    return {
        "key_forms": [laurent_to_str(f) for f in seq.forms],
        "values": [str(v) for v in seq.values],
        "multipliers": [str(a) for a in seq.multipliers],
        "essential_indices": [str(j) for j in seq.essential_indices],
        "essential_values": [str(v) for v in seq.essential_values()],
    }


def _pairs_payload(pairs: FormalPuiseuxPairs) -> list[list[str]]:
    return [[str(q), str(p)] for q, p in pairs.pairs]


def _cmd_keyforms(args) -> dict:
    g = _generic_series(args)
    seq = compute_key_forms(g)
    return {
        "command": "keyforms",
        "phi": dps_to_str(g.phi),
        "r": str(g.r),
        "formal_pairs": _pairs_payload(formal_pairs(g)),
        **_sequence_payload(seq),
    }


def _cmd_semidegree(args) -> dict:
    g = _generic_series(args)
    f = parse_laurent(args.f)
    return {
        "command": "semidegree",
        "f": laurent_to_str(f),
        "phi": dps_to_str(g.phi),
        "r": str(g.r),
        "value": str(semidegree_value(f, g)),
    }


def _verdict_payload(command: str, verdict) -> dict:
    payload = {
        "command": command,
        "kind": verdict.kind,
        **_sequence_payload(verdict.keyforms),
    }
    if verdict.is_algebraic:
        payload["curve"] = laurent_to_str(verdict.curve)
        payload["embedding_weights"] = [str(w) for w in verdict.embedding_weights]
        payload["essential_weights"] = [str(w) for w in verdict.essential_weights]
    else:
        payload["witness_index"] = str(verdict.witness_index)
    return payload


def _cmd_decide(args) -> dict:
    return _verdict_payload("decide", decide_algebraic(_generic_series(args)))


def _cmd_cousin(args) -> dict:
    psi = parse_dps(args.psi)
    verdict = cousin_decide(psi, _parse_rational(args.r))
    return _verdict_payload("cousin", verdict)


def _cmd_classify(args) -> dict:
    result = classify(_parse_pairs(args.pairs))
    return {
        "command": "classify",
        "kind": result.kind,
        "essential_values": [str(v) for v in result.essential_values],
        "s1_failures": [str(k) for k in result.s1_failures],
        "s2_failures": [str(k) for k in result.s2_failures],
        "s2_witnesses": [{"k": str(k), "t": str(t)} for k, t in result.s2_witnesses],
    }


def _cmd_graph(args) -> dict | str:
    graph = resolution_graph(_parse_pairs(args.pairs))
    if args.dot:
        return export_dot(graph)
    return {
        "command": "graph",
        "vertices": [
            {"name": v.name, "weight": str(v.weight), "mark": v.mark} for v in graph.vertices
        ],
        "edges": [[a, b] for a, b in graph.edges],
    }


def _cmd_witness(args) -> dict:
    pairs = _parse_pairs(args.pairs)
    build = algebraic_witness if args.kind == "algebraic" else nonalgebraic_witness
    seq = build(pairs)
    return {
        "command": "witness",
        "kind": args.kind,
        "all_polynomial": all(f.is_polynomial for f in seq.forms),
        **_sequence_payload(seq),
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semidegree",
        description="Key forms, algebraicity decisions and resolution dual graphs "
        "for valuations at infinity on the plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    series = argparse.ArgumentParser(add_help=False)
    series.add_argument("--phi", required=True, help="descending Puiseux polynomial")
    series.add_argument("--r", required=True, help="generic exponent (rational)")

    sub.add_parser("keyforms", parents=[series], help="compute the key forms")

    p = sub.add_parser("semidegree", parents=[series], help="evaluate the semidegree")
    p.add_argument("--f", required=True, help="element of Q[x,1/x,y]")

    sub.add_parser("decide", parents=[series], help="decide algebraicity")

    p = sub.add_parser("cousin", help="decide approximability by a polynomial curve")
    p.add_argument("--psi", required=True, help="local Puiseux polynomial (positive exponents)")
    p.add_argument("--r", required=True, help="positive rational contact order")

    p = sub.add_parser("classify", help="classify a dual graph from its pairs")
    p.add_argument("--pairs", required=True, help="comma-separated q/p pairs")

    p = sub.add_parser("graph", help="emit the resolution dual graph")
    p.add_argument("--pairs", required=True, help="comma-separated q/p pairs")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")

    p = sub.add_parser("witness", help="construct a witness key-form sequence")
    p.add_argument("--pairs", required=True, help="comma-separated q/p pairs")
    p.add_argument("--kind", required=True, choices=["algebraic", "nonalgebraic"])

    p = sub.add_parser("batch", help="run one command per line of a file")
    p.add_argument("--input", required=True, help="file of command lines")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")

    return parser


_HANDLERS = {
    "keyforms": _cmd_keyforms,
    "semidegree": _cmd_semidegree,
    "decide": _cmd_decide,
    "cousin": _cmd_cousin,
    "classify": _cmd_classify,
    "graph": _cmd_graph,
    "witness": _cmd_witness,
}

_VALUE_FLAGS = {"--phi", "--r", "--f", "--psi", "--pairs", "--kind", "--input", "--jobs"}


def _merge_flag_values(argv: list[str]) -> list[str]:
    """Join value flags with their argument so values like -6/5 survive
    argparse's option detection."""
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def run_line(line: str) -> tuple[int, str]:
    """Run one command line; returns (exit code, single-line JSON or error)."""
    try:
        argv = shlex.split(line)
        if argv and argv[0] == "batch":
            raise ParseError("batch lines may not nest", 0)
        args = _build_parser().parse_args(_merge_flag_values(argv))
        result = _HANDLERS[args.command](args)
    except SystemExit:
        return EXIT_INVALID, json.dumps({"error": "bad arguments", "exit_code": str(EXIT_INVALID)})
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes below
        code = _exit_code(exc)
        return code, json.dumps({"error": str(exc), "exit_code": str(code)})
    if isinstance(result, str):
        result = {"error": "dot output is not available in batch mode", "exit_code": str(EXIT_INVALID)}
        return EXIT_INVALID, json.dumps(result)
    return EXIT_OK, json.dumps(result, separators=(",", ":"))


def _cmd_batch(args) -> tuple[int, str]:
    with open(args.input, encoding="utf-8") as handle:
        lines = [line.strip() for line in handle if line.strip()]
    if args.jobs > 1:
        try:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(run_line, lines))
        except OSError:
            results = [run_line(line) for line in lines]
    else:
        results = [run_line(line) for line in lines]
    code = next((c for c, _ in results if c != EXIT_OK), EXIT_OK)
    return code, "".join(text + "\n" for _, text in results)


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_merge_flag_values(list(argv)))
    if args.command == "batch":
        code, out = _cmd_batch(args)
        sys.stdout.write(out)
        return code
    try:
        result = _HANDLERS[args.command](args)
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes
        code = _exit_code(exc)
        print(str(exc), file=sys.stderr)
        return code
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        sys.stdout.write(json.dumps(result, indent=2) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
