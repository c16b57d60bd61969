"""Command-line interface: a thin front end over the library.

Exit codes: 0 for success, including mathematically negative answers such as
"no factor" or "not in M"; 1 for parse or validation errors; 2 for internal
invariant violations (which indicate a bug, not bad input).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from polydecomp import serialize
from polydecomp.decompose import enumerate_decompositions, peel, signature_set
from polydecomp.errors import (
    InternalInvariantError,
    NoFactorError,
    NotInFreeMonoidError,
)
from polydecomp.parsing import parse_poly
from polydecomp.polynomials import format_poly
from polydecomp.reducibility import irreducibility_report
from polydecomp.unitary import UnitaryMap
from polydecomp.words import factor_word


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="polydecomp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compose", help="monoid product of unitary maps (left = inner)")
    p.add_argument("polys", nargs="+", metavar="POLY")

    p = sub.add_parser("decompose", help="all decompositions with signatures")
    p.add_argument("poly", metavar="POLY")

    p = sub.add_parser("signature", help="the set of decomposition signatures")
    p.add_argument("poly", metavar="POLY")

    p = sub.add_parser("peel", help="split off the inner factor of a given degree")
    p.add_argument("poly", metavar="POLY")
    p.add_argument("--degree", type=int, required=True, help="degree of the inner factor")

    p = sub.add_parser("free-factor", help="recover the generator word, if any")
    p.add_argument("poly", metavar="POLY")

    p = sub.add_parser("gamma-level", help="largest n with support on exponents 1 mod n")
    p.add_argument("poly", metavar="POLY")

    p = sub.add_parser("irreducible-check", help="necessary-conditions report for a constant-term-1 polynomial")
    p.add_argument("poly", metavar="POLY")

    p = sub.add_parser("inverse-table", help="inverse expansions of the shape-(n, m) substitution")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    return parser


def _format_signature(sig: Sequence[int]) -> str:
    return "(" + ", ".join(str(d) for d in sig) + ")"


def _parse_unitary(text: str) -> UnitaryMap:
    return UnitaryMap(parse_poly(text))


def _cmd_compose(ns: argparse.Namespace) -> tuple[list[str], dict, dict, list[str]]:
    if len(ns.polys) < 2:
        raise ValueError("compose needs at least two polynomials")
    maps = [_parse_unitary(text) for text in ns.polys]
    product = maps[0]
    for factor in maps[1:]:
        product = product * factor
    human = [format_poly(product.poly)]
    inputs = {"polys": [format_poly(m.poly) for m in maps]}
    return human, inputs, serialize.compose_result(product), []


def _cmd_decompose(ns: argparse.Namespace) -> tuple[list[str], dict, dict, list[str]]:
    delta = _parse_unitary(ns.poly)
    decs = enumerate_decompositions(delta)
    human = [f"{len(decs)} decomposition(s) of {format_poly(delta.poly)}"]
    for dec in decs:
        factors = ", ".join(f"({format_poly(f.poly)})" for f in dec.factors)
        human.append(f"{_format_signature(dec.signature)}: {factors}")
    inputs = {"poly": format_poly(delta.poly)}
    return human, inputs, serialize.decompose_result(decs), []


def _cmd_signature(ns: argparse.Namespace) -> tuple[list[str], dict, dict, list[str]]:
    delta = _parse_unitary(ns.poly)
    sigs = signature_set(delta)
    human = [_format_signature(sig) for sig in sigs]
    inputs = {"poly": format_poly(delta.poly)}
    return human, inputs, serialize.signature_result(sigs), []


def _cmd_peel(ns: argparse.Namespace) -> tuple[list[str], dict, dict, list[str]]:
    delta = _parse_unitary(ns.poly)
    inputs = {"poly": format_poly(delta.poly), "degree": ns.degree}
    try:
        result = peel(delta, ns.degree)
    except NoFactorError as exc:
        return [str(exc)], inputs, serialize.peel_missing_result(str(exc)), []
    human = [
        f"sigma = {format_poly(result.sigma.poly)}",
        f"tau = {format_poly(result.tau.poly)}",
    ]
    return human, inputs, serialize.peel_found_result(result), []


def _cmd_free_factor(ns: argparse.Namespace) -> tuple[list[str], dict, dict, list[str]]:
    mapping = _parse_unitary(ns.poly)
    inputs = {"poly": format_poly(mapping.poly)}
    try:
        word = factor_word(mapping)
    except NotInFreeMonoidError as exc:
        return [f"not in M: {exc}"], inputs, serialize.word_missing_result(str(exc)), []
    human = [f"word of length {len(word)}"]
    for pos, gen in enumerate(word, start=1):
        human.append(
            f"{pos}: n={gen.n} lambda={gen.lam} ({format_poly(gen.poly())})"
        )
    return human, inputs, serialize.word_found_result(word), []


def _cmd_gamma_level(ns: argparse.Namespace) -> tuple[list[str], dict, dict, list[str]]:
    mapping = _parse_unitary(ns.poly)
    level = mapping.level()
    human = ["unbounded" if level is None else str(level)]
    inputs = {"poly": format_poly(mapping.poly)}
    return human, inputs, serialize.level_result(level), []


def _cmd_irreducible_check(ns: argparse.Namespace) -> tuple[list[str], dict, dict, list[str]]:
    p = parse_poly(ns.poly)
    report = irreducibility_report(p)
    human = [f"input: {format_poly(p)}"]
    for shape in report.shape_results:
        human.append(f"shape (n={shape.n}, m={shape.m}): {shape.outcome}")
    for u, v in report.witnesses:
        human.append(f"witness: ({format_poly(u)}) * ({format_poly(v)})")
    human.append(f"verdict: {report.verdict}")
    for note in report.notes:
        human.append(f"note: {note}")
    inputs = {"poly": format_poly(p)}
    return human, inputs, serialize.irreducibility_result(report), list(report.notes)


def _cmd_inverse_table(ns: argparse.Namespace) -> tuple[list[str], dict, dict, list[str]]:
    result = serialize.inverse_table_result(ns.n, ns.m)
    human = [f"x{entry['j']} = {entry['expr']}" for entry in result["entries"]]
    inputs = {"n": ns.n, "m": ns.m}
    return human, inputs, result, []


_HANDLERS: dict[str, Callable[[argparse.Namespace], tuple[list[str], dict, dict, list[str]]]] = {
    "compose": _cmd_compose,
    "decompose": _cmd_decompose,
    "signature": _cmd_signature,
    "peel": _cmd_peel,
    "free-factor": _cmd_free_factor,
    "gamma-level": _cmd_gamma_level,
    "irreducible-check": _cmd_irreducible_check,
    "inverse-table": _cmd_inverse_table,
}


def run_command(argv: Sequence[str]) -> int:
    """Run one CLI invocation and return its exit code."""
    args = list(argv)
    as_json = "--json" in args
    args = [a for a in args if a != "--json"]
    try:
        ns = _build_parser().parse_args(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help exits directly
        return int(exc.code or 0)
    try:
        human, inputs, result, errata = _HANDLERS[ns.command](ns)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - surfaced as an internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    if as_json:
        envelope = {
            "command": ns.command,
            "input": inputs,
            "result": result,
            "errata_notes": errata,
        }
        print(json.dumps(envelope, indent=2))
    else:
        for line in human:
            print(line)
    return 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
