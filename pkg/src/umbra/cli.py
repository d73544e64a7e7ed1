"""Command-line front end: ``umbra eval | seq | full | verify | genfun``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import partitions as P
from .config import DEFAULT_TRUNCATION, check_degree, degree_cap, set_degree_cap
from .errors import DomainError, ResourceError, UmbraError
from .expr import ParseError, evaluate, format_value, load_genus, parse_with_warnings, value_to_json
from .genera import full_sequence
from .species import QuasiSpecies, SPECIES_NAMES, delta_pair, linear_sequence, named_species
from .verify import SUITE_NAMES, Settings, egf_product_identity, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--degree-cap", type=_positive, default=None,
                        help="largest degree any operation may build (default 32, env UMBRA_DEGREE_CAP)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = _Parser(prog="umbra", description="Exact umbral calculus on symmetric functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p_eval.add_argument("expr", help='e.g. "D(h[3])", "pow[2] ∘ pow[3]", "E(1/2)(s[2,1])"')

    p_seq = sub.add_parser("seq", parents=[common], help="linear sequence of binomial type of a species")
    p_seq.add_argument("species", help=f"one of {', '.join(SPECIES_NAMES)} or a species JSON file")
    p_seq.add_argument("n", type=_nonnegative)

    p_full = sub.add_parser("full", parents=[common], help="full sequence of a genus")
    p_full.add_argument("genus", help="genus JSON file, e, h, or a species name (product genus)")
    p_full.add_argument("partition", help="e.g. [2,1] or 2,1")

    p_ver = sub.add_parser("verify", parents=[common], help="run an identity verification suite")
    p_ver.add_argument("suite", help=f"one of {', '.join(SUITE_NAMES)}")
    p_ver.add_argument("--degree", type=_nonnegative, default=None, help="override the suite's degree bound")
    p_ver.add_argument("-n", type=_nonnegative, default=None, help="override the sequence index bound")
    p_ver.add_argument("--species", default=None, help="restrict species-indexed checks to one species")

    p_gen = sub.add_parser("genfun", parents=[common], help="generating functions of a species")
    p_gen.add_argument("species")
    p_gen.add_argument("--trunc", type=_nonnegative, default=DEFAULT_TRUNCATION, help="t-degree truncation")
    p_gen.add_argument("--vars", type=_positive, default=3, help="alphabet size for the product identity")
    return parser


def _load_species(name: str) -> QuasiSpecies:
    if name.endswith(".json"):
        try:
            with open(name, encoding="utf-8") as fh:
                return QuasiSpecies.from_json(json.load(fh))
        except OSError as exc:
            raise DomainError(f"cannot read species file {name!r}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise DomainError(f"species file {name!r} is not valid JSON: {exc.msg}") from None
    return named_species(name)


def _parse_partition(text: str):
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        parts = [int(x) for x in body.split(",") if x.strip()]
    except ValueError:
        raise DomainError(f"cannot read partition {text!r}") from None
    lam = P.partition(parts)
    if list(lam) != parts:
        print(f"warning: partition {parts} normalized to {list(lam)}", file=sys.stderr)
    return lam


def _emit(payload, text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_eval(args) -> int:
    node, warnings = parse_with_warnings(args.expr)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    value = evaluate(node)
    _emit(value_to_json(value), format_value(value), args.json)
    return EXIT_OK


def cmd_seq(args) -> int:
    s = _load_species(args.species)
    s.require_admissible()
    p = linear_sequence(s, args.n)
    _emit(p.to_json(), str(p), args.json)
    return EXIT_OK


def cmd_full(args) -> int:
    G = load_genus(args.genus)
    lam = _parse_partition(args.partition)
    p = full_sequence(G, lam)
    _emit(p.to_json(), str(p), args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITE_NAMES:
        raise DomainError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITE_NAMES)}")
    if args.species is not None:
        named_species(args.species)
    cfg = Settings(degree=args.degree, n=args.n, seed=args.seed, species=args.species)
    report = run_suite(args.suite, cfg)
    status = "PASS" if report.passed else "FAIL"
    text = "\n".join(report.lines() + [f"{args.suite}: {status}"])
    _emit(report.to_json(), text, args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_genfun(args) -> int:
    s = _load_species(args.species)
    T, k = args.trunc, args.vars
    check_degree(T, "truncation")
    pair = delta_pair(s, T)
    egf = s.egf(T)
    holds = egf_product_identity(s, T, k)
    payload = {
        "egf": egf.to_json(),
        "conjugate": pair["conjugate"].to_json(),
        "associated": pair["associated"].to_json(),
        "product_identity": {"vars": k, "truncation": T, "holds": holds},
    }
    text = "\n".join([
        f"Gen[S](t)        = {egf}",
        f"log Gen[S](t)    = {pair['conjugate']}",
        f"inverse series   = {pair['associated']}",
        f"sum p_n(y) t^n/n! = prod_i Gen[S](y_i t) in {k} variables up to t^{T}: {'holds' if holds else 'FAILS'}",
    ])
    _emit(payload, text, args.json)
    return EXIT_OK if holds else EXIT_FAIL


COMMANDS = {"eval": cmd_eval, "seq": cmd_seq, "full": cmd_full, "verify": cmd_verify, "genfun": cmd_genfun}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous_cap = degree_cap()
    if args.degree_cap is not None:
        set_degree_cap(args.degree_cap)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"umbra: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"umbra: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, UmbraError) as exc:
        print(f"umbra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_degree_cap(previous_cap)


if __name__ == "__main__":
    sys.exit(main())
