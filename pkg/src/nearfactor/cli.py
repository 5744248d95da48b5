"""Command-line interface.

Usage:
    nearfactor construct --n 5 --k 0 --format json
    nearfactor construct --n 5                 # whole factorization
    nearfactor construct --n 4 --k 0 --even    # even-order perfect matching
    nearfactor pairs --n 9 [--matrix]
    nearfactor pairs --n 5 --witness --k 0 --l 1 --format dot
    nearfactor equiv --s 3 --t 5
    nearfactor oracle --n 5 [--expensive]
    nearfactor verify --input factorization.json

Exit codes: 0 success, 2 validation error, 3 cost-guard refusal.
All output is deterministic: canonical edge order, sorted JSON keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import combinations

from .factors import (
    Factor,
    Factorization,
    build_modular_factor,
    build_modular_factor_even,
    build_modular_factorization,
    factorization_problems,
)
from .numtheory import totient
from .oracle import CostGuardError, oracle_summary
from .pairing import classify_pair, union_walk
from .equivalence import build_equivalence_report

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_COST_GUARD = 3

WITNESS_COLORS = ("blue", "red")


@dataclass
class RunConfig:
    """Everything one invocation needs, lifted out of argparse."""

    subcommand: str
    n: int | None = None
    s: int | None = None
    t: int | None = None
    k: int | None = None
    l: int | None = None
    fmt: str = "json"
    even: bool = False
    witness: bool = False
    matrix: bool = False
    expensive: bool = False
    input_path: str | None = None
    output: str | None = None


def _to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(text: str, config: RunConfig) -> None:
    if config.output:
        with open(config.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- rendering


def _dot_factor(factor: Factor, name: str) -> list[str]:
    lines = [f"graph {name} {{"]
    for v in range(factor.n):
        mark = ' [shape="doublecircle"]' if v == factor.isolated else ""
        lines.append(f"  {v}{mark};")
    for u, v in factor.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return lines


def _factor_dot(factor: Factor) -> str:
    label = "factor" if factor.index is None else f"factor_{factor.index}"
    return "\n".join(_dot_factor(factor, label)) + "\n"


def _factorization_dot(fz: Factorization) -> str:
    blocks = []
    for f in fz.factors:
        name = f"factor_{f.index}" if f.index is not None else "factor"
        blocks.extend(_dot_factor(f, name))
    return "\n".join(blocks) + "\n"


def _witness_dot(f: Factor, g: Factor) -> str:
    lines = [f"graph pair_k{f.index}_l{g.index} {{"]
    for v in range(f.n):
        mark = ' [shape="doublecircle"]' if v in (f.isolated, g.isolated) else ""
        lines.append(f"  {v}{mark};")
    for factor, color in zip((f, g), WITNESS_COLORS):
        for u, v in factor.edges:
            lines.append(f'  {u} -- {v} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _factor_text(factor: Factor) -> str:
    kind = "near-one-factor" if factor.n % 2 else "one-factor"
    label = "" if factor.index is None else f" k={factor.index}"
    iso = "" if factor.isolated is None else f" isolated {factor.isolated};"
    edges = " ".join(f"({u},{v})" for u, v in factor.edges)
    return f"{kind}{label} of K_{factor.n}:{iso} edges {edges}\n"


# ------------------------------------------------------------- subcommands


def cmd_construct(config: RunConfig) -> int:
    n = config.n
    if config.even:
        if config.k is None:
            raise ValueError("--even requires --k (one factor at a time)")
        factor = build_modular_factor_even(n, config.k)
    elif config.k is not None:
        factor = build_modular_factor(n, config.k)
    else:
        factor = None

    if factor is not None:
        if config.fmt == "json":
            _emit(_to_json(factor.to_dict()), config)
        elif config.fmt == "dot":
            _emit(_factor_dot(factor), config)
        else:
            _emit(_factor_text(factor), config)
        return EXIT_OK

    fz = build_modular_factorization(n)
    if config.fmt == "json":
        _emit(_to_json(fz.to_dict()), config)
    elif config.fmt == "dot":
        _emit(_factorization_dot(fz), config)
    else:
        _emit("".join(_factor_text(f) for f in fz.factors), config)
    return EXIT_OK


def cmd_pairs(config: RunConfig) -> int:
    n = config.n
    if config.witness:
        if config.k is None or config.l is None:
            raise ValueError("--witness requires --k and --l")
        f = build_modular_factor(n, config.k)
        g = build_modular_factor(n, config.l)
        outcome = classify_pair(f, g)
        if config.fmt == "dot":
            _emit(_witness_dot(f, g), config)
        elif config.fmt == "json":
            payload = {
                "n": n,
                "k": config.k,
                "l": config.l,
                "perfect": outcome.perfect,
                "walk": union_walk(f, g).to_dict(),
            }
            _emit(_to_json(payload), config)
        else:
            verdict = "perfect" if outcome.perfect else "not perfect"
            _emit(f"pair (k={config.k}, l={config.l}) of K_{n}: {verdict}\n", config)
        return EXIT_OK
    if config.fmt == "dot":
        raise ValueError("dot output for pairs needs --witness with --k and --l")

    fz = build_modular_factorization(n)
    count = 0
    agree = True
    verdicts = [[0] * n for _ in range(n)]
    for f, g in combinations(fz.factors, 2):
        outcome = classify_pair(f, g)
        if outcome.perfect:
            count += 1
            verdicts[f.index][g.index] = verdicts[g.index][f.index] = 1
        if outcome.criterion_agreement is False:
            agree = False
    formula_value = n * totient(n) // 2
    payload = {
        "n": n,
        "perfect_pairs": count,
        "formula": "n*phi(n)/2",
        "formula_value": formula_value,
        "agree": agree and count == formula_value,
    }
    if config.matrix:
        payload["matrix"] = verdicts
    if config.fmt == "json":
        _emit(_to_json(payload), config)
    else:
        _emit(
            f"K_{n}: {count} perfect pairs; formula n*phi(n)/2 = {formula_value}; "
            f"agree: {payload['agree']}\n",
            config,
        )
    return EXIT_OK


def cmd_equiv(config: RunConfig) -> int:
    report = build_equivalence_report(config.s, config.t)
    if config.fmt == "json":
        _emit(_to_json(report.to_dict()), config)
    else:
        _emit(
            f"K_{report.n} as K_{report.s} x K_{report.t}: "
            f"factors equal: {report.all_edge_sets_equal}; "
            f"bounds {report.direct_bound} vs {report.product_bound}: "
            f"equal: {report.bounds_equal}\n",
            config,
        )
    if report.all_edge_sets_equal and report.bounds_equal:
        return EXIT_OK
    return EXIT_VALIDATION


def cmd_oracle(config: RunConfig) -> int:
    summary = oracle_summary(config.n, expensive=config.expensive)
    if config.fmt == "json":
        _emit(_to_json(summary.to_dict()), config)
    else:
        _emit(
            f"K_{summary.n}: exact_c = {summary.exact_c}, "
            f"lower bound n*phi(n)/2 = {summary.lower_bound}, "
            f"factorizations seen = {summary.factorizations_seen}\n",
            config,
        )
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    try:
        with open(config.input_path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read {config.input_path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in {config.input_path}: {exc}") from None
    try:
        fz = Factorization.from_dict(data)
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed factorization object: {exc!r}") from None

    problems = factorization_problems(fz)
    payload = {
        "n": fz.n,
        "factor_count": len(fz.factors),
        "valid": not problems,
        "problems": problems,
        "perfect_pairs": None,
    }
    if not problems:
        payload["perfect_pairs"] = sum(
            1 for f, g in combinations(fz.factors, 2) if classify_pair(f, g).perfect
        )
    if config.fmt == "json":
        _emit(_to_json(payload), config)
    else:
        status = "valid" if payload["valid"] else "INVALID"
        lines = [f"factorization of K_{fz.n}: {status}"]
        lines.extend(f"  problem: {p}" for p in problems)
        if payload["perfect_pairs"] is not None:
            lines.append(f"  perfect pairs: {payload['perfect_pairs']}")
        _emit("\n".join(lines) + "\n", config)
    return EXIT_OK if payload["valid"] else EXIT_VALIDATION


# ------------------------------------------------------------------ driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nearfactor",
        description="Modular (near-)one-factorizations of complete graphs "
        "and their perfect pairs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("construct", help="build a modular factor or factorization")
    p.add_argument("--n", type=int, required=True, help="graph order")
    p.add_argument("--k", type=int, default=None, help="factor index (omit for all)")
    p.add_argument("--even", action="store_true", help="even-order builder")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("pairs", help="count and classify perfect pairs")
    p.add_argument("--n", type=int, required=True, help="odd graph order")
    p.add_argument("--matrix", action="store_true", help="include the verdict matrix")
    p.add_argument("--witness", action="store_true", help="show one pair's witness")
    p.add_argument("--k", type=int, default=None, help="first factor index (witness)")
    p.add_argument("--l", type=int, default=None, help="second factor index (witness)")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("equiv", help="compare direct and product constructions")
    p.add_argument("--s", type=int, required=True, help="first constituent order")
    p.add_argument("--t", type=int, required=True, help="second constituent order")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("oracle", help="exact counts from exhaustive enumeration")
    p.add_argument("--n", type=int, required=True, help="odd order, 3 to 9")
    p.add_argument("--expensive", action="store_true", help="allow the n=9 search")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="validate and classify an external file")
    p.add_argument("--input", required=True, help="factorization JSON file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        subcommand=args.subcommand,
        n=getattr(args, "n", None),
        s=getattr(args, "s", None),
        t=getattr(args, "t", None),
        k=getattr(args, "k", None),
        l=getattr(args, "l", None),
        fmt=getattr(args, "format", "json"),
        even=getattr(args, "even", False),
        witness=getattr(args, "witness", False),
        matrix=getattr(args, "matrix", False),
        expensive=getattr(args, "expensive", False),
        input_path=getattr(args, "input", None),
        output=getattr(args, "output", None),
    )


COMMANDS = {
    "construct": cmd_construct,
    "pairs": cmd_pairs,
    "equiv": cmd_equiv,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)
    try:
        return COMMANDS[config.subcommand](config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CostGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_COST_GUARD


if __name__ == "__main__":
    sys.exit(main())
