"""Command-line front end.

Exit codes: 0 success, 1 violation (or a rainbow packing where absence was
being checked), 2 usage error, 3 construction self-check failure,
4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import graph6
from .census import lemma_pairs_extract, verify_gamma, verify_moon, verify_pairs, verify_perturbation
from .coloring import build_lower_bound_coloring, has_rainbow_packing, read_coloring, write_coloring
from .errors import ResourceExhausted
from .graph import Graph, ar_formula, moon_ex, turan_edges
from .packing import max_independent_triangles, max_matching
from .search import DEFAULT_BUDGET, ar_exact

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_SELF_CHECK = 3
EXIT_EXHAUSTED = 4


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    t: int | None = None
    k: int | None = None
    r: int | None = None
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    checkpoint: str | None = None
    seed: int = 0
    output_format: str = "json"
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        for name in ("n", "t", "k", "r"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.n is not None and self.t is not None and self.t > self.n:
            raise ValueError(f"t={self.t} exceeds n={self.n}")


def _emit(config: RunConfig, result: dict, out=None) -> None:
    out = out or sys.stdout
    if config.output_format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "config": asdict(config), "result": result}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return
    for key, value in _flatten(result):
        out.write(f"{key}: {value}\n")


def _flatten(result: dict, prefix: str = ""):
    for key, value in result.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, name + ".")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                yield from _flatten(item, f"{name}[{i}].")
        else:
            yield name, json.dumps(value) if isinstance(value, (list, bool)) or value is None else value


# --- subcommands -----------------------------------------------------------


def cmd_formulas(config: RunConfig) -> tuple[dict, int]:
    n, t = config.n, config.t
    f = ar_formula(n, t)
    return {
        "t2_n_minus_t": turan_edges(n - t, 2),
        "moon_ex": moon_ex(n, t),
        "ar_formula": f.value,
        "in_proven_range": f.in_proven_range,
    }, EXIT_OK


def cmd_construct(config: RunConfig) -> tuple[dict, int]:
    n, t = config.n, config.t
    if n <= 3 * t + 6:
        raise ValueError(f"construction needs n > 3t + 6 (n={n}, t={t})")
    coloring = build_lower_bound_coloring(n, t)
    out = config.extra.get("out")
    if out:
        write_coloring(coloring, out)
    witness = has_rainbow_packing(coloring, t + 2, node_budget=config.budget)
    result = {
        "colors": coloring.r,
        "expected_colors": moon_ex(n, t) + 1,
        "k": t + 2,
        "rainbow_packing": "absent" if witness is None else "present",
        "out": out,
    }
    ok = witness is None and coloring.r == moon_ex(n, t) + 1
    return result, EXIT_OK if ok else EXIT_SELF_CHECK


def cmd_check_rainbow(config: RunConfig) -> tuple[dict, int]:
    coloring = read_coloring(config.extra["coloring"])
    witness = has_rainbow_packing(coloring, config.k, node_budget=config.budget)
    result = {
        "n": coloring.n,
        "r": coloring.r,
        "k": config.k,
        "rainbow_packing": "absent" if witness is None else "present",
        "witness": None if witness is None else [list(tri) for tri in witness.packing],
    }
    return result, EXIT_OK if witness is None else EXIT_VIOLATION


def cmd_ar_search(config: RunConfig) -> tuple[dict, int]:
    if config.n < 3 * config.k or config.k < 1:
        raise ValueError("ar-search needs k >= 1 and n >= 3k")
    report = ar_exact(
        config.n, config.k, budget=config.budget, workers=config.workers, checkpoint=config.checkpoint
    )
    return report.to_dict(), EXIT_OK if report.exact else EXIT_EXHAUSTED


def cmd_verify(config: RunConfig) -> tuple[dict, int]:
    which = config.subcommand
    if which == "verify-moon":
        res = verify_moon(config.n, seed=config.seed, workers=config.workers)
    elif which == "verify-gamma":
        res = verify_gamma(config.n, seed=config.seed)
    elif which == "verify-pairs":
        res = verify_pairs(count=config.extra.get("count", 1000), n=config.n, t=config.t or 0, seed=config.seed)
    else:
        res = verify_perturbation(config.n, config.t)
    return res.to_dict(), EXIT_OK if res.passed else EXIT_VIOLATION


def cmd_i3(config: RunConfig) -> tuple[dict, int]:
    g = graph6.decode(config.extra["graph6"])
    packing = max_independent_triangles(g, node_budget=config.budget)
    return {"n": g.n, "i3": len(packing), "packing": [list(t) for t in packing]}, EXIT_OK


def cmd_matching(config: RunConfig) -> tuple[dict, int]:
    g = graph6.decode(config.extra["graph6"])
    m = sorted(max_matching(g))
    return {"n": g.n, "nu": len(m), "matching": [list(e) for e in m]}, EXIT_OK


def cmd_pairs(config: RunConfig) -> tuple[dict, int]:
    g = graph6.decode(config.extra["graph6"])
    ext = lemma_pairs_extract(g, config.t or 0)
    return asdict(ext), EXIT_OK if ext.ok else EXIT_VIOLATION


def cmd_encode(config: RunConfig) -> tuple[dict, int]:
    edges = []
    for token in config.extra["edges"]:
        u, _, v = token.partition("-")
        edges.append((int(u), int(v)))
    g = Graph.from_edges(config.n, edges)
    return {"graph6": graph6.encode(g).decode("ascii")}, EXIT_OK


def cmd_decode(config: RunConfig) -> tuple[dict, int]:
    g = graph6.decode(config.extra["graph6"])
    return {"n": g.n, "edges": [f"{u}-{v}" for u, v in g.edges()]}, EXIT_OK


COMMANDS = {
    "formulas": cmd_formulas,
    "construct": cmd_construct,
    "check-rainbow": cmd_check_rainbow,
    "ar-search": cmd_ar_search,
    "verify-moon": cmd_verify,
    "verify-gamma": cmd_verify,
    "verify-pairs": cmd_verify,
    "verify-perturbation": cmd_verify,
    "pairs": cmd_pairs,
    "i3": cmd_i3,
    "matching": cmd_matching,
    "encode": cmd_encode,
    "decode": cmd_decode,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "text"), default="json")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $RAINBOWLAB_WORKERS or 1)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="rainbowlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("formulas", parents=[common], help="closed-form values for (n, t)")
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)

    p = sub.add_parser("construct", parents=[common], help="build the avoiding colouring")
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)
    p.add_argument("-o", "--out", help="write the colouring file here")

    p = sub.add_parser("check-rainbow", parents=[common], help="look for a rainbow kK3")
    p.add_argument("coloring")
    p.add_argument("k", type=int)

    p = sub.add_parser("ar-search", parents=[common], help="exact ar(n, kK3) by search")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--checkpoint", help="resumable state file")

    for name in ("verify-moon", "verify-gamma"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("n", type=int, metavar="n_max")
    p = sub.add_parser("verify-pairs", parents=[common])
    p.add_argument("--n", type=int, default=60)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p = sub.add_parser("verify-perturbation", parents=[common])
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--t", type=int, default=1)

    p = sub.add_parser("pairs", parents=[common], help="pairs extraction on one graph")
    p.add_argument("graph6")
    p.add_argument("--t", type=int, default=0)
    for name in ("i3", "matching", "decode"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("graph6")
    p = sub.add_parser("encode", parents=[common], help="graph6 from an edge list like 0-1 1-2")
    p.add_argument("n", type=int)
    p.add_argument("edges", nargs="*")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    workers = args.workers
    if workers is None:
        env = os.environ.get("RAINBOWLAB_WORKERS")
        workers = int(env) if env else 1
    extra = {
        key: getattr(args, key)
        for key in ("out", "coloring", "graph6", "edges", "count")
        if getattr(args, key, None) is not None
    }
    return RunConfig(
        subcommand=args.subcommand,
        n=getattr(args, "n", None),
        t=getattr(args, "t", None),
        k=getattr(args, "k", None),
        budget=args.budget,
        workers=workers,
        checkpoint=getattr(args, "checkpoint", None),
        seed=args.seed,
        output_format=args.output_format,
        extra=extra,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        config = _config_from_args(args)
        config.validate()
        result, code = COMMANDS[config.subcommand](config)
    except ResourceExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(config, result)
    return code


if __name__ == "__main__":
    sys.exit(main())
