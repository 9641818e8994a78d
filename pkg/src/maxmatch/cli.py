"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .counting import DEFAULT_COMPONENT_CAP, count_maximum_matchings
from .gallai_edmonds import decompose
from .graph import (
    DEFAULT_TREE_CAP,
    CapExceededError,
    Graph,
    GraphFormatError,
    enumerate_free_trees,
    parse_graph,
    serialize_graph,
)
from .opt_trees import consistency_report, opt_tree_record
from .oracle import (
    DEFAULT_ORACLE_EDGE_CAP,
    DEFAULT_ORACLE_VERTEX_CAP,
    enumerate_profile,
)
from .generators import random_graphs
from .verify import cross_check

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass(frozen=True)
class RunConfig:
    cap_component: int = DEFAULT_COMPONENT_CAP
    cap_oracle: int = DEFAULT_ORACLE_VERTEX_CAP
    cap_trees: int = DEFAULT_TREE_CAP
    seed: int = 0
    fmt: str = "json"


def _load(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _cmd_count(cfg: RunConfig, args) -> int:
    g = _load(args.file)
    total, breakdown = count_maximum_matchings(g, cfg.cap_component)
    nu = decompose(g).nu
    payload = {
        "n": g.n,
        "m": g.m,
        "nu": nu,
        "m_max": str(total),
        "breakdown": {
            "m_pm_C": str(breakdown.m_pm_c),
            "aux_max": str(breakdown.aux_max),
            "components": [{"size": r.size, "npm": str(r.npm)}
                           for r in breakdown.components],
        },
    }
    _emit(cfg, payload, [f"n={g.n} m={g.m} nu={nu}", f"m_max={total}"])
    return EXIT_OK


def _cmd_decompose(cfg: RunConfig, args) -> int:
    g = _load(args.file)
    dec = decompose(g)
    payload = {
        "D": sorted(dec.d),
        "A": sorted(dec.a),
        "C": sorted(dec.c),
        "components": [list(comp) for comp in dec.d_components],
        "nu": dec.nu,
    }
    _emit(cfg, payload, [f"D={sorted(dec.d)}", f"A={sorted(dec.a)}",
                         f"C={sorted(dec.c)}", f"components={payload['components']}",
                         f"nu={dec.nu}"])
    return EXIT_OK


def _cmd_oracle(cfg: RunConfig, args) -> int:
    g = _load(args.file)
    if args.check:
        mismatches = cross_check(g, cfg.cap_component, cfg.cap_oracle,
                                 DEFAULT_ORACLE_EDGE_CAP)
        for msg in mismatches:
            print(f"MISMATCH {msg}", file=sys.stderr)
        return EXIT_MISMATCH if mismatches else EXIT_OK
    profile = enumerate_profile(g, cfg.cap_oracle, DEFAULT_ORACLE_EDGE_CAP)
    payload = {
        "phi": [str(c) for c in profile.phi],
        "nu": profile.nu,
        "missed_vertices": sorted(profile.missed_vertices),
        "max_edges": [list(e) for e in sorted(profile.max_edges)],
    }
    _emit(cfg, payload, [f"phi={list(profile.phi)}", f"nu={profile.nu}",
                         f"missed={sorted(profile.missed_vertices)}",
                         f"max_edges={sorted(profile.max_edges)}"])
    return EXIT_OK


def _cmd_opt_tree(cfg: RunConfig, args) -> int:
    if args.check is not None:
        for line in consistency_report(args.check, cfg.cap_trees):
            print(line.render())
        return EXIT_OK
    if args.n is None:
        print("opt-tree: provide N or --check N", file=sys.stderr)
        return EXIT_USAGE
    rec = opt_tree_record(args.n)
    payload = {"n": rec.n, "residue": rec.residue, "regime": rec.regime,
               "value": str(rec.value)}
    _emit(cfg, payload, [f"n={rec.n} residue={rec.residue} "
                         f"regime={rec.regime} value={rec.value}"])
    return EXIT_OK


def _cmd_gen_trees(cfg: RunConfig, args) -> int:
    first = True
    for t in enumerate_free_trees(args.n, cfg.cap_trees):
        if not first:
            print()
        print(serialize_graph(t), end="")
        first = False
    return EXIT_OK


def _cmd_check(cfg: RunConfig, args) -> int:
    targets: list[tuple[str, Graph]] = []
    if args.file:
        targets.append((args.file, _load(args.file)))
    if args.trees:
        for n in range(1, args.trees + 1):
            for i, t in enumerate(enumerate_free_trees(n, cfg.cap_trees)):
                targets.append((f"tree n={n} #{i}", t))
    if args.random:
        for i, g in enumerate(random_graphs(cfg.seed, args.random, args.max_n)):
            targets.append((f"random #{i}", g))
    if not targets:
        print("check: provide a FILE, --trees N, or --random K", file=sys.stderr)
        return EXIT_USAGE
    failures = 0
    for name, g in targets:
        for msg in cross_check(g, cfg.cap_component, cfg.cap_oracle,
                               DEFAULT_ORACLE_EDGE_CAP):
            failures += 1
            print(f"MISMATCH [{name}] {msg}", file=sys.stderr)
    print(f"checked {len(targets)} graphs, {failures} mismatches")
    return EXIT_MISMATCH if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxmatch",
                                     description="Exact maximum-matching counting")
    parser.add_argument("--cap-component", type=int, default=DEFAULT_COMPONENT_CAP)
    parser.add_argument("--cap-oracle", type=int, default=DEFAULT_ORACLE_VERTEX_CAP)
    parser.add_argument("--cap-trees", type=int, default=DEFAULT_TREE_CAP)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count maximum matchings of an edge-list file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("decompose", help="emit the D/A/C partition")
    p.add_argument("file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("oracle", help="exhaustive matching profile")
    p.add_argument("file")
    p.add_argument("--check", action="store_true",
                   help="run the cross-module equality suite instead")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("opt-tree", help="extremal-tree count for order n")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--check", type=int, metavar="N",
                   help="consistency report for 4..N")
    p.set_defaults(func=_cmd_opt_tree)

    p = sub.add_parser("gen-trees", help="emit all free trees of order n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_gen_trees)

    p = sub.add_parser("check", help="cross-module equality suite")
    p.add_argument("file", nargs="?")
    p.add_argument("--trees", type=int, metavar="N",
                   help="check all free trees of order <= N")
    p.add_argument("--random", type=int, metavar="K",
                   help="check K seeded random graphs")
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=_cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.cap_component, args.cap_oracle, args.cap_trees,
                    args.seed, args.format)
    try:
        return args.func(cfg, args)
    except GraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
