"""Command-line surface.

Subcommands
    path           construct (or decide) a walk between two colourings
    validate       replay a recolouring sequence against a start colouring
    explore        enumerate a reconfiguration graph and emit its summary
    verify-corpus  machine-check the structural statements over the corpus

Exit codes are a stable contract: 0 success, 1 input error, 2 provable
negative, 3 inconclusive or state-space limit exceeded.  The default
state-space limit is 2e6 raw states and can be overridden per call with
--limit or globally with the RECOLOR_LIMIT environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .classifier import decide_k_colour_path, frozen_census
from .colouring import (
    Colouring,
    apply_sequence,
    colouring_from_text,
    sequence_from_text,
    sequence_to_text,
)
from .corpus import corpus, random_proper_colouring
from .engine import find_path_non_regular
from .errors import (
    ImproperIntermediateError,
    NoOpStepError,
    RecolourError,
    StateSpaceLimitError,
)
from .explorer import (
    DEFAULT_STATE_LIMIT,
    ReconfigSpace,
    build_reconfig_graph,
    oracle_path,
    verify_lemma_cubic2,
    verify_lemma_first,
    verify_theorem_delta_plus_one,
    verify_theorem_main,
)
from .graph import Graph, format_graph, parse_graph

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NEGATIVE = 2
EXIT_INCONCLUSIVE = 3

EXHAUSTIVE_WARN_N = 10


@dataclass
class RunConfig:
    command: str
    graph: Path | None = None
    colouring_a: Path | None = None
    colouring_b: Path | None = None
    sequence: Path | None = None
    k: int | None = None
    limit: int = DEFAULT_STATE_LIMIT
    fmt: str = "text"
    seed: int = 0
    out: Path | None = None
    max_n: int = 6
    k_min: int = 3
    k_max: int = 5
    cache_dir: Path | None = None
    pairs: int = 10


def _default_limit() -> int:
    env = os.environ.get("RECOLOR_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            print(f"ignoring bad RECOLOR_LIMIT={env!r}", file=sys.stderr)
    return DEFAULT_STATE_LIMIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recolour",
        description="Walks between graph colourings by single-vertex recolouring steps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graph: bool = True):
        if graph:
            p.add_argument("--graph", type=Path, required=True, help="edge-list file")
        p.add_argument("--limit", type=int, default=_default_limit(),
                       help="raw state-space cap for exhaustive operations")
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
        p.add_argument("--out", type=Path, default=None, help="output file")

    p_path = sub.add_parser("path", help="construct a recolouring walk between two colourings")
    common(p_path)
    p_path.add_argument("--colouring-a", type=Path, required=True)
    p_path.add_argument("--colouring-b", type=Path, required=True)
    p_path.add_argument("--k", type=int, default=None,
                        help="palette size; defaults to the colouring files' palette")

    p_val = sub.add_parser("validate", help="replay a sequence from a start colouring")
    common(p_val)
    p_val.add_argument("--colouring-a", type=Path, required=True, help="start colouring")
    p_val.add_argument("--sequence", type=Path, required=True)

    p_exp = sub.add_parser("explore", help="summarise the reconfiguration graph")
    common(p_exp)
    p_exp.add_argument("--k", type=int, required=True)

    p_ver = sub.add_parser("verify-corpus", help="machine-check the structure theorems")
    common(p_ver, graph=False)
    p_ver.add_argument("--max-n", type=int, default=6, help="largest corpus size (4..8)")
    p_ver.add_argument("--k-min", type=int, default=3)
    p_ver.add_argument("--k-max", type=int, default=5)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--pairs", type=int, default=10,
                       help="sampled colouring pairs per graph and palette")
    p_ver.add_argument("--cache-dir", type=Path, default=None,
                       help="corpus cache directory (edge-list files)")
    return parser


def _read_graph(path: Path) -> Graph:
    return parse_graph(path.read_text())


def _read_colouring(path: Path, g: Graph) -> Colouring:
    c = colouring_from_text(path.read_text())
    if c.n != g.n:
        raise RecolourError(
            f"{path}: colouring covers {c.n} vertices, graph has {g.n}"
        )
    return c


def _emit_sequence(cfg: RunConfig, seq) -> None:
    text = sequence_to_text(seq)
    if cfg.out:
        cfg.out.write_text(text)
    if cfg.fmt == "json":
        print(json.dumps({"steps": len(seq), "sequence": [list(s) for s in seq],
                          "valid": True}))
    else:
        print(f"steps: {len(seq)}")
        print("valid: true")
        if not cfg.out:
            sys.stdout.write(text)


def cmd_path(cfg: RunConfig) -> int:
    g = _read_graph(cfg.graph)
    a = _read_colouring(cfg.colouring_a, g)
    b = _read_colouring(cfg.colouring_b, g)
    if a.k != b.k:
        print(f"palette mismatch: {a.k} vs {b.k}", file=sys.stderr)
        return EXIT_INPUT
    k = cfg.k if cfg.k is not None else a.k
    if k != a.k:
        print(f"--k {k} disagrees with colouring palette {a.k}", file=sys.stderr)
        return EXIT_INPUT

    delta = g.max_degree
    constructive = (
        g.n > 0
        and k == delta + 1
        and delta >= 3
        and g.is_connected()
        and not g.is_regular()
    )
    if constructive:
        seq = find_path_non_regular(g, a, b)
        apply_sequence(g, a, seq)
        _emit_sequence(cfg, seq)
        return EXIT_OK

    decision = decide_k_colour_path(g, k, a, b, cfg.limit)
    if decision.answer is False:
        print(f"no path: {decision.reason}")
        return EXIT_NEGATIVE
    if decision.answer is None:
        print(f"inconclusive: {decision.reason}")
        return EXIT_INCONCLUSIVE
    try:
        seq = oracle_path(g, k, a, b, cfg.limit)
    except StateSpaceLimitError as exc:
        print(f"path exists ({decision.reason}) but extraction exceeds the limit: {exc}")
        return EXIT_INCONCLUSIVE
    if seq is None:  # decision said yes; exhaustive search must agree
        print("internal disagreement between decision and oracle", file=sys.stderr)
        return EXIT_INPUT
    _emit_sequence(cfg, seq)
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    g = _read_graph(cfg.graph)
    start = _read_colouring(cfg.colouring_a, g)
    seq = sequence_from_text(cfg.sequence.read_text())
    try:
        final = apply_sequence(g, start, seq)
    except (ImproperIntermediateError, NoOpStepError) as exc:
        print(f"invalid at step {exc.step}: {exc}")
        return EXIT_NEGATIVE
    except ValueError as exc:
        print(f"invalid: {exc}")
        return EXIT_NEGATIVE
    if cfg.fmt == "json":
        print(json.dumps({"steps": len(seq), "valid": True,
                          "final": list(final.colours)}))
    else:
        print(f"steps: {len(seq)}")
        print("valid: true")
        print("final: " + " ".join(str(c) for c in final.colours))
    return EXIT_OK


def cmd_explore(cfg: RunConfig) -> int:
    g = _read_graph(cfg.graph)
    if g.n > EXHAUSTIVE_WARN_N:
        print(f"warning: exhaustive enumeration on n={g.n} > {EXHAUSTIVE_WARN_N}",
              file=sys.stderr)
    try:
        summary = build_reconfig_graph(g, cfg.k, cfg.limit)
    except StateSpaceLimitError as exc:
        print(f"state space too large: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    payload = summary.to_json_dict()
    if cfg.fmt == "json":
        text = json.dumps(payload, indent=2)
    else:
        lines = [
            f"colourings: {payload['totalColourings']}",
            f"frozen: {payload['frozenCount']}",
            f"isolated non-frozen: {payload['isolatedNonFrozen']}",
            "components (size, diameter): "
            + ", ".join(f"({s}, {d})" for s, d in summary.components),
        ]
        text = "\n".join(lines)
    print(text)
    if cfg.out:
        cfg.out.write_text(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _write_reproducer(cfg: RunConfig, g: Graph, details: dict, tag: str) -> Path:
    target = cfg.out if cfg.out else Path.cwd() / f"reproducer-{tag}.txt"
    body = format_graph(g) + json.dumps(details, indent=2) + "\n"
    target.write_text(body)
    return target


def cmd_verify_corpus(cfg: RunConfig) -> int:
    if not 4 <= cfg.max_n <= 8:
        print("--max-n must be between 4 and 8", file=sys.stderr)
        return EXIT_INPUT
    graphs = corpus(4, cfg.max_n, cfg.cache_dir)
    rng = random.Random(cfg.seed)
    failures: list[tuple[str, Graph, dict]] = []
    counts = {"pass": 0, "fail": 0, "skip": 0}
    rows = []
    for idx, g in enumerate(graphs):
        name = f"g{idx:04d}-n{g.n}-m{g.m}"
        reports = [
            verify_theorem_delta_plus_one(g, cfg.limit),
            verify_theorem_main(g, cfg.limit),
            verify_lemma_cubic2(g, cfg.limit),
            verify_lemma_first(g, cfg.limit),
        ]
        for report in reports:
            counts[report.status] += 1
            if report.status == "fail":
                failures.append((name, g, report.to_json_dict()))
            rows.append((name, report))
        for k in range(cfg.k_min, cfg.k_max + 1):
            ok, detail = _decision_cross_check(g, k, cfg, rng)
            if ok is None:
                counts["skip"] += 1
            elif ok:
                counts["pass"] += 1
            else:
                counts["fail"] += 1
                failures.append((name, g, detail))
    for name, g, detail in failures:
        path = _write_reproducer(cfg, g, detail, name)
        print(f"FAIL {name}: reproducer written to {path}")
    if cfg.fmt == "json":
        print(json.dumps({"graphs": len(graphs), **counts}))
    else:
        print(
            f"graphs: {len(graphs)}  checks passed: {counts['pass']}  "
            f"failed: {counts['fail']}  skipped: {counts['skip']}"
        )
    return EXIT_INPUT if failures else EXIT_OK


def _decision_cross_check(g: Graph, k: int, cfg: RunConfig, rng: random.Random):
    """Sampled agreement between the analytic decision and the oracle."""
    try:
        space = ReconfigSpace(g, k, cfg.limit)
    except StateSpaceLimitError:
        return None, {}
    if space.size == 0:
        return True, {}
    _, labels = space.component_labels
    for _ in range(cfg.pairs):
        ia = rng.randrange(space.size)
        ib = rng.randrange(space.size)
        a = space.colouring_at(ia)
        b = space.colouring_at(ib)
        decision = decide_k_colour_path(g, k, a, b, cfg.limit)
        truth = bool(labels[ia] == labels[ib])
        if decision.answer is None or decision.answer != truth:
            return False, {
                "check": "decision-vs-oracle",
                "k": k,
                "colouring_a": list(a.colours),
                "colouring_b": list(b.colours),
                "decision": decision.to_json_dict(),
                "oracle": truth,
            }
    census = frozen_census(g, k, cfg.limit)
    truth_count = int(space.frozen_mask.sum())
    if census.count != truth_count:
        return False, {
            "check": "frozen-census-vs-enumeration",
            "k": k,
            "census": census.count,
            "enumeration": truth_count,
        }
    return True, {}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        graph=getattr(args, "graph", None),
        colouring_a=getattr(args, "colouring_a", None),
        colouring_b=getattr(args, "colouring_b", None),
        sequence=getattr(args, "sequence", None),
        k=getattr(args, "k", None),
        limit=args.limit,
        fmt=args.fmt,
        seed=getattr(args, "seed", 0),
        out=args.out,
        max_n=getattr(args, "max_n", 6),
        k_min=getattr(args, "k_min", 3),
        k_max=getattr(args, "k_max", 5),
        cache_dir=getattr(args, "cache_dir", None),
        pairs=getattr(args, "pairs", 10),
    )
    handlers = {
        "path": cmd_path,
        "validate": cmd_validate,
        "explore": cmd_explore,
        "verify-corpus": cmd_verify_corpus,
    }
    try:
        return handlers[cfg.command](cfg)
    except (RecolourError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
