"""Command-line entry point: ``check``, ``family``, ``search`` and ``merge``.

Exit codes: 0 clean, 1 a verifier reported a violation, 2 usage or parse errors.
The worker count for ``check`` and ``search`` comes from ``--threads`` or the
``D2C_THREADS`` environment variable (default 1).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path

from .analysis import InconsistencyError, dominating_edges, is_d2c
from .census import WITNESS_KEYS, CensusOptions, MODES, SearchReport, census_shard, merge, shard
from .certificate import bound_verdicts, certify
from .families import (FAMILY_NAMES, c5_expansion, c5plus_members, complete_bipartite,
                       conclusion_construction, h5, is_balanced_complete_bipartite, is_h5,
                       is_in_c5plus, is_in_tprime, t_family, tprime_members)
from .graph import Graph, Graph6Error, is_bipartite, parse_graph6, to_graph6

MAX_SEARCH_ORDER = 11


class UsageError(Exception):
    pass


def _workers(arg: int | None) -> int:
    if arg is not None:
        return max(1, arg)
    raw = os.environ.get("D2C_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"D2C_THREADS must be an integer, got {raw!r}")


# ------------------------------------------------------------------ check

def analyse(g: Graph) -> dict:
    """The analysis record of one graph, with fields in a fixed order."""
    d2c = is_d2c(g)
    rec: dict = {
        "n": g.n,
        "m": g.m,
        "d2c": d2c,
        "bipartite": is_bipartite(g),
        "dominating_edge": False,
        "edge": None,
        "partition": None,
        "free": None,
        "implied_bound": None,
        "verdicts": None,
        "families": {
            "balanced_complete_bipartite": is_balanced_complete_bipartite(g),
            "c5plus": is_in_c5plus(g),
            "tprime": is_in_tprime(g),
            "h5": is_h5(g),
        },
        "violations": [],
    }
    if not d2c:
        return rec
    v = bound_verdicts(g)
    rec["verdicts"] = {
        "murty_simon_ok": v.murty_simon_ok,
        "murty_simon_equality": v.murty_simon_equality,
        "equality_case_ok": v.equality_case_ok,
        "strengthened_attained": v.strengthened_attained,
        "strengthened_exceeded": v.strengthened_exceeded,
        "theorem4_applies": v.theorem4_applies,
        "theorem4_ok": v.theorem4_ok,
    }
    if not v.ok:
        rec["violations"].append("edge bound")
    edges = dominating_edges(g)
    rec["dominating_edge"] = bool(edges)
    for i, (a, b) in enumerate(edges):
        try:
            cert = certify(g, a, b)
        except InconsistencyError as exc:
            rec["violations"].append(f"edge {a}-{b}: {exc}")
            continue
        if not cert.ok:
            rec["violations"].append(f"edge {a}-{b}: certificate check failed")
        if i == 0:
            rec["edge"] = [cert.part.u, cert.part.v]
            rec["partition"] = cert.part.sizes()
            rec["free"] = len(cert.assignment.free)
            rec["implied_bound"] = None if cert.bound is None else cert.bound.implied_bound
    return rec


def _check_line(item: tuple[int, str]) -> dict:
    lineno, text = item
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return {"line": lineno, "graph6": text, "error": str(exc), "position": exc.position}
    return {"line": lineno, "graph6": text, **analyse(g)}


def cmd_check(args, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    items = []
    for lineno, raw in enumerate(stdin, 1):
        text = raw.strip()
        if text and text != ">>graph6<<":
            items.append((lineno, text))
    workers = _workers(args.threads)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = pool.map(_check_line, items, chunksize=32)
            code = _emit(records, stdout)
    else:
        code = _emit(map(_check_line, items), stdout)
    return code


def _emit(records, stdout) -> int:
    parse_errors = violations = False
    for rec in records:
        stdout.write(json.dumps(rec) + "\n")
        if "error" in rec:
            parse_errors = True
        elif rec["violations"]:
            violations = True
    if parse_errors:
        return 2
    return 1 if violations else 0


# ----------------------------------------------------------------- family

_ARITY = {"kab": (2,), "c5plus": (1, 3), "t": (1,), "tprime": (1,), "conclusion": (1,), "h5": (0,)}


def build_family(name: str, params: list[int], relaxed: bool = False) -> list[Graph]:
    if name not in FAMILY_NAMES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")
    if len(params) not in _ARITY[name]:
        want = " or ".join(str(k) for k in _ARITY[name])
        raise UsageError(f"family {name} takes {want} integer parameter(s)")
    try:
        if name == "kab":
            return [complete_bipartite(*params)]
        if name == "c5plus":
            if len(params) == 3:
                return [c5_expansion(*params, relaxed=relaxed)]
            return [c5_expansion(spec) for spec in c5plus_members(params[0])]
        if name == "t":
            return [t_family(params[0])]
        if name == "tprime":
            return tprime_members(params[0])
        if name == "conclusion":
            return [conclusion_construction(params[0])]
        return [h5()]
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_family(args, stdout=None) -> int:
    stdout = stdout or sys.stdout
    for g in build_family(args.name, args.params, args.relaxed):
        stdout.write(to_graph6(g) + "\n")
    return 0


# ----------------------------------------------------------------- search

def _shard_path(directory: Path, index: int, count: int) -> Path:
    return directory / f"shard-{index:04d}-of-{count:04d}.json"


def run_search(n: int, mode: str, *, shards: int | None = None, only: int | None = None,
               depth: int | None = None, checkpoint: Path | None = None, resume: bool = False,
               workers: int = 1, log=None) -> SearchReport:
    if not 1 <= n <= MAX_SEARCH_ORDER:
        raise UsageError(f"search order must be in 1..{MAX_SEARCH_ORDER}")
    if only is not None and shards is None:
        raise UsageError("--shard needs --shards")
    if shards is not None and shards < 1:
        raise UsageError("--shards must be positive")
    if only is not None and not 0 <= only < shards:
        raise UsageError(f"--shard {only} outside 0..{shards - 1}")
    if resume and checkpoint is None:
        raise UsageError("--resume needs --checkpoint")
    options = CensusOptions(mode)
    if depth is None:
        depth = 0 if shards is None else 3
    specs = shard(n, depth, options, count=shards)
    if only is not None:
        specs = [specs[only]]
    done: dict[int, SearchReport] = {}
    if checkpoint is not None:
        checkpoint.mkdir(parents=True, exist_ok=True)
        if resume:
            for spec in specs:
                path = _shard_path(checkpoint, spec.index, spec.count)
                if path.exists():
                    rep = SearchReport.from_json(path.read_text())
                    cov = rep.coverage
                    if (rep.n, rep.mode, cov.depth, cov.count) != (n, mode, spec.depth, spec.count):
                        raise UsageError(f"checkpoint {path} belongs to a different search")
                    done[spec.index] = rep
    todo = [s for s in specs if s.index not in done]

    def finish(rep: SearchReport) -> None:
        index = rep.coverage.indices[0]
        done[index] = rep
        if checkpoint is not None:
            _shard_path(checkpoint, index, rep.coverage.count).write_text(rep.to_json())
        if log is not None:
            log.write(f"shard {index + 1}/{rep.coverage.count}: {rep.counts['total_graphs']} graphs\n")

    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(workers) as pool:
            for fut in as_completed([pool.submit(census_shard, s) for s in todo]):
                finish(fut.result())
    else:
        for s in todo:
            finish(census_shard(s))
    return merge([done[s.index] for s in specs], complete=only is None)


def cmd_search(args, stdout=None) -> int:
    stdout = stdout or sys.stdout
    report = run_search(
        args.n, args.mode, shards=args.shards, only=args.shard, depth=args.depth,
        checkpoint=Path(args.checkpoint) if args.checkpoint else None,
        resume=args.resume, workers=_workers(args.threads),
        log=sys.stderr if args.verbose else None,
    )
    _write_report(report, args, stdout)
    return 1 if report.violations else 0


def _write_report(report: SearchReport, args, stdout) -> None:
    if args.out:
        Path(args.out).write_text(report.to_json())
    else:
        stdout.write(report.to_json())
    if args.witnesses:
        lines = report.witnesses[args.witness_class]
        Path(args.witnesses).write_text("".join(x + "\n" for x in lines))


def cmd_merge(args, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        reports = [SearchReport.from_json(Path(p).read_text()) for p in args.reports]
        report = merge(reports)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(str(exc))
    _write_report(report, args, stdout)
    return 1 if report.violations else 0


# ------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="d2c", description="Diameter-2-critical graph analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="analyse graph6 lines from stdin, one JSON record per line")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", help="print members of a named family as graph6")
    p.add_argument("name", choices=FAMILY_NAMES)
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--relaxed", action="store_true", help="c5plus: skip the middle-class size condition")
    p.set_defaults(func=cmd_family)

    def outputs(p):
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--witnesses", help="write witness graph6 lines here")
        p.add_argument("--witness-class", default="exceptions_not_in_c5plus", choices=WITNESS_KEYS)

    p = sub.add_parser("search", help="exhaustive census of one order")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=MODES, default="d2c")
    p.add_argument("--shards", type=int, default=None)
    p.add_argument("--shard", type=int, default=None, help="run only this shard index")
    p.add_argument("--depth", type=int, default=None, help="prefix depth used for sharding")
    p.add_argument("--checkpoint", help="directory for per-shard reports")
    p.add_argument("--resume", action="store_true", help="reuse finished shards from --checkpoint")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("-v", "--verbose", action="store_true")
    outputs(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("merge", help="combine shard reports into one")
    p.add_argument("reports", nargs="+")
    outputs(p)
    p.set_defaults(func=cmd_merge)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"d2c: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
