"""Command line driver.

    curvelab census --surface 1,3 --bound 12
    curvelab verify --suite squares --surface 0,5 --bound 12
    curvelab verify --suite linear-or-cyclic --n-range 4..7
    curvelab pants --surface 1,5
    curvelab export --surface 1,5

Exit status: 0 when every conclusive check passed, 1 when some check found a
counterexample, 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import suites
from .census import Census
from .curves import census_json
from .pants import adjacency_graph, classify_shape, decomposition_to_abstract, enumerate_abstract, maximal_disjoint_sets
from .surface import SurfaceKind, standard_triangulation

log = logging.getLogger("curvelab")

DEFAULT_OUT = "curvelab_out"


@dataclass
class RunConfig:
    surface: SurfaceKind | None = None
    bound: int = 12
    step: int = 4
    limit: int = 2
    suites: tuple[str, ...] = ()
    n_range: range = field(default_factory=lambda: range(4, 8))
    out: Path = Path(DEFAULT_OUT)
    threads: int = 1

    def problems(self) -> list[str]:
        out = []
        if self.bound < 0:
            out.append("bound must be >= 0")
        if self.step < 1:
            out.append("escalation step must be >= 1")
        if not 0 <= self.limit <= 2:
            out.append("escalation limit must be between 0 and 2")
        unknown = [s for s in self.suites if s not in suites.SUITES]
        if unknown:
            out.append(f"unknown suite {unknown[0]!r}; choose from {', '.join(suites.SUITES)}")
        if self.threads < 1:
            out.append("threads must be >= 1")
        return out


def _surface(text: str) -> SurfaceKind:
    try:
        kind = SurfaceKind.parse(text)
        kind.check()
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return kind


def _n_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def write_report(path: Path, body: dict) -> None:
    """Report with the timestamp kept in a header so the body is reproducible."""
    header = {"tool": "curvelab", "generated": datetime.now(timezone.utc).isoformat(timespec="seconds")}
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"header": header, "body": body}, indent=1, sort_keys=True) + "\n")


def _tag(kind: SurfaceKind) -> str:
    return f"S{kind.genus}_{kind.punctures}"


# -- census ------------------------------------------------------------------------

def cmd_census(cfg: RunConfig) -> int:
    kind = cfg.surface or SurfaceKind(1, 3)
    census = Census(standard_triangulation(kind), cfg.bound)
    hist = Counter(census.type(k).label for k in range(len(census)))
    stem = f"{_tag(kind)}_W{cfg.bound}"
    cfg.out.mkdir(parents=True, exist_ok=True)
    (cfg.out / f"census_{stem}.json").write_text(census_json(census.curves, cfg.bound))
    write_report(cfg.out / f"intersections_{stem}.json",
                 {"surface": str(kind), "bound": cfg.bound, "curves": [list(c.weights) for c in census],
                  "intersections": census.matrix()})
    write_report(cfg.out / f"types_{stem}.json",
                 {"surface": str(kind), "bound": cfg.bound, "histogram": dict(sorted(hist.items())),
                  "types": [census.type(k).to_json() for k in range(len(census))]})
    print(f"{kind} bound {cfg.bound}: {len(census)} curves")
    for label, count in sorted(hist.items()):
        print(f"  {label:<16} {count}")
    print(f"wrote census_{stem}.json, intersections_{stem}.json, types_{stem}.json to {cfg.out}")
    return 0


# -- verify ------------------------------------------------------------------------

def _jobs(cfg: RunConfig) -> list[tuple]:
    jobs = []
    for name in cfg.suites:
        if name == "squares":
            kinds = [cfg.surface] if cfg.surface else list(suites.SQUARE_FREE)
            jobs.extend((suites.squares, (k, cfg.bound)) for k in kinds)
        elif name == "adjacency":
            jobs.append((suites.adjacency, (cfg.surface or suites.S13, cfg.bound, cfg.step, cfg.limit)))
        elif name == "linear-or-cyclic":
            jobs.append((suites.linear_or_cyclic, (cfg.n_range,)))
        elif name == "duality":
            jobs.append((suites.duality, (cfg.surface or suites.S13, cfg.bound, cfg.step, cfg.limit)))
        elif name == "n3-separation":
            jobs.append((suites.n3_separation, (cfg.bound, cfg.step, cfg.limit)))
        elif name == "cover":
            jobs.append((suites.cover, (cfg.bound,)))
    return jobs


def _check_surfaces(cfg: RunConfig) -> str | None:
    k = cfg.surface
    if k is None:
        return None
    if "n3-separation" in cfg.suites and k != suites.S13:
        return "the n3-separation suite runs on S_1,3 only"
    if "cover" in cfg.suites and k != SurfaceKind(0, 5):
        return "the cover suite runs on S_0,5 only"
    if "duality" in cfg.suites and (k.genus != 1 or k.punctures < 3):
        return "the duality suite needs S_1,n with n >= 3"
    if "adjacency" in cfg.suites and k.complexity < 2:
        return "the adjacency suite needs at least two curves per decomposition"
    return None


def _run(job):
    fn, args = job
    return fn(*args)


def cmd_verify(cfg: RunConfig) -> int:
    jobs = _jobs(cfg)
    if cfg.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(_run, jobs))
    else:
        results = [_run(j) for j in jobs]
    failed = False
    for r in results:
        s = r.summary
        if r.name.startswith("squares"):
            detail = f"{s['squares']} squares"
        elif r.name.startswith("adjacency"):
            detail = f"{s['decompositions']} decompositions, {s['agree']} agree, {s['inconclusive']} inconclusive, {s['disagree']} disagree"
        elif r.name == "linear-or-cyclic":
            detail = "; ".join(f"{k}: {v['classes']} classes, shapes {v['shapes']}" for k, v in s.items())
        elif r.name.startswith("duality"):
            detail = (f"non-dual pairs with witness {s['nondual_with_witness']}, dual pairs with witness "
                      f"{s['dual_with_witness']}, dual pairs inconclusive {s['dual_without_witness']}")
        elif r.name == "n3-separation":
            detail = f"min over nonseparating {s['min_nonseparating']}, max over 2-curves {s['max_two_curve']}"
        else:
            detail = f"{len(s['covers'])} covers checked"
        status = "ok" if r.ok else f"FAIL ({len(r.hard_failures)} counterexamples)"
        print(f"{r.name}: {status}; {detail}")
        if r.inconclusive:
            print(f"  {len(r.inconclusive)} inconclusive searches (bound-limited)")
        if not r.ok:
            failed = True
            print("  first counterexample: " + json.dumps(r.hard_failures[0], sort_keys=True))
    write_report(cfg.out / "verify.json", {"suites": [r.to_json() for r in results]})
    return 1 if failed else 0


# -- pants and export --------------------------------------------------------------------

def cmd_pants(cfg: RunConfig) -> int:
    kind = cfg.surface or SurfaceKind(1, 3)
    classes = enumerate_abstract(kind)
    body = {"surface": str(kind), "classes": [a.to_json() for a in classes]}
    print(f"{kind}: {len(classes)} topological types of pants decompositions")
    for a in classes:
        j = a.to_json()
        print(f"  shape {j['shape'] or '-'}: {', '.join(j['pants_types'])}")
    if cfg.bound > 0:
        census = Census(standard_triangulation(kind), cfg.bound)
        found = maximal_disjoint_sets(census)
        body["census"] = {"bound": cfg.bound, "decompositions": [
            {"curves": [list(c.weights) for c in p.curves], "census_complete": p.census_complete,
             "adjacency": sorted(sorted(e) for e in adjacency_graph(p).edges)}
            for p in found.decompositions], "truncated": len(found.truncated)}
        print(f"  census bound {cfg.bound}: {len(found.decompositions)} decompositions")
    write_report(cfg.out / f"pants_{_tag(kind)}.json", body)
    return 0


def cmd_export(cfg: RunConfig) -> int:
    kind = cfg.surface or SurfaceKind(1, 5)
    graphs = []
    if cfg.bound > 0 and kind.complexity <= 3:
        census = Census(standard_triangulation(kind), cfg.bound)
        for k, p in enumerate(maximal_disjoint_sets(census).decompositions):
            name = f"{_tag(kind)}_W{cfg.bound}_p{k:03d}"
            labels = {j: ",".join(map(str, c.weights)) for j, c in enumerate(p.curves)}
            shape = classify_shape(decomposition_to_abstract(p)) if kind.genus == 1 else "planar"
            graphs.append((f"{name}_{shape}", adjacency_graph(p), labels))
    else:
        for k, a in enumerate(enumerate_abstract(kind)):
            shape = classify_shape(a) if kind.genus == 1 else "planar"
            graphs.append((f"{_tag(kind)}_class{k:02d}_{shape}", a.adjacency_graph(), None))
    if graphs:
        cfg.out.mkdir(parents=True, exist_ok=True)
    for name, g, labels in graphs:
        (cfg.out / f"{name}.dot").write_text(g.to_dot(name, labels))
    print(f"wrote {len(graphs)} DOT files to {cfg.out}")
    return 0


COMMANDS = {"census": cmd_census, "verify": cmd_verify, "pants": cmd_pants, "export": cmd_export}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvelab", description="Exact computations with curves on punctured surfaces.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--surface", type=_surface, help="genus,punctures, e.g. 1,3")
        sp.add_argument("--bound", type=int, default=None, help="total weight bound of the census")
        sp.add_argument("--out", type=Path, default=None, help=f"output directory (default $CURVELAB_OUT or {DEFAULT_OUT})")
        if name == "verify":
            sp.add_argument("--suite", required=True, help="comma separated: " + ",".join(suites.SUITES))
            sp.add_argument("--escalate", type=int, default=4, help="census bound step for existence searches")
            sp.add_argument("--escalate-limit", type=int, default=2, help="number of escalation steps (at most 2)")
            sp.add_argument("--n-range", type=_n_range, default=range(4, 8), help="punctures for linear-or-cyclic, e.g. 4..7")
            sp.add_argument("--threads", type=int, default=1, help="worker processes for independent suites")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = args.out or Path(os.environ.get("CURVELAB_OUT", DEFAULT_OUT))
    default_bound = 12 if args.command in ("census", "verify") else 0
    cfg = RunConfig(surface=args.surface, bound=default_bound if args.bound is None else args.bound, out=out)
    if args.command == "verify":
        cfg.suites = tuple(s.strip() for s in args.suite.split(",") if s.strip())
        cfg.step, cfg.limit = args.escalate, args.escalate_limit
        cfg.n_range, cfg.threads = args.n_range, args.threads
    problems = cfg.problems()
    if not problems and args.command == "verify":
        problems = [p for p in [_check_surfaces(cfg)] if p]
    if problems:
        parser.error(problems[0])
    try:
        return COMMANDS[args.command](cfg)
    except OSError as exc:
        print(f"curvelab: cannot write {exc.filename}: {exc.strerror}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
