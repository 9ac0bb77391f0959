"""Verification suites driven by the command line.

Each suite returns a SuiteResult.  Hard failures are computed facts that
contradict a statement being checked; inconclusive records are existence
searches that came up empty within the census bounds tried, which a finite
census can never turn into a refutation.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .census import Census
from .cover import (build_cover, check_vertex_links, is_deck_automorphism, lift_curve, lift_paths,
                    lifts_disjoint, special_on_two_side, type_in_s12)
from .duality import (CurveClassSets, HardFailure, census_is_dual, disjoint_dual_count, duality_witness,
                      find_triangles, shared_puncture, two_curve_triangulations)
from .maps import build_snapshot, find_squares, verify_adjacency_lemma
from .pants import maximal_disjoint_sets, verify_linear_or_cyclic
from .surface import SurfaceKind, standard_triangulation

log = logging.getLogger(__name__)

SQUARE_FREE = (SurfaceKind(0, 5), SurfaceKind(1, 2))
S13 = SurfaceKind(1, 3)


@dataclass
class SuiteResult:
    name: str
    summary: dict
    hard_failures: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.hard_failures

    def to_json(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "summary": self.summary,
                "hard_failures": self.hard_failures, "inconclusive": self.inconclusive}


def _w(census: Census, k: int) -> list[int]:
    return list(census.curves[k].weights)


def squares(kind: SurfaceKind, bound: int) -> SuiteResult:
    census = Census(standard_triangulation(kind), bound)
    snap = build_snapshot(census)
    found = find_squares(snap)
    summary = {"surface": str(kind), "bound": bound, "curves": len(census),
               "disjoint_pairs": len(snap.edges()), "squares": len(found)}
    bad = []
    if kind in SQUARE_FREE and found:
        bad = [{"square": [_w(census, k) for k in q]} for q in found[:10]]
    return SuiteResult(f"squares {kind}", summary, bad)


def adjacency(kind: SurfaceKind, bound: int, step: int, limit: int) -> SuiteResult:
    census = Census(standard_triangulation(kind), bound)
    search = maximal_disjoint_sets(census)
    report = verify_adjacency_lemma(census, search.decompositions, step, limit)
    summary = {"surface": str(kind), "bound": bound, "decompositions": len(search.decompositions),
               "truncated_cliques": len(search.truncated), "pairs": len(report.checks), **report.summary()}
    bad = [c.to_json() for c in report.checks if c.status == "disagree"]
    open_ = [c.to_json() for c in report.checks if c.status == "inconclusive"]
    return SuiteResult(f"adjacency {kind}", summary, bad, open_)


def linear_or_cyclic(n_range: range) -> SuiteResult:
    per_n, bad = {}, []
    for n in n_range:
        rep = verify_linear_or_cyclic(SurfaceKind(1, n))
        per_n[str(rep.kind)] = {"classes": rep.classes, "triangle_free": rep.triangle_free, "shapes": rep.shapes}
        bad.extend({"surface": str(rep.kind), **v.to_json()} for v in rep.violations)
        for shape in ("linear", "cyclic"):
            if not rep.shapes.get(shape):
                bad.append({"surface": str(rep.kind), "missing_shape": shape})
    return SuiteResult("linear-or-cyclic", per_n, bad)


def duality(kind: SurfaceKind, bound: int, step: int, limit: int) -> SuiteResult:
    census = Census(standard_triangulation(kind), bound)
    sets = CurveClassSets.of(census)
    counts = {"dual_with_witness": 0, "dual_without_witness": 0,
              "nondual_with_witness": 0, "nondual_without_witness": 0}
    bad, open_ = [], []
    for a, b in itertools.combinations(sets.N, 2):
        dual = census_is_dual(census, a, b)
        res = duality_witness(census, a, b, step, limit)
        key = ("dual" if dual else "nondual") + ("_with_witness" if res.found else "_without_witness")
        counts[key] += 1
        rec = {"a": _w(census, a), "b": _w(census, b), "i": census.i(a, b), "bounds": list(res.bounds)}
        if res.found and not dual:
            big = census.escalate(res.witness.bound - bound)
            rec["witness"] = {"z": _w(big, res.witness.z), "x": _w(big, res.witness.x), "y": _w(big, res.witness.y)}
            bad.append(rec)
        elif dual and not res.found:
            open_.append(rec)
    twos = [k for k in sets.N if census.type(k).k == 2]
    shared_bad = 0
    for a, b in itertools.combinations(twos, 2):
        if census.i(a, b) == 2:
            try:
                shared_puncture(census, a, b)
            except HardFailure as exc:
                shared_bad += 1
                bad.append({"shared_puncture": str(exc)})
    tris = find_triangles(census)
    tsearch = two_curve_triangulations(census)
    if len(tsearch.sizes) > 1:
        bad.append({"two_curve_triangulation_sizes": sorted(tsearch.sizes)})
    summary = {"surface": str(kind), "bound": bound, "N": len(sets.N), "N_prime": len(sets.N_prime),
               **counts, "triangles": len(tris), "two_curve_triangulations": len(tsearch.triangulations),
               "triangulation_sizes": sorted(tsearch.sizes), "shared_puncture_failures": shared_bad}
    return SuiteResult(f"duality {kind}", summary, bad, open_)


def n3_separation(bound: int, step: int, limit: int) -> SuiteResult:
    """Nonseparating curves have three disjoint duals; 2-curves have at most two."""
    census = Census(standard_triangulation(S13), bound)
    top = census.escalate(step * limit)
    nonsep = [k for k in range(len(census)) if census.type(k).tag == "nonseparating"]
    twos = [k for k in range(len(census)) if census.type(k).k == 2]
    low, open_ = None, []
    for k in nonsep:
        for level in range(limit + 1):
            count = disjoint_dual_count(census.escalate(level * step), k)
            if count >= 3:
                break
        low = count if low is None else min(low, count)
        if count < 3:
            open_.append({"curve": _w(census, k), "disjoint_duals": count, "bound": bound + level * step})
    two_counts = {k: disjoint_dual_count(top, k) for k in twos}
    high = max(two_counts.values(), default=None)
    bad = [{"curve": _w(census, k), "disjoint_duals": v} for k, v in two_counts.items() if v > 2]
    summary = {"surface": str(S13), "bound": bound, "nonseparating": len(nonsep), "two_curves": len(twos),
               "min_nonseparating": low, "max_two_curve": high, "two_curve_bound": top.bound}
    return SuiteResult("n3-separation", summary, bad, open_)


def cover(bound: int, specials=range(5)) -> SuiteResult:
    base = standard_triangulation(SurfaceKind(0, 5))
    census = Census(base, bound)
    bad, table = [], []
    for sp in specials:
        cv = build_cover(base, sp)
        for problem in check_vertex_links(cv):
            bad.append({"special": sp, "vertex_links": problem})
        if not is_deck_automorphism(cv):
            bad.append({"special": sp, "deck": "sheet swap is not an automorphism"})
        lifts = [lift_curve(cv, c) for c in census.curves]
        rows = []
        for k, lift in enumerate(lifts):
            row = lift.to_json()
            row["special_on_two_side"] = special_on_two_side(lift.base, sp)
            rows.append(row)
            if len(lift.components) != 2 - lift.holonomy:
                bad.append({"special": sp, "curve": row, "rule": "components = 2 - holonomy"})
            if (type_in_s12(lift).tag == "separating") != row["special_on_two_side"]:
                bad.append({"special": sp, "curve": row, "rule": "separating iff special on 2-side"})
        paths = [lift_paths(lf) for lf in lifts]
        disjoint_pairs = 0
        for a, b in itertools.combinations(range(len(lifts)), 2):
            apart = lifts_disjoint(lifts[a], lifts[b], (paths[a], paths[b]))
            if census.i(a, b) == 0:
                disjoint_pairs += 1
                if not apart:
                    bad.append({"special": sp, "pair": [_w(census, a), _w(census, b)], "rule": "disjoint lifts"})
            elif apart:
                bad.append({"special": sp, "pair": [_w(census, a), _w(census, b)], "rule": "meeting lifts"})
        table.append({"special": sp, "cocycle": list(cv.cocycle), "cover": str(cv.total.kind),
                      "curves": len(lifts), "disjoint_pairs": disjoint_pairs,
                      "connected_lifts": sum(1 for r in rows if r["components"] == 1),
                      "separating_in_s12": sum(1 for r in rows if r["type_in_s12"] == "separating"),
                      "lifts": rows})
    return SuiteResult("cover", {"bound": bound, "covers": table}, bad)


SUITES = ("adjacency", "squares", "linear-or-cyclic", "duality", "n3-separation", "cover")
