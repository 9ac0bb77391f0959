"""The two-sheeted branched cover of the five-punctured sphere by S_1,6.

A Z/2 value x_e on each base edge says whether crossing that edge swaps
sheets.  The holonomy of a normal curve with weights w is the sum of
w_e x_e mod 2; around a puncture it is computed from the vertex link.  The
cover is the triangulation with two copies of every triangle where the
positive side of edge e on sheet s meets the negative side on sheet
s + x_e.  Four punctures get holonomy 1 (branch points, one preimage each)
and the special puncture gets holonomy 0 (two preimages).  Filling the four
branch punctures of the cover gives the twice-punctured torus.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .classify import CurveType, curve_type, cut_multicurve
from .curves import NormalCurve, cyclic_path, trace_components
from .linking import intersection_from_paths
from .surface import IdealTriangulation, SurfaceKind, TriangulationError, validate

log = logging.getLogger(__name__)

BASE_KIND = SurfaceKind(0, 5)
COVER_KIND = SurfaceKind(1, 6)


class CoverError(ValueError):
    pass


def solve_gf2(rows: list[list[int]], rhs: list[int]) -> list[int] | None:
    """One solution of a linear system over Z/2 (free variables set to 0), or None."""
    n = len(rows[0]) if rows else 0
    eqs = [(sum(bit << j for j, bit in enumerate(r)), b & 1) for r, b in zip(rows, rhs)]
    pivots = []
    for col in range(n):
        k = next((k for k in range(len(pivots), len(eqs)) if (eqs[k][0] >> col) & 1), None)
        if k is None:
            continue
        r = len(pivots)
        eqs[r], eqs[k] = eqs[k], eqs[r]
        pm, pb = eqs[r]
        for j in range(len(eqs)):
            if j != r and (eqs[j][0] >> col) & 1:
                eqs[j] = (eqs[j][0] ^ pm, eqs[j][1] ^ pb)
        pivots.append(col)
    if any(m == 0 and b for m, b in eqs):
        return None
    x = [0] * n
    for r, col in enumerate(pivots):
        x[col] = eqs[r][1]
    return x


def holonomy(cocycle, weights) -> int:
    return sum(w * x for w, x in zip(weights, cocycle)) % 2


@dataclass(frozen=True)
class DoubleCover:
    base: IdealTriangulation
    special: int
    cocycle: tuple[int, ...]
    total: IdealTriangulation

    # sheet bookkeeping: triangle 2t + s and edge 2e + s lie over t and e

    @property
    def branch_punctures(self) -> frozenset[int]:
        """Cover punctures over the four non-special base punctures."""
        return frozenset(v for v in range(self.total.num_vertices) if self.project_vertex(v) != self.special)

    def project_vertex(self, v: int) -> int:
        for T, corners in enumerate(self.total.corner_vertex):
            for k, u in enumerate(corners):
                if u == v:
                    return self.base.corner_vertex[T // 2][k]
        raise KeyError(v)

    def lift_weights(self, weights) -> tuple[int, ...]:
        return tuple(weights[E // 2] for E in range(self.total.num_edges))

    def deck(self, weights) -> tuple[int, ...]:
        """Swap the sheets of a weight vector on the cover."""
        return tuple(weights[E ^ 1] for E in range(len(weights)))

    def holonomy(self, weights) -> int:
        return holonomy(self.cocycle, weights)


def build_cover(base: IdealTriangulation, special: int) -> DoubleCover:
    if base.kind != BASE_KIND or validate(base):
        raise CoverError(f"base must be a valid {BASE_KIND} triangulation")
    if not 0 <= special < base.num_vertices:
        raise CoverError(f"no puncture {special} on the base")
    cv = build_cover_with_holonomy(base, special, [0 if v == special else 1 for v in range(base.num_vertices)])
    if cv.total.kind != COVER_KIND:
        raise TriangulationError(f"cover came out as {cv.total.kind}, expected {COVER_KIND}")
    return cv


def build_cover_with_holonomy(base: IdealTriangulation, special: int, wanted: list[int]) -> DoubleCover:
    if sum(wanted) % 2:
        raise CoverError(f"puncture holonomies {wanted} have odd total; no such cover")
    E = base.num_edges
    rows, rhs = [], []
    for tri in base.triangles:  # cocycle condition
        row = [0] * E
        for e in tri:
            row[e] ^= 1
        rows.append(row)
        rhs.append(0)
    for v, h in enumerate(wanted):
        rows.append([w % 2 for w in base.vertex_link(v)])
        rhs.append(h)
    x = solve_gf2(rows, rhs)
    if x is None:
        raise CoverError(f"no edge cocycle has puncture holonomies {wanted}")

    triangles, flags = [], []
    for t, tri in enumerate(base.triangles):
        for s in (0, 1):
            labels = []
            for i, e in enumerate(tri):
                # positive side of e on sheet s meets the negative side on sheet s + x_e
                sheet = s if base.flag(t, i) == 1 else (s + x[e]) % 2
                labels.append(2 * e + sheet)
            triangles.append(labels)
            flags.append(list(base.orientations[t]))
    probe = IdealTriangulation.build(COVER_KIND, triangles, flags)  # kind fixed below
    V = probe.num_vertices
    chi_closed = V - probe.num_edges + probe.num_triangles
    kind = SurfaceKind((2 - chi_closed) // 2, V)
    total = IdealTriangulation.build(kind, triangles, flags)
    problems = validate(total)
    if problems:
        raise TriangulationError("; ".join(problems))
    cv = DoubleCover(base, special, tuple(x), total)
    for v, h in enumerate(wanted):
        assert cv.holonomy(base.vertex_link(v)) == h
    return cv


def check_vertex_links(cv: DoubleCover) -> list[str]:
    """Independent holonomy check: each base puncture has one preimage when its
    link has holonomy 1 and two otherwise, and the preimage links add up to
    the lifted base link."""
    problems = []
    over: dict[int, list[int]] = {}
    for v in range(cv.total.num_vertices):
        over.setdefault(cv.project_vertex(v), []).append(v)
    for u in range(cv.base.num_vertices):
        link = cv.base.vertex_link(u)
        expect = 1 if cv.holonomy(link) else 2
        ups = over.get(u, [])
        if len(ups) != expect:
            problems.append(f"puncture {u}: {len(ups)} preimages, holonomy predicts {expect}")
            continue
        summed = [sum(col) for col in zip(*(cv.total.vertex_link(v) for v in ups))]
        # a branch puncture's link is the connected double of the base link
        if tuple(summed) != cv.lift_weights(link):
            problems.append(f"puncture {u}: preimage links do not cover the lifted link")
    return problems


def is_deck_automorphism(cv: DoubleCover) -> bool:
    """Sheet swap maps triangles to triangles with the same flags and fixes none."""
    T = cv.total
    for k, tri in enumerate(T.triangles):
        other = T.triangles[k ^ 1]
        if tuple(E ^ 1 for E in tri) != other or T.orientations[k] != T.orientations[k ^ 1]:
            return False
    return True


# -- lifts ---------------------------------------------------------------------------

@dataclass
class LiftedCurve:
    base: NormalCurve
    holonomy: int
    components: list[NormalCurve]
    cover: DoubleCover

    @property
    def weights(self) -> tuple[int, ...]:
        return self.cover.lift_weights(self.base.weights)

    def to_json(self) -> dict:
        return {"curve": list(self.base.weights), "holonomy": self.holonomy,
                "components": len(self.components), "type_in_s12": type_in_s12(self).tag}


def lift_curve(cv: DoubleCover, c: NormalCurve) -> LiftedCurve:
    if c.triangulation != cv.base:
        raise CoverError("curve does not live on the base triangulation")
    W = cv.lift_weights(c.weights)
    tr = trace_components(cv.total, W)
    comps = [NormalCurve(cv.total, comp.weights) for comp in tr.components]
    assert all(comp.peripheral is None for comp in tr.components), "lift of an essential curve is peripheral"
    if len(comps) == 2:
        assert cv.deck(comps[0].weights) == comps[1].weights, "lift components not exchanged by the deck map"
    else:
        assert cv.deck(comps[0].weights) == comps[0].weights
    return LiftedCurve(c, cv.holonomy(c.weights), comps, cv)


def type_in_s12(lift: LiftedCurve) -> CurveType:
    """Type of one lift component once the four branch punctures are filled in."""
    cv = lift.cover
    W = lift.weights
    tr = trace_components(cv.total, W)
    first = tr.components[0].weights
    idx = next(k for k, comp in enumerate(tr.components) if comp.weights == first)
    res = cut_multicurve(cv.total, W, cut=[idx])
    branch = cv.branch_punctures
    filled = [(s.genus, len(s.punctures - branch), s.boundary_count) for s in res.sides]
    if len(filled) == 1:
        return CurveType("nonseparating")
    for genus, punct, bnd in filled:
        if genus == 0 and punct <= 1:
            raise CoverError(f"lift of {lift.base.weights} bounds a disk or punctured disk after filling")
    zero = [p for g, p, _ in filled if g == 0]
    assert len(zero) == 1
    return CurveType("separating", k=zero[0])


def lift_paths(lift: LiftedCurve):
    return [cyclic_path(c) for c in lift.components]


def lifts_disjoint(a: LiftedCurve, b: LiftedCurve, paths=None) -> bool:
    """Whether every lift component of ``a`` misses every lift component of ``b``."""
    T = a.cover.total
    pa = paths[0] if paths else lift_paths(a)
    pb = paths[1] if paths else lift_paths(b)
    for ca, xa in zip(a.components, pa):
        for cb, xb in zip(b.components, pb):
            if ca.weights != cb.weights and intersection_from_paths(T, xa, xb) > 0:
                return False
    return True


def special_on_two_side(c: NormalCurve, special: int) -> bool:
    """Whether the special puncture sits on the twice-punctured side of ``c``."""
    ty = curve_type(c)
    two = next(p for p in ty.partition if len(p) == 2)
    return special in two
