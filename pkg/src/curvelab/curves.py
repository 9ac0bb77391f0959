"""Simple closed curves in normal position.

A curve is stored by its edge weights: the number of times its normal
representative crosses each edge.  On an ideal triangulation these weights
determine the isotopy class, so curve identity is plain equality of weight
vectors.

Within a triangle, the ``c_k`` normal arcs around corner ``k`` join side
``k+2`` (positions ``0..c_k-1``, counted from corner ``k``) to side ``k+1``
(positions counted back from its far end).  Tracing follows these arcs from
edge to edge.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .surface import IdealTriangulation, flip, flip_is_legal, triangulation_from_json, load_triangulation

log = logging.getLogger(__name__)


class InadmissibleWeights(ValueError):
    """Weights that violate parity or the triangle inequalities somewhere."""


@dataclass(frozen=True)
class NormalCurve:
    triangulation: IdealTriangulation = field(compare=False, repr=False)
    weights: tuple[int, ...]

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def to_json(self) -> dict:
        return {"weights": list(self.weights)}


def corner_counts(t: IdealTriangulation, weights: Sequence[int]) -> list[tuple[int, int, int]]:
    """Normal arc counts around the corners of every triangle."""
    out = []
    for k, (x, y, z) in enumerate(t.triangles):
        a, b, c = weights[x], weights[y], weights[z]
        if (a + b + c) % 2:
            raise InadmissibleWeights(f"triangle {k}: side weights {a},{b},{c} have odd sum")
        counts = ((b + c - a) // 2, (c + a - b) // 2, (a + b - c) // 2)
        if min(counts) < 0:
            raise InadmissibleWeights(f"triangle {k}: side weights {a},{b},{c} violate the triangle inequality")
        out.append(counts)
    return out


def is_admissible(t: IdealTriangulation, weights: Sequence[int]) -> bool:
    try:
        corner_counts(t, weights)
    except InadmissibleWeights:
        return False
    return len(weights) == t.num_edges and min(weights, default=0) >= 0


@dataclass
class Component:
    weights: tuple[int, ...]
    # directed crossings (triangle, exit side), in order of travel
    path: list[tuple[int, int]]
    peripheral: int | None = None  # puncture the component is parallel to


@dataclass
class MultiCurveTrace:
    components: list[Component]
    # strand_owner[e][q]: component index of the q-th crossing on edge e (tail to head)
    strand_owner: list[list[int]]

    @property
    def count(self) -> int:
        return len(self.components)


def arc_partner(counts: tuple[int, int, int], w: Sequence[int], i: int, p: int) -> tuple[int, int]:
    """Other end of the normal arc meeting side ``i`` at side position ``p``.

    ``w`` holds the three side weights of the triangle.
    """
    c_next = counts[(i + 1) % 3]
    if p < c_next:
        k = (i + 2) % 3
        return k, w[k] - 1 - p
    return (i + 1) % 3, w[i] - 1 - p


def trace_components(t: IdealTriangulation, weights: Sequence[int]) -> MultiCurveTrace:
    """Split a normal multicurve into its connected components."""
    weights = tuple(weights)
    counts = corner_counts(t, weights)
    side_w = [tuple(weights[e] for e in tri) for tri in t.triangles]
    owner = [[-1] * w for w in weights]
    comps: list[Component] = []
    for e0 in range(t.num_edges):
        for q0 in range(weights[e0]):
            if owner[e0][q0] >= 0:
                continue
            cid = len(comps)
            cw = [0] * t.num_edges
            path = []
            tt, i = t.sides[e0][0]
            e, q = e0, q0
            while True:
                owner[e][q] = cid
                cw[e] += 1
                p = q if t.orientations[tt][i] == 1 else weights[e] - 1 - q
                i2, p2 = arc_partner(counts[tt], side_w[tt], i, p)
                e = t.triangles[tt][i2]
                q = p2 if t.orientations[tt][i2] == 1 else weights[e] - 1 - p2
                path.append((tt, i2))
                if (e, q) == (e0, q0):
                    break
                tt, i = t.glue[(tt, i2)]
            comps.append(Component(tuple(cw), path))
    for comp in comps:
        for v in range(t.num_vertices):
            if comp.weights == t.vertex_link(v):
                comp.peripheral = v
                break
        # a reduced cyclic path in the dual spine is never null-homotopic
        assert comp.path and all(t.glue[comp.path[k - 1]][1] != comp.path[k][1] for k in range(len(comp.path))), \
            "normal component with a backtracking path"
    return MultiCurveTrace(comps, owner)


def is_essential_curve(t: IdealTriangulation, weights: Sequence[int]) -> bool:
    """True iff the weights describe one essential simple closed curve."""
    if not is_admissible(t, weights) or not any(weights):
        return False
    tr = trace_components(t, weights)
    return tr.count == 1 and tr.components[0].peripheral is None


def curve(t: IdealTriangulation, weights: Sequence[int]) -> NormalCurve:
    """Checked constructor."""
    weights = tuple(int(w) for w in weights)
    if len(weights) != t.num_edges:
        raise InadmissibleWeights(f"expected {t.num_edges} weights, got {len(weights)}")
    corner_counts(t, weights)
    if not is_essential_curve(t, weights):
        raise InadmissibleWeights(f"{weights} is not a single essential curve")
    return NormalCurve(t, weights)


def cyclic_path(c: NormalCurve) -> list[tuple[int, int]]:
    return trace_components(c.triangulation, c.weights).components[0].path


# -- enumeration -----------------------------------------------------------------

def _edge_order(t: IdealTriangulation) -> list[int]:
    """Edges in BFS order over triangles so triangle checks fire early."""
    order: list[int] = []
    seen_t = {0}
    queue = [0]
    while queue:
        s = queue.pop(0)
        for i, e in enumerate(t.triangles[s]):
            if e not in order:
                order.append(e)
            u, _ = t.glue[(s, i)]
            if u not in seen_t:
                seen_t.add(u)
                queue.append(u)
    return order


def admissible_vectors(t: IdealTriangulation, max_total_weight: int) -> Iterator[tuple[int, ...]]:
    """All nonzero admissible weight vectors of total weight <= the bound."""
    order = _edge_order(t)
    pos = {e: k for k, e in enumerate(order)}
    # triangles to check once the k-th edge of ``order`` is assigned
    ready: list[list[tuple[int, int, int]]] = [[] for _ in order]
    for tri in t.triangles:
        ready[max(pos[e] for e in tri)].append(tri)
    w = [0] * t.num_edges
    n = len(order)

    def rec(k: int, budget: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(w)
            return
        e = order[k]
        for val in range(budget + 1):
            w[e] = val
            ok = True
            for x, y, z in ready[k]:
                a, b, c = w[x], w[y], w[z]
                if (a + b + c) & 1 or a > b + c or b > a + c or c > a + b:
                    ok = False
                    break
            if ok:
                yield from rec(k + 1, budget - val)
        w[e] = 0

    for vec in rec(0, max_total_weight):
        if any(vec):
            yield vec


def _has_vertex_link(t: IdealTriangulation, counts: list[tuple[int, int, int]]) -> bool:
    """Every corner of some puncture carries an arc, so its link splits off."""
    full = [True] * t.num_vertices
    for s, row in enumerate(counts):
        for k in range(3):
            if row[k] == 0:
                full[t.corner_vertex[s][k]] = False
    return any(full)


def enumerate_census(t: IdealTriangulation, max_total_weight: int) -> list[NormalCurve]:
    """Every essential curve of total weight <= the bound, sorted by (weight, vector)."""
    found = []
    for vec in admissible_vectors(t, max_total_weight):
        if _has_vertex_link(t, corner_counts(t, vec)):
            continue
        if trace_components(t, vec).count == 1:
            found.append(NormalCurve(t, vec))
    found.sort(key=lambda c: (c.total_weight, c.weights))
    return found


# -- flips ---------------------------------------------------------------------

def flip_quadrilateral(t: IdealTriangulation, e: int) -> tuple[int, int, int, int]:
    """Quadrilateral sides of ``e`` in cyclic order PQ, QP', P'R, RP."""
    (ta, i), (tb, j) = t.sides[e]
    A, B = t.triangles[ta], t.triangles[tb]
    return A[(i + 2) % 3], B[(j + 1) % 3], B[(j + 2) % 3], A[(i + 1) % 3]


def transport_over_flip(c: NormalCurve, e: int, flipped: IdealTriangulation | None = None) -> NormalCurve:
    """Weights of ``c`` after flipping edge ``e``."""
    t = c.triangulation
    if not flip_is_legal(t, e):
        flip(t, e)  # raises with the offending triangles
    a, b, cc, d = (c.weights[x] for x in flip_quadrilateral(t, e))
    w = list(c.weights)
    w[e] = max(a + cc, b + d) - w[e]
    return NormalCurve(flipped if flipped is not None else flip(t, e), tuple(w))


# -- files -------------------------------------------------------------------------

def load_curve(path: str | Path) -> NormalCurve:
    path = Path(path)
    data = json.loads(path.read_text())
    tri = data["triangulation"]
    if isinstance(tri, str):
        t = load_triangulation(path.parent / tri)
    else:
        t = triangulation_from_json(tri)
    return curve(t, data["weights"])


def census_json(curves: Sequence[NormalCurve], bound: int) -> str:
    """Census dump: a JSON array then the summary line."""
    body = json.dumps([list(c.weights) for c in curves])
    return f"{body}\ncurves={len(curves)} bound={bound}\n"
