"""Cutting the surface along normal multicurves and reading off curve types.

Each triangle is split by the normal arcs into pieces: the strips stacked
around every corner and one central piece.  Pieces are re-glued across the
edge segments between consecutive crossing points.  For a component of the
result, filling its punctures back in gives a compact surface with

    chi = (pieces) - (glued edge segments) + (punctures)

because on each boundary circle the arcs and their endpoints cancel.  The
genus then follows from chi and the number of boundary circles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .curves import MultiCurveTrace, NormalCurve, corner_counts, trace_components
from .intersection import disjoint_by_sum
from .surface import IdealTriangulation


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Side:
    """One component of a cut surface."""

    genus: int
    punctures: frozenset[int]
    boundaries: tuple[tuple[int, int], ...]  # (curve component, side 0 or 1)
    contains: frozenset[int] = frozenset()  # uncut curve components lying inside

    @property
    def boundary_count(self) -> int:
        return len(self.boundaries)

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - len(self.punctures) - self.boundary_count

    def describe(self) -> tuple[int, int, int]:
        return self.genus, len(self.punctures), self.boundary_count


@dataclass
class CutResult:
    sides: list[Side]
    trace: MultiCurveTrace

    @property
    def components(self) -> list[tuple[int, int, int]]:
        return [s.describe() for s in self.sides]

    def side_of(self, comp: int) -> int:
        """Index of the side holding an uncut curve component."""
        for k, s in enumerate(self.sides):
            if comp in s.contains:
                return k
        raise KeyError(comp)


class _DSU:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        parent = self.parent
        root = parent.setdefault(x, x)
        while root != parent[root]:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def _slot_piece(counts, w, i, r):
    """Piece of a triangle meeting side ``i`` at side slot ``r``."""
    c_near = counts[(i + 1) % 3]
    if r < c_near:
        return ("x", (i + 1) % 3, r)
    if r == c_near:
        return ("center",)
    return ("x", (i + 2) % 3, w[i] - r)


def cut_multicurve(t: IdealTriangulation, weights, cut: Iterable[int] | None = None) -> CutResult:
    """Cut along the components listed in ``cut`` (all of them by default).

    Components not cut are left in place and reported in ``Side.contains``.
    """
    weights = tuple(weights)
    tr = trace_components(t, weights)
    cut = set(range(tr.count)) if cut is None else set(cut)
    counts = corner_counts(t, weights)
    pieces = _DSU()
    all_pieces = []
    for s in range(t.num_triangles):
        all_pieces.append((s, "center"))
        for k in range(3):
            all_pieces.extend((s, "x", k, d) for d in range(counts[s][k]))
    for p in all_pieces:
        pieces.find(p)

    def edge_pos(s, i, p):
        e = t.triangles[s][i]
        return e, (p if t.orientations[s][i] == 1 else weights[e] - 1 - p)

    def edge_slot(s, i, r):
        e = t.triangles[s][i]
        return e, (r if t.orientations[s][i] == 1 else weights[e] - r)

    slot_pieces: dict[tuple[int, int], list] = {}
    for s, tri in enumerate(t.triangles):
        w = [weights[e] for e in tri]
        for i in range(3):
            for r in range(w[i] + 1):
                slot_pieces.setdefault(edge_slot(s, i, r), []).append((s,) + _slot_piece(counts[s], w, i, r))
    for ps in slot_pieces.values():
        assert len(ps) == 2
        pieces.union(ps[0], ps[1])

    arcs = []  # (arc, owner, inner piece, outer piece)
    circles = _DSU()
    at_point: dict = {}  # (edge point, edge slot) -> arc sides touching that slot there
    for s, tri in enumerate(t.triangles):
        w = [weights[e] for e in tri]
        for k in range(3):
            for d in range(counts[s][k]):
                pt = edge_pos(s, (k + 2) % 3, d)
                comp = tr.strand_owner[pt[0]][pt[1]]
                inner = (s, "x", k, d)
                outer = (s, "x", k, d + 1) if d + 1 < counts[s][k] else (s, "center")
                arcs.append(((s, k, d), comp, inner, outer))
                if comp not in cut:
                    pieces.union(inner, outer)
                    continue
                far = w[(k + 1) % 3] - 1 - d
                # side k+2 starts at corner k, side k+1 ends there
                ends = (((k + 2) % 3, d, d, d + 1), ((k + 1) % 3, far, far + 1, far))
                for i, p, inner_slot, outer_slot in ends:
                    point = edge_pos(s, i, p)
                    for bit, slot in ((0, inner_slot), (1, outer_slot)):
                        at_point.setdefault((point, edge_slot(s, i, slot)), []).append((s, k, d, bit))
    for sides_here in at_point.values():
        for other in sides_here[1:]:
            circles.union(sides_here[0], other)

    # side 0 of a component is the circle through the inner side of its first arc
    first_inner: dict[int, object] = {}
    for arc, comp, _, _ in arcs:
        if comp in cut and comp not in first_inner:
            first_inner[comp] = circles.find(arc + (0,))

    bnd_by_root: dict = {}
    for arc, comp, inner, outer in arcs:
        if comp not in cut:
            continue
        for bit, piece in ((0, inner), (1, outer)):
            side = 0 if circles.find(arc + (bit,)) == first_inner[comp] else 1
            bnd_by_root.setdefault(pieces.find(piece), set()).add((comp, side))
    contains_by_root: dict = {}
    for arc, comp, inner, _ in arcs:
        if comp not in cut:
            contains_by_root.setdefault(pieces.find(inner), set()).add(comp)
    groups: dict = {}
    for p in all_pieces:
        groups.setdefault(pieces.find(p), []).append(p)
    slots_by_root: dict = {}
    for ps in slot_pieces.values():
        root = pieces.find(ps[0])
        slots_by_root[root] = slots_by_root.get(root, 0) + 1

    sides = []
    for root, members in groups.items():
        punct = set()
        for p in members:
            s = p[0]
            if p[1] == "center":
                punct.update(t.corner_vertex[s][k] for k in range(3) if counts[s][k] == 0)
            elif p[3] == 0:
                punct.add(t.corner_vertex[s][p[2]])
        bnds = tuple(sorted(bnd_by_root.get(root, ())))
        chi_filled = len(members) - slots_by_root.get(root, 0) + len(punct)
        twice_genus = 2 - len(bnds) - chi_filled
        assert twice_genus >= 0 and twice_genus % 2 == 0, "cut component with impossible euler characteristic"
        sides.append(Side(twice_genus // 2, frozenset(punct), bnds, frozenset(contains_by_root.get(root, ()))))
    sides.sort(key=lambda sd: (sorted(sd.punctures), sd.genus, sd.boundaries))
    return CutResult(sides, tr)


def cut_along(c: NormalCurve) -> CutResult:
    return cut_multicurve(c.triangulation, c.weights)


# -- curve types ---------------------------------------------------------------------

@dataclass(frozen=True)
class CurveType:
    tag: str  # "nonseparating" or "separating"
    k: int | None = None  # punctures on the genus-0 side (genus-one ambient)
    partition: tuple[frozenset[int], frozenset[int]] | None = None  # genus-zero ambient

    @property
    def label(self) -> str:
        if self.tag == "nonseparating":
            return "nonseparating"
        if self.k is not None:
            return f"{self.k}-curve"
        sizes = sorted(len(p) for p in self.partition)
        return "separating " + "|".join(map(str, sizes))

    def to_json(self) -> dict:
        if self.tag == "nonseparating":
            return {"type": "nonseparating"}
        if self.k is not None:
            return {"type": "k-curve", "k": self.k}
        return {"type": "separating", "partition": [sorted(p) for p in self.partition]}


def curve_type(c: NormalCurve) -> CurveType:
    res = cut_along(c)
    if len(res.sides) == 1:
        return CurveType("nonseparating")
    a, b = res.sides
    if c.triangulation.kind.genus == 0:
        return CurveType("separating", partition=(a.punctures, b.punctures))
    zero = [s for s in (a, b) if s.genus == 0]
    assert len(zero) == 1, "separating curve on a genus-one surface must have one planar side"
    return CurveType("separating", k=len(zero[0].punctures))


def genus_zero_side(c: NormalCurve) -> Side:
    sides = [s for s in cut_along(c).sides if s.genus == 0]
    if len(sides) != 1:
        raise PreconditionError("curve has no unique genus-0 side")
    return sides[0]


def side_key(z: NormalCurve, a: NormalCurve) -> frozenset[int]:
    """Puncture set of the side of ``z`` containing the disjoint curve ``a``."""
    t = z.triangulation
    if a.weights == z.weights:
        raise PreconditionError("curve coincides with the cutting curve")
    total = [x + y for x, y in zip(z.weights, a.weights)]
    tr = trace_components(t, total)
    idx = {comp.weights: k for k, comp in enumerate(tr.components)}
    if tr.count != 2 or set(idx) != {z.weights, a.weights}:
        raise PreconditionError(f"curve {a.weights} is not disjoint from {z.weights}")
    res = cut_multicurve(t, total, cut=[idx[z.weights]])
    return res.sides[res.side_of(idx[a.weights])].punctures


def same_side(z: NormalCurve, a: NormalCurve, b: NormalCurve) -> bool:
    """Whether ``a`` and ``b`` (both disjoint from ``z``) lie on one side of ``z``."""
    for x in (a, b):
        if x.weights == z.weights or not disjoint_by_sum(z, x):
            raise PreconditionError(f"same_side needs curves disjoint from and distinct from {z.weights}")
    return side_key(z, a) == side_key(z, b)
