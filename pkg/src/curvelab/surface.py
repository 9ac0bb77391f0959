"""Punctured surfaces as ideal triangulations.

A triangle is an ordered triple of edge labels.  Side ``i`` of a triangle is
the side opposite corner ``i`` and runs from corner ``i+1`` to corner
``i+2`` (indices mod 3); corners are listed counterclockwise.  The
orientation flag of a side is ``+1`` when that direction agrees with the
edge's own tail-to-head direction and ``-1`` otherwise.  The two sides of an
edge always carry opposite flags (orientable gluing), which identifies
corner ``i+1`` of one side with corner ``j+2`` of the other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence


class TriangulationError(ValueError):
    """Raised for invalid triangulations or illegal moves on them."""


@dataclass(frozen=True)
class SurfaceKind:
    genus: int
    punctures: int

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.punctures

    @property
    def complexity(self) -> int:
        """Number of curves in a pants decomposition."""
        return 3 * self.genus - 3 + self.punctures

    def problems(self) -> list[str]:
        out = []
        if self.genus < 0 or self.punctures < 0:
            out.append(f"negative genus or puncture count in {self}")
        if self.punctures < 1:
            out.append(f"S_{self.genus},{self.punctures} has no punctures; ideal triangulations need at least one")
        if self.euler_characteristic >= 0:
            out.append(
                f"S_{self.genus},{self.punctures} has euler characteristic "
                f"{self.euler_characteristic} >= 0"
            )
        return out

    def check(self) -> None:
        problems = self.problems()
        if problems:
            raise TriangulationError("; ".join(problems))

    @classmethod
    def parse(cls, text: str) -> "SurfaceKind":
        """Parse ``"g,n"``."""
        try:
            g, n = (int(part) for part in text.split(","))
        except ValueError:
            raise TriangulationError(f"surface must look like 'g,n', got {text!r}") from None
        return cls(g, n)

    def __str__(self) -> str:
        return f"S_{self.genus},{self.punctures}"


@dataclass(frozen=True)
class IdealTriangulation:
    kind: SurfaceKind
    triangles: tuple[tuple[int, int, int], ...]
    orientations: tuple[tuple[int, int, int], ...]

    @classmethod
    def build(cls, kind: SurfaceKind, triangles: Iterable[Sequence[int]],
              orientations: Iterable[Sequence[int]]) -> "IdealTriangulation":
        return cls(kind, tuple(tuple(t) for t in triangles), tuple(tuple(o) for o in orientations))

    @property
    def num_triangles(self) -> int:
        return len(self.triangles)

    @cached_property
    def num_edges(self) -> int:
        labels = {e for tri in self.triangles for e in tri}
        return max(labels) + 1 if labels else 0

    @cached_property
    def sides(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each edge, the (triangle, side) pairs where it occurs."""
        occ: list[list[tuple[int, int]]] = [[] for _ in range(self.num_edges)]
        for t, tri in enumerate(self.triangles):
            for i, e in enumerate(tri):
                if e >= 0:
                    occ[e].append((t, i))
        return tuple(tuple(o) for o in occ)

    @cached_property
    def glue(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Side-to-side gluing map; only meaningful for valid triangulations."""
        out = {}
        for occ in self.sides:
            if len(occ) == 2:
                out[occ[0]] = occ[1]
                out[occ[1]] = occ[0]
        return out

    def flag(self, t: int, i: int) -> int:
        return self.orientations[t][i]

    @cached_property
    def corner_vertex(self) -> tuple[tuple[int, int, int], ...]:
        """Puncture label of every corner, numbered by first appearance."""
        parent = list(range(3 * self.num_triangles))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        for occ in self.sides:
            if len(occ) != 2:
                continue
            (t, i), (u, j) = occ
            union(3 * t + (i + 1) % 3, 3 * u + (j + 2) % 3)
            union(3 * t + (i + 2) % 3, 3 * u + (j + 1) % 3)
        labels: dict[int, int] = {}
        out = []
        for t in range(self.num_triangles):
            row = []
            for k in range(3):
                r = find(3 * t + k)
                row.append(labels.setdefault(r, len(labels)))
            out.append(tuple(row))
        return tuple(out)

    @property
    def num_vertices(self) -> int:
        return len({v for row in self.corner_vertex for v in row})

    @cached_property
    def edge_ends(self) -> tuple[tuple[int, int], ...]:
        """(tail, head) puncture of every edge."""
        out = []
        for occ in self.sides:
            t, i = occ[0]
            a, b = self.corner_vertex[t][(i + 1) % 3], self.corner_vertex[t][(i + 2) % 3]
            out.append((a, b) if self.orientations[t][i] == 1 else (b, a))
        return tuple(out)

    def vertex_link(self, v: int) -> tuple[int, ...]:
        """Normal coordinates of the peripheral curve around puncture ``v``."""
        return tuple((a == v) + (b == v) for a, b in self.edge_ends)

    def self_folded(self, t: int) -> bool:
        return len(set(self.triangles[t])) < 3

    def to_json(self) -> dict:
        return {
            "genus": self.kind.genus,
            "punctures": self.kind.punctures,
            "triangles": [list(t) for t in self.triangles],
            "orientations": [list(o) for o in self.orientations],
        }


def validate(t: IdealTriangulation) -> list[str]:
    """Return every violated invariant of ``t``; an empty list means valid."""
    problems = list(t.kind.problems())
    labels = sorted({e for tri in t.triangles for e in tri})
    if any(len(tri) != 3 for tri in t.triangles):
        problems.append("every triangle needs exactly three sides")
        return problems
    if len(t.orientations) != len(t.triangles) or any(len(o) != 3 for o in t.orientations):
        problems.append("orientation flags must match the triangles")
        return problems
    if any(f not in (1, -1) for o in t.orientations for f in o):
        problems.append("orientation flags must be +1 or -1")
    if labels and (labels[0] < 0 or labels != list(range(labels[-1] + 1))):
        problems.append(f"edge labels are not 0..{len(labels) - 1}")
        return problems

    degree_ok = True
    for e, occ in enumerate(t.sides):
        if len(occ) != 2:
            problems.append(f"edge degree != 2: edge {e} occurs {len(occ)} times")
            degree_ok = False
        elif t.flag(*occ[0]) == t.flag(*occ[1]):
            problems.append(f"edge {e} glued with matching orientation flags (non-orientable)")

    chi = t.kind.euler_characteristic
    if chi < 0:
        if t.num_triangles != -2 * chi:
            problems.append(f"triangle count {t.num_triangles} != {-2 * chi} for {t.kind}")
        if t.num_edges != -3 * chi:
            problems.append(f"edge count {t.num_edges} != {-3 * chi} for {t.kind}")

    if t.num_triangles == 0:
        problems.append("no triangles")
        return problems

    # connectivity of the dual gluing graph
    adj: dict[int, set[int]] = {k: set() for k in range(t.num_triangles)}
    for occ in t.sides:
        if len(occ) == 2:
            adj[occ[0][0]].add(occ[1][0])
            adj[occ[1][0]].add(occ[0][0])
    seen, stack = {0}, [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != t.num_triangles:
        problems.append(f"not connected: dual gluing graph has {t.num_triangles - len(seen)} unreachable triangles")

    if degree_ok and t.num_vertices != t.kind.punctures:
        problems.append(f"corner orbits {t.num_vertices} != punctures {t.kind.punctures}")
    return problems


# -- standard constructions ---------------------------------------------------

def _cone(kind: SurfaceKind, triangles: list[list[int]], flags: list[list[int]],
          target: int = 0) -> IdealTriangulation:
    """Add a puncture inside triangle ``target``, splitting it into three."""
    (x, y, z), (fx, fy, fz) = triangles[target], flags[target]
    m = 1 + max(e for tri in triangles for e in tri)
    n0, n1, n2 = m, m + 1, m + 2  # edges from the new puncture to corners 0, 1, 2
    triangles[target], flags[target] = [x, n2, n1], [fx, -1, 1]
    triangles.append([y, n0, n2])
    flags.append([fy, -1, 1])
    triangles.append([z, n1, n0])
    flags.append([fz, -1, 1])
    return IdealTriangulation.build(SurfaceKind(kind.genus, kind.punctures + 1), triangles, flags)


def standard_triangulation(kind: SurfaceKind) -> IdealTriangulation:
    """Deterministic triangulation of S_{g,n} for g in {0, 1}.

    Seeds are the two-triangle once-punctured torus and the doubled triangle
    for the thrice-punctured sphere; further punctures are coned into
    triangle 0.
    """
    kind.check()
    if kind.genus == 1:
        tris, flags, seed = [[0, 1, 2], [0, 1, 2]], [[1, 1, 1], [-1, -1, -1]], 1
    elif kind.genus == 0:
        tris, flags, seed = [[0, 1, 2], [0, 2, 1]], [[1, 1, 1], [-1, -1, -1]], 3
    else:
        raise TriangulationError(f"unsupported surface {kind}: only genus 0 and 1 are constructed")
    t = IdealTriangulation.build(SurfaceKind(kind.genus, seed), tris, flags)
    for _ in range(kind.punctures - seed):
        t = _cone(t.kind, [list(r) for r in t.triangles], [list(r) for r in t.orientations])
    return t


# -- flips ---------------------------------------------------------------------

def flip_is_legal(t: IdealTriangulation, e: int) -> bool:
    (a, _), (b, _) = t.sides[e]
    return a != b and not t.self_folded(a) and not t.self_folded(b)


def flip(t: IdealTriangulation, e: int) -> IdealTriangulation:
    """Exchange the diagonal ``e`` of its quadrilateral; the label is reused."""
    if not 0 <= e < t.num_edges:
        raise TriangulationError(f"no edge {e}")
    (ta, i), (tb, j) = t.sides[e]
    if not flip_is_legal(t, e):
        raise TriangulationError(f"illegal flip of edge {e}: triangles {ta} and {tb} are self-folded or equal")
    A, B = t.triangles[ta], t.triangles[tb]
    FA, FB = t.orientations[ta], t.orientations[tb]
    # quadrilateral P, Q, P', R counterclockwise; P, P' are the apexes
    pq, rp = (i + 2) % 3, (i + 1) % 3
    qp2, p2r = (j + 1) % 3, (j + 2) % 3
    tris = [list(r) for r in t.triangles]
    flags = [list(r) for r in t.orientations]
    # new edge runs P -> P'
    tris[ta], flags[ta] = [B[qp2], e, A[pq]], [FB[qp2], -1, FA[pq]]
    tris[tb], flags[tb] = [A[rp], e, B[p2r]], [FA[rp], 1, FB[p2r]]
    return IdealTriangulation.build(t.kind, tris, flags)


# -- relabeling and symmetries ---------------------------------------------------

_ROTATIONS = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
_REFLECTIONS = ((0, 2, 1), (2, 1, 0), (1, 0, 2))


@dataclass(frozen=True)
class Symmetry:
    """Combinatorial automorphism: triangle ``t`` side ``i`` goes to
    triangle ``triangle_map[t]`` side ``side_maps[t][i]``."""

    triangle_map: tuple[int, ...]
    side_maps: tuple[tuple[int, int, int], ...]
    edge_map: tuple[int, ...]
    vertex_map: tuple[int, ...]
    orientation_preserving: bool

    def apply_weights(self, weights: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(weights)
        for e, w in enumerate(weights):
            out[self.edge_map[e]] = w
        return tuple(out)

    @property
    def is_identity(self) -> bool:
        return (all(k == t for t, k in enumerate(self.triangle_map))
                and all(s == (0, 1, 2) for s in self.side_maps))


def _extend(t: IdealTriangulation, t0: int, image: int, sigma0: tuple[int, int, int],
            group: tuple[tuple[int, int, int], ...]) -> Symmetry | None:
    """Propagate the choice (t0 -> image, sigma0) through the gluings."""
    tmap = {t0: image}
    smap = {t0: sigma0}
    stack = [t0]
    while stack:
        s = stack.pop()
        for i in range(3):
            u, j = t.glue[(s, i)]
            iu, ij = t.glue[(tmap[s], smap[s][i])]
            if u in tmap:
                if tmap[u] != iu or smap[u][j] != ij:
                    return None
                continue
            # side j of u must land on side ij of iu
            for sigma in group:
                if sigma[j] == ij:
                    break
            else:  # pragma: no cover - every group acts transitively on sides
                return None
            if iu in tmap.values():
                return None
            tmap[u], smap[u] = iu, sigma
            stack.append(u)
    if len(tmap) != t.num_triangles:
        return None
    tm = tuple(tmap[k] for k in range(t.num_triangles))
    sm = tuple(smap[k] for k in range(t.num_triangles))
    if not _check_symmetry(t, tm, sm):
        return None
    edge_map = tuple(t.triangles[tm[a]][sm[a][i]] for a, i in (occ[0] for occ in t.sides))
    vmap = [0] * t.num_vertices
    for a in range(t.num_triangles):
        for k in range(3):
            vmap[t.corner_vertex[a][k]] = t.corner_vertex[tm[a]][sm[a][k]]
    return Symmetry(tm, sm, edge_map, tuple(vmap), group is _ROTATIONS)


def _check_symmetry(t: IdealTriangulation, tm, sm) -> bool:
    """Re-check every gluing and corner identification under the map."""
    if sorted(tm) != list(range(t.num_triangles)):
        return False
    for a in range(t.num_triangles):
        for i in range(3):
            u, j = t.glue[(a, i)]
            if t.glue[(tm[a], sm[a][i])] != (tm[u], sm[u][j]):
                return False
    # corners glued together must stay glued together
    for a in range(t.num_triangles):
        for i in range(3):
            u, j = t.glue[(a, i)]
            for k_a, k_u in (((i + 1) % 3, (j + 2) % 3), ((i + 2) % 3, (j + 1) % 3)):
                if t.corner_vertex[tm[a]][sm[a][k_a]] != t.corner_vertex[tm[u]][sm[u][k_u]]:
                    return False
    return True


def symmetries(t: IdealTriangulation, orientation_reversing: bool = True) -> list[Symmetry]:
    """All combinatorial automorphisms of ``t``, identity first."""
    groups = [_ROTATIONS] + ([_REFLECTIONS] if orientation_reversing else [])
    found = []
    for group in groups:
        for image in range(t.num_triangles):
            for sigma in group:
                sym = _extend(t, 0, image, sigma, group)
                if sym is not None:
                    found.append(sym)
    found.sort(key=lambda s: (not s.is_identity, not s.orientation_preserving, s.triangle_map, s.side_maps))
    return found


def canonical_form(t: IdealTriangulation) -> tuple:
    """Relabeling-invariant encoding (orientation-preserving relabelings)."""
    best = None
    for start in range(t.num_triangles):
        for rot in range(3):
            tri_label = {start: 0}
            shift = {start: rot}
            order = [start]
            edge_label: dict[int, int] = {}
            code = []
            k = 0
            while k < len(order):
                s = order[k]
                k += 1
                row = []
                for d in range(3):
                    i = (d + shift[s]) % 3
                    e = t.triangles[s][i]
                    if e not in edge_label:
                        edge_label[e] = len(edge_label)
                    u, j = t.glue[(s, i)]
                    if u not in tri_label:
                        tri_label[u] = len(tri_label)
                        # put the entry side first
                        shift[u] = j
                        order.append(u)
                    row.append((edge_label[e], tri_label[u], (j - shift[u]) % 3))
                code.append(tuple(row))
            enc = tuple(code)
            if best is None or enc < best:
                best = enc
    return best


def is_isomorphic(s: IdealTriangulation, t: IdealTriangulation) -> bool:
    return s.kind == t.kind and canonical_form(s) == canonical_form(t)


# -- file format ---------------------------------------------------------------

def triangulation_from_json(data: dict) -> IdealTriangulation:
    try:
        kind = SurfaceKind(int(data["genus"]), int(data["punctures"]))
        t = IdealTriangulation.build(kind, data["triangles"], data["orientations"])
    except (KeyError, TypeError) as exc:
        raise TriangulationError(f"malformed triangulation record: {exc}") from None
    problems = validate(t)
    if problems:
        raise TriangulationError("invalid triangulation: " + "; ".join(problems))
    return t


def load_triangulation(path: str | Path) -> IdealTriangulation:
    return triangulation_from_json(json.loads(Path(path).read_text()))


def save_triangulation(t: IdealTriangulation, path: str | Path) -> None:
    Path(path).write_text(json.dumps(t.to_json()) + "\n")
