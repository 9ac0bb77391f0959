"""Pants decompositions and their adjacency graphs.

Concrete decompositions come from maximal cliques of the disjointness graph
of a census.  Abstract decompositions are pants graphs: one vertex per pair
of pants, one edge per curve (loops allowed), and a puncture count per
vertex; vertex degree plus punctures is always three.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import networkx as nx

from .census import Census, bits
from .classify import cut_multicurve
from .curves import NormalCurve
from .surface import SurfaceKind

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PantsDecomposition:
    curves: tuple[NormalCurve, ...]
    indices: tuple[int, ...] = ()  # census indices, when taken from a census
    census_complete: bool = False

    def __len__(self) -> int:
        return len(self.curves)


@dataclass(frozen=True)
class AdjacencyGraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def adjacent(self, a: int, b: int) -> bool:
        return frozenset((a, b)) in self.edges

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    def has_triangle(self) -> bool:
        return any(nx.triangles(self.to_networkx()).values())

    def shape(self) -> str:
        """'path', 'cycle', 'triangle-free', or 'triangle'."""
        g = self.to_networkx()
        if any(nx.triangles(g).values()):
            return "triangle"
        degs = sorted(d for _, d in g.degree())
        if nx.is_connected(g):
            if len(g) >= 3 and all(d == 2 for d in degs):
                return "cycle"
            if len(g) == 1 or (degs.count(1) == 2 and all(d <= 2 for d in degs)):
                return "path"
        return "triangle-free"

    def to_dot(self, name: str = "G", labels: dict[int, str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in sorted(self.vertices):
            lab = labels.get(v, str(v)) if labels else str(v)
            lines.append(f'  {v} [label="{lab}"];')
        for a, b in sorted(tuple(sorted(e)) for e in self.edges):
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- concrete decompositions -------------------------------------------------------

def disjointness_graph(census: Census, members=None) -> nx.Graph:
    idx = range(len(census)) if members is None else members
    g = nx.Graph()
    g.add_nodes_from(idx)
    allowed = census.mask_where(lambda k: True) if members is None else sum(1 << k for k in members)
    for k in idx:
        for j in bits(census.disjoint_mask(k) & allowed):
            if j > k:
                g.add_edge(k, j)
    return g


@dataclass
class DecompositionSearch:
    decompositions: list[PantsDecomposition]
    truncated: list[tuple[int, ...]] = field(default_factory=list)  # smaller maximal cliques


def maximal_disjoint_sets(census: Census) -> DecompositionSearch:
    """Maximal cliques of the census disjointness graph, split by size."""
    size = census.triangulation.kind.complexity
    out, small = [], []
    for clique in nx.find_cliques(disjointness_graph(census)):
        clique = tuple(sorted(clique))
        if len(clique) == size:
            for x, y in itertools.combinations(clique, 2):
                assert census.i(x, y) == 0
            # census-complete: no census curve outside the set is disjoint from all of it
            common = (1 << len(census)) - 1
            for k in clique:
                common &= census.disjoint_mask(k)
            complete = common == 0
            out.append(PantsDecomposition(tuple(census.curves[k] for k in clique), clique, complete))
        else:
            small.append(clique)
    out.sort(key=lambda p: p.indices)
    small.sort()
    return DecompositionSearch(out, small)


def pants_of(p: PantsDecomposition):
    """Cut along a decomposition; returns (cut result, component -> position in ``p``)."""
    curves = p.curves
    t = curves[0].triangulation
    total = [sum(ws) for ws in zip(*(c.weights for c in curves))]
    res = cut_multicurve(t, total)
    where = {c.weights: k for k, c in enumerate(curves)}
    comp_to_pos = {}
    for ci, comp in enumerate(res.trace.components):
        if comp.weights not in where:
            raise ValueError("curves of the decomposition are not pairwise disjoint")
        comp_to_pos[ci] = where[comp.weights]
    if len(comp_to_pos) != len(curves):
        raise ValueError("decomposition curves are not distinct")
    return res, comp_to_pos


def adjacency_graph(p: PantsDecomposition) -> AdjacencyGraph:
    """Curves are vertices; two are adjacent when they bound a common pair of pants."""
    res, pos = pants_of(p)
    kind = p.curves[0].triangulation.kind
    assert len(res.sides) == -kind.euler_characteristic, "wrong number of pants"
    edges = set()
    for side in res.sides:
        assert side.genus == 0 and len(side.punctures) + side.boundary_count == 3, "piece is not a pair of pants"
        members = sorted({pos[c] for c, _ in side.boundaries})
        for a, b in itertools.combinations(members, 2):
            edges.add(frozenset((a, b)))
    return AdjacencyGraph(tuple(range(len(p.curves))), frozenset(edges))


def adjacency_via_witness(p: PantsDecomposition, a: int, b: int, census: Census) -> int | None:
    """Census index of a curve meeting curves ``a`` and ``b`` of ``p`` and missing the rest.

    ``a`` and ``b`` are positions in ``p``; ``p`` must carry census indices.
    """
    if a == b:
        raise ValueError("adjacency needs two distinct curves")
    ia, ib = p.indices[a], p.indices[b]
    others = [p.indices[k] for k in range(len(p.curves)) if k not in (a, b)]
    every = (1 << len(census)) - 1
    cand = every & ~census.disjoint_mask(ia) & ~census.disjoint_mask(ib)
    cand &= ~((1 << ia) | (1 << ib))
    for c in others:
        cand &= census.disjoint_mask(c)
    return next(bits(cand), None)


def decomposition_to_abstract(p: PantsDecomposition) -> "AbstractPantsDecomposition":
    res, pos = pants_of(p)
    npants = len(res.sides)
    mult = [[0] * npants for _ in range(npants)]
    where: dict[int, list[int]] = {}
    for v, side in enumerate(res.sides):
        for c, _ in side.boundaries:
            where.setdefault(c, []).append(v)
    for c, vs in where.items():
        u, v = sorted(vs)
        mult[u][v] += 1
        if u != v:
            mult[v][u] += 1
    return AbstractPantsDecomposition(tuple(len(s.punctures) for s in res.sides), tuple(tuple(r) for r in mult))


# -- abstract decompositions ------------------------------------------------------------

@dataclass(frozen=True)
class AbstractPantsDecomposition:
    """``punctures[v]`` punctures on pants ``v``; ``mult[u][v]`` curves joining u and v
    (``mult[v][v]`` counts loops, each using two slots of v)."""

    punctures: tuple[int, ...]
    mult: tuple[tuple[int, ...], ...]

    @property
    def num_pants(self) -> int:
        return len(self.punctures)

    def curves(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.num_pants):
            for v in range(u, self.num_pants):
                out.extend([(u, v)] * self.mult[u][v])
        return out

    def adjacency_graph(self) -> AdjacencyGraph:
        cs = self.curves()
        edges = set()
        for x, y in itertools.combinations(range(len(cs)), 2):
            if set(cs[x]) & set(cs[y]):
                edges.add(frozenset((x, y)))
        return AdjacencyGraph(tuple(range(len(cs))), frozenset(edges))

    def pants_type(self, v: int) -> str:
        loops = self.mult[v][v]
        others = sum(self.mult[v][u] for u in range(self.num_pants) if u != v)
        p = self.punctures[v]
        if loops == 1 and others == 1 and p == 0:
            return "torus with one boundary"
        if loops == 0 and p == 1 and others == 2:
            return "punctured annulus"
        if loops == 0 and p == 2 and others == 1:
            return "twice-punctured disk"
        if loops == 0 and p == 0 and others == 3:
            return "three curves"
        return "other"

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for v in range(self.num_pants):
            g.add_node(v, label=f"{self.punctures[v]}/{self.mult[v][v]}")
        for u in range(self.num_pants):
            for v in range(u + 1, self.num_pants):
                if self.mult[u][v]:
                    g.add_edge(u, v, m=str(self.mult[u][v]))
        return g

    def isomorphic(self, other: "AbstractPantsDecomposition") -> bool:
        if sorted(self.punctures) != sorted(other.punctures):
            return False
        return nx.is_isomorphic(self.to_networkx(), other.to_networkx(),
                                node_match=lambda x, y: x["label"] == y["label"],
                                edge_match=lambda x, y: x["m"] == y["m"])

    def invariant(self) -> str:
        return nx.weisfeiler_lehman_graph_hash(self.to_networkx(), node_attr="label", edge_attr="m")

    def to_json(self) -> dict:
        return {
            "shape": classify_shape(self) if len(self.curves()) - self.num_pants + 1 == 1 else None,
            "pants_types": [self.pants_type(v) for v in range(self.num_pants)],
            "punctures": list(self.punctures),
            "curves": [list(c) for c in self.curves()],
        }


def _connected(mult) -> bool:
    n = len(mult)
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for v in range(n):
            if mult[u][v] and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def _puncture_distributions(p: int, n: int):
    """Nonincreasing tuples of length p, entries in 0..3, summing to n."""
    def rec(k, left, cap):
        if k == p:
            if left == 0:
                yield ()
            return
        for x in range(min(cap, left, 3), -1, -1):
            for rest in rec(k + 1, left - x, x):
                yield (x,) + rest
    yield from rec(0, n, 3)


def enumerate_abstract(kind: SurfaceKind) -> list[AbstractPantsDecomposition]:
    """All pants graphs realizing ``kind``, one per isomorphism class.

    Adjacency matrices are generated cell by cell against the remaining
    degrees; duplicates are removed with a Weisfeiler-Lehman hash followed by
    an exact isomorphism test.  The representative kept is the first one
    generated, so the output is deterministic.
    """
    p = -kind.euler_characteristic
    if p < 1 or p > 8:
        raise ValueError(f"{kind}: enumeration supports 1..8 pants")
    n = kind.punctures
    buckets: dict[str, list[AbstractPantsDecomposition]] = {}
    for punct in _puncture_distributions(p, n):
        deg = [3 - x for x in punct]
        mult = [[0] * p for _ in range(p)]
        cells = [(u, v) for u in range(p) for v in range(u, p)]

        def rec(k, left):
            if k == len(cells):
                if not any(left):
                    m = tuple(tuple(r) for r in mult)
                    if _connected(m):
                        a = AbstractPantsDecomposition(punct, m)
                        same = buckets.setdefault(a.invariant(), [])
                        if not any(a.isomorphic(b) for b in same):
                            same.append(a)
                return
            u, v = cells[k]
            if u == v:
                top = left[u] // 2
            else:
                top = min(left[u], left[v])
            # row u must be exhausted once its last cell is placed
            for x in range(top + 1):
                if u == v:
                    left[u] -= 2 * x
                else:
                    left[u] -= x
                    left[v] -= x
                if v != p - 1 or left[u] == 0:
                    mult[u][v] = mult[v][u] = x
                    rec(k + 1, left)
                    mult[u][v] = mult[v][u] = 0
                if u == v:
                    left[u] += 2 * x
                else:
                    left[u] += x
                    left[v] += x

        rec(0, deg)
    return sorted((a for same in buckets.values() for a in same), key=lambda a: (a.punctures, a.mult))


def classify_shape(a: AbstractPantsDecomposition) -> str:
    """'linear', 'cyclic' or 'other' for a decomposition of a genus-one surface."""
    genus = len(a.curves()) - a.num_pants + 1
    if genus != 1:
        raise ValueError(f"shape classification needs genus one, got genus {genus}")
    types = [a.pants_type(v) for v in range(a.num_pants)]
    simple = nx.Graph()
    simple.add_nodes_from(range(a.num_pants))
    for u, v in a.curves():
        if u != v:
            simple.add_edge(u, v)
    if all(ty == "punctured annulus" for ty in types) and nx.is_connected(simple):
        return "cyclic"
    if (types.count("torus with one boundary") == 1 and types.count("twice-punctured disk") == 1
            and types.count("punctured annulus") == a.num_pants - 2
            and nx.is_tree(simple) and max(d for _, d in simple.degree()) <= 2):
        return "linear"
    return "other"


@dataclass
class LinearCyclicReport:
    kind: SurfaceKind
    classes: int
    triangle_free: int
    shapes: dict[str, int]
    violations: list[AbstractPantsDecomposition]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "surface": str(self.kind),
            "classes": self.classes,
            "triangle_free": self.triangle_free,
            "shapes": dict(sorted(self.shapes.items())),
            "violations": [v.to_json() for v in self.violations],
        }


def verify_linear_or_cyclic(kind: SurfaceKind) -> LinearCyclicReport:
    """Every triangle-free adjacency graph must come from a linear or cyclic decomposition."""
    if kind.genus != 1 or kind.punctures < 4:
        raise ValueError("the linear-or-cyclic claim concerns S_1,n with n >= 4")
    classes = enumerate_abstract(kind)
    shapes: dict[str, int] = {}
    bad = []
    tf = 0
    for a in classes:
        if a.adjacency_graph().has_triangle():
            continue
        tf += 1
        shape = classify_shape(a)
        shapes[shape] = shapes.get(shape, 0) + 1
        if shape == "other":
            bad.append(a)
    return LinearCyclicReport(kind, len(classes), tf, shapes, bad)
