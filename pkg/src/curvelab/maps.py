"""Finite pieces of the curve complex and maps between them.

A snapshot is the disjointness graph induced on a set of census curves.
Vertex maps between snapshots are checked for superinjectivity (disjoint
pairs go to disjoint pairs, intersecting pairs to intersecting pairs); the
verdict only speaks about the pairs inside the snapshot.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .census import Census, bits
from .pants import PantsDecomposition, adjacency_graph, adjacency_via_witness
from .surface import Symmetry

log = logging.getLogger(__name__)


@dataclass
class SubcomplexSnapshot:
    census: Census
    members: int  # bitset of census indices

    @property
    def vertices(self) -> list[int]:
        return list(bits(self.members))

    def __len__(self) -> int:
        return bin(self.members).count("1")

    def disjoint(self, k: int) -> int:
        """Snapshot vertices disjoint from ``k``, as a bitset (``k`` excluded)."""
        return self.census.disjoint_mask(k) & self.members

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self.vertices for b in bits(self.disjoint(a)) if b > a]

    def restrict(self, mask: int) -> "SubcomplexSnapshot":
        return SubcomplexSnapshot(self.census, self.members & mask)

    def link(self, curves) -> "SubcomplexSnapshot":
        """Curves disjoint from and distinct from every curve in ``curves``."""
        mask = self.members
        for c in curves:
            mask &= self.census.disjoint_mask(c) & ~(1 << c)
        return SubcomplexSnapshot(self.census, mask)


def build_snapshot(census: Census) -> SubcomplexSnapshot:
    return SubcomplexSnapshot(census, (1 << len(census)) - 1)


# -- vertex maps -----------------------------------------------------------------------

@dataclass
class VertexMap:
    domain: SubcomplexSnapshot
    codomain: SubcomplexSnapshot
    assignment: dict[int, int]

    def __post_init__(self):
        missing = [v for v in self.domain.vertices if v not in self.assignment]
        if missing:
            raise ValueError(f"vertex map undefined on {len(missing)} vertices, first {missing[0]}")


@dataclass
class Verdict:
    superinjective: bool
    injective: bool
    counterexample: tuple[int, int] | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self, census: Census | None = None) -> dict:
        out = {"superinjective_on_snapshot": self.superinjective, "injective": self.injective}
        if self.counterexample is not None:
            a, b = self.counterexample
            out["counterexample"] = dict(self.detail)
            if census is not None:
                out["counterexample"]["curves"] = [list(census.curves[a].weights), list(census.curves[b].weights)]
        return out


def is_superinjective(m: VertexMap) -> Verdict:
    dom, cod = m.domain, m.codomain
    f = m.assignment
    injective = len({f[v] for v in dom.vertices}) == len(dom)
    for a, b in itertools.combinations(dom.vertices, 2):
        before = (dom.disjoint(a) >> b) & 1
        fa, fb = f[a], f[b]
        after = 1 if fa == fb else (cod.disjoint(fa) >> fb) & 1
        if before != after:
            detail = {"pair": [a, b], "image": [fa, fb],
                      "disjoint_before": bool(before), "disjoint_after": bool(after)}
            return Verdict(False, injective, (a, b), detail)
    # a superinjective map is injective: two distinct curves either meet or
    # are disjoint, and either way their images must differ
    assert injective, "superinjective map failed to be injective"
    return Verdict(True, injective)


def symmetry_map(census: Census, sym: Symmetry) -> VertexMap:
    """Vertex map on a census induced by a triangulation symmetry."""
    snap = build_snapshot(census)
    assignment = {}
    for k, c in enumerate(census.curves):
        w = sym.apply_weights(c.weights)
        if w not in census.index:
            raise ValueError(f"symmetry moves {c.weights} outside the census")
        assignment[k] = census.index[w]
    return VertexMap(snap, snap, assignment)


def constant_map(snap: SubcomplexSnapshot, target: int | None = None) -> VertexMap:
    vs = snap.vertices
    target = vs[0] if target is None else target
    return VertexMap(snap, snap, {v: target for v in vs})


# -- squares ------------------------------------------------------------------------

def _squares_from(s: SubcomplexSnapshot, a1: int, b1: int):
    """Squares (a1, b1, a2, b2): consecutive curves disjoint, diagonals meeting."""
    da1, db1 = s.disjoint(a1), s.disjoint(b1)
    for a2 in bits(db1 & ~da1 & ~(1 << a1)):
        for b2 in bits(s.disjoint(a2) & da1 & ~db1 & ~(1 << b1)):
            yield (a1, b1, a2, b2)


def find_squares(s: SubcomplexSnapshot) -> list[tuple[int, int, int, int]]:
    """Every ordered square; the set is closed under the dihedral relabelings."""
    out = []
    for a1 in s.vertices:
        for b1 in bits(s.disjoint(a1)):
            out.extend(_squares_from(s, a1, b1))
    return out


def has_square_through(s: SubcomplexSnapshot, a: int, b: int) -> tuple[int, int, int, int] | None:
    return next(_squares_from(s, a, b), None)


def dihedral_images(q):
    a1, b1, a2, b2 = q
    rots = [(a1, b1, a2, b2), (b1, a2, b2, a1), (a2, b2, a1, b1), (b2, a1, b1, a2)]
    return rots + [tuple(reversed(r)) for r in rots]


# -- the adjacency lemma ----------------------------------------------------------------

@dataclass
class PairCheck:
    decomposition: tuple[int, ...]
    pair: tuple[int, int]  # positions in the decomposition
    adjacent: bool
    witness: int | None
    square: tuple[int, int, int, int] | None
    bound: int  # largest census bound searched

    @property
    def status(self) -> str:
        if self.adjacent:
            if self.square is not None:
                return "disagree"
            return "agree" if self.witness is not None else "inconclusive"
        if self.witness is not None:
            return "disagree"
        return "agree" if self.square is not None else "inconclusive"

    def to_json(self) -> dict:
        return {"decomposition": list(self.decomposition), "pair": list(self.pair),
                "adjacent": self.adjacent, "witness": self.witness,
                "square": None if self.square is None else list(self.square),
                "bound": self.bound, "status": self.status}


@dataclass
class AdjacencyReport:
    checks: list[PairCheck]

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    @property
    def ok(self) -> bool:
        return self.count("disagree") == 0

    def summary(self) -> dict:
        return {s: self.count(s) for s in ("agree", "inconclusive", "disagree")}


def verify_adjacency_lemma(census: Census, decompositions: list[PantsDecomposition],
                           step: int = 4, limit: int = 2) -> AdjacencyReport:
    """For every pair of curves in every decomposition, compare cut-based
    adjacency with the two search characterizations.

    Adjacent pairs should have a curve meeting both and missing the rest of
    the decomposition; non-adjacent pairs should sit in a square inside the
    link of the remaining curves.  A witness for a non-adjacent pair or a
    square for an adjacent pair is a disagreement.  Searches run on the
    census, escalated by ``step`` at most ``limit`` times while the expected
    object is still missing.  The unexpected object is looked for at the
    largest bound searched.
    """
    checks = []
    for p in decompositions:
        g = adjacency_graph(p)
        for x, y in itertools.combinations(range(len(p.curves)), 2):
            a, b = p.indices[x], p.indices[y]
            others = [p.indices[k] for k in range(len(p.curves)) if k not in (x, y)]
            adjacent = g.adjacent(x, y)
            witness = square = None
            for level in range(limit + 1):
                c = census.escalate(level * step)
                witness = adjacency_via_witness(p, x, y, c)
                square = has_square_through(build_snapshot(c).link(others), a, b)
                if (witness if adjacent else square) is not None:
                    break
            checks.append(PairCheck(p.indices, (x, y), adjacent, witness, square, c.bound))
    return AdjacencyReport(checks)
