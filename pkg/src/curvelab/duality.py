"""Dual curve pairs, the classes N and N', small sides, and 2-curve triangulations.

On a genus-one surface with n punctures, N holds the nonseparating curves
and the 2-curves; N' holds the 3-curves and the n-curves.  Two curves of N
are dual when both are nonseparating with i = 1, or both are 2-curves with
i = 2.  Most functions here work on census indices so that intersection
rows and side labels are computed once.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import networkx as nx

from .census import Census, bits
from .classify import CurveType, PreconditionError, Side, curve_type, cut_along
from .curves import NormalCurve
from .intersection import intersection_fast

log = logging.getLogger(__name__)


class HardFailure(AssertionError):
    """A computed fact contradicts a statement the checks rely on."""


NONSEP_DUAL = "nonseparating-dual"
TWOCURVE_DUAL = "twocurve-dual"


def _dual_kind(ta: CurveType, tb: CurveType, i: int) -> str | None:
    if ta.tag == tb.tag == "nonseparating" and i == 1:
        return NONSEP_DUAL
    if ta.k == tb.k == 2 and i == 2:
        return TWOCURVE_DUAL
    return None


@dataclass(frozen=True)
class DualPair:
    a: NormalCurve
    b: NormalCurve
    kind: str


def dual_pair(a: NormalCurve, b: NormalCurve) -> DualPair | None:
    kind = _dual_kind(curve_type(a), curve_type(b), intersection_fast(a, b))
    return DualPair(a, b, kind) if kind else None


def is_dual(a: NormalCurve, b: NormalCurve) -> bool:
    return dual_pair(a, b) is not None


def in_N(ty: CurveType) -> bool:
    return ty.tag == "nonseparating" or ty.k == 2


def in_N_prime(ty: CurveType, n: int) -> bool:
    return ty.k is not None and ty.k in (3, n)


@dataclass
class CurveClassSets:
    N: list[int]
    N_prime: list[int]

    @classmethod
    def of(cls, census: Census) -> "CurveClassSets":
        kind = census.triangulation.kind
        if kind.genus != 1:
            raise PreconditionError("N and N' are defined on genus-one surfaces")
        n = kind.punctures
        N = [k for k in range(len(census)) if in_N(census.type(k))]
        Np = [k for k in range(len(census)) if in_N_prime(census.type(k), n)]
        assert not set(N) & set(Np)
        return cls(N, Np)


def census_is_dual(census: Census, a: int, b: int) -> bool:
    return a != b and _dual_kind(census.type(a), census.type(b), census.i(a, b)) is not None


# -- small sides ---------------------------------------------------------------------

def _is_small(side: Side) -> bool:
    if side.boundary_count != 1:
        return False
    return (side.genus, len(side.punctures)) in ((1, 0), (0, 3))


def small_sides(z: NormalCurve) -> list[Side]:
    kind = z.triangulation.kind
    ty = curve_type(z)
    if kind.genus != 1 or not in_N_prime(ty, kind.punctures):
        raise PreconditionError(f"curve {z.weights} is not a 3-curve or {kind.punctures}-curve")
    return [s for s in cut_along(z).sides if _is_small(s)]


def _small_keys(census: Census, z: int) -> set[frozenset[int]]:
    """Puncture sets naming the small sides of census curve ``z``."""
    n = census.triangulation.kind.punctures
    k = census.type(z).k
    zero = census.genus_zero_punctures(z)
    keys = set()
    if k == 3:
        keys.add(zero)
    if k == n:
        keys.add(frozenset())  # the genus-one side carries no punctures
    return keys


# -- the characterization ----------------------------------------------------------------

@dataclass(frozen=True)
class DualityWitness:
    z: int
    x: int
    y: int
    bound: int  # census bound at which it was found


def _witness_in(census: Census, a: int, b: int, zs) -> DualityWitness | None:
    full = (1 << len(census)) - 1
    da, db = census.disjoint_mask(a), census.disjoint_mask(b)
    meets_a = full & ~da & ~(1 << a)
    meets_b = full & ~db & ~(1 << b)
    for z in zs:
        dz = census.disjoint_mask(z)
        if not ((dz >> a) & 1 and (dz >> b) & 1):
            continue
        side = census.side(z, a)
        if side != census.side(z, b) or side not in _small_keys(census, z):
            continue
        meets_z = full & ~dz & ~(1 << z)
        xs = meets_z & meets_a & db
        ys = meets_z & meets_b & da
        if xs and ys:
            return DualityWitness(z, next(bits(xs)), next(bits(ys)), census.bound)
    return None


@dataclass
class WitnessSearch:
    witness: DualityWitness | None
    bounds: tuple[int, ...]  # bounds tried, in order

    @property
    def found(self) -> bool:
        return self.witness is not None


def duality_witness(census: Census, a: int, b: int, step: int = 4, limit: int = 2) -> WitnessSearch:
    """Look for z in N' and curves x, y with: a and b on one small side of z,
    x meeting z and a but not b, y meeting z and b but not a.

    The base census is searched first, then escalated by ``step`` up to
    ``limit`` times.  Indices of ``a`` and ``b`` stay valid in the larger
    censuses because they share the base as a prefix.
    """
    if a == b:
        return WitnessSearch(None, ())
    n = census.triangulation.kind.punctures
    tried = []
    for level in range(limit + 1):
        c = census.escalate(level * step)
        tried.append(c.bound)
        zs = [z for z in range(len(c)) if in_N_prime(c.type(z), n)]
        w = _witness_in(c, a, b, zs)
        if w is not None:
            return WitnessSearch(w, tuple(tried))
    return WitnessSearch(None, tuple(tried))


def disjoint_dual_count(census: Census, c: int) -> int:
    """Largest set of pairwise disjoint census curves all dual to curve ``c``."""
    duals = [k for k in range(len(census)) if census_is_dual(census, c, k)]
    if not duals:
        return 0
    g = nx.Graph()
    g.add_nodes_from(duals)
    mask = sum(1 << k for k in duals)
    for k in duals:
        g.add_edges_from((k, j) for j in bits(census.disjoint_mask(k) & mask) if j > k)
    return max(len(q) for q in nx.find_cliques(g))


# -- triangles and 2-curve triangulations -----------------------------------------------

def shared_puncture(census: Census, a: int, b: int) -> int:
    """The puncture on the genus-0 side of both members of a dual 2-curve pair."""
    if not (census.type(a).k == census.type(b).k == 2 and census.i(a, b) == 2):
        raise PreconditionError("shared_puncture needs a dual pair of 2-curves")
    common = census.genus_zero_punctures(a) & census.genus_zero_punctures(b)
    if len(common) != 1:
        raise HardFailure(f"dual 2-curves {census.curves[a].weights}, {census.curves[b].weights} "
                          f"share punctures {sorted(common)}")
    return next(iter(common))


@dataclass(frozen=True)
class Triangle:
    curves: tuple[int, int, int]
    z: int  # a 3-curve whose genus-0 side holds all three


def _two_curves(census: Census) -> list[int]:
    return [k for k in range(len(census)) if census.type(k).k == 2]


def find_triangles(census: Census) -> list[Triangle]:
    twos = _two_curves(census)
    threes = [k for k in range(len(census)) if census.type(k).k == 3]
    out = []
    for tri in itertools.combinations(twos, 3):
        if not all(census.i(x, y) == 2 for x, y in itertools.combinations(tri, 2)):
            continue
        for z in threes:
            dz = census.disjoint_mask(z)
            zero = census.genus_zero_punctures(z)
            if all((dz >> x) & 1 and census.side(z, x) == zero for x in tri):
                out.append(Triangle(tri, z))
                break
    return out


def arcs_disjoint(census: Census, a: int, b: int) -> bool:
    """Disjointness of the arcs carried by two 2-curves: the curves are disjoint or dual."""
    return a != b and (census.i(a, b) == 0 or census.i(a, b) == 2)


@dataclass
class TriangulationSearch:
    triangulations: list[tuple[int, ...]]  # maximal pairwise disjoint-or-dual 2-curve sets

    @property
    def sizes(self) -> set[int]:
        return {len(q) for q in self.triangulations}


def two_curve_triangulations(census: Census) -> TriangulationSearch:
    """Maximal sets of 2-curves that are pairwise disjoint or dual.

    Each 2-curve stands for the arc joining the two punctures on its planar
    side.  Two disjoint arcs with the same pair of endpoints give 2-curves
    meeting four times, so such a set holds at most one arc per pair of
    punctures.
    """
    twos = _two_curves(census)
    g = nx.Graph()
    g.add_nodes_from(twos)
    g.add_edges_from((a, b) for a, b in itertools.combinations(twos, 2) if arcs_disjoint(census, a, b))
    return TriangulationSearch(sorted(tuple(sorted(q)) for q in nx.find_cliques(g)) if twos else [])


def triangles_of(census: Census, tri_set: tuple[int, ...]) -> list[tuple[int, int, int]]:
    """Triples of pairwise dual 2-curves inside a 2-curve triangulation."""
    return [q for q in itertools.combinations(tri_set, 3)
            if all(census.i(x, y) == 2 for x, y in itertools.combinations(q, 2))]


def puncture_action(census: Census, image: dict[int, int]) -> dict[int, int]:
    """Action on punctures induced by a curve map: the puncture shared by a dual
    2-curve pair goes to the puncture shared by the image pair.

    Raises HardFailure when two pairs send one puncture to different places.
    """
    twos = [k for k in _two_curves(census) if k in image]
    action: dict[int, int] = {}
    for a, b in itertools.combinations(twos, 2):
        if census.i(a, b) != 2:
            continue
        p = shared_puncture(census, a, b)
        q = shared_puncture(census, image[a], image[b])
        if action.setdefault(p, q) != q:
            raise HardFailure(f"puncture {p} sent to both {action[p]} and {q}")
    return action


def unique_disjoint_curve(census: Census, members) -> int | None:
    """The only census curve outside ``members`` disjoint from all of them, if exactly one."""
    members = list(members)
    mask = (1 << len(census)) - 1
    for m in members:
        mask &= census.disjoint_mask(m)
    found = list(bits(mask))
    return found[0] if len(found) == 1 else None
