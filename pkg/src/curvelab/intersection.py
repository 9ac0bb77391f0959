"""Geometric intersection numbers of normal curves.

``geometric_intersection`` is the reference: canonical overlay drawing plus
bigon removal (see :mod:`curvelab.overlay`).  ``intersection_fast`` counts
linked lifts in the dual spine and is what the census tables use; the
acceptance suite checks the two against each other on whole censuses.
"""

from __future__ import annotations

from collections import Counter

from .curves import NormalCurve, cyclic_path, trace_components
from .linking import intersection_from_paths
from .overlay import reference_intersection


class CurveMismatch(ValueError):
    pass


def _check_pair(a: NormalCurve, b: NormalCurve) -> None:
    if len(a.weights) != len(b.weights) or a.triangulation.triangles != b.triangulation.triangles:
        raise CurveMismatch("curves live on different triangulations")


def geometric_intersection(a: NormalCurve, b: NormalCurve) -> int:
    _check_pair(a, b)
    return reference_intersection(a.triangulation, a.weights, b.weights)[0]


def intersection_fast(a: NormalCurve, b: NormalCurve, paths: dict | None = None) -> int:
    _check_pair(a, b)
    if a.weights == b.weights:
        return 0
    if paths is None:
        pa, pb = cyclic_path(a), cyclic_path(b)
    else:
        pa = paths.get(a.weights) or paths.setdefault(a.weights, cyclic_path(a))
        pb = paths.get(b.weights) or paths.setdefault(b.weights, cyclic_path(b))
    return intersection_from_paths(a.triangulation, pa, pb)


def disjoint(a: NormalCurve, b: NormalCurve) -> bool:
    return intersection_fast(a, b) == 0


def disjoint_by_sum(a: NormalCurve, b: NormalCurve) -> bool:
    """Disjointness read off the normal sum a + b.

    Disjoint curves have a disjoint normal realization, which is the normal
    multicurve with weights a + b; so the sum splits into exactly a and b
    precisely when i(a, b) = 0.
    """
    _check_pair(a, b)
    total = [x + y for x, y in zip(a.weights, b.weights)]
    parts = Counter(c.weights for c in trace_components(a.triangulation, total).components)
    return parts == Counter([a.weights, b.weights])
