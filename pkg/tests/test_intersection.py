import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from curvelab.classify import cut_multicurve
from curvelab.curves import curve, transport_over_flip
from curvelab.intersection import (CurveMismatch, disjoint, disjoint_by_sum, geometric_intersection,
                                   intersection_fast)
from curvelab.overlay import reference_intersection
from curvelab.surface import SurfaceKind, flip, flip_is_legal, standard_triangulation
from conftest import census_for

S11 = standard_triangulation(SurfaceKind(1, 1))


def test_s11_pair():
    a, b = curve(S11, (0, 1, 1)), curve(S11, (1, 0, 1))
    assert geometric_intersection(a, b) == 1
    assert intersection_fast(a, b) == 1
    assert not disjoint(a, b)


def test_self_intersection_zero(s13):
    for c in s13.curves:
        assert geometric_intersection(c, c) == 0
        assert intersection_fast(c, c) == 0
        assert disjoint(c, c)


def test_mismatched_triangulations():
    s13 = census_for(1, 3, 6)
    with pytest.raises(CurveMismatch):
        geometric_intersection(curve(S11, (0, 1, 1)), s13.curves[0])


def test_dual_two_curves_meet_twice(s13):
    twos = [k for k in range(len(s13)) if s13.type(k).k == 2]
    found = 0
    for a, b in itertools.combinations(twos, 2):
        pa, pb = s13.genus_zero_punctures(a), s13.genus_zero_punctures(b)
        if len(pa & pb) == 1:
            assert geometric_intersection(s13.curves[a], s13.curves[b]) == 2
            found += 1
    assert found


@pytest.mark.parametrize("g,n,bound", [(1, 1, 8), (1, 2, 8), (0, 5, 10), (1, 3, 10)])
def test_reference_matches_fast_path(g, n, bound):
    c = census_for(g, n, bound)
    for a, b in itertools.combinations(range(len(c)), 2):
        ref = geometric_intersection(c.curves[a], c.curves[b])
        assert ref == c.i(a, b) == c.i(b, a)


def test_reference_leaves_no_bigon():
    c = census_for(1, 3, 10)
    rng = random.Random(7)
    for _ in range(40):
        a, b = rng.sample(c.curves, 2)
        n, drawing = reference_intersection(c.triangulation, a.weights, b.weights)
        assert drawing.bigons() == []
        assert drawing.crossings() == n


def test_disjointness_two_ways(s13):
    for a, b in itertools.combinations(range(len(s13)), 2):
        assert disjoint_by_sum(s13.curves[a], s13.curves[b]) == (s13.i(a, b) == 0)


def test_distinct_disjoint_curves_not_parallel(s13):
    # distinct census vectors are never isotopic: cutting along both never leaves an annulus
    for a, b in itertools.combinations(range(len(s13)), 2):
        if s13.i(a, b):
            continue
        total = [x + y for x, y in zip(s13.curves[a].weights, s13.curves[b].weights)]
        sides = cut_multicurve(s13.triangulation, total).sides
        assert all(s.describe() != (0, 0, 2) for s in sides)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 83), st.integers(0, 83), st.integers(0, 8))
def test_flip_transport_preserves_intersection(s13, a, b, e):
    t = s13.triangulation
    if not flip_is_legal(t, e):
        return
    f = flip(t, e)
    ca, cb = transport_over_flip(s13.curves[a], e, f), transport_over_flip(s13.curves[b], e, f)
    assert geometric_intersection(ca, cb) == s13.i(a, b)
