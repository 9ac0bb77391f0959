import itertools

import pytest

from curvelab.census import Census
from curvelab.classify import PreconditionError
from curvelab.duality import (CurveClassSets, HardFailure, census_is_dual, disjoint_dual_count, dual_pair,
                              duality_witness, find_triangles, is_dual, puncture_action, shared_puncture,
                              small_sides, triangles_of, two_curve_triangulations, unique_disjoint_curve)
from curvelab.surface import SurfaceKind, standard_triangulation, symmetries
from conftest import census_for


def _of_type(census, tag=None, k=None):
    return [j for j in range(len(census))
            if (tag is None or census.type(j).tag == tag) and (k is None or census.type(j).k == k)]


def test_s11_duals(s11):
    for a, b in itertools.combinations(range(len(s11)), 2):
        assert census_is_dual(s11, a, b) == (s11.i(a, b) == 1)
        assert is_dual(s11.curves[a], s11.curves[b]) == census_is_dual(s11, a, b)


def test_dual_kinds(s13):
    ns = _of_type(s13, tag="nonseparating")
    twos = _of_type(s13, k=2)
    a, b = next((a, b) for a, b in itertools.combinations(ns, 2) if s13.i(a, b) == 1)
    assert dual_pair(s13.curves[a], s13.curves[b]).kind == "nonseparating-dual"
    a, b = next((a, b) for a, b in itertools.combinations(twos, 2) if s13.i(a, b) == 2)
    assert dual_pair(s13.curves[a], s13.curves[b]).kind == "twocurve-dual"
    # mixed types are never dual
    for a in ns[:10]:
        for b in twos[:10]:
            assert not census_is_dual(s13, a, b)
    assert not census_is_dual(s13, ns[0], ns[0])


def test_class_sets(s13):
    sets = CurveClassSets.of(s13)
    assert sorted(sets.N + sets.N_prime) == list(range(len(s13)))
    assert {s13.type(k).k for k in sets.N_prime} == {3}
    with pytest.raises(PreconditionError):
        CurveClassSets.of(census_for(0, 5, 8))


def test_small_sides(s13):
    z = _of_type(s13, k=3)[0]
    sides = small_sides(s13.curves[z])
    # on S_1,3 a 3-curve is also the n-curve, so both sides are small
    assert len(sides) == 2
    assert {(s.genus, len(s.punctures)) for s in sides} == {(0, 3), (1, 0)}
    with pytest.raises(PreconditionError):
        small_sides(s13.curves[_of_type(s13, k=2)[0]])


def test_small_sides_s14():
    c = census_for(1, 4, 8)
    for k in _of_type(c, k=3) + _of_type(c, k=4):
        sides = small_sides(c.curves[k])
        assert len(sides) == 1
        want = (0, 3) if c.type(k).k == 3 else (1, 0)
        assert (sides[0].genus, len(sides[0].punctures)) == want


def test_witness_identical_pair(s13):
    assert not duality_witness(s13, 0, 0).found


def test_witness_is_valid(s13):
    ns = _of_type(s13, tag="nonseparating")
    found = 0
    for a, b in itertools.combinations(ns[:30], 2):
        res = duality_witness(s13, a, b, step=4, limit=1)
        if not res.found:
            continue
        found += 1
        w = res.witness
        c = s13.escalate(w.bound - s13.bound)
        assert c.i(w.z, a) == c.i(w.z, b) == 0
        assert c.i(w.x, w.z) and c.i(w.x, a) and c.i(w.x, b) == 0
        assert c.i(w.y, w.z) and c.i(w.y, b) and c.i(w.y, a) == 0
    assert found


def test_disjoint_dual_count(s13):
    big = s13.escalate(4)
    for k in _of_type(s13, tag="nonseparating")[:5]:
        assert disjoint_dual_count(big, k) >= 3
    for k in _of_type(s13, k=2):
        assert disjoint_dual_count(big, k) <= 2
    # 3-curves have no duals
    assert disjoint_dual_count(s13, _of_type(s13, k=3)[0]) == 0


def test_shared_puncture(s13):
    twos = _of_type(s13, k=2)
    pairs = [(a, b) for a, b in itertools.combinations(twos, 2) if s13.i(a, b) == 2]
    assert pairs
    for a, b in pairs:
        p = shared_puncture(s13, a, b)
        assert p in s13.genus_zero_punctures(a) & s13.genus_zero_punctures(b)
    # distinct 2-curves on S_1,3 always meet; a pair meeting four times is not dual
    a, b = next((a, b) for a, b in itertools.combinations(twos, 2) if s13.i(a, b) == 4)
    with pytest.raises(PreconditionError):
        shared_puncture(s13, a, b)


def test_triangles_and_triangulations():
    c = census_for(1, 3, 16)
    tris = find_triangles(c)
    assert tris
    for tri in tris:
        assert len({shared_puncture(c, x, y) for x, y in itertools.combinations(tri.curves, 2)}) == 3
    search = two_curve_triangulations(c)
    assert search.sizes == {3}
    for q in search.triangulations:
        assert len(triangles_of(c, q)) <= 1


def test_puncture_action_matches_symmetry():
    t = standard_triangulation(SurfaceKind(1, 3))
    c = Census(t, 12)
    for s in symmetries(t):
        image = {k: c.index[s.apply_weights(cv.weights)] for k, cv in enumerate(c.curves)}
        act = puncture_action(c, image)
        assert act and all(act[p] == s.vertex_map[p] for p in act)


def test_puncture_action_detects_inconsistency():
    s13 = census_for(1, 3, 16)
    twos = _of_type(s13, k=2)
    pairs = [(a, b) for a, b in itertools.combinations(twos, 2) if s13.i(a, b) == 2]
    a, b = pairs[0]
    p = shared_puncture(s13, a, b)
    c, d = next((c, d) for c, d in pairs if shared_puncture(s13, c, d) != p)
    with pytest.raises(HardFailure):
        # two pairs sharing puncture p, one sent to a pair sharing another puncture
        e, f = next((e, f) for e, f in pairs if (e, f) != (a, b) and shared_puncture(s13, e, f) == p
                    and not {e, f} & {a, b, c, d})
        puncture_action(s13, {a: a, b: b, e: c, f: d})


def test_unique_disjoint_curve(s11, s13):
    # on S_1,1 no two curves are disjoint
    assert unique_disjoint_curve(s11, [0]) is None
    p = next(q for q in itertools.combinations(range(len(s13)), 2) if s13.i(*q) == 0)
    found = unique_disjoint_curve(s13, p)
    if found is not None:
        assert all(s13.i(found, k) == 0 for k in p)
