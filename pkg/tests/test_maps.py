import itertools

import pytest

from curvelab.census import Census
from curvelab.maps import (VertexMap, build_snapshot, constant_map, dihedral_images, find_squares,
                           has_square_through, is_superinjective, symmetry_map, verify_adjacency_lemma)
from curvelab.pants import maximal_disjoint_sets
from curvelab.surface import SurfaceKind, standard_triangulation, symmetries
from conftest import census_for


def test_s11_snapshot_small():
    c = census_for(1, 1, 2)
    snap = build_snapshot(c)
    assert len(snap) == 3
    assert snap.edges() == []


def test_snapshot_edges_match_matrix(s12):
    snap = build_snapshot(s12)
    want = [(a, b) for a, b in itertools.combinations(range(len(s12)), 2) if s12.i(a, b) == 0]
    assert snap.edges() == want


def test_link_excludes_members(s13):
    snap = build_snapshot(s13)
    a = 0
    link = snap.link([a])
    assert a not in link.vertices
    assert all(s13.i(a, k) == 0 for k in link.vertices)


def test_squares_on_s13(s13):
    snap = build_snapshot(s13)
    sq = find_squares(snap)
    assert sq
    found = set(sq)
    for q in sq[:200]:
        a1, b1, a2, b2 = q
        assert s13.i(a1, b1) == s13.i(b1, a2) == s13.i(a2, b2) == s13.i(b2, a1) == 0
        assert s13.i(a1, a2) and s13.i(b1, b2)
        assert set(dihedral_images(q)) <= found
    assert has_square_through(snap, sq[0][0], sq[0][1]) is not None


@pytest.mark.parametrize("fixture", ["s05", "s12"])
def test_square_free(request, fixture):
    assert find_squares(build_snapshot(request.getfixturevalue(fixture))) == []


def test_identity_and_symmetries_superinjective():
    t = standard_triangulation(SurfaceKind(1, 2))
    c = Census(t, 10)
    snap = build_snapshot(c)
    ident = VertexMap(snap, snap, {k: k for k in snap.vertices})
    assert is_superinjective(ident).superinjective
    for s in symmetries(t):
        v = is_superinjective(symmetry_map(c, s))
        assert v.superinjective and v.injective


def test_constant_map_fails(s12):
    v = is_superinjective(constant_map(build_snapshot(s12)))
    assert not v.superinjective and not v.injective
    out = v.to_json(s12)
    assert out["superinjective_on_snapshot"] is False
    assert len(out["counterexample"]["curves"]) == 2


def test_swap_of_meeting_and_disjoint(s13):
    snap = build_snapshot(s13)
    a, b = next(q for q in itertools.combinations(range(len(s13)), 2) if s13.i(*q) == 0)
    c = next(k for k in range(len(s13)) if s13.i(a, k))
    f = {k: k for k in snap.vertices}
    f[b], f[c] = c, b
    v = is_superinjective(VertexMap(snap, snap, f))
    assert not v.superinjective and v.injective


def test_partial_map_rejected(s12):
    snap = build_snapshot(s12)
    with pytest.raises(ValueError):
        VertexMap(snap, snap, {0: 0})


def test_adjacency_lemma_on_s13(s13):
    decs = maximal_disjoint_sets(s13).decompositions[:30]
    rep = verify_adjacency_lemma(s13, decs, step=6, limit=2)
    assert rep.ok
    assert rep.count("agree") + rep.count("inconclusive") == 3 * len(decs)
    assert rep.count("agree") > 0
