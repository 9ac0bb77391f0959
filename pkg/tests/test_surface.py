import json

import pytest

from curvelab.surface import (IdealTriangulation, SurfaceKind, TriangulationError, canonical_form, flip,
                              flip_is_legal, is_isomorphic, load_triangulation, save_triangulation,
                              standard_triangulation, symmetries, triangulation_from_json, validate)
from oracles import brute_force_symmetries

KINDS = [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (0, 3), (0, 4), (0, 5), (0, 6)]


@pytest.mark.parametrize("g,n", KINDS)
def test_standard_counts_and_validity(g, n):
    kind = SurfaceKind(g, n)
    t = standard_triangulation(kind)
    chi = kind.euler_characteristic
    assert t.num_triangles == -2 * chi
    assert t.num_edges == -3 * chi
    assert t.num_vertices == n
    assert validate(t) == []


@pytest.mark.parametrize("g,n,tri,edges", [(1, 1, 2, 3), (0, 5, 6, 9), (1, 3, 6, 9)])
def test_spec_counts(g, n, tri, edges):
    t = standard_triangulation(SurfaceKind(g, n))
    assert (t.num_triangles, t.num_edges, t.num_vertices) == (tri, edges, n)


def test_surface_kind_rejections():
    for g, n in [(0, 2), (1, 0), (0, 0)]:
        with pytest.raises(ValueError):
            SurfaceKind(g, n).check()
    assert SurfaceKind.parse("1,3") == SurfaceKind(1, 3)
    assert str(SurfaceKind(0, 5)) == "S_0,5"


def test_validate_edge_used_once():
    t = IdealTriangulation.build(SurfaceKind(1, 1), [[0, 1, 2], [0, 1, 3]], [[1, 1, 1], [-1, -1, -1]])
    probs = validate(t)
    assert any(p.startswith("edge degree != 2") for p in probs)


def test_validate_disconnected():
    s = standard_triangulation(SurfaceKind(1, 1))
    # two disjoint copies of the punctured torus
    tris = list(s.triangles) + [tuple(e + 3 for e in tri) for tri in s.triangles]
    t = IdealTriangulation.build(SurfaceKind(1, 1), tris, list(s.orientations) * 2)
    assert any(p.startswith("not connected") for p in validate(t))


def test_validate_wrong_vertex_count():
    s = standard_triangulation(SurfaceKind(1, 1))
    t = IdealTriangulation.build(SurfaceKind(0, 3), s.triangles, s.orientations)
    assert any("corner orbits" in p for p in validate(t))


@pytest.mark.parametrize("g,n", [(1, 1), (1, 2), (1, 3), (0, 4), (0, 5)])
def test_flips_valid_and_involutive(g, n):
    t = standard_triangulation(SurfaceKind(g, n))
    for e in range(t.num_edges):
        if not flip_is_legal(t, e):
            with pytest.raises(TriangulationError):
                flip(t, e)
            continue
        f = flip(t, e)
        assert validate(f) == []
        assert (f.num_triangles, f.num_edges) == (t.num_triangles, t.num_edges)
        if flip_is_legal(f, e):
            assert is_isomorphic(flip(f, e), t)


def test_flip_on_s11_any_edge():
    t = standard_triangulation(SurfaceKind(1, 1))
    for e in range(3):
        assert validate(flip(t, e)) == []


def test_canonical_form_relabeling_invariant():
    t = standard_triangulation(SurfaceKind(1, 2))
    perm = [3, 0, 5, 1, 4, 2]
    tris = [tuple(perm[e] for e in tri) for tri in reversed(t.triangles)]
    relabeled = IdealTriangulation.build(t.kind, tris, list(reversed(t.orientations)))
    assert validate(relabeled) == []
    assert canonical_form(relabeled) == canonical_form(t)


@pytest.mark.parametrize("g,n,order", [(1, 1, 12), (0, 3, 12), (1, 2, 6), (0, 4, 24)])
def test_symmetries_match_brute_force(g, n, order):
    t = standard_triangulation(SurfaceKind(g, n))
    syms = symmetries(t)
    assert len(syms) == order
    assert syms[0].is_identity
    assert {(s.triangle_map, s.side_maps) for s in syms} == brute_force_symmetries(t)


@pytest.mark.parametrize("g,n", [(1, 1), (1, 3), (0, 5)])
def test_symmetries_permute_vertices(g, n):
    t = standard_triangulation(SurfaceKind(g, n))
    for s in symmetries(t):
        assert sorted(s.vertex_map) == list(range(n))
        assert sorted(s.edge_map) == list(range(t.num_edges))


def test_s11_has_edge_rotation():
    t = standard_triangulation(SurfaceKind(1, 1))
    perms = {s.edge_map for s in symmetries(t, orientation_reversing=False)}
    assert (1, 2, 0) in perms or (2, 0, 1) in perms


def test_json_round_trip(tmp_path):
    t = standard_triangulation(SurfaceKind(1, 3))
    path = tmp_path / "t.json"
    save_triangulation(t, path)
    assert load_triangulation(path) == t
    assert triangulation_from_json(json.loads(path.read_text())) == t
