import itertools

import pytest

from curvelab.classify import curve_type
from curvelab.cover import (COVER_KIND, CoverError, build_cover, build_cover_with_holonomy, check_vertex_links,
                            holonomy, is_deck_automorphism, lift_curve, lifts_disjoint, solve_gf2,
                            special_on_two_side, type_in_s12)
from curvelab.surface import SurfaceKind, standard_triangulation, validate


@pytest.fixture(scope="module")
def base():
    return standard_triangulation(SurfaceKind(0, 5))


def test_solve_gf2():
    x = solve_gf2([[1, 1, 0], [0, 1, 1]], [1, 0])
    assert (x[0] ^ x[1], x[1] ^ x[2]) == (1, 0)
    assert solve_gf2([[1, 1], [1, 1]], [0, 1]) is None
    assert solve_gf2([], []) == []


@pytest.mark.parametrize("special", range(5))
def test_cover_structure(base, special):
    cv = build_cover(base, special)
    assert cv.total.kind == COVER_KIND
    assert not validate(cv.total)
    assert check_vertex_links(cv) == []
    assert is_deck_automorphism(cv)
    assert len(cv.branch_punctures) == 4
    over_special = [v for v in range(cv.total.num_vertices) if cv.project_vertex(v) == special]
    assert len(over_special) == 2
    for v in range(5):
        assert cv.holonomy(base.vertex_link(v)) == (0 if v == special else 1)
    for tri in base.triangles:
        assert holonomy(cv.cocycle, [1 if e in tri else 0 for e in range(base.num_edges)]) == 0


def test_bad_inputs(base):
    with pytest.raises(CoverError):
        build_cover(base, 7)
    with pytest.raises(CoverError):
        build_cover(standard_triangulation(SurfaceKind(1, 2)), 0)
    with pytest.raises(CoverError):
        build_cover_with_holonomy(base, 0, [1, 0, 0, 0, 0])


def test_lift_rules(s05):
    for special in range(5):
        cv = build_cover(s05.triangulation, special)
        for c in s05.curves:
            lift = lift_curve(cv, c)
            assert len(lift.components) == 2 - lift.holonomy
            # holonomy is the number of branch points on either side, mod 2
            two = next(p for p in curve_type(c).partition if len(p) == 2)
            assert lift.holonomy == len(two - {special}) % 2
            sep = type_in_s12(lift).tag == "separating"
            assert sep == special_on_two_side(c, special)
            if sep:
                assert type_in_s12(lift).k == 2


def test_lift_disjointness(s05):
    cv = build_cover(s05.triangulation, 0)
    lifts = [lift_curve(cv, c) for c in s05.curves[:25]]
    for a, b in itertools.combinations(range(len(lifts)), 2):
        assert lifts_disjoint(lifts[a], lifts[b]) == (s05.i(a, b) == 0)


def test_lift_rejects_foreign_curve(s05, s12):
    cv = build_cover(s05.triangulation, 0)
    with pytest.raises(CoverError):
        lift_curve(cv, s12.curves[0])
