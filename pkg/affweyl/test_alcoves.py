#!/usr/bin/env python3
"""
Tests for the alcove geometry and restricted elements
"""

from fractions import Fraction

import pytest

from affweyl.smith import pair
from affweyl.steinberg import box_coweights

HALF = Fraction(1, 2)


def _box(ctx, box):
    return [ctx.group.make(v, lam) for v in ctx.datum.weyl_group() for lam in box_coweights(ctx.datum.rank, box)]


def test_fundamental_point_gl2(gl2):
    assert gl2.alcoves.fundamental_point() == (HALF, Fraction(0))


def test_fundamental_point_pgl2(pgl2):
    assert pgl2.alcoves.fundamental_point() == (HALF,)


def test_fundamental_point_gl3(gl3):
    point = gl3.alcoves.fundamental_point()
    values = sorted(pair(beta, point) for beta in gl3.datum.positive_roots)
    assert values == [Fraction(1, 3), Fraction(1, 3), Fraction(2, 3)]


@pytest.mark.parametrize("ctx_name", ["gl2", "pgl2", "gl3", "pgl3"])
def test_fundamental_point_is_interior(ctx_name, request):
    alcoves = request.getfixturevalue(ctx_name).alcoves
    point = alcoves.fundamental_point()
    assert alcoves.in_fundamental_alcove(point)
    assert alcoves.in_dominant_chamber(point)


def test_chamber_and_box(gl2):
    alcoves = gl2.alcoves
    assert alcoves.in_pi_box((HALF, Fraction(0)), (1, 0))
    assert not alcoves.in_dominant_chamber((-HALF, Fraction(0)))
    # boundary points lie in no open region
    assert not alcoves.in_pi_box((Fraction(1), Fraction(0)), (1, 0))


@pytest.mark.parametrize("literal,expected", [
    ("e", True),
    ("s1*t[0,1]", True),
    ("s1", False),
])
def test_ws_alcove_examples(gl2, elem, literal, expected):
    assert gl2.alcoves.ws_alcove_test(elem(literal)) == expected


@pytest.mark.parametrize("ctx_name", ["gl2", "pgl2", "gl3", "pgl3"])
def test_ws_alcove_matches_descents(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    for w in _box(ctx, 1):
        assert ctx.alcoves.ws_alcove_test(w) == ctx.cosets.is_in_WS(w)
        assert ctx.cosets.is_in_WS(w) == all(c >= 1 for c in ctx.alcoves.pi_box_of(w).pairings)


@pytest.mark.parametrize("literal,expected", [
    ("s1*t[0,1]", True),
    ("t[1,0]*s1", True),
    ("t[0,1]", False),
    ("e", True),
    ("t[1,1]", True),
    ("s1", False),
])
def test_is_restricted_gl2(gl2, elem, literal, expected):
    assert gl2.alcoves.is_restricted(elem(literal)) == expected


@pytest.mark.parametrize("ctx_name", ["gl2", "pgl2", "gl3", "pgl3"])
def test_restricted_by_pairings_matches_alcoves(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    for w in _box(ctx, 1):
        restricted = ctx.alcoves.is_restricted(w)
        assert restricted == ctx.alcoves.is_restricted_by_alcove(w)
        if restricted:
            assert ctx.datum.is_antidominant(w.trans)


def test_pi_box_identity(gl2):
    box = gl2.alcoves.pi_box_of(gl2.group.identity())
    assert box.pairings == (1,)
    assert box.mu == gl2.datum.sigma


def test_pi_box_examples(gl2, elem):
    assert gl2.alcoves.pi_box_of(elem("s1*t[0,1]")).pairings == (1,)
    box = gl2.alcoves.pi_box_of(elem("s1*t[-1,2]"))
    assert box.pairings == (3,)
    assert pair(gl2.datum.simple_roots[0], box.mu) == 3


def test_inverse_alcove_point_lies_in_its_box(gl3):
    for w in _box(gl3, 1):
        box = gl3.alcoves.pi_box_of(w)
        assert gl3.alcoves.in_pi_box(gl3.alcoves.inverse_alcove_point(w), box.mu)


@pytest.mark.parametrize("ctx_name", ["gl2", "pgl2", "pgl3"])
def test_hyperplane_count_is_length(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    for w in _box(ctx, 2):
        assert ctx.alcoves.hyperplane_length(w) == ctx.group.length(w)


def test_separating_hyperplanes_of_translation(gl2, elem):
    hyperplanes = gl2.alcoves.separating_hyperplanes(elem("t[1,-1]"))
    assert [(h.root, h.level) for h in hyperplanes] == [((1, -1), 1), ((1, -1), 2)]
