#!/usr/bin/env python3
"""
Tests for finitary subsets, coset representatives and ^A W^S
"""

import pytest

from affweyl.cosets import CosetCalculus
from affweyl.errors import NotDominant, NotFinitary, NotMinimalInCoset, ParabolicTooLarge
from affweyl.steinberg import box_coweights

S1 = frozenset({0})
A1 = frozenset({1})
EMPTY = frozenset()


def _box(ctx, box):
    return [ctx.group.make(v, lam) for v in ctx.datum.weyl_group() for lam in box_coweights(ctx.datum.rank, box)]


def test_make_finitary_single_reflection(gl2, elem):
    subset = gl2.cosets.make_finitary(S1)
    assert subset.longest == elem("s1")
    assert subset.order == 2
    assert gl2.cosets.parabolic_elements(subset) == (gl2.group.identity(), elem("s1"))


def test_make_finitary_empty(gl2):
    subset = gl2.cosets.make_finitary(EMPTY)
    assert subset.longest == gl2.group.identity()
    assert subset.order == 1


def test_whole_component_is_not_finitary(gl2):
    with pytest.raises(NotFinitary):
        gl2.cosets.make_finitary({0, 1})
    with pytest.raises(NotFinitary):
        gl2.cosets.make_finitary({5})


def test_finitary_subsets_gl3(gl3):
    subsets = gl3.cosets.all_finitary_subsets()
    # every proper subset of the three affine A2 generators
    assert len(subsets) == 7
    assert max(s.order for s in subsets) == 6
    for subset in subsets:
        assert gl3.group.mul(subset.longest, subset.longest) == gl3.group.identity()


def test_parabolic_cap(gl3):
    capped = CosetCalculus(gl3.coxeter, parabolic_cap=3)
    with pytest.raises(ParabolicTooLarge):
        capped.make_finitary({0, 1})


@pytest.mark.parametrize("literal,generators,expected", [
    ("e", S1, True),
    ("s1", S1, False),
    ("s1*t[0,1]", S1, True),
])
def test_minimal_in_left_coset(gl2, elem, literal, generators, expected):
    subset = gl2.cosets.make_finitary(generators)
    assert gl2.cosets.is_minimal_in_left_coset(elem(literal), subset) == expected


def test_minimality_by_length_matches_descents(gl2):
    for generators in (S1, A1, EMPTY):
        subset = gl2.cosets.make_finitary(generators)
        for w in _box(gl2, 2):
            assert gl2.cosets.is_minimal_in_left_coset(w, subset) != gl2.cosets.has_left_descent_in(w, subset)
            assert gl2.cosets.is_minimal_in_right_coset(w, subset) != gl2.cosets.has_right_descent_in(w, subset)


def test_representatives(gl2, elem):
    cosets = gl2.cosets
    subset = cosets.make_finitary(S1)
    assert cosets.min_left_rep(elem("s1"), subset) == gl2.group.identity()
    assert cosets.min_right_rep(elem("t[1,0]"), subset) == elem("s1*t[0,1]")
    assert cosets.max_left_rep(gl2.group.identity(), subset) == elem("s1")
    assert cosets.max_right_rep(elem("s1*t[0,1]"), subset) == elem("t[1,0]")


@pytest.mark.parametrize("lam,expected,length", [
    ((0, 1), "s1*t[0,1]", 0),
    ((0, 0), "e", 0),
    ((1, 0), "t[1,0]", 1),
])
def test_w_L(gl2, elem, lam, expected, length):
    w_l = gl2.cosets.w_L(lam)
    assert w_l == elem(expected)
    assert gl2.group.length(w_l) == length


def test_w_R_strictly_dominant(gl2, elem):
    assert gl2.cosets.w_R((1, 0)) == elem("t[1,0]*s1")


def test_w_L_and_w_R_are_coset_minima(gl3):
    cosets, group = gl3.cosets, gl3.group
    finite = cosets.finite_subset()
    for lam in box_coweights(3, 1):
        t_lam = group.translation(lam)
        assert cosets.w_L(lam) == cosets.min_left_rep(t_lam, finite)
        assert cosets.w_R(lam) == cosets.min_right_rep(t_lam, finite)


@pytest.mark.parametrize("literal,expected", [
    ("e", True),
    ("s1*t[0,1]", True),
    ("s1", False),
    ("t[1,0]", False),
    ("t[0,1]", True),
])
def test_is_in_WS(gl2, elem, literal, expected):
    assert gl2.cosets.is_in_WS(elem(literal)) == expected


@pytest.mark.parametrize("literal,generators,expected", [
    ("e", EMPTY, True),
    ("s1*t[0,1]", S1, True),
    ("t[1,0]*s1", S1, True),
    ("t[0,1]", S1, False),
    ("e", S1, False),
])
def test_is_in_AWS(gl2, elem, literal, generators, expected):
    assert gl2.cosets.is_in_AWS(elem(literal), gl2.cosets.make_finitary(generators)) == expected


@pytest.mark.parametrize("ctx_name", ["gl2", "pgl2"])
def test_five_conditions_agree(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    for subset in ctx.cosets.all_finitary_subsets():
        for w in _box(ctx, 2):
            assert ctx.cosets.double_min_conditions(w, subset).agree()


def test_douglass_examples(gl2, elem):
    subset = gl2.cosets.make_finitary(S1)
    identity = gl2.group.identity()
    assert gl2.cosets.douglass_equiv_check(identity, identity, subset) == (True, True, True)
    y, w = elem("s1*t[0,1]"), elem("t[1,1]*s1*t[0,1]")
    assert len(set(gl2.cosets.douglass_equiv_check(y, w, subset))) == 1


def test_douglass_needs_minimal_elements(gl2, elem):
    with pytest.raises(NotMinimalInCoset):
        gl2.cosets.douglass_equiv_check(elem("s1"), elem("e"), gl2.cosets.make_finitary(S1))


def test_spherical_double_min_max(gl2, elem):
    cosets = gl2.cosets
    assert cosets.spherical_double_min_max((0, 0)) == (gl2.group.identity(), elem("s1"))
    assert cosets.spherical_double_min_max((1, 0)) == (elem("s1*t[0,1]"), elem("s1*t[1,0]"))
    smallest, largest = cosets.spherical_double_min_max((1, -1))
    assert largest == elem("s1*t[1,-1]")
    assert gl2.group.length(largest) == 3
    with pytest.raises(NotDominant):
        cosets.spherical_double_min_max((0, 1))


def test_double_coset_max_matches_spherical(gl3):
    cosets = gl3.cosets
    finite = cosets.finite_subset()
    for lam in [(1, 0, 0), (1, 0, -1), (2, 1, 0)]:
        smallest, largest = cosets.spherical_double_min_max(lam)
        assert cosets.double_coset_max(smallest, finite, finite) == largest
        assert cosets.double_coset_min(largest, finite, finite) == smallest


def test_min_LR(gl2):
    cosets, group = gl2.cosets, gl2.group
    finite = cosets.finite_subset()
    for lam in box_coweights(2, 2):
        in_sws = cosets.is_in_AWS(cosets.w_R(lam), finite)
        assert in_sws == gl2.datum.is_strictly_dominant(lam)
        if in_sws:
            assert cosets.w_R(lam) == group.mul(group.translation(lam), group.longest_finite())


def test_cardinality_criterion_reports_both_readings(gl2, elem):
    result = gl2.cosets.aws_cardinality_criterion(elem("s1*t[0,1]"), gl2.cosets.make_finitary(S1))
    assert result["minimal"] == elem("s1*t[0,1]")
    assert result["in_AWS"] is True
    assert result["order"] == 2
    assert set(result) >= {"literal_count", "double_coset_count", "literal_agrees", "double_coset_agrees"}
