#!/usr/bin/env python3
"""
Tests for the Steinberg factorization and the restricted label calculus
"""

import pytest

from affweyl.errors import InternalInconsistency, NotDominant, NotInAWS, NotInWS, NotRestricted
from affweyl.steinberg import box_coweights

S1 = frozenset({0})
EMPTY = frozenset()


def _ws_box(ctx, box):
    elements = [ctx.group.make(v, lam) for v in ctx.datum.weyl_group() for lam in box_coweights(ctx.datum.rank, box)]
    return [w for w in elements if ctx.cosets.is_in_WS(w)]


def test_box_coweights():
    assert box_coweights(1, 1) == [(-1,), (0,), (1,)]
    assert len(box_coweights(2, 2)) == 25
    assert box_coweights(2, 1)[0] == (-1, -1)


def test_restricted_element_factors_trivially(gl2, elem):
    y = elem("s1*t[0,1]")
    factors = gl2.steinberg.steinberg_factor(y)
    assert factors.x == y
    assert factors.nu == (0, 0)
    assert factors.lengths == (0, 0, 0)


def test_factor_of_central_translation(gl2, elem):
    w = elem("t[-1,-1]")
    factors = gl2.steinberg.steinberg_factor(w)
    alpha = gl2.datum.simple_roots[0]
    assert gl2.datum.pairing(alpha, factors.x.trans) == 0
    assert gl2.alcoves.is_restricted(factors.x)
    assert gl2.datum.is_antidominant(factors.nu)
    assert gl2.group.mul(factors.x, gl2.group.translation(factors.nu)) == w
    # the factor is only determined up to the radical
    assert gl2.steinberg.same_modulo_radical(factors.x, gl2.group.identity())


def test_factor_modulo_radical(gl2, elem):
    factors = gl2.steinberg.steinberg_factor(elem("s1*t[-1,2]"))
    assert gl2.steinberg.same_modulo_radical(factors.x, elem("s1*t[0,1]"))
    assert gl2.datum.pairing(gl2.datum.simple_roots[0], factors.nu) == -2
    assert factors.lengths == (0, 2, 2)


def test_factor_needs_ws(gl2, elem):
    with pytest.raises(NotInWS):
        gl2.steinberg.steinberg_factor(elem("s1"))


def test_failed_cross_check_raises_internal_inconsistency(gl2, elem, monkeypatch):
    monkeypatch.setattr(gl2.steinberg.alcoves, "is_restricted", lambda w: False)
    with pytest.raises(InternalInconsistency):
        gl2.steinberg.steinberg_factor(elem("e"))


@pytest.mark.parametrize("ctx_name", ["gl2", "pgl2", "gl3", "pgl3"])
def test_factor_round_trip(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    group = ctx.group
    for w in _ws_box(ctx, 1):
        factors = ctx.steinberg.steinberg_factor(w)
        assert group.mul(factors.x, group.translation(factors.nu)) == w
        assert ctx.alcoves.is_restricted(factors.x)
        assert ctx.datum.is_antidominant(factors.nu)
        assert factors.lengths[2] == factors.lengths[0] + factors.lengths[1]


def test_torsor_shift(gl2, elem):
    y = elem("s1*t[0,1]")
    shifted = gl2.steinberg.torsor_shift(y, (1, 1))
    assert shifted == elem("s1*t[1,2]")
    assert gl2.alcoves.is_restricted(shifted)
    assert gl2.steinberg.same_modulo_radical(y, shifted)
    with pytest.raises(ValueError):
        gl2.steinberg.torsor_shift(y, (1, 0))


def test_label_trivial(gl2):
    identity = gl2.group.identity()
    assert gl2.steinberg.steinberg_label(identity, (0, 0), gl2.cosets.make_finitary(EMPTY)) == identity


@pytest.mark.parametrize("generators", [EMPTY, S1])
def test_label_gl2(gl2, elem, generators):
    subset = gl2.cosets.make_finitary(generators)
    label = gl2.steinberg.steinberg_label(elem("s1*t[0,1]"), (1, 0), subset)
    assert label == elem("s1*t[0,2]")
    assert gl2.group.length(label) == 1
    assert gl2.cosets.is_in_AWS(label, subset)


def test_label_preconditions(gl2, elem):
    cosets = gl2.cosets
    with pytest.raises(NotRestricted):
        gl2.steinberg.steinberg_label(elem("t[0,1]"), (0, 0), cosets.make_finitary(EMPTY))
    with pytest.raises(NotInAWS):
        gl2.steinberg.steinberg_label(gl2.group.identity(), (0, 0), cosets.make_finitary(S1))
    with pytest.raises(NotDominant):
        gl2.steinberg.steinberg_label(gl2.group.identity(), (0, 1), cosets.make_finitary(EMPTY))


def test_enumerate_restricted_gl2(gl2, elem):
    found = gl2.steinberg.enumerate_restricted(gl2.cosets.make_finitary(EMPTY), 1)
    for literal in ("e", "s1*t[0,1]", "t[1,1]", "t[-1,-1]"):
        assert elem(literal) in found

    with_s1 = gl2.steinberg.enumerate_restricted(gl2.cosets.make_finitary(S1), 1)
    assert elem("s1*t[0,1]") in with_s1
    assert gl2.group.identity() not in with_s1


def test_enumerate_restricted_pgl2(pgl2):
    found = pgl2.steinberg.enumerate_restricted(pgl2.cosets.make_finitary(EMPTY), 1)
    s = pgl2.group.from_simple(0)
    assert found == [pgl2.group.identity(), pgl2.group.mul(s, pgl2.group.translation((-1,)))]


def test_restricted_minimal_labels(gl2, elem):
    minimal = gl2.steinberg.restricted_minimal_labels(gl2.cosets.make_finitary(EMPTY), 1)
    assert gl2.group.identity() in minimal
    assert all(gl2.group.length(w) == 0 for w in minimal)


@pytest.mark.parametrize("ctx_name", ["pgl2", "pgl3"])
def test_coverage_is_unique_when_semisimple(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    group, steinberg = ctx.group, ctx.steinberg
    for subset in ctx.cosets.all_finitary_subsets():
        restricted = steinberg.enumerate_restricted(subset, 2)
        for w in _ws_box(ctx, 1):
            if not ctx.cosets.is_in_AWS(w, subset):
                continue
            hits = []
            for y in restricted:
                rest = group.mul(group.inv(y), w)
                if group.is_translation(rest) and ctx.datum.is_antidominant(rest.trans):
                    hits.append(y)
            assert len(hits) == 1
            w0 = ctx.datum.longest()
            assert steinberg.steinberg_label(hits[0], w0.apply(group.mul(group.inv(hits[0]), w).trans), subset) == w


@pytest.mark.parametrize("ctx_name", ["gl2", "pgl2"])
def test_antidominant_translation_keeps_double_minimality(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    group = ctx.group
    antidominant = [lam for lam in box_coweights(ctx.datum.rank, 2) if ctx.datum.is_antidominant(lam)]
    for subset in ctx.cosets.all_finitary_subsets():
        for y in ctx.steinberg.enumerate_restricted(ctx.cosets.make_finitary(frozenset()), 1):
            for lam in antidominant:
                shifted = group.mul(y, group.translation(lam))
                assert ctx.cosets.is_in_AWS(y, subset) == ctx.cosets.is_in_AWS(shifted, subset)
