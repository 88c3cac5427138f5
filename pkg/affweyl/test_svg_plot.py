#!/usr/bin/env python3
"""
Tests for the alcove picture
"""

from fractions import Fraction

import pytest

from affweyl.errors import NotRank2, UsageError
from affweyl.svg_plot import clip_polygon, clip_region, hyperplane_segment, plot_alcoves


def test_gl2_picture(gl2):
    svg = plot_alcoves(gl2, bound=2)
    assert svg.startswith("<?xml")
    for css_id in ("chamber", "pi-box", "fundamental"):
        assert f'id="{css_id}"' in svg
    assert "<line" in svg
    assert "Alcoves of GL2" in svg


def test_pgl3_picture_with_highlight(pgl3):
    w = pgl3.group.from_simple(0)
    svg = plot_alcoves(pgl3, bound=1, highlight=[w])
    assert 'id="highlight"' in svg
    assert "<circle" in svg
    assert ">s1</text>" in svg


def test_rank_and_bound_checks(pgl2, gl3, gl2):
    with pytest.raises(NotRank2):
        plot_alcoves(pgl2)
    with pytest.raises(NotRank2):
        plot_alcoves(gl3)
    with pytest.raises(UsageError):
        plot_alcoves(gl2, bound=0)


def test_clip_polygon_half_window():
    square = [(Fraction(-1), Fraction(-1)), (Fraction(1), Fraction(-1)), (Fraction(1), Fraction(1)),
              (Fraction(-1), Fraction(1))]
    clipped = clip_polygon(square, ((1, 0), Fraction(0), 1))
    assert set(clipped) == {(0, -1), (1, -1), (1, 1), (0, 1)}


def test_clip_region_can_be_empty():
    assert clip_region(1, [((1, 0), Fraction(2), 1)]) == []


def test_hyperplane_segment():
    assert hyperplane_segment((1, -1), 0, 1) == ((-1, -1), (1, 1))
    assert hyperplane_segment((1, 0), 1, 2) == ((1, -2), (1, 2))
    assert hyperplane_segment((1, -1), 3, 1) is None
