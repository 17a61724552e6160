# vim: ts=4:sw=4:sts=4:et:ft=python
# -*- mode: python; tab-width: 4; indent-tabs-mode: nil; -*-
#
# GNU General Public License v3.0+
# SPDX-License-Identifier: GPL-3.0-or-later
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
#
# Copyright (c) 2026 oØ.o (@o0-o)
#
# This file is part of the o0_o.agcode Ansible Collection.

"""Unit tests for the curve y^q + y = x^m and its rational points."""

from __future__ import annotations

import pytest

from ansible_collections.o0_o.agcode.plugins.filter_utils.curve import (
    AffinePoint,
    all_admissible_x,
    count_and_check_maximal,
    hasse_weil_bound,
    make_curve,
    on_curve,
    point_arrays,
    points_over,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    HypothesisError,
)
from ansible_collections.o0_o.agcode.tests.utils import count_points

MAXIMAL = [(2, 3), (3, 2), (3, 4), (4, 5), (5, 3), (5, 6), (8, 3), (8, 9)]


class TestMakeCurve:
    def test_parameters(self):
        curve = make_curve(8, 3)
        assert (curve.p, curve.q, curve.m) == (2, 8, 3)
        assert curve.genus == 7
        assert curve.field.order == 64
        assert not curve.hermitian

    def test_hermitian(self):
        curve = make_curve(3, 4)
        assert curve.hermitian
        assert curve.genus == 3

    def test_str(self):
        assert str(make_curve(2, 3)) == "y^2 + y = x^3 over GF(2^2) mod=1,1,1"

    def test_explicit_modulus_shares_field(self):
        assert make_curve(2, 3, [1, 1, 1]).field is make_curve(2, 3).field

    @pytest.mark.parametrize(
        "q, m, match",
        [
            (6, 1, "not a prime power"),
            (1, 1, "not a prime power"),
            (4, 0, "must be positive"),
            (3, 3, r"p \| m"),
            (4, 6, r"p \| m"),
        ],
    )
    def test_rejects(self, q, m, match):
        with pytest.raises(HypothesisError, match=match):
            make_curve(q, m)


class TestPointCount:
    @pytest.mark.parametrize("q, m", MAXIMAL)
    def test_maximal(self, q, m):
        curve = make_curve(q, m)
        count, maximal = count_and_check_maximal(curve)
        assert maximal
        assert count == hasse_weil_bound(curve)
        assert count == count_points(curve.field.GF, q, m)

    def test_small_count(self):
        # q^2 + 1 + 2gq, not mq(q - 1) + 1
        count, _ = count_and_check_maximal(make_curve(2, 3))
        assert count == 9
        assert count != 7

    def test_not_maximal(self):
        # 5 does not divide q + 1 = 4
        curve = make_curve(3, 5)
        count, maximal = count_and_check_maximal(curve)
        assert count == 10
        assert count == count_points(curve.field.GF, 3, 5)
        assert hasse_weil_bound(curve) == 34
        assert not maximal

    def test_hermitian_has_q_cubed_plus_one(self):
        for q in (2, 3, 4, 5):
            count, _ = count_and_check_maximal(make_curve(q, q + 1))
            assert count == q**3 + 1


class TestPoints:
    def test_admissible_x(self):
        curve = make_curve(3, 2)
        xs = all_admissible_x(curve)
        assert xs.size == 5
        assert [int(x) for x in xs] == sorted(int(x) for x in xs)

    def test_every_affine_point_is_on_curve(self):
        curve = make_curve(4, 5)
        points = points_over(curve, all_admissible_x(curve))
        assert len(points) == count_and_check_maximal(curve)[0] - 1
        assert all(on_curve(curve, point) for point in points)
        assert len(set((int(x), int(y)) for x, y in points)) == len(points)

    def test_fiber_order(self):
        curve = make_curve(2, 3)
        points = points_over(curve, [0])
        assert [(int(x), int(y)) for x, y in points] == [(0, 0), (0, 1)]
        assert isinstance(points[0], AffinePoint)

    def test_x_order_is_kept(self):
        curve = make_curve(2, 3)
        px, _ = point_arrays(curve, [3, 0])
        assert [int(x) for x in px] == [3, 3, 0, 0]

    def test_q_points_per_x(self):
        curve = make_curve(8, 3)
        xs = all_admissible_x(curve)
        px, py = point_arrays(curve, xs)
        assert px.size == py.size == 8 * xs.size

    def test_empty(self):
        px, py = point_arrays(make_curve(2, 3), [])
        assert px.size == py.size == 0

    def test_inadmissible(self):
        curve = make_curve(3, 2)
        # gamma^2 has order 4, outside GF(3)*
        with pytest.raises(HypothesisError, match="inadmissible"):
            point_arrays(curve, [curve.field.gamma])

    def test_repeated(self):
        with pytest.raises(HypothesisError, match="must be distinct"):
            point_arrays(make_curve(2, 3), [0, 0])

    def test_off_curve(self):
        curve = make_curve(2, 3)
        F = curve.field
        assert not on_curve(curve, AffinePoint(F.element(0), F.element(2)))
