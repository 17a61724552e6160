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

"""Unit tests for one-point evaluation codes and their duals."""

from __future__ import annotations

import numpy as np
import pytest

from ansible_collections.o0_o.agcode.plugins.filter_utils import agcode
from ansible_collections.o0_o.agcode.plugins.filter_utils.agcode import (
    build_code,
    dual_identity_check,
    euclidean_dual,
    gram,
    hermitian_dual,
    is_euclidean_so,
    is_hermitian_so,
    is_self_dual,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.curve import (
    make_curve,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    HypothesisError,
    VerificationError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.families import (
    as_roots,
    hermitian_add,
    hermitian_mult,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.fmatrix import (
    rowspace_contains,
    rowspace_equal,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.rrbasis import (
    monomial_basis,
)

SMALL_FAMILIES = [
    ("as", lambda: as_roots(2, 3)),
    ("as", lambda: as_roots(3, 4)),
    ("herm-mult", lambda: hermitian_mult(3, 2)),
    ("herm-mult", lambda: hermitian_mult(2, 3)),
    ("herm-add", lambda: hermitian_add(2, 1)),
    ("herm-add", lambda: hermitian_add(2, 2)),
    ("herm-add", lambda: hermitian_add(3, 1)),
    ("as", lambda: as_roots(4, 5)),
    ("herm-mult", lambda: hermitian_mult(4, 1)),
    ("herm-mult", lambda: hermitian_mult(4, 3)),
    ("herm-mult", lambda: hermitian_mult(4, 5)),
    ("herm-mult", lambda: hermitian_mult(4, 15)),
    ("herm-add", lambda: hermitian_add(4, 1)),
    ("herm-add", lambda: hermitian_add(4, 2)),
    ("herm-add", lambda: hermitian_add(4, 3)),
    ("herm-add", lambda: hermitian_add(4, 4)),
]


def _code(spec, r, **kwargs):
    return build_code(spec.curve, spec.xs, r, **kwargs)


class TestBuildCode:
    def test_smallest_self_dual(self):
        code = _code(hermitian_add(2, 1), 2)
        assert str(code) == "[4,2]_4"
        assert code.generator.view(np.ndarray).tolist() == [
            [1, 1, 0, 0],
            [0, 0, 1, 1],
        ]
        assert is_self_dual(code)

    def test_evaluation_rows_follow_basis(self):
        spec = as_roots(2, 3)
        code = _code(spec, 4)
        assert code.evaluation.shape == (4, 8)
        # Row 0 is the constant monomial
        assert (code.evaluation[0] == 1).all()
        # Row 1 is x
        assert (code.evaluation[1] == code.x_coords).all()
        assert (code.evaluation[2] == code.y_coords).all()

    def test_points_follow_xs(self):
        spec = as_roots(2, 3)
        code = _code(spec, 1)
        xs = [int(point.x) for point in code.points]
        assert xs == [0, 0, 1, 1, 2, 2, 3, 3]

    @pytest.mark.parametrize("name, make", SMALL_FAMILIES)
    def test_dimension_law(self, name, make):
        spec = make()
        g = spec.genus
        for r in range(max(0, 2 * g - 1), spec.n):
            assert _code(spec, r).k == r + 1 - g, (name, r)

    def test_negative_radius_gives_zero_code(self):
        code = _code(as_roots(2, 3), -1)
        assert code.k == 0
        assert code.generator.shape == (0, 8)
        assert is_euclidean_so(code)

    def test_large_radius_gives_full_space(self):
        spec = hermitian_add(2, 1)
        assert _code(spec, 40).k == spec.n

    def test_inadmissible_x(self):
        curve = make_curve(3, 2)
        with pytest.raises(HypothesisError, match="inadmissible"):
            build_code(curve, [curve.field.gamma], 3)

    def test_dimension_mismatch_raises(self, monkeypatch):
        def short_basis(curve, r):
            return monomial_basis(curve, r - 1)

        monkeypatch.setattr(agcode, "monomial_basis", short_basis)
        spec = as_roots(2, 3)
        with pytest.raises(VerificationError, match="differs from"):
            _code(spec, 4)
        assert _code(spec, 4, check_dimension=False).k == 3


class TestOrthogonality:
    def test_gram_shape(self):
        code = _code(as_roots(2, 3), 3)
        assert gram(code).shape == (3, 3)
        assert gram(code, 1).shape == (3, 3)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_euclidean_range(self, r):
        code = _code(as_roots(2, 3), r)
        assert is_euclidean_so(code)
        assert rowspace_contains(euclidean_dual(code), code.generator)

    @pytest.mark.parametrize("r", [1, 2])
    def test_hermitian_range(self, r):
        code = _code(as_roots(2, 3), r)
        assert is_hermitian_so(code)
        assert rowspace_contains(hermitian_dual(code), code.generator)

    def test_above_self_dual_radius(self):
        code = _code(as_roots(2, 3), 5)
        assert not is_euclidean_so(code)
        assert not is_self_dual(code)

    def test_hermitian_range_of_larger_code(self):
        spec = as_roots(8, 3)
        # [mq - m - q, m(q - 1) - 1] = [13, 20]
        for r in (13, 20):
            code = _code(spec, r)
            assert is_hermitian_so(code)
            assert is_euclidean_so(code)

    def test_self_dual_needs_half_length(self):
        code = _code(as_roots(2, 3), 3)
        assert is_euclidean_so(code)
        assert not is_self_dual(code)

    def test_self_dual_radius(self):
        code = _code(as_roots(4, 5), 37)
        assert (code.n, code.k) == (64, 32)
        assert is_self_dual(code)

    def test_dual_dimensions(self):
        code = _code(hermitian_mult(3, 2), 6)
        assert euclidean_dual(code).shape == (code.n - code.k, code.n)
        assert hermitian_dual(code).shape == (code.n - code.k, code.n)


class TestDualIdentity:
    @pytest.mark.parametrize("name, make", SMALL_FAMILIES)
    def test_window(self, name, make):
        spec = make()
        top = spec.n + 2 * spec.genus - 2
        for r in range(1, top):
            assert dual_identity_check(spec, r), (name, r)

    def test_rejects_non_family(self):
        with pytest.raises(HypothesisError, match="only established"):
            dual_identity_check(make_curve(2, 3), 2)

    def test_rejects_non_positive_radius(self):
        with pytest.raises(HypothesisError, match="r > 0"):
            dual_identity_check(as_roots(2, 3), 0)


class TestFamilyConsistency:
    @pytest.mark.parametrize("name, make", SMALL_FAMILIES)
    def test_codes_are_nested(self, name, make):
        spec = make()
        codes = [_code(spec, r) for r in range(spec.n + 2 * spec.genus)]
        for smaller, larger in zip(codes, codes[1:]):
            assert rowspace_contains(larger.generator, smaller.generator)

    def test_full_subspace_matches_as_family(self):
        # Over GF(4) both use every x-value of y^2 + y = x^3
        added = hermitian_add(2, 2, basis=[1, 2])
        roots = as_roots(2, 3)
        assert added.xs.tolist() == roots.xs.tolist()
        for r in range(0, 11):
            assert rowspace_equal(
                _code(added, r).generator, _code(roots, r).generator
            ), r
