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

"""Unit tests for finite field arithmetic."""

from __future__ import annotations

import galois
import numpy as np
import pytest

from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    FieldError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.gf import (
    arith,
    check_lemma_m,
    create_field,
    describe,
    field_of,
    fp_subspace,
    frobenius,
    in_subfield,
    parse_description,
    roots_of_unity,
    trace_preimages,
)


def _prime_powers(limit):
    for order in range(2, limit + 1):
        if galois.is_prime_power(order):
            primes, exponents = galois.factors(order)
            yield int(primes[0]), int(exponents[0])


@pytest.fixture
def gf4():
    return create_field(2, 2)


class TestCreateField:
    def test_default_modulus_is_smallest(self, gf4):
        assert gf4.modulus == (1, 1, 1)
        assert gf4.order == 4
        assert gf4.q == 2
        assert describe(gf4) == "GF(2^2) mod=1,1,1"

    def test_cached(self):
        assert create_field(2, 2) is create_field(2, 2, [1, 1, 1])

    def test_primitive_element_has_full_order(self):
        field = create_field(3, 2)
        gamma = field.gamma
        orders = [e for e in range(1, 9) if gamma**e == field.one]
        assert orders[0] == 8

    @pytest.mark.parametrize(
        "p,k,modulus,message",
        [
            (4, 2, None, "not prime"),
            (2, 0, None, "positive"),
            (2, 2, [1, 0, 1], "reducible"),
            (3, 2, [2, 0, 1], "not monic"),
            (2, 2, [1, 1], "degree"),
            (2, 2, [1, 2, 1], "0..1"),
            (5, 1, [1, 3], "only takes the modulus x"),
        ],
    )
    def test_invalid(self, p, k, modulus, message):
        with pytest.raises(FieldError, match=message):
            create_field(p, k, modulus)

    def test_odd_degree_has_no_tower(self):
        with pytest.raises(FieldError, match="quadratic tower"):
            create_field(2, 3).tower_degree

    def test_description_round_trip(self):
        field = create_field(3, 4)
        assert parse_description(describe(field)) is field

    def test_bad_description(self):
        with pytest.raises(FieldError):
            parse_description("GF(4) mod=1,1,1")

    def test_field_of(self, gf4):
        assert field_of(gf4.element(3)) is gf4

    def test_binary_prime_field(self):
        field = create_field(2, 1)
        assert field.modulus == (1, 0)
        assert int(field.one + field.one) == 0
        assert int(arith(field.one, field.one, "mul")) == 1
        assert field.gamma == field.one
        assert check_lemma_m(field, 1)

    @pytest.mark.parametrize("p", [2, 3, 7])
    def test_prime_field_description(self, p):
        field = create_field(p, 1)
        assert describe(field) == f"GF({p}^1) mod=1,0"
        assert parse_description(describe(field)) is field
        assert field_of(field.element(p - 1)) is field

    def test_prime_field_rejects_other_modulus(self):
        with pytest.raises(FieldError, match="modulus x"):
            parse_description("GF(5^1) mod=1,3")

    @pytest.mark.parametrize(
        "p,k", [(2, 1), (2, 2), (3, 2), (2, 8), (5, 4), (3, 10), (2, 16)]
    )
    def test_encoding_round_trip(self, p, k):
        field = create_field(p, k)
        values = list(range(field.order))
        assert field.elements(values).view(np.ndarray).tolist() == values
        for value in values:
            a = field.element(value)
            assert field.encode(a) == value
            assert field.element(field.encode(a)) == a


class TestArith:
    @pytest.mark.parametrize(
        "a,b,op,expected",
        [
            (2, 3, "add", 1),
            (2, 3, "sub", 1),
            (2, 2, "mul", 3),
            (3, 2, "div", 2),
            (2, None, "neg", 2),
            (2, None, "inv", 3),
        ],
    )
    def test_ops(self, gf4, a, b, op, expected):
        left = gf4.element(a)
        right = None if b is None else gf4.element(b)
        assert int(arith(left, right, op)) == expected

    def test_pow(self, gf4):
        assert int(arith(gf4.element(2), None, "pow", exponent=-1)) == 3

    def test_non_primitive_modulus(self):
        field = create_field(3, 2, [1, 0, 1])
        root = field.element(3)
        assert int(arith(root, root, "mul")) == 2
        assert int(arith(root, arith(root, None, "inv"), "mul")) == 1

    def test_zero_inverse(self, gf4):
        with pytest.raises(FieldError, match="Inversion of zero"):
            arith(gf4.zero, None, "inv")

    def test_mixed_fields(self, gf4):
        with pytest.raises(FieldError, match="different fields"):
            arith(gf4.one, create_field(3, 2).one, "add")

    def test_unknown_op(self, gf4):
        with pytest.raises(FieldError, match="Unknown"):
            arith(gf4.one, gf4.one, "mod")

    def test_element_range(self, gf4):
        with pytest.raises(FieldError, match="out of range"):
            gf4.element(4)


class TestTower:
    def test_frobenius(self, gf4):
        assert int(frobenius(gf4.element(2), 1)) == 3
        assert int(frobenius(gf4.element(2), 2)) == 2

    def test_frobenius_is_field_automorphism(self):
        field = create_field(3, 2)
        xs = field.GF.elements
        c = xs[3]
        assert (frobenius(xs * c, 1) == frobenius(xs, 1) * c**3).all()

    def test_subfield(self, gf4):
        assert in_subfield(gf4, gf4.one)
        assert not in_subfield(gf4, gf4.element(2))

    @pytest.mark.parametrize(
        "c,expected", [(0, [0, 1]), (1, [2, 3]), (2, [])]
    )
    def test_trace_preimages(self, gf4, c, expected):
        ys = trace_preimages(gf4, gf4.element(c))
        assert [int(y) for y in ys] == expected

    @pytest.mark.parametrize(
        "p,k", [pk for pk in _prime_powers(2**10) if pk[1] > 1]
    )
    def test_frobenius_is_automorphism_exhaustive(self, p, k):
        field = create_field(p, k)
        xs = field.GF.elements
        a, b = xs[:, np.newaxis], xs[np.newaxis, :]
        image = frobenius(xs, 1)
        assert np.unique(image.view(np.ndarray)).size == field.order
        assert (
            frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1)
        ).all()
        assert (
            frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1)
        ).all()

    @pytest.mark.parametrize("p,t", list(_prime_powers(32)))
    def test_trace_is_q_to_one(self, p, t):
        field = create_field(p, 2 * t)
        q = p**t
        fibers = field.trace_fibers
        assert len(fibers) == q
        assert all(len(ys) == q for ys in fibers.values())
        assert sorted(y for ys in fibers.values() for y in ys) == list(
            range(field.order)
        )
        images = field.elements(sorted(fibers))
        assert (images**q == images).all()


class TestRootsAndSubspaces:
    def test_roots_of_unity(self, gf4):
        assert [int(x) for x in roots_of_unity(gf4, 3)] == [1, 2, 3]
        assert [int(x) for x in roots_of_unity(gf4, 1)] == [1]

    def test_roots_of_unity_requires_divisor(self, gf4):
        with pytest.raises(FieldError, match="does not divide"):
            roots_of_unity(gf4, 2)

    def test_roots_have_order_dividing(self):
        field = create_field(3, 2)
        roots = roots_of_unity(field, 4)
        assert roots.size == 4
        assert (roots**4 == field.one).all()

    def test_subspace(self, gf4):
        span = fp_subspace(gf4, gf4.elements([1]))
        assert [int(x) for x in span] == [0, 1]
        span = fp_subspace(gf4, gf4.elements([1, 2]))
        assert [int(x) for x in span] == [0, 1, 2, 3]

    def test_subspace_over_gf3(self):
        field = create_field(3, 2)
        span = fp_subspace(field, field.elements([1]))
        assert [int(x) for x in span] == [0, 1, 2]

    def test_dependent_basis(self, gf4):
        with pytest.raises(FieldError, match="dependent"):
            fp_subspace(gf4, gf4.elements([3, 3]))

    def test_basis_too_long(self, gf4):
        with pytest.raises(FieldError, match="exceeds"):
            fp_subspace(gf4, gf4.elements([1, 2, 3]))


@pytest.mark.parametrize("p,k", list(_prime_powers(2**10)))
def test_lemma_m_on_small_fields(p, k):
    field = create_field(p, k)
    order = field.order
    for m in range(1, order):
        if (order - 1) % m == 0:
            assert check_lemma_m(field, m), (p, k, m)


def test_lemma_m_rejects_non_divisor(gf4):
    with pytest.raises(FieldError):
        check_lemma_m(gf4, 2)
