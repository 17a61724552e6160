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

"""
The Artin-Schreier curve y^q + y = x^m over GF(q^2).

Only affine points are enumerated. The single point at infinity Q∞ is
implicit: it is the support of every divisor rQ∞ used by the codes and
is counted once by ``count_and_check_maximal``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, NamedTuple, Optional, Sequence, Tuple

import galois
import numpy as np
from ansible.utils.display import Display

from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    HypothesisError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.gf import (
    Field,
    FieldElement,
    create_field,
    describe,
)

display = Display()


@dataclass(frozen=True)
class ASCurve:
    """
    The curve y^q + y = x^m over GF(q^2).

    :param int p: Characteristic
    :param int q: Subfield order, a power of p
    :param int m: Exponent of x, prime to p
    :param Field field: GF(q^2)
    """

    p: int
    q: int
    m: int
    field: Field

    @property
    def genus(self) -> int:
        return (self.m - 1) * (self.q - 1) // 2

    @property
    def hermitian(self) -> bool:
        return self.m == self.q + 1

    def __str__(self) -> str:
        return f"y^{self.q} + y = x^{self.m} over {describe(self.field)}"


class AffinePoint(NamedTuple):
    x: FieldElement
    y: FieldElement


def make_curve(
    q: int, m: int, modulus: Optional[Sequence[int]] = None
) -> ASCurve:
    """
    Build y^q + y = x^m over GF(q^2).

    :param int q: Prime power
    :param int m: Positive exponent with gcd(m, p) = 1
    :param Optional[Sequence[int]] modulus: Modulus of GF(q^2) as
        ``(c_k, ..., c_0)``; the default is the smallest irreducible
    :returns ASCurve: The curve, genus (m - 1)(q - 1)/2
    :raises HypothesisError: If q is not a prime power or p divides m
    """
    if q < 2 or not galois.is_prime_power(q):
        raise HypothesisError(f"q = {q} is not a prime power")
    if m < 1:
        raise HypothesisError(f"m = {m} must be positive")
    primes, exponents = galois.factors(q)
    p, t = int(primes[0]), int(exponents[0])
    if gcd(m, p) != 1:
        raise HypothesisError(
            f"p | m ({p} | {m}): the monomial basis x^i y^j of L(rQ∞) "
            "requires gcd(m, p) = 1"
        )

    curve = ASCurve(p=p, q=q, m=m, field=create_field(p, 2 * t, modulus))
    display.vvv(f"agcode: curve {curve}, genus {curve.genus}")
    return curve


def hasse_weil_bound(curve: ASCurve) -> int:
    """Upper Hasse-Weil bound q^2 + 1 + 2gq over GF(q^2)."""
    return curve.q**2 + 1 + 2 * curve.genus * curve.q


def _subfield_mask(curve: ASCurve, xs: galois.FieldArray) -> np.ndarray:
    values = xs**curve.m
    return (values**curve.q == values).view(np.ndarray)


def all_admissible_x(curve: ASCurve) -> FieldElement:
    """Every x in GF(q^2) with x^m in GF(q), sorted by representation."""
    xs = curve.field.GF.elements
    return xs[_subfield_mask(curve, xs)]


def point_arrays(
    curve: ASCurve, xs: Sequence[FieldElement]
) -> Tuple[FieldElement, FieldElement]:
    """
    Coordinates of the points above ``xs`` as two parallel arrays.

    For each x in the given order the q points (x, y) follow with y
    ascending by representation.

    :raises HypothesisError: If xs repeats a value or some x^m is not
        in GF(q)
    """
    field = curve.field
    x_values = [int(x) for x in xs]
    if len(set(x_values)) != len(x_values):
        raise HypothesisError("Evaluation x-values must be distinct")
    if not x_values:
        empty = field.elements([])
        return empty, empty

    # Every x must have x^m in GF(q)
    x_array = field.elements(x_values)
    mask = _subfield_mask(curve, x_array)
    if not mask.all():
        bad = x_values[int(np.flatnonzero(~mask)[0])]
        raise HypothesisError(
            f"x = {bad} is inadmissible: x^{curve.m} ∉ GF({curve.q}), "
            "so no rational points lie above it"
        )

    # The q values of y above x form one trace fiber
    fibers = field.trace_fibers
    images = (x_array**curve.m).view(np.ndarray).tolist()
    px: List[int] = []
    py: List[int] = []
    for x, image in zip(x_values, images):
        ys = fibers[image]
        px.extend([x] * len(ys))
        py.extend(ys)
    return field.elements(px), field.elements(py)


def points_over(
    curve: ASCurve, xs: Sequence[FieldElement]
) -> List[AffinePoint]:
    """
    The q affine points above each admissible x, in canonical order.

    :param ASCurve curve: The curve
    :param xs: Distinct x-values with x^m in GF(q)
    :returns List[AffinePoint]: q * len(xs) points
    :raises HypothesisError: If some x^m is not in GF(q)
    """
    px, py = point_arrays(curve, xs)
    return [AffinePoint(x, y) for x, y in zip(px, py)]


def on_curve(curve: ASCurve, point: AffinePoint) -> bool:
    x, y = point
    return bool(y**curve.q + y == x**curve.m)


def count_and_check_maximal(curve: ASCurve) -> Tuple[int, bool]:
    """
    Count the rational points (Q∞ included) and test maximality.

    :returns Tuple[int, bool]: The count N and whether N reaches
        q^2 + 1 + 2gq
    """
    fibers = curve.field.trace_fibers
    images = (curve.field.GF.elements**curve.m).view(np.ndarray).tolist()
    count = 1 + sum(len(fibers.get(image, ())) for image in images)
    bound = hasse_weil_bound(curve)
    display.vv(
        f"agcode: {curve} has {count} rational points "
        f"(Hasse-Weil bound {bound})"
    )
    return count, count == bound
