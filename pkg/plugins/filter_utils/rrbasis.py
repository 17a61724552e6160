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

"""Monomial bases of the one-point Riemann-Roch spaces L(rQ∞)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from ansible_collections.o0_o.agcode.plugins.filter_utils.curve import (
    ASCurve,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    VerificationError,
)


class Monomial(NamedTuple):
    """x^i y^j with 0 <= j <= q - 1."""

    i: int
    j: int

    def pole_order(self, curve: ASCurve) -> int:
        return curve.q * self.i + curve.m * self.j

    def __str__(self) -> str:
        parts = []
        if self.i:
            parts.append("x" if self.i == 1 else f"x^{self.i}")
        if self.j:
            parts.append("y" if self.j == 1 else f"y^{self.j}")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class RRBasis:
    """Ordered monomial basis of L(rQ∞) on ``curve``."""

    curve: ASCurve
    r: int
    monomials: Tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    @property
    def pole_orders(self) -> List[int]:
        return [mono.pole_order(self.curve) for mono in self.monomials]


def monomial_basis(curve: ASCurve, r: int) -> RRBasis:
    """
    All x^i y^j with qi + mj <= r, sorted by pole order then j.

    Empty for negative r.

    :raises VerificationError: If two monomials share a pole order
    """
    q, m = curve.q, curve.m
    monomials = []
    if r >= 0:
        for j in range(min(q - 1, r // m) + 1):
            for i in range((r - m * j) // q + 1):
                monomials.append(Monomial(i, j))
    monomials.sort(key=lambda mono: (mono.pole_order(curve), mono.j))

    orders = [mono.pole_order(curve) for mono in monomials]
    if len(set(orders)) != len(orders):
        raise VerificationError(
            f"Repeated pole order in the basis of L({r}Q∞) on {curve}"
        )
    return RRBasis(curve=curve, r=r, monomials=tuple(monomials))


def rr_dim(curve: ASCurve, r: int) -> int:
    """l(rQ∞), the size of the monomial basis."""
    return len(monomial_basis(curve, r))


def gaps(curve: ASCurve) -> List[int]:
    """
    Weierstrass gaps at Q∞: non-negative integers that are no pole order.

    Every gap is below 2g, and there are exactly g of them.
    """
    bound = 2 * curve.genus
    orders = set(monomial_basis(curve, bound).pole_orders)
    return [n for n in range(bound) if n not in orders]
