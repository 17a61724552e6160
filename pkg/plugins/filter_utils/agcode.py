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
One-point evaluation codes C_L(D, rQ∞) and their duals.

An ``EvalCode`` keeps both the raw evaluation matrix (one row per basis
monomial, so every row can be traced back to x^i y^j) and the generator
matrix, which is the RREF of the evaluation matrix with zero rows
dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Sequence

from ansible.utils.display import Display

from ansible_collections.o0_o.agcode.plugins.filter_utils.curve import (
    AffinePoint,
    ASCurve,
    point_arrays,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    HypothesisError,
    VerificationError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.fmatrix import (
    Matrix,
    frobenius_matrix,
    is_zero,
    nullspace,
    product,
    rowspace_equal,
    rref,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.gf import (
    Field,
    FieldElement,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.rrbasis import (
    RRBasis,
    monomial_basis,
)

if TYPE_CHECKING:
    from ansible_collections.o0_o.agcode.plugins.filter_utils.families import (  # noqa: E501
        FamilySpec,
    )

display = Display()


@dataclass(frozen=True, eq=False)
class EvalCode:
    """
    The evaluation code of L(rQ∞) at the affine points above ``xs``.

    :param ASCurve curve: The curve
    :param FieldElement x_coords: x-coordinates of D, in code order
    :param FieldElement y_coords: y-coordinates of D, in code order
    :param int r: Coefficient of Q∞
    :param RRBasis basis: Monomial basis of L(rQ∞)
    :param Matrix evaluation: |basis| x n evaluation matrix
    :param Matrix generator: k x n generator matrix in RREF
    """

    curve: ASCurve
    x_coords: FieldElement
    y_coords: FieldElement
    r: int
    basis: RRBasis
    evaluation: Matrix
    generator: Matrix

    @property
    def field(self) -> Field:
        return self.curve.field

    @property
    def n(self) -> int:
        return int(self.x_coords.size)

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    @property
    def points(self) -> List[AffinePoint]:
        return [
            AffinePoint(self.x_coords[i], self.y_coords[i])
            for i in range(self.n)
        ]

    def __str__(self) -> str:
        return f"[{self.n},{self.k}]_{self.field.order}"


def evaluation_matrix(
    basis: RRBasis, x_coords: FieldElement, y_coords: FieldElement
) -> Matrix:
    """Entry (monomial, point) is x^i y^j evaluated at that point."""
    gf = type(x_coords)
    n = int(x_coords.size)
    monomials = basis.monomials
    rows = gf.Zeros((len(monomials), n))
    if not monomials:
        return rows

    x_powers = [gf.Ones(n)]
    for _ in range(max(mono.i for mono in monomials)):
        x_powers.append(x_powers[-1] * x_coords)
    y_powers = [gf.Ones(n)]
    for _ in range(max(mono.j for mono in monomials)):
        y_powers.append(y_powers[-1] * y_coords)

    for row, mono in enumerate(monomials):
        rows[row] = x_powers[mono.i] * y_powers[mono.j]
    return rows


def build_code(
    curve: ASCurve,
    xs: Sequence[FieldElement],
    r: int,
    check_dimension: bool = True,
) -> EvalCode:
    """
    Build C_L(D, rQ∞) with D the points above ``xs``.

    A radius with an empty basis yields the zero code.

    :param ASCurve curve: The curve
    :param xs: Admissible, distinct x-values in code order
    :param int r: Coefficient of Q∞
    :param bool check_dimension: Raise when 2g - 2 < r < n and the rank
        differs from r + 1 - g
    :returns EvalCode: The code
    :raises HypothesisError: If xs is not admissible
    :raises VerificationError: If the dimension law fails
    """
    x_coords, y_coords = point_arrays(curve, xs)
    basis = monomial_basis(curve, r)
    evaluation = evaluation_matrix(basis, x_coords, y_coords)
    reduced, k, _ = rref(evaluation)
    code = EvalCode(
        curve=curve,
        x_coords=x_coords,
        y_coords=y_coords,
        r=r,
        basis=basis,
        evaluation=evaluation,
        generator=reduced[:k],
    )
    display.vvv(f"agcode: r={r} on {curve}: {code}, |basis|={len(basis)}")

    g = curve.genus
    if check_dimension and 2 * g - 2 < r < code.n and k != r + 1 - g:
        raise VerificationError(
            f"Rank {k} of C_L(D, {r}Q∞) differs from r + 1 - g = "
            f"{r + 1 - g}"
        )
    return code


def gram(code: EvalCode, power: int = 0) -> Matrix:
    """G^(p^power) G^T: all pairwise (twisted) inner products of rows."""
    return product(code.generator, code.generator.T, power)


def euclidean_dual(code: EvalCode) -> Matrix:
    """Basis of C^⊥, n - k rows."""
    return nullspace(code.generator)


def hermitian_dual(code: EvalCode) -> Matrix:
    """Basis of C^⊥H, the entrywise conjugate of the Euclidean dual."""
    return frobenius_matrix(euclidean_dual(code), code.field.tower_degree)


def is_euclidean_so(code: EvalCode) -> bool:
    return is_zero(gram(code))


def is_hermitian_so(code: EvalCode) -> bool:
    return is_zero(gram(code, code.field.tower_degree))


def is_self_dual(code: EvalCode) -> bool:
    if 2 * code.k != code.n:
        return False
    return rowspace_equal(code.generator, euclidean_dual(code))


def dual_identity_check(spec: FamilySpec, r: int) -> bool:
    """
    Compare C_L(D, rQ∞)^⊥ with C_L(D, (n + 2g - 2 - r)Q∞).

    :param FamilySpec spec: A validated family; the identity is only
        established for the family evaluation sets
    :param int r: Positive radius
    :returns bool: True iff both row spaces coincide
    :raises HypothesisError: For non-family input or r <= 0
    """
    # Imported here: families builds on this module
    from ansible_collections.o0_o.agcode.plugins.filter_utils.families import (  # noqa: E501
        FamilySpec,
    )

    if not isinstance(spec, FamilySpec):
        raise HypothesisError(
            "The dual identity is only established for the family "
            f"evaluation sets, got {type(spec).__name__}"
        )
    if r <= 0:
        raise HypothesisError(f"The dual identity needs r > 0, got {r}")

    # Euclidean dual of the code at r against the code at the dual radius
    code = build_code(spec.curve, spec.xs, r, check_dimension=False)
    dual_r = spec.n + 2 * spec.genus - 2 - r
    other = build_code(spec.curve, spec.xs, dual_r, check_dimension=False)
    equal = rowspace_equal(euclidean_dual(code), other.generator)
    display.vvv(
        f"agcode: dual identity r={r} <-> {dual_r} on {spec}: {equal}"
    )
    return equal
