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
Dense exact linear algebra over a finite field.

Matrices are 2-D galois ``FieldArray`` instances. Every routine here is
deterministic: elimination always takes the leftmost pivot column and
the first nonzero row below the current pivot row, and null-space bases
come from unit assignments of the free columns in ascending order.
"""

from __future__ import annotations

from typing import Sequence, Tuple

import galois
import numpy as np
from ansible.utils.display import Display

from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    ShapeError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.gf import (
    Field,
    frobenius,
)

display = Display()

Matrix = galois.FieldArray


def matrix(
    field: Field, rows: Sequence[Sequence[int]], cols: int = 0
) -> Matrix:
    """
    Build a matrix from representation integers.

    :param Field field: Owning field
    :param rows: Row-major representation integers
    :param int cols: Column count, only consulted when ``rows`` is empty
    :returns Matrix: A rows x cols matrix over ``field``
    """
    rows = [list(row) for row in rows]
    if not rows:
        return field.GF.Zeros((0, cols))
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise ShapeError(f"Ragged matrix rows with widths {sorted(widths)}")
    width = widths.pop()
    return field.GF(np.array(rows, dtype=np.int64).reshape(len(rows), width))


def _check(M: Matrix) -> None:
    if not isinstance(M, galois.FieldArray) or M.ndim != 2:
        raise ShapeError(f"Expected a 2-D field matrix, got {M!r}")


def _check_pair(A: Matrix, B: Matrix) -> None:
    _check(A)
    _check(B)
    if type(A) is not type(B):
        raise ShapeError(
            f"Matrices belong to different fields: {type(A).name} and "
            f"{type(B).name}"
        )


def is_zero(M: Matrix) -> bool:
    return not np.any(M.view(np.ndarray))


def rref(M: Matrix) -> Tuple[Matrix, int, Tuple[int, ...]]:
    """
    Reduced row echelon form.

    :param Matrix M: Input matrix
    :returns Tuple[Matrix, int, Tuple[int, ...]]: The reduced matrix,
        the rank and the strictly increasing pivot columns
    """
    _check(M)
    if 0 in M.shape:
        return M.copy(), 0, ()

    R = M.row_reduce()
    pivots = []
    for row in R.view(np.ndarray):
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            break
        pivots.append(int(nonzero[0]))
    return R, len(pivots), tuple(pivots)


def rank(M: Matrix) -> int:
    return rref(M)[1]


def nullspace(M: Matrix) -> Matrix:
    """
    Basis of {v : M v^T = 0}, one row per free column.

    Row i has a 1 in the i-th free column (ascending), zeros in the
    other free columns and the negated RREF entries in pivot columns.
    """
    _check(M)
    cols = M.shape[1]
    R, r, pivots = rref(M)
    free = [c for c in range(cols) if c not in set(pivots)]

    N = type(M).Zeros((len(free), cols))
    if free:
        N[np.arange(len(free)), free] = 1
        if r:
            N[:, list(pivots)] = -R[:r][:, free].T
    return N


def frobenius_matrix(M: Matrix, e: int) -> Matrix:
    """Entrywise a -> a^(p^e)."""
    _check(M)
    return frobenius(M, e)


def product(A: Matrix, B: Matrix, left_entry_power: int = 0) -> Matrix:
    """
    Matrix product with an optional Frobenius twist of the left factor.

    :param Matrix A: Left factor; each entry is raised to
        p^left_entry_power before multiplying
    :param Matrix B: Right factor
    :param int left_entry_power: Frobenius exponent, 0 for a plain
        product
    :returns Matrix: The product A' B
    :raises ShapeError: On field or inner-dimension mismatch
    """
    _check_pair(A, B)
    if A.shape[1] != B.shape[0]:
        raise ShapeError(
            f"Cannot multiply {A.shape[0]}x{A.shape[1]} by "
            f"{B.shape[0]}x{B.shape[1]}"
        )
    if 0 in (A.shape[0], A.shape[1], B.shape[1]):
        return type(A).Zeros((A.shape[0], B.shape[1]))

    left = frobenius(A, left_entry_power) if left_entry_power else A
    return left @ B


def rowspace_equal(A: Matrix, B: Matrix) -> bool:
    """True iff A and B span the same row space."""
    _check_pair(A, B)
    if A.shape[1] != B.shape[1]:
        raise ShapeError(
            f"Column counts differ: {A.shape[1]} and {B.shape[1]}"
        )
    RA, rank_a, _ = rref(A)
    RB, rank_b, _ = rref(B)
    if rank_a != rank_b:
        return False
    return bool(np.array_equal(RA[:rank_a], RB[:rank_b]))


def rowspace_contains(A: Matrix, B: Matrix) -> bool:
    """True iff every row of B lies in the row space of A."""
    _check_pair(A, B)
    if B.shape[0] == 0:
        return True
    stacked = np.concatenate([A, B], axis=0)
    return rank(stacked) == rank(A)
