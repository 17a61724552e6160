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
Minimum distance: exhaustive, sampled, or designed.

Exhaustion walks the nonzero messages up to scalars. Messages are
grouped by the position ``top`` of their last nonzero coordinate, which
is fixed to 1; inside a group the lower coordinates run through
``0 .. Q^top - 1`` as little-endian base-Q digits. This is ascending
message index restricted to one representative per projective point,
and the witness is the first minimum-weight codeword met in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, NamedTuple, Optional, Tuple

import numpy as np
from ansible.utils.display import Display

from ansible_collections.o0_o.agcode.plugins.filter_utils.agcode import (
    EvalCode,
    euclidean_dual,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    BudgetExceededError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.fmatrix import (
    Matrix,
)

if TYPE_CHECKING:
    from ansible_collections.o0_o.agcode.plugins.filter_utils.families import (  # noqa: E501
        FamilySpec,
    )

display = Display()

DEFAULT_BUDGET = 2**26
DEFAULT_DUAL_BUDGET = 2**20

# Messages per vectorized batch
CHUNK = 2**14


class DistanceKind(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"
    DESIGNED_ONLY = "designed_only"


@dataclass(frozen=True)
class DistanceResult:
    """
    :param DistanceKind kind: How ``value`` was obtained
    :param Optional[int] value: Minimum weight found, None when
        designed_only
    :param Optional[Tuple[int, ...]] certificate: A codeword of weight
        ``value`` as representation integers
    :param int work: Codewords examined
    """

    kind: DistanceKind
    value: Optional[int] = None
    certificate: Optional[Tuple[int, ...]] = None
    work: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "value": self.value,
            "certificate": (
                None if self.certificate is None else list(self.certificate)
            ),
            "work": self.work,
        }


class DesignedBounds(NamedTuple):
    d_lower: int
    d_dual_lower: int


def _digits(indices: np.ndarray, base: int, width: int) -> np.ndarray:
    """Little-endian base-``base`` digits of each index."""
    out = np.empty((indices.size, width), dtype=np.int64)
    rest = indices.copy()
    for col in range(width):
        out[:, col] = rest % base
        rest //= base
    return out


def _weights(words: Matrix) -> np.ndarray:
    return np.count_nonzero(words.view(np.ndarray), axis=1)


def minimum_weight(
    rows: Matrix, budget: int = DEFAULT_BUDGET
) -> DistanceResult:
    """
    Exact minimum weight of the nonzero vectors in the span of ``rows``.

    ``rows`` must be linearly independent.

    :param Matrix rows: k x n matrix
    :param int budget: Largest admissible Q^k - 1
    :returns DistanceResult: kind exact, designed_only when k = 0
    :raises BudgetExceededError: When Q^k - 1 exceeds ``budget``
    """
    gf = type(rows)
    order = int(gf.order)
    k = rows.shape[0]
    if k == 0:
        return DistanceResult(DistanceKind.DESIGNED_ONLY)

    # Refuse before allocating anything
    total = order**k - 1
    if total > budget:
        raise BudgetExceededError(
            f"Exhaustion needs {order}^{k} - 1 = {total} codewords, "
            f"budget is {budget}"
        )

    best: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    work = 0
    # Scalar multiples share a weight, so only messages whose last
    # nonzero coordinate is 1 are walked
    for top in range(k):
        head = rows[top]
        lower = rows[:top]
        count = order**top
        for start in range(0, count, CHUNK):
            if top:
                idx = np.arange(start, min(count, start + CHUNK))
                words = gf(_digits(idx, order, top)) @ lower + head
            else:
                words = head[np.newaxis, :]
            weights = _weights(words)
            work += weights.size
            pos = int(np.argmin(weights))
            if best is None or weights[pos] < best:
                best = int(weights[pos])
                witness = tuple(words[pos].view(np.ndarray).tolist())

    display.vvv(
        f"agcode: exhausted {work} projective messages of {total}, "
        f"minimum weight {best}"
    )
    return DistanceResult(DistanceKind.EXACT, best, witness, work)


def _message_rows(code: EvalCode) -> Matrix:
    # Monomial messages when the evaluation map is injective
    if code.evaluation.shape[0] == code.k:
        return code.evaluation
    return code.generator


def exact_distance(
    code: EvalCode, budget: int = DEFAULT_BUDGET
) -> DistanceResult:
    """
    Exact minimum distance by message exhaustion.

    Messages are coefficient vectors over the monomial basis whenever
    the evaluation map is injective, over the RREF generator otherwise.

    :raises BudgetExceededError: When (q^2)^k - 1 exceeds ``budget``
    """
    return minimum_weight(_message_rows(code), budget)


def exact_dual_distance(
    code: EvalCode, budget: int = DEFAULT_DUAL_BUDGET
) -> DistanceResult:
    """Exact minimum distance of C^⊥, equal to that of C^⊥H."""
    order = code.field.order
    dim = code.n - code.k
    if order**dim - 1 > budget:
        raise BudgetExceededError(
            f"Dual exhaustion needs {order}^{dim} - 1 codewords, budget is "
            f"{budget}"
        )
    return minimum_weight(euclidean_dual(code), budget)


def sampled_upper_bound(
    code: EvalCode, samples: int, seed: int = 0
) -> DistanceResult:
    """
    Minimum weight over ``samples`` nonzero codewords.

    The first min(samples, k) messages are the unit vectors, so the
    generator rows themselves are always examined; the rest come from
    ``numpy.random.default_rng(seed)`` with zero messages redrawn.

    :param EvalCode code: The code
    :param int samples: Number of codewords to examine
    :param int seed: Generator seed
    :returns DistanceResult: kind upper_bound, designed_only when k = 0
        or ``samples`` < 1
    """
    generator = code.generator
    k = code.k
    if k == 0 or samples < 1:
        return DistanceResult(DistanceKind.DESIGNED_ONLY)

    gf = type(generator)
    order = int(gf.order)
    rng = np.random.default_rng(seed)

    # Generator rows first, then seeded random messages
    batches = [generator[: min(samples, k)]]
    remaining = samples - min(samples, k)
    while remaining > 0:
        size = min(remaining, CHUNK)
        messages = rng.integers(0, order, size=(size, k), dtype=np.int64)
        messages = messages[messages.any(axis=1)]
        if messages.shape[0]:
            batches.append(gf(messages) @ generator)
            remaining -= messages.shape[0]

    # Lightest word, first one wins on ties
    best: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    for words in batches:
        weights = _weights(words)
        pos = int(np.argmin(weights))
        if best is None or weights[pos] < best:
            best = int(weights[pos])
            witness = tuple(words[pos].view(np.ndarray).tolist())

    display.vvv(
        f"agcode: {samples} sampled codewords of {code} (seed {seed}), "
        f"lightest weight {best}"
    )
    return DistanceResult(DistanceKind.UPPER_BOUND, best, witness, samples)


def designed_bounds(spec: FamilySpec, r: int) -> DesignedBounds:
    """d >= n - r and d^⊥ >= r - 2g + 2, both clamped below at 1."""
    return DesignedBounds(
        d_lower=max(1, spec.n - r),
        d_dual_lower=max(1, r - 2 * spec.genus + 2),
    )
