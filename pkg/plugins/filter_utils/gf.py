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
Exact arithmetic in GF(p^k) with an explicit quadratic tower.

Elements are galois ``FieldArray`` scalars whose integer value is the
little-endian coefficient encoding ``sum(c_i * p**i)`` of the element in
the power basis of the modulus root. A ``Field`` pins the modulus and the
primitive element so that every export can be reproduced bit-for-bit.

The subfield GF(q) of GF(q^2) is never materialised as its own field:
membership is the fixed-point test ``a**q == a``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, Optional, Sequence, Tuple, Type, Union

import galois
import numpy as np
from ansible.utils.display import Display

from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    FieldError,
)

display = Display()

FieldElement = galois.FieldArray

# Fields up to this size use log/antilog lookup tables
TABLE_LIMIT = 2**20

_DESCRIPTION_RE = re.compile(r"^GF\((\d+)\^(\d+)\) mod=(\d+(?:,\d+)*)$")


@dataclass(frozen=True)
class Field:
    """
    A finite field GF(p^k) with a pinned modulus and primitive element.

    :param int p: Characteristic (prime)
    :param int k: Extension degree over GF(p)
    :param Tuple[int, ...] modulus: Monic irreducible modulus as
        coefficients ``(c_k, ..., c_0)``, descending degree
    :param int primitive: Representation integer of the designated
        primitive element
    """

    p: int
    k: int
    modulus: Tuple[int, ...]
    primitive: int

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def q(self) -> int:
        """Order of the subfield fixed by conjugation (GF(q) in GF(q^2))."""
        return self.p ** (self.tower_degree)

    @property
    def tower_degree(self) -> int:
        """Degree t with q = p^t; only defined for even k."""
        if self.k % 2:
            raise FieldError(
                f"{describe(self)} has odd degree {self.k}: "
                "no quadratic tower GF(q) ⊂ GF(q²)"
            )
        return self.k // 2

    @cached_property
    def GF(self) -> Type[galois.FieldArray]:
        """The galois array class backing this field."""
        if self.k == 1:
            gf = galois.GF(self.p, primitive_element=self.primitive)
        else:
            poly = galois.Poly(list(self.modulus), field=galois.GF(self.p))
            gf = galois.GF(
                self.order,
                irreducible_poly=poly,
                primitive_element=self.primitive,
            )

        # GF(2) has no lookup mode
        mode = "jit-lookup" if self.order <= TABLE_LIMIT else "jit-calculate"
        if mode in gf.ufunc_modes and gf.ufunc_mode != mode:
            gf.compile(mode)
        display.vvv(f"agcode: {describe(self)} uses {gf.ufunc_mode}")
        return gf

    @property
    def zero(self) -> FieldElement:
        return self.GF(0)

    @property
    def one(self) -> FieldElement:
        return self.GF(1)

    @property
    def gamma(self) -> FieldElement:
        """The designated primitive element."""
        return self.GF(self.primitive)

    def element(self, value: int) -> FieldElement:
        """Decode a representation integer into a field element."""
        if not 0 <= int(value) < self.order:
            raise FieldError(
                f"Representation {value} out of range for {describe(self)}"
            )
        return self.GF(int(value))

    def elements(self, values: Sequence[int]) -> FieldElement:
        """Decode a sequence of representation integers into an array."""
        for value in values:
            if not 0 <= int(value) < self.order:
                raise FieldError(
                    f"Representation {value} out of range for "
                    f"{describe(self)}"
                )
        return self.GF(np.asarray(list(values), dtype=np.int64))

    def encode(self, a: FieldElement) -> int:
        """Representation integer of ``a``."""
        self.check(a)
        return int(a)

    def contains(self, a: object) -> bool:
        return isinstance(a, galois.FieldArray) and type(a) is self.GF

    def check(self, *values: object) -> None:
        """Raise FieldError unless every value belongs to this field."""
        for value in values:
            if not self.contains(value):
                raise FieldError(
                    f"Element {value!r} does not belong to {describe(self)}"
                )

    @cached_property
    def trace_fibers(self) -> Dict[int, Tuple[int, ...]]:
        """Fibers of y -> y^q + y keyed by the image representation."""
        q = self.q
        ys = self.GF.elements
        images = (ys**q + ys).view(np.ndarray).tolist()
        fibers = defaultdict(list)
        for y, image in enumerate(images):
            fibers[image].append(y)
        display.vvv(
            f"agcode: {describe(self)} trace image has {len(fibers)} "
            f"values, fiber size {q}"
        )
        return {image: tuple(members) for image, members in fibers.items()}


@lru_cache(maxsize=None)
def _create_field(
    p: int, k: int, modulus: Optional[Tuple[int, ...]]
) -> Field:
    if not galois.is_prime(p):
        raise FieldError(f"Characteristic {p} is not prime")
    if k < 1:
        raise FieldError(f"Extension degree must be positive, got {k}")

    if modulus is None:
        if k == 1:
            return _create_field(p, 1, (1, 0))
        default = galois.irreducible_poly(p, k, method="min")
        return _create_field(p, k, tuple(int(c) for c in default.coeffs))

    prime_field = galois.GF(p)
    if len(modulus) != k + 1:
        raise FieldError(
            f"Modulus {list(modulus)} has degree {len(modulus) - 1}, "
            f"expected {k}"
        )
    if any(not 0 <= c < p for c in modulus):
        raise FieldError(
            f"Modulus coefficients must lie in 0..{p - 1}, "
            f"got {list(modulus)}"
        )
    if modulus[0] != 1:
        raise FieldError(f"Modulus {list(modulus)} is not monic")
    # Representation integers of GF(p) do not depend on a modulus
    if k == 1 and tuple(modulus) != (1, 0):
        raise FieldError(
            f"Prime field GF({p}) only takes the modulus x, "
            f"got {list(modulus)}"
        )
    poly = galois.Poly(list(modulus), field=prime_field)
    if k > 1 and not poly.is_irreducible():
        raise FieldError(
            f"Modulus {list(modulus)} is reducible over GF({p})"
        )

    if k == 1:
        primitive = int(galois.primitive_root(p))
    else:
        primitive = int(galois.primitive_element(poly, method="min"))

    field = Field(
        p=p,
        k=k,
        modulus=tuple(int(c) for c in poly.coeffs),
        primitive=primitive,
    )
    display.vvv(
        f"agcode: created {describe(field)} with primitive element "
        f"{primitive}"
    )
    return field


def create_field(
    p: int, k: int, modulus: Optional[Sequence[int]] = None
) -> Field:
    """
    Create (or fetch the cached) field GF(p^k).

    Without an explicit modulus the lexicographically smallest monic
    irreducible polynomial of degree k is used, scanning coefficient
    tuples in ascending integer encoding. The primitive element is the
    one with the smallest representation integer.

    :param int p: Prime characteristic
    :param int k: Extension degree, at least 1
    :param Optional[Sequence[int]] modulus: Coefficients
        ``(c_k, ..., c_0)`` of a monic irreducible polynomial
    :returns Field: The field descriptor
    :raises FieldError: If p is not prime or the modulus is not monic,
        irreducible and of degree k
    """
    key = None if modulus is None else tuple(int(c) for c in modulus)
    return _create_field(int(p), int(k), key)


def field_of(a: FieldElement) -> Field:
    """Recover the Field descriptor of a galois element or array."""
    if not isinstance(a, galois.FieldArray):
        raise FieldError(f"{a!r} is not a field element")
    gf = type(a)
    p, k = int(gf.characteristic), int(gf.degree)
    if k == 1:
        # galois reports x - alpha; prime fields here are all built on x
        return create_field(p, 1)
    modulus = tuple(int(c) for c in gf.irreducible_poly.coeffs)
    return create_field(p, k, modulus)


def arith(
    a: FieldElement,
    b: Optional[FieldElement],
    op: str,
    exponent: Optional[int] = None,
) -> FieldElement:
    """
    Apply one field operation.

    :param FieldElement a: Left operand
    :param Optional[FieldElement] b: Right operand, ignored by the unary
        operations ``neg``, ``inv`` and ``pow``
    :param str op: One of add, sub, mul, div, neg, inv, pow
    :param Optional[int] exponent: Exponent for ``pow``; negative values
        are allowed for a nonzero base
    :returns FieldElement: The result, in the operands' field
    :raises FieldError: On mixed fields, unknown operations or
        inversion of zero
    """
    binary = {"add", "sub", "mul", "div"}
    if op in binary:
        if not isinstance(a, galois.FieldArray) or type(a) is not type(b):
            raise FieldError(f"Cannot {op} elements of different fields")
    elif op not in {"neg", "inv", "pow"}:
        raise FieldError(f"Unknown field operation '{op}'")
    elif not isinstance(a, galois.FieldArray):
        raise FieldError(f"{a!r} is not a field element")

    try:
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        if op == "mul":
            return a * b
        if op == "div":
            return a / b
        if op == "neg":
            return -a
        if op == "inv":
            return a**-1
        if exponent is None:
            raise FieldError("Operation 'pow' requires an exponent")
        return a ** int(exponent)
    except ZeroDivisionError as e:
        raise FieldError(f"Inversion of zero in '{op}': {e}")


def frobenius(
    a: Union[FieldElement, galois.FieldArray], e: int
) -> FieldElement:
    """
    Raise ``a`` (element or array, entrywise) to the power p^e.

    With ``e = k/2`` on GF(q^2) this is the conjugation a -> a^q.
    """
    if not isinstance(a, galois.FieldArray):
        raise FieldError(f"{a!r} is not a field element")
    if e < 0:
        raise FieldError(f"Frobenius exponent must be >= 0, got {e}")
    gf = type(a)
    e = e % int(gf.degree)
    if e == 0:
        return a.copy()
    return a ** (int(gf.characteristic) ** e)


def in_subfield(field: Field, a: FieldElement) -> bool:
    """True iff ``a`` lies in GF(q) inside GF(q^2)."""
    field.check(a)
    return bool(a**field.q == a)


def trace_preimages(field: Field, c: FieldElement) -> FieldElement:
    """
    All y in GF(q^2) with y^q + y = c, sorted by representation.

    :returns FieldElement: 1-D array of size q when c lies in GF(q),
        empty otherwise
    :raises FieldError: If the field has no quadratic tower
    """
    field.check(c)
    fiber = field.trace_fibers.get(int(c), ())
    return field.elements(fiber)


def roots_of_unity(field: Field, ell: int) -> FieldElement:
    """
    The ell-th roots of unity, sorted by representation.

    Computed as gamma^((|F|-1)/ell * t) for t = 0..ell-1.

    :raises FieldError: If ell does not divide |F| - 1
    """
    if ell < 1 or (field.order - 1) % ell:
        raise FieldError(
            f"{ell} does not divide |F| - 1 = {field.order - 1}"
        )
    step = (field.order - 1) // ell
    gamma = field.gamma
    values = sorted(int(gamma ** (step * t)) for t in range(ell))
    return field.elements(values)


def fp_subspace(
    field: Field, basis: Union[FieldElement, Sequence[FieldElement]]
) -> FieldElement:
    """
    All GF(p)-linear combinations of ``basis``, sorted by representation.

    :raises FieldError: If the basis is longer than k or dependent
    """
    vectors = [int(b) for b in basis]
    if len(vectors) > field.k:
        raise FieldError(
            f"Subspace basis of size {len(vectors)} exceeds the extension "
            f"degree {field.k}"
        )
    if not vectors:
        return field.elements([0])

    b = field.elements(vectors)
    coefficients = field.GF(
        np.array(list(product(range(field.p), repeat=len(vectors))))
    )
    combos = np.add.reduce(coefficients * b, axis=1)
    span = sorted(set(combos.view(np.ndarray).tolist()))
    if len(span) < field.p ** len(vectors):
        raise FieldError(
            f"Subspace basis {vectors} is linearly dependent over "
            f"GF({field.p})"
        )
    return field.elements(span)


def check_lemma_m(field: Field, m: int) -> bool:
    """
    Check the root-of-unity product identity for every i in 1..m.

    With alpha a primitive m-th root of unity, the product over j != i
    of (alpha^i - alpha^j) must equal m * alpha^(-i), where m is the
    field element 1 + ... + 1.

    :raises FieldError: If m does not divide |F| - 1
    """
    if m < 1 or (field.order - 1) % m:
        raise FieldError(
            f"{m} does not divide |F| - 1 = {field.order - 1}"
        )
    alpha = field.gamma ** ((field.order - 1) // m)
    powers = field.elements([int(alpha**i) for i in range(1, m + 1)])

    diffs = powers[:, np.newaxis] - powers[np.newaxis, :]
    diffs[np.arange(m), np.arange(m)] = field.one
    products = np.multiply.reduce(diffs, axis=1)

    expected = field.GF(m % field.p) * powers**-1
    return bool(np.array_equal(products, expected))


def describe(field: Field) -> str:
    """Render ``GF(p^k) mod=c_k,...,c_0``."""
    coefficients = ",".join(str(c) for c in field.modulus)
    return f"GF({field.p}^{field.k}) mod={coefficients}"


def parse_description(text: str) -> Field:
    """Inverse of ``describe``."""
    match = _DESCRIPTION_RE.match(text.strip())
    if not match:
        raise FieldError(f"Unrecognized field description: {text!r}")
    p, k = int(match.group(1)), int(match.group(2))
    modulus = [int(c) for c in match.group(3).split(",")]
    return create_field(p, k, modulus)
