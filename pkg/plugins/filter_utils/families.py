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
The three self-orthogonal code families and their verification driver.

``as``
    y^q + y = x^m with m | q + 1 and p | m - 1, evaluated above
    μ_{m(q-1)} ∪ {0}.
``herm-mult``
    The Hermitian curve (m = q + 1) above μ_s ∪ {0}, with s | q^2 - 1
    and p | s + 1.
``herm-add``
    The Hermitian curve above a k-dimensional GF(p)-subspace V_k of
    GF(q^2), k <= 2t where q = p^t.

For each family ``ranges`` gives the radii r for which C_L(D, rQ∞) is
predicted Euclidean (and, for ``as``, Hermitian) self-orthogonal, and
the self-dual radius when it exists. ``sweep`` builds every code of
interest and checks each prediction against the computed matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import galois
from ansible.utils.display import Display

from ansible_collections.o0_o.agcode.plugins.filter_utils.agcode import (
    EvalCode,
    build_code,
    dual_identity_check,
    is_euclidean_so,
    is_hermitian_so,
    is_self_dual,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.curve import (
    ASCurve,
    make_curve,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.distance import (
    DEFAULT_BUDGET,
    DEFAULT_DUAL_BUDGET,
    DistanceKind,
    DistanceResult,
    designed_bounds,
    exact_distance,
    exact_dual_distance,
    sampled_upper_bound,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    BudgetExceededError,
    FieldError,
    HypothesisError,
    VerificationError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.gf import (
    Field,
    FieldElement,
    describe,
    fp_subspace,
    roots_of_unity,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.report import (
    FAIL,
    PASS,
    SKIP,
    Check,
    RadiusRecord,
    VerificationReport,
)

display = Display()

Interval = Tuple[int, int]


class Variant(str, Enum):
    AS_ROOTS = "as"
    HERM_MULT = "herm-mult"
    HERM_ADD = "herm-add"


@dataclass(frozen=True, eq=False)
class FamilySpec:
    """
    A validated family instance.

    :param Variant variant: Which construction
    :param ASCurve curve: The curve, Hermitian for both herm variants
    :param FieldElement xs: Evaluation x-values, sorted
    :param int n: Code length, q * len(xs)
    :param int genus: Genus of ``curve``
    :param Optional[int] s: Subgroup order (herm-mult)
    :param Optional[int] subspace_dim: Dimension k of V_k (herm-add)
    :param Tuple[int, ...] subspace_basis: Basis of V_k as
        representation integers (herm-add)
    """

    variant: Variant
    curve: ASCurve
    xs: FieldElement
    n: int
    genus: int
    s: Optional[int] = None
    subspace_dim: Optional[int] = None
    subspace_basis: Tuple[int, ...] = ()

    @property
    def field(self) -> Field:
        return self.curve.field

    @property
    def p(self) -> int:
        return self.curve.p

    @property
    def q(self) -> int:
        return self.curve.q

    @property
    def m(self) -> int:
        return self.curve.m

    @property
    def t(self) -> int:
        return self.field.tower_degree

    def echo(self) -> Dict[str, Any]:
        """Parameters as they appear in reports and sidecars."""
        data: Dict[str, Any] = {
            "family": self.variant.value,
            "q": self.q,
            "m": self.m,
            "modulus": describe(self.field),
            "n": self.n,
            "genus": self.genus,
        }
        if self.variant is Variant.HERM_MULT:
            data["s"] = self.s
        if self.variant is Variant.HERM_ADD:
            data["k"] = self.subspace_dim
            data["subspace_basis"] = list(self.subspace_basis)
        return data

    def __str__(self) -> str:
        if self.variant is Variant.AS_ROOTS:
            return f"as(q={self.q},m={self.m})"
        if self.variant is Variant.HERM_MULT:
            return f"herm-mult(q={self.q},s={self.s})"
        basis = ",".join(str(b) for b in self.subspace_basis)
        return f"herm-add(q={self.q},k={self.subspace_dim},V=<{basis}>)"


@dataclass(frozen=True)
class PredictedParams:
    """
    Theorem predictions for a family, optionally at one radius.

    Ranges are inclusive ``(lo, hi)`` and None when empty or not
    claimed. The per-radius fields stay None until ``predict`` fills
    them.
    """

    n: int
    genus: int
    euclidean_so_range: Optional[Interval]
    hermitian_so_range: Optional[Interval]
    self_dual_r: Optional[int]
    r: Optional[int] = None
    k0: Optional[int] = None
    d0_lower: Optional[int] = None
    d_dual_lower: Optional[int] = None

    def _within(self, interval: Optional[Interval]) -> bool:
        if interval is None or self.r is None:
            return False
        return interval[0] <= self.r <= interval[1]

    @property
    def predicts_euclidean_so(self) -> bool:
        if self.predicts_self_dual:
            return True
        return self._within(self.euclidean_so_range)

    @property
    def predicts_hermitian_so(self) -> bool:
        return self._within(self.hermitian_so_range)

    @property
    def predicts_self_dual(self) -> bool:
        return self.r is not None and self.r == self.self_dual_r

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "genus": self.genus,
            "euclidean_so_range": _interval(self.euclidean_so_range),
            "hermitian_so_range": _interval(self.hermitian_so_range),
            "self_dual_r": self.self_dual_r,
            "r": self.r,
            "k0": self.k0,
            "d0_lower": self.d0_lower,
            "d_dual_lower": self.d_dual_lower,
            "predicts_euclidean_so": self.predicts_euclidean_so,
            "predicts_hermitian_so": self.predicts_hermitian_so,
            "predicts_self_dual": self.predicts_self_dual,
        }


@dataclass(frozen=True)
class QuantumParams:
    """[[n, k1, >= d1]]_q from a Hermitian self-orthogonal code."""

    n: int
    k1: int
    d1_lower: int
    q: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k1": self.k1,
            "d1_lower": self.d1_lower,
            "q": self.q,
            "notation": str(self),
        }

    def __str__(self) -> str:
        return f"[[{self.n},{self.k1},>={self.d1_lower}]]_{self.q}"


@dataclass(frozen=True)
class SweepBudget:
    """
    Resource limits for ``verify`` and ``sweep``.

    :param int distance_budget: Largest (q^2)^k - 1 for exact distance
    :param int dual_distance_budget: Same for the dual code
    :param int samples: Sampled codewords when exhaustion is over budget
    :param int seed: Sampling seed
    :param int dual_identity_max_n: Largest n for the dual identity
    :param int window_max_n: Largest n for which sweeps cover every
        radius 1 .. n + 2g - 3
    :param bool extended: Sweep every radius 0 .. n + 2g - 2
    """

    distance_budget: int = DEFAULT_BUDGET
    dual_distance_budget: int = DEFAULT_DUAL_BUDGET
    samples: int = 0
    seed: int = 0
    dual_identity_max_n: int = 256
    window_max_n: int = 64
    extended: bool = False


def _interval(interval: Optional[Interval]) -> Optional[List[int]]:
    return None if interval is None else list(interval)


def _nonempty(lo: int, hi: int) -> Optional[Interval]:
    return (lo, hi) if lo <= hi else None


def _split_q(q: int) -> Tuple[int, int]:
    if q < 2 or not galois.is_prime_power(q):
        raise HypothesisError(f"q = {q} is not a prime power")
    primes, exponents = galois.factors(q)
    return int(primes[0]), int(exponents[0])


def _require(value: Optional[int], name: str, variant: Variant) -> int:
    if value is None:
        raise HypothesisError(f"Family '{variant.value}' requires {name}")
    return int(value)


def _as_roots(
    q: int, m: int, modulus: Optional[Sequence[int]]
) -> FamilySpec:
    p, _ = _split_q(q)
    if m < 1:
        raise HypothesisError(f"m = {m} must be positive")
    if (m - 1) % p:
        raise HypothesisError(f"p ∤ m−1 ({p} ∤ {m - 1})")
    if (q + 1) % m:
        raise HypothesisError(f"m ∤ q+1 ({m} ∤ {q + 1})")

    curve = make_curve(q, m, modulus)
    roots = roots_of_unity(curve.field, m * (q - 1))
    xs = curve.field.elements(sorted([0] + [int(x) for x in roots]))
    return FamilySpec(
        variant=Variant.AS_ROOTS,
        curve=curve,
        xs=xs,
        n=q * (m * (q - 1) + 1),
        genus=curve.genus,
    )


def _herm_mult(
    q: int, s: int, modulus: Optional[Sequence[int]]
) -> FamilySpec:
    p, _ = _split_q(q)
    if s < 1 or (q * q - 1) % s:
        raise HypothesisError(f"s ∤ q²−1 ({s} ∤ {q * q - 1})")
    if (s + 1) % p:
        raise HypothesisError(f"p ∤ s+1 ({p} ∤ {s + 1})")

    curve = make_curve(q, q + 1, modulus)
    roots = roots_of_unity(curve.field, s)
    xs = curve.field.elements(sorted([0] + [int(x) for x in roots]))
    return FamilySpec(
        variant=Variant.HERM_MULT,
        curve=curve,
        xs=xs,
        n=q * (s + 1),
        genus=curve.genus,
        s=s,
    )


def _herm_add(
    q: int,
    k: int,
    basis: Optional[Sequence[int]],
    modulus: Optional[Sequence[int]],
) -> FamilySpec:
    p, t = _split_q(q)
    if k < 1:
        raise HypothesisError(f"Subspace dimension k = {k} must be positive")
    if k > 2 * t:
        raise HypothesisError(f"k > 2t ({k} > {2 * t})")

    curve = make_curve(q, q + 1, modulus)
    field = curve.field
    if basis is None:
        basis = [int(field.gamma**i) for i in range(k)]
    basis = tuple(int(b) for b in basis)
    if len(basis) != k:
        raise HypothesisError(
            f"Subspace basis has {len(basis)} elements, expected k = {k}"
        )
    try:
        xs = fp_subspace(field, field.elements(basis))
    except FieldError as e:
        raise HypothesisError(f"Dependent subspace basis: {e}")
    return FamilySpec(
        variant=Variant.HERM_ADD,
        curve=curve,
        xs=xs,
        n=q * p**k,
        genus=curve.genus,
        subspace_dim=k,
        subspace_basis=basis,
    )


def validate(
    variant: Union[Variant, str],
    q: int,
    m: Optional[int] = None,
    s: Optional[int] = None,
    k: Optional[int] = None,
    subspace_basis: Optional[Sequence[int]] = None,
    modulus: Optional[Sequence[int]] = None,
) -> FamilySpec:
    """
    Check the family hypotheses and materialize curve and x-set.

    :param variant: ``as``, ``herm-mult`` or ``herm-add``
    :param int q: Prime power
    :param Optional[int] m: Exponent (as)
    :param Optional[int] s: Subgroup order (herm-mult)
    :param Optional[int] k: Subspace dimension (herm-add)
    :param subspace_basis: Basis of V_k as representation integers,
        default {1, γ, ..., γ^(k-1)} (herm-add)
    :param modulus: Modulus of GF(q^2) as ``(c_k, ..., c_0)``
    :returns FamilySpec: The validated instance
    :raises HypothesisError: Naming the violated hypothesis
    """
    try:
        variant = Variant(variant)
    except ValueError:
        choices = ", ".join(v.value for v in Variant)
        raise HypothesisError(
            f"Unknown family '{variant}', expected one of {choices}"
        )

    if variant is Variant.AS_ROOTS:
        spec = _as_roots(q, _require(m, "m", variant), modulus)
    elif variant is Variant.HERM_MULT:
        spec = _herm_mult(q, _require(s, "s", variant), modulus)
    else:
        k = _require(k, "k", variant)
        spec = _herm_add(q, k, subspace_basis, modulus)

    if spec.xs.size * spec.q != spec.n:
        raise VerificationError(
            f"{spec}: {spec.xs.size} x-values do not give n = {spec.n}"
        )
    display.vv(f"agcode: {spec}: n={spec.n}, g={spec.genus}")
    return spec


def as_roots(
    q: int, m: int, modulus: Optional[Sequence[int]] = None
) -> FamilySpec:
    return validate(Variant.AS_ROOTS, q, m=m, modulus=modulus)


def hermitian_mult(
    q: int, s: int, modulus: Optional[Sequence[int]] = None
) -> FamilySpec:
    return validate(Variant.HERM_MULT, q, s=s, modulus=modulus)


def hermitian_add(
    q: int,
    k: int,
    basis: Optional[Sequence[int]] = None,
    modulus: Optional[Sequence[int]] = None,
) -> FamilySpec:
    return validate(
        Variant.HERM_ADD, q, k=k, subspace_basis=basis, modulus=modulus
    )


def _self_dual_granted(spec: FamilySpec) -> bool:
    if spec.variant is Variant.HERM_MULT:
        return spec.q % 2 == 0 or spec.s % 2 == 1
    return spec.q % 2 == 0


def ranges(spec: FamilySpec) -> PredictedParams:
    """
    Theorem ranges and the self-dual radius, without a radius.

    The self-dual radius is (n + 2g - 2)/2 when that is an integer and
    the family's parity condition holds.
    """
    q, m = spec.q, spec.m
    hermitian = None
    # Theorem ranges per family
    if spec.variant is Variant.AS_ROOTS:
        low = m * q - m - q
        euclidean = _nonempty(low, (m * (q * q - 1) - 1) // 2)
        hermitian = _nonempty(low, m * (q - 1) - 1)
    elif spec.variant is Variant.HERM_MULT:
        euclidean = _nonempty(q * q - q - 1, (q * (q + spec.s) - 2) // 2)
    else:
        euclidean = _nonempty(
            q * q - q - 1, (q * (spec.p**spec.subspace_dim + q - 1) - 2) // 2
        )

    # Self-dual radius
    self_dual_r = None
    total = spec.n + 2 * spec.genus - 2
    if total % 2 == 0 and _self_dual_granted(spec):
        self_dual_r = total // 2

    return PredictedParams(
        n=spec.n,
        genus=spec.genus,
        euclidean_so_range=euclidean,
        hermitian_so_range=hermitian,
        self_dual_r=self_dual_r,
    )


def predict(spec: FamilySpec, r: int) -> PredictedParams:
    """``ranges`` with the per-radius values filled in."""
    g = spec.genus
    bounds = designed_bounds(spec, r)
    return replace(
        ranges(spec),
        r=r,
        k0=r - g + 1 if 2 * g - 2 < r < spec.n else None,
        d0_lower=bounds.d_lower,
        d_dual_lower=bounds.d_dual_lower,
    )


def build(spec: FamilySpec, r: int) -> Tuple[EvalCode, PredictedParams]:
    """
    Build the family code at radius r.

    :raises HypothesisError: If r < 0
    :raises VerificationError: If the rank differs from k0
    """
    if r < 0:
        raise HypothesisError(f"Radius must be non-negative, got {r}")
    code = build_code(spec.curve, spec.xs, r)
    predicted = predict(spec, r)
    if predicted.k0 is not None and code.k != predicted.k0:
        raise VerificationError(
            f"{spec} at r={r}: rank {code.k} differs from k0 = "
            f"{predicted.k0}"
        )
    return code, predicted


def closed_form_quantum(q: int, m: int, r: int) -> QuantumParams:
    """k1 = mq^2 - m - 2r - 1 and d1 >= r - mq + m + q + 1."""
    return QuantumParams(
        n=m * q * q - m * q + q,
        k1=m * q * q - m - 2 * r - 1,
        d1_lower=r - m * q + m + q + 1,
        q=q,
    )


def cubic_quantum_form(q: int, r: int) -> QuantumParams:
    """The m = 3 case: [[3q^2 - 2q, 3q^2 - 4 - 2r, >= r + 4 - 2q]]_q."""
    return QuantumParams(
        n=3 * q * q - 2 * q,
        k1=3 * q * q - 4 - 2 * r,
        d1_lower=r + 4 - 2 * q,
        q=q,
    )


def quantum_params(spec: FamilySpec, r: int) -> QuantumParams:
    """
    Quantum code from the Hermitian self-orthogonal ``as`` code.

    :param FamilySpec spec: An ``as`` family
    :param int r: Radius inside the Hermitian range
    :returns QuantumParams: k1 = n - 2k0, d1 >= r - 2g + 2
    :raises HypothesisError: For other families or radii
    :raises VerificationError: If the closed forms disagree
    """
    if spec.variant is not Variant.AS_ROOTS:
        raise HypothesisError(
            "Quantum parameters are only derived for the 'as' family, "
            f"got '{spec.variant.value}'"
        )
    hermitian = ranges(spec).hermitian_so_range
    if hermitian is None or not hermitian[0] <= r <= hermitian[1]:
        raise HypothesisError(
            f"r = {r} outside the Hermitian self-orthogonality range "
            f"{_interval(hermitian)} of {spec}"
        )

    k0 = r - spec.genus + 1
    params = QuantumParams(
        n=spec.n,
        k1=spec.n - 2 * k0,
        d1_lower=r - 2 * spec.genus + 2,
        q=spec.q,
    )
    closed = closed_form_quantum(spec.q, spec.m, r)
    if closed != params:
        raise VerificationError(
            f"Closed form {closed} disagrees with {params} for {spec}"
        )
    if spec.m == 3 and cubic_quantum_form(spec.q, r) != params:
        raise VerificationError(
            f"m = 3 closed form disagrees with {params} for {spec}"
        )
    return params


def self_dual_distance_bound(spec: FamilySpec) -> Optional[int]:
    """
    Closed-form distance bound of the self-dual code, if one exists.

    For ``as`` and ``herm-mult`` this equals n - r_sd. For ``herm-add``
    the closed form p^k q/2 - q(q+1)/2 + 1 sits q below n - r_sd.
    """
    if ranges(spec).self_dual_r is None:
        return None
    q, m = spec.q, spec.m
    if spec.variant is Variant.AS_ROOTS:
        return (m * q * q + m + 1) // 2 - (m - 1) * q
    if spec.variant is Variant.HERM_MULT:
        return q * (spec.s - q + 2) // 2 + 1
    return spec.p**spec.subspace_dim * q // 2 - q * (q + 1) // 2 + 1


def singleton_defect(n: int, k: int, d: int) -> int:
    return n + 1 - k - d


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _distance_field(
    result: DistanceResult, lower: int, skipped: str = ""
) -> Dict[str, Any]:
    data = result.to_dict()
    data["designed_lower"] = lower
    if skipped:
        data["detail"] = skipped
    return data


def _check_distance(
    record: RadiusRecord,
    name: str,
    result: DistanceResult,
    lower: int,
    beyond: bool,
) -> None:
    if result.kind is DistanceKind.DESIGNED_ONLY:
        record.add(Check(name, SKIP, lower, None, beyond, "designed only"))
        return
    record.add(
        Check(
            name,
            _status(result.value >= lower),
            lower,
            result.value,
            beyond,
            result.kind.value,
        )
    )


def _verify_radius(
    spec: FamilySpec, r: int, budget: SweepBudget, beyond: bool
) -> RadiusRecord:
    # Build without the dimension assertion, it is reported as a check
    n, g = spec.n, spec.genus
    predicted = predict(spec, r)
    code = build_code(spec.curve, spec.xs, r, check_dimension=False)
    record = RadiusRecord(
        r=r,
        n=n,
        k=code.k,
        basis_size=len(code.basis),
        predicted_k0=predicted.k0,
        beyond_theorem=beyond,
    )

    # Dimension law, only where k0 is predicted
    if predicted.k0 is not None:
        ok = code.k == predicted.k0 == len(code.basis)
        record.add(
            Check(
                "dimension",
                _status(ok),
                predicted.k0,
                code.k,
                beyond,
                f"{len(code.basis)} monomials",
            )
        )

    # Euclidean self-orthogonality
    observed = is_euclidean_so(code)
    record.euclidean_so = {
        "predicted": predicted.predicts_euclidean_so,
        "observed": observed,
    }
    if predicted.predicts_euclidean_so:
        record.add(Check("euclidean_so", _status(observed), True, observed))
    elif 2 * r <= n + 2 * g - 2:
        # The dual identity gives C ⊆ C^⊥ below the theorem range too
        record.add(
            Check(
                "euclidean_so",
                _status(observed),
                True,
                observed,
                True,
                "outside the theorem range",
            )
        )

    # Hermitian self-orthogonality
    observed = is_hermitian_so(code)
    record.hermitian_so = {
        "predicted": predicted.predicts_hermitian_so,
        "observed": observed,
    }
    if predicted.predicts_hermitian_so:
        record.add(Check("hermitian_so", _status(observed), True, observed))

    # Self-duality and the closed-form distance of the self-dual code
    observed = is_self_dual(code)
    record.self_dual = {
        "predicted": predicted.predicts_self_dual,
        "observed": observed,
    }
    if predicted.predicts_self_dual:
        record.add(
            Check(
                "self_dual",
                _status(observed and 2 * code.k == n),
                True,
                observed,
            )
        )
        bound = self_dual_distance_bound(spec)
        record.add(
            Check(
                "self_dual_distance_form",
                _status(bound is not None and bound <= n - r),
                bound,
                n - r,
            )
        )

    # Dual identity against the radius n + 2g - 2 - r
    if r > 0 and n <= budget.dual_identity_max_n:
        record.dual_identity = dual_identity_check(spec, r)
        record.add(
            Check(
                "dual_identity",
                _status(record.dual_identity),
                True,
                record.dual_identity,
                beyond,
                f"dual radius {n + 2 * g - 2 - r}",
            )
        )
    elif r > 0:
        display.warning(
            f"agcode: {spec} r={r}: dual identity skipped, n = {n} exceeds "
            f"{budget.dual_identity_max_n}"
        )
        record.add(
            Check("dual_identity", SKIP, True, None, beyond, "over budget")
        )

    # Designed distances are only meaningful below n
    if r < n:
        bounds = designed_bounds(spec, r)
        result, note = _distance(code, budget)
        record.distance = _distance_field(result, bounds.d_lower, note)
        _check_distance(record, "distance", result, bounds.d_lower, beyond)
        if result.kind is DistanceKind.EXACT:
            record.singleton_defect = singleton_defect(
                n, code.k, result.value
            )

        result, note = _dual_distance(code, budget)
        record.dual_distance = _distance_field(
            result, bounds.d_dual_lower, note
        )
        _check_distance(
            record, "dual_distance", result, bounds.d_dual_lower, beyond
        )

    # Quantum parameters inside the Hermitian range
    if spec.variant is Variant.AS_ROOTS and predicted.predicts_hermitian_so:
        try:
            params = quantum_params(spec, r)
        except VerificationError as e:
            record.add(
                Check("quantum_closed_form", FAIL, None, None, False, str(e))
            )
        else:
            record.quantum = params.to_dict()
            record.add(
                Check("quantum_closed_form", PASS, str(params), str(params))
            )

    failed = [c.name for c in record.checks if c.status == FAIL]
    display.vv(
        f"agcode: {spec} r={r}: {code}, {len(record.checks)} checks, "
        f"failed {failed or 'none'}"
    )
    return record


def _distance(
    code: EvalCode, budget: SweepBudget
) -> Tuple[DistanceResult, str]:
    try:
        return exact_distance(code, budget.distance_budget), ""
    except BudgetExceededError as e:
        note = str(e)
    if budget.samples > 0:
        result = sampled_upper_bound(code, budget.samples, budget.seed)
    else:
        result = DistanceResult(DistanceKind.DESIGNED_ONLY)
    display.warning(f"agcode: exact distance of {code} skipped: {note}")
    return result, note


def _dual_distance(
    code: EvalCode, budget: SweepBudget
) -> Tuple[DistanceResult, str]:
    try:
        return exact_dual_distance(code, budget.dual_distance_budget), ""
    except BudgetExceededError as e:
        return DistanceResult(DistanceKind.DESIGNED_ONLY), str(e)


def sweep_radii(spec: FamilySpec, budget: SweepBudget) -> List[int]:
    """Theorem radii, plus the dual window for small n, ascending."""
    predicted = ranges(spec)
    radii = set()
    for interval in (
        predicted.euclidean_so_range,
        predicted.hermitian_so_range,
    ):
        if interval is not None:
            radii.update(range(interval[0], interval[1] + 1))
    if predicted.self_dual_r is not None:
        radii.add(predicted.self_dual_r)

    top = spec.n + 2 * spec.genus - 2
    if spec.n <= budget.window_max_n:
        radii.update(range(1, top))
    if budget.extended:
        radii.update(range(0, top + 1))
    return sorted(radii)


def _in_theorem(predicted: PredictedParams, r: int) -> bool:
    probe = replace(predicted, r=r)
    return (
        probe.predicts_euclidean_so
        or probe.predicts_hermitian_so
        or probe.predicts_self_dual
    )


def verify(
    spec: FamilySpec, r: int, budget: Optional[SweepBudget] = None
) -> VerificationReport:
    """
    Check every applicable claim at a single radius.

    :raises HypothesisError: If r < 0
    """
    if r < 0:
        raise HypothesisError(f"Radius must be non-negative, got {r}")
    budget = budget or SweepBudget()
    predicted = ranges(spec)
    report = VerificationReport(spec=spec.echo())
    report.records.append(
        _verify_radius(spec, r, budget, not _in_theorem(predicted, r))
    )
    _annotate(report)
    return report


def sweep(
    spec: FamilySpec, budget: Optional[SweepBudget] = None
) -> VerificationReport:
    """
    Check every claim at every radius of interest.

    Radii are processed in ascending order and the report is ordered
    by r. Radii outside the theorem ranges are flagged ``beyond_theorem``.
    """
    budget = budget or SweepBudget()
    predicted = ranges(spec)
    report = VerificationReport(spec=spec.echo())
    for r in sweep_radii(spec, budget):
        report.records.append(
            _verify_radius(spec, r, budget, not _in_theorem(predicted, r))
        )
    _annotate(report)
    display.vv(f"agcode: sweep of {spec}: {report.summary}")
    return report


def _annotate(report: VerificationReport) -> None:
    kinds = {
        record.distance.get("kind")
        for record in report.records
        if record.distance
    }
    if kinds - {DistanceKind.EXACT.value}:
        report.notes.append(
            "Some distances are not certified by exhaustion; "
            "upper_bound values are sampled and designed_only values "
            "rest on d >= n - r alone."
        )
