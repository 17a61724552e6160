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
Verification reports and the on-disk formats.

Reports serialize to JSON with sorted keys and two-space indentation,
so parsing a report and emitting it again gives identical bytes.

Generator matrices are written as text::

    FIELD GF(2^2) mod=1,1,1
    CODE n=8 k=4 r=4 family=as
    1 0 0 0 ...

followed by k lines of n representation integers.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field as default
from typing import Any, Dict, List, Optional, TextIO, Tuple

import numpy as np

from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    AGCodeError,
    ShapeError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.fmatrix import (
    Matrix,
    matrix,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.gf import (
    Field,
    describe,
    parse_description,
)

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class Check:
    """
    One pass/fail/skip verdict with its evidence.

    :param str name: Check identifier, e.g. ``euclidean_so``
    :param str status: ``pass``, ``fail`` or ``skip``
    :param Any predicted: What the theorem (or bound) claims
    :param Any observed: What was computed, None when skipped
    :param bool beyond_theorem: Set for radii outside the theorem ranges
    :param str detail: Free-form note, e.g. why a check was skipped
    """

    name: str
    status: str
    predicted: Any = None
    observed: Any = None
    beyond_theorem: bool = False
    detail: str = ""


@dataclass
class RadiusRecord:
    """Everything computed for one radius r."""

    r: int
    n: int
    k: int
    basis_size: int
    predicted_k0: Optional[int] = None
    euclidean_so: Dict[str, Any] = default(default_factory=dict)
    hermitian_so: Dict[str, Any] = default(default_factory=dict)
    self_dual: Dict[str, Any] = default(default_factory=dict)
    dual_identity: Optional[bool] = None
    distance: Dict[str, Any] = default(default_factory=dict)
    dual_distance: Dict[str, Any] = default(default_factory=dict)
    quantum: Optional[Dict[str, Any]] = None
    singleton_defect: Optional[int] = None
    beyond_theorem: bool = False
    checks: List[Check] = default(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check


@dataclass
class VerificationReport:
    """
    Result of ``verify`` or ``sweep`` on one family.

    :param Dict[str, Any] spec: Echo of the family parameters
    :param List[RadiusRecord] records: One record per radius, ascending
    :param List[str] notes: Report-wide remarks such as budget fallbacks
    """

    spec: Dict[str, Any]
    records: List[RadiusRecord] = default(default_factory=list)
    notes: List[str] = default(default_factory=list)

    @property
    def checks(self) -> List[Check]:
        return [check for record in self.records for check in record.checks]

    @property
    def summary(self) -> Dict[str, int]:
        statuses = [check.status for check in self.checks]
        return {
            "checks_run": sum(s != SKIP for s in statuses),
            "passed": statuses.count(PASS),
            "failed": statuses.count(FAIL),
            "skipped": statuses.count(SKIP),
        }

    @property
    def passed(self) -> bool:
        return self.summary["failed"] == 0

    def failures(self) -> List[Tuple[int, Check]]:
        """(r, check) for every failed check."""
        return [
            (record.r, check)
            for record in self.records
            for check in record.checks
            if check.status == FAIL
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "spec": dict(self.spec),
            "records": [asdict(record) for record in self.records],
            "notes": list(self.notes),
            "summary": self.summary,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> VerificationReport:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise AGCodeError(
                "Unsupported report schema version "
                f"{data.get('schema_version')!r}"
            )
        records = []
        for raw in data.get("records", []):
            raw = dict(raw)
            checks = [Check(**check) for check in raw.pop("checks", [])]
            records.append(RadiusRecord(checks=checks, **raw))
        return cls(
            spec=dict(data["spec"]),
            records=records,
            notes=list(data.get("notes", [])),
        )


def dump_json(data: Dict[str, Any]) -> str:
    """Canonical JSON text, newline-terminated."""
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    return text + "\n"


def load_json(text: str) -> Dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise AGCodeError(f"Invalid report JSON: {e}")
    if not isinstance(data, dict):
        raise AGCodeError("A report must be a JSON object")
    return data


def format_matrix(
    field: Field, generator: Matrix, r: int, family: str
) -> str:
    """Render the generator matrix file."""
    k, n = generator.shape
    lines = [
        f"FIELD {describe(field)}",
        f"CODE n={n} k={k} r={r} family={family}",
    ]
    for row in generator.view(np.ndarray).tolist():
        lines.append(" ".join(str(value) for value in row))
    return "\n".join(lines) + "\n"


def write_matrix(
    stream: TextIO, field: Field, generator: Matrix, r: int, family: str
) -> None:
    stream.write(format_matrix(field, generator, r, family))


def _header(line: str, keyword: str) -> str:
    prefix = f"{keyword} "
    if not line.startswith(prefix):
        raise ShapeError(f"Expected a '{keyword}' header, got {line!r}")
    return line[len(prefix):]


def read_matrix(stream: TextIO) -> Tuple[Field, Dict[str, Any], Matrix]:
    """
    Parse a generator matrix file.

    :returns Tuple[Field, Dict[str, Any], Matrix]: The field, the CODE
        header as ``{"n", "k", "r", "family"}`` and the k x n matrix
    :raises ShapeError: On malformed headers or rows
    :raises FieldError: On an unknown field or out-of-range entries
    """
    lines = [line.strip() for line in stream.read().splitlines()]
    lines = [line for line in lines if line]
    if len(lines) < 2:
        raise ShapeError("Matrix file needs FIELD and CODE headers")

    # FIELD line
    field = parse_description(_header(lines[0], "FIELD"))

    # CODE line
    header: Dict[str, Any] = {}
    for token in _header(lines[1], "CODE").split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ShapeError(f"Malformed CODE token {token!r}")
        header[key] = value
    try:
        for key in ("n", "k", "r"):
            header[key] = int(header[key])
    except (KeyError, ValueError) as e:
        raise ShapeError(f"Malformed CODE header {lines[1]!r}: {e}")
    header.setdefault("family", "")

    # Matrix rows
    try:
        rows = [[int(value) for value in line.split()] for line in lines[2:]]
    except ValueError as e:
        raise ShapeError(f"Non-integer matrix entry: {e}")
    if len(rows) != header["k"]:
        raise ShapeError(
            f"Header announces k={header['k']} rows, found {len(rows)}"
        )
    if any(len(row) != header["n"] for row in rows):
        raise ShapeError(f"Every row must hold n={header['n']} entries")
    for row in rows:
        field.elements(row)
    return field, header, matrix(field, rows, header["n"])
