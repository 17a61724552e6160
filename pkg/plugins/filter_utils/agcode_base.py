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

"""Base class for the family parameter filters."""

from __future__ import annotations

import traceback
from typing import Any, Dict, Optional

from ansible.errors import AnsibleFilterError

try:
    from ansible_collections.o0_o.agcode.plugins.filter_utils import (
        distance,
        families,
    )

    HAS_GALOIS = True
    GALOIS_IMPORT_ERROR = None
except ImportError:
    HAS_GALOIS = False
    GALOIS_IMPORT_ERROR = traceback.format_exc()

FAMILY_KEYS = ("family", "q", "m", "s", "k", "subspace_basis", "modulus")


class AGCodeBase:
    """Base class for filters that take a family description."""

    def family(self, data: Dict[str, Any]) -> families.FamilySpec:
        """Validate a family mapping such as ``{family: as, q: 8, m: 3}``.

        :param data: Mapping with ``family`` and ``q`` plus ``m``, ``s``
            or ``k`` as the family needs; optionally ``subspace_basis``
            and ``modulus``
        :returns: The validated family
        :raises AnsibleFilterError: If galois is missing, the input is
            malformed or a hypothesis fails
        """
        if not HAS_GALOIS:
            raise AnsibleFilterError(
                "The galois library is required for the agcode filters. "
                "Install it with: pip install galois",
                orig_exc=GALOIS_IMPORT_ERROR,
            )
        if not isinstance(data, dict):
            raise AnsibleFilterError(
                f"Expected a family mapping, got {type(data).__name__}"
            )
        unknown = sorted(set(data) - set(FAMILY_KEYS))
        if unknown:
            raise AnsibleFilterError(
                f"Unknown family keys: {', '.join(unknown)}"
            )
        if "family" not in data or "q" not in data:
            raise AnsibleFilterError("A family needs 'family' and 'q'")

        return families.validate(
            data["family"],
            int(data["q"]),
            m=_optional_int(data.get("m")),
            s=_optional_int(data.get("s")),
            k=_optional_int(data.get("k")),
            subspace_basis=data.get("subspace_basis"),
            modulus=data.get("modulus"),
        )

    def params(
        self, data: Dict[str, Any], r: Optional[int] = None
    ) -> Dict[str, Any]:
        """Theorem ranges, and the per-radius predictions when r is set."""
        spec = self.family(data)
        if r is None:
            predicted = families.ranges(spec)
        else:
            predicted = families.predict(spec, int(r))
        result = predicted.to_dict()
        result["spec"] = spec.echo()
        result["self_dual_distance_bound"] = (
            families.self_dual_distance_bound(spec)
        )
        return result

    def quantum(self, data: Dict[str, Any], r: int) -> Dict[str, Any]:
        spec = self.family(data)
        return families.quantum_params(spec, int(r)).to_dict()

    def bounds(self, data: Dict[str, Any], r: int) -> Dict[str, Any]:
        spec = self.family(data)
        return distance.designed_bounds(spec, int(r))._asdict()


def _optional_int(value: Any) -> Optional[int]:
    return None if value is None else int(value)
