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

from __future__ import annotations

from typing import Any, Dict, Optional

from ansible_collections.o0_o.agcode.plugins.filter_utils import AGCodeBase

DOCUMENTATION = r"""
---
name: agcode
short_description: Predicted parameters of the self-orthogonal AG code families
version_added: "1.0.0"
description:
  - C(agcode_params) returns the radii for which the one-point code
    C_L(D, rQ∞) of a family is predicted Euclidean or Hermitian
    self-orthogonal, the self-dual radius, and with O(r) the predicted
    dimension and designed distances.
  - C(agcode_quantum) returns the [[n, k1, >= d1]]_q parameters of the
    quantum code obtained from a Hermitian self-orthogonal C(as) code.
  - C(agcode_bounds) returns the designed bounds d >= n - r and
    d^⊥ >= r - 2g + 2, clamped below at 1.
  - Only formulas are evaluated; no code is constructed. Use the
    M(o0_o.agcode.agcode_verify) action to check them.
options:
  _input:
    description:
      - Family mapping with the keys of the family options below.
    type: dict
    required: true
  r:
    description:
      - Coefficient of Q∞. Optional for C(agcode_params), required for
        the other two filters.
    type: int
extends_documentation_fragment:
  - o0_o.agcode.family
requirements:
  - galois (Python library)
author:
  - oØ.o (@o0-o)
"""

EXAMPLES = r"""
- name: Ranges of the Hermitian-curve family over GF(64)
  ansible.builtin.debug:
    msg: "{{ {'family': 'as', 'q': 8, 'm': 3} | o0_o.agcode.agcode_params }}"

- name: Quantum code from y^8 + y = x^3 at r = 20
  ansible.builtin.assert:
    that:
      - (fam | o0_o.agcode.agcode_quantum(20)).k1 == 148
  vars:
    fam:
      family: as
      q: 8
      m: 3

- name: Designed distance of an additive Hermitian code
  ansible.builtin.debug:
    msg: >-
      {{ {'family': 'herm-add', 'q': 2, 'k': 1}
         | o0_o.agcode.agcode_bounds(2) }}
"""

RETURN = r"""
_output:
  description:
    - For C(agcode_params), the ranges as C([lo, hi]) lists (null when
      empty), C(self_dual_r), C(self_dual_distance_bound) and, with
      O(r), C(k0), C(d0_lower), C(d_dual_lower) and the
      C(predicts_*) flags, plus a C(spec) echo.
    - For C(agcode_quantum), C(n), C(k1), C(d1_lower), C(q) and
      C(notation).
    - For C(agcode_bounds), C(d_lower) and C(d_dual_lower).
  type: dict
  returned: success
  sample:
    n: 8
    k1: 4
    d1_lower: 2
    q: 2
    notation: "[[8,4,>=2]]_2"
"""


class FilterModule(AGCodeBase):
    """Family parameter filters."""

    def filters(self) -> Dict[str, Any]:
        """Return the filter functions."""
        return {
            "agcode_params": self.agcode_params,
            "agcode_quantum": self.agcode_quantum,
            "agcode_bounds": self.agcode_bounds,
        }

    def agcode_params(
        self, data: Dict[str, Any], r: Optional[int] = None
    ) -> Dict[str, Any]:
        return self.params(data, r)

    def agcode_quantum(self, data: Dict[str, Any], r: int) -> Dict[str, Any]:
        return self.quantum(data, r)

    def agcode_bounds(self, data: Dict[str, Any], r: int) -> Dict[str, Any]:
        return self.bounds(data, r)
