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

from __future__ import absolute_import, division, print_function

__metaclass__ = type


DOCUMENTATION = r"""
---
module: agcode_verify
short_description: Build and verify self-orthogonal AG codes
version_added: '1.0.0'
description:
  - Builds the one-point codes C_L(D, rQ∞) of a family on the curve
    y^q + y = x^m over GF(q^2) and checks the dimension law, Euclidean
    and Hermitian self-orthogonality, self-duality, the dual identity
    C_L(D, rQ∞)^⊥ = C_L(D, (n+2g-2-r)Q∞), designed distances and the
    quantum parameters.
  - With O(r) a single radius is verified; otherwise every radius of
    the theorem ranges is swept, plus every radius 1 .. n+2g-3 for
    short codes.
  - Runs entirely on the controller.
options:
  r:
    description:
      - Radius to verify. Omit to sweep.
    type: int
  extended:
    description:
      - Sweep every radius 0 .. n+2g-2. Radii outside the theorem
        ranges are flagged C(beyond_theorem) in the report.
    type: bool
    default: false
  distance_budget:
    description:
      - Largest (q^2)^k - 1 for which the minimum distance is computed
        by exhaustion.
    type: int
    default: 67108864
  dual_distance_budget:
    description:
      - Same limit for the dual code.
    type: int
    default: 1048576
  samples:
    description:
      - Random codewords examined when exhaustion is over budget. With
        C(0) only the designed bound is reported.
    type: int
    default: 0
  seed:
    description:
      - Seed for the sampling generator.
    type: int
    default: 0
extends_documentation_fragment:
  - action_common_attributes
  - o0_o.agcode.family
attributes:
  check_mode:
    support: full
    description:
      - Nothing is changed, so check mode runs the full verification.
  diff_mode:
    support: none
    description:
      - This module does not produce diff output.
  async:
    support: none
    description:
      - This module does not support asynchronous execution.
  platform:
    platforms: posix
    description:
      - Runs on the controller only.
requirements:
  - galois (Python library)
  - numpy (Python library)
author:
  - oØ.o (@o0-o)
"""

EXAMPLES = r"""
- name: Verify the [176,14] code on y^8 + y = x^3
  o0_o.agcode.agcode_verify:
    family: as
    q: 8
    m: 3
    r: 20
    samples: 10000
    seed: 1

- name: Sweep the multiplicative Hermitian family over GF(9)
  o0_o.agcode.agcode_verify:
    family: herm-mult
    q: 3
    s: 2
  register: sweep

- name: Sweep an additive Hermitian family with an explicit subspace
  o0_o.agcode.agcode_verify:
    family: herm-add
    q: 2
    k: 2
    subspace_basis: [1, 2]
    extended: true
"""

RETURN = r"""
passed:
  description: Whether every check that ran passed.
  type: bool
  returned: always
summary:
  description: Check counts.
  type: dict
  returned: always
  sample:
    checks_run: 42
    passed: 42
    failed: 0
    skipped: 3
report:
  description:
    - Full verification report, one record per radius in ascending
      order.
    - Each record holds C(r), C(n), C(k), C(predicted_k0), the
      predicted and observed self-orthogonality flags, the dual
      identity result, C(distance) and C(dual_distance) with their
      C(kind) (C(exact), C(upper_bound) or C(designed_only)), the
      quantum parameters when applicable and the list of C(checks).
  type: dict
  returned: always
"""
