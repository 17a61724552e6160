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


class ModuleDocFragment:
    DOCUMENTATION = """
    options:
      family:
        description:
          - C(as) evaluates y^q + y = x^m above the m(q-1)-th roots of
            unity and 0; requires m | q+1 and p | m-1.
          - C(herm-mult) evaluates the Hermitian curve y^q + y = x^(q+1)
            above the s-th roots of unity and 0; requires s | q^2-1 and
            p | s+1.
          - C(herm-add) evaluates the Hermitian curve above a
            k-dimensional GF(p)-subspace of GF(q^2); requires k <= 2t
            where q = p^t.
        type: str
        choices: [as, herm-mult, herm-add]
        required: true
      q:
        description:
          - Prime power q. Codes are over GF(q^2).
        type: int
        required: true
      m:
        description:
          - Exponent of x. Required for C(as).
        type: int
      s:
        description:
          - Order of the multiplicative subgroup. Required for
            C(herm-mult).
        type: int
      k:
        description:
          - Dimension of the additive subspace. Required for
            C(herm-add).
        type: int
      subspace_basis:
        description:
          - Basis of the additive subspace as representation integers
            of GF(q^2). Defaults to 1, gamma, ..., gamma^(k-1) with
            gamma the designated primitive element.
        type: list
        elements: int
      modulus:
        description:
          - Monic irreducible modulus of GF(q^2) over GF(p) as
            coefficients from the leading one down to the constant.
          - Defaults to the smallest irreducible polynomial.
        type: list
        elements: int
    """
