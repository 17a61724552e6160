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

"""Exception hierarchy for the o0_o.agcode collection."""

from __future__ import annotations

from ansible.errors import AnsibleFilterError


class AGCodeError(AnsibleFilterError):
    """Base class for every error raised by the agcode utilities."""


class FieldError(AGCodeError):
    """Invalid field parameters or an illegal field operation."""


class HypothesisError(AGCodeError):
    """A construction hypothesis does not hold for the given input.

    The message always names the violated condition so that callers
    (filters, the action plugin, the CLI) can pass it through as-is.
    """


class ShapeError(AGCodeError):
    """Matrix operands disagree in shape or owning field."""


class BudgetExceededError(AGCodeError):
    """Exhaustive enumeration would examine more codewords than allowed."""


class VerificationError(AGCodeError):
    """A prediction that must hold exactly was contradicted."""
