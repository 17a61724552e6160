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

from ansible.errors import AnsibleActionFail
from ansible.plugins.action import ActionBase

from ansible_collections.o0_o.agcode.plugins.filter_utils import families
from ansible_collections.o0_o.agcode.plugins.filter_utils.distance import (
    DEFAULT_BUDGET,
    DEFAULT_DUAL_BUDGET,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    AGCodeError,
)


class ActionModule(ActionBase):
    """
    Build and verify the codes of one self-orthogonal AG code family.

    With ``r`` the single radius is verified, otherwise every radius of
    the family's theorem ranges is swept. All work happens on the
    controller; the target host is never contacted.

    The task fails when any check fails. Checks skipped for budget
    reasons never fail the task.
    """

    TRANSFERS_FILES = False
    _requires_connection = False
    _supports_check_mode = True
    _supports_async = False
    _supports_diff = False

    ARGUMENT_SPEC = {
        "family": {
            "type": "str",
            "required": True,
            "choices": [variant.value for variant in families.Variant],
        },
        "q": {"type": "int", "required": True},
        "m": {"type": "int"},
        "s": {"type": "int"},
        "k": {"type": "int"},
        "subspace_basis": {"type": "list", "elements": "int"},
        "modulus": {"type": "list", "elements": "int"},
        "r": {"type": "int"},
        "extended": {"type": "bool", "default": False},
        "distance_budget": {"type": "int", "default": DEFAULT_BUDGET},
        "dual_distance_budget": {
            "type": "int",
            "default": DEFAULT_DUAL_BUDGET,
        },
        "samples": {"type": "int", "default": 0},
        "seed": {"type": "int", "default": 0},
    }

    def run(
        self,
        tmp: Optional[str] = None,
        task_vars: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, Any]:
        """
        Verify one radius or sweep a family.

        :param Optional[str] tmp: Temporary directory path (unused in
            modern Ansible)
        :param Optional[Dict[str, Any]] task_vars: Task variables
            dictionary
        :returns Dict[str, Any]: Result with ``report``, ``summary``
            and ``passed``
        :raises AnsibleActionFail: When the family is invalid or a
            theorem prediction is contradicted during construction
        """
        task_vars = task_vars or {}

        self._display.vvv("agcode_verify: starting run()")

        _, args = self.validate_argument_spec(
            argument_spec=self.ARGUMENT_SPEC,
            required_if=[
                ("family", "as", ("m",)),
                ("family", "herm-mult", ("s",)),
                ("family", "herm-add", ("k",)),
            ],
        )

        result = super().run(tmp, task_vars)
        del tmp
        result["changed"] = False

        budget = families.SweepBudget(
            distance_budget=args["distance_budget"],
            dual_distance_budget=args["dual_distance_budget"],
            samples=args["samples"],
            seed=args["seed"],
            extended=args["extended"],
        )

        try:
            spec = families.validate(
                args["family"],
                args["q"],
                m=args.get("m"),
                s=args.get("s"),
                k=args.get("k"),
                subspace_basis=args.get("subspace_basis"),
                modulus=args.get("modulus"),
            )
            r = args.get("r")
            if r is None:
                self._display.vvv(f"agcode_verify: sweeping {spec}")
                report = families.sweep(spec, budget)
            else:
                self._display.vvv(f"agcode_verify: verifying {spec} r={r}")
                report = families.verify(spec, r, budget)
        except AGCodeError as e:
            raise AnsibleActionFail(f"agcode_verify: {e}")

        summary = report.summary
        result["report"] = report.to_dict()
        result["summary"] = summary
        result["passed"] = report.passed
        if report.passed:
            result["msg"] = (
                f"{spec}: {summary['passed']} checks passed, "
                f"{summary['skipped']} skipped"
            )
        else:
            failures = ", ".join(
                f"r={r}:{check.name}" for r, check in report.failures()
            )
            result["failed"] = True
            result["msg"] = f"{spec}: failed checks {failures}"

        self._display.vvv(f"agcode_verify: {result['msg']}")
        return result
