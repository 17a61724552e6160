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

import pytest
from ansible.errors import AnsibleActionFail

from ansible_collections.o0_o.agcode.plugins.filter_utils import families


def test_run_single_radius(plugin) -> None:
    """Test verifying the self-dual radius of the smallest as family."""
    plugin._task.args = {"family": "as", "q": 2, "m": 3, "r": 4}

    result = plugin.run(task_vars={})

    assert result["changed"] is False
    assert result["passed"] is True
    assert "failed" not in result
    assert result["summary"]["failed"] == 0
    assert result["msg"].startswith("as(q=2,m=3): ")
    records = result["report"]["records"]
    assert [record["r"] for record in records] == [4]
    assert records[0]["self_dual"] == {"predicted": True, "observed": True}


def test_run_sweep(plugin) -> None:
    """Test sweeping an additive Hermitian family."""
    plugin._task.args = {
        "family": "herm-add",
        "q": 2,
        "k": 1,
        "subspace_basis": [1],
    }

    result = plugin.run(task_vars={})

    assert result["passed"] is True
    # n + 2g - 2 = 4, so the window is 1 .. 3
    radii = [record["r"] for record in result["report"]["records"]]
    assert radii == [1, 2, 3]
    assert result["report"]["spec"]["subspace_basis"] == [1]


def test_run_extended_sweep(plugin) -> None:
    """Test that the extended sweep starts at r = 0."""
    plugin._task.args = {
        "family": "herm-mult",
        "q": 2,
        "s": 3,
        "extended": True,
    }

    result = plugin.run(task_vars={})

    radii = [record["r"] for record in result["report"]["records"]]
    assert radii == list(range(0, 9))
    assert result["passed"] is True


def test_run_sampled_distance(plugin) -> None:
    """Test that sampling options reach the distance computation."""
    plugin._task.args = {
        "family": "as",
        "q": 8,
        "m": 3,
        "r": 20,
        "samples": 100,
        "seed": 1,
    }

    result = plugin.run(task_vars={})

    record = result["report"]["records"][0]
    assert record["distance"]["kind"] == "upper_bound"
    assert record["distance"]["work"] == 100
    assert record["quantum"]["k1"] == 148
    assert result["report"]["notes"]


def test_run_failed_check(monkeypatch, plugin) -> None:
    """Test that a contradicted prediction fails the task."""
    monkeypatch.setattr(families, "is_euclidean_so", lambda code: False)
    plugin._task.args = {"family": "as", "q": 2, "m": 3, "r": 4}

    result = plugin.run(task_vars={})

    assert result["failed"] is True
    assert result["passed"] is False
    assert result["msg"] == "as(q=2,m=3): failed checks r=4:euclidean_so"


def test_run_violated_hypothesis(plugin) -> None:
    """Test that a violated family hypothesis raises."""
    plugin._task.args = {"family": "as", "q": 8, "m": 2, "r": 1}

    with pytest.raises(AnsibleActionFail, match="agcode_verify: p ∤ m−1"):
        plugin.run(task_vars={})


@pytest.mark.parametrize(
    "args",
    [
        {"family": "as", "q": 2},
        {"family": "herm-mult", "q": 3},
        {"family": "herm-add", "q": 2},
        {"family": "bogus", "q": 2},
        {"q": 2, "m": 3},
    ],
)
def test_run_invalid_arguments(plugin, args) -> None:
    """Test that argument validation rejects incomplete families."""
    plugin._task.args = args

    with pytest.raises(AnsibleActionFail):
        plugin.run(task_vars={})
