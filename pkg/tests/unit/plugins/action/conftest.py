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

from typing import Generator
from unittest.mock import MagicMock

import pytest

from ansible_collections.o0_o.agcode.plugins.action.agcode_verify import (
    ActionModule,
)


@pytest.fixture
def plugin() -> Generator[ActionModule, None, None]:
    """Create an agcode_verify ActionModule with mocked dependencies.

    The action never contacts a host, so connection, loader and
    templar are plain mocks. Tests set ``plugin._task.args`` before
    calling ``run``.

    :returns Generator[ActionModule, None, None]: Configured action
        plugin instance
    """
    task = MagicMock()
    task.async_val = False
    task.action = "agcode_verify"
    task.args = {}

    plugin = ActionModule(
        task=task,
        connection=MagicMock(),
        play_context=MagicMock(),
        loader=MagicMock(),
        templar=MagicMock(),
        shared_loader_obj=MagicMock(),
    )

    yield plugin
