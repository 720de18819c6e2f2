# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright 2023 Canonical Ltd.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License version 3 as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Scenario error definitions."""
from typing import Optional, Sequence

from heyde_haar.errors import HeydeError


class ScenarioError(HeydeError):
    """Scenario error base."""


class ScenarioValidationError(ScenarioError):
    """A scenario document is malformed."""

    def __init__(
        self,
        field: str,
        brief: str,
        details: Optional[str] = None,
        resolution: Optional[str] = None,
    ) -> None:
        super().__init__(
            f"Invalid scenario field {field!r}: {brief}",
            details=details,
            resolution=resolution
            or "Verify the scenario file and ensure that the correct syntax is used.",
        )
        self.field = field


class PresetNotFoundError(ScenarioError):
    """No preset has the requested name."""

    def __init__(self, name: str, available: Sequence[str]) -> None:
        super().__init__(
            f"Unknown preset {name!r}",
            details=f"Available presets: {', '.join(available)}",
            resolution="Run 'heyde-haar list-presets' to see every preset.",
        )
        self.name = name
