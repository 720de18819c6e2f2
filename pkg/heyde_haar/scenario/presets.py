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

"""Named scenarios shipped as versioned fixture files."""

import dataclasses
import json
import logging
import pathlib
from typing import Any, List, Mapping

from . import errors
from .models import Scenario

logger = logging.getLogger(__name__)

PRESET_DIRECTORY = pathlib.Path(__file__).parent / "presets"
PRESET_FORMAT_VERSION = 1


@dataclasses.dataclass(frozen=True)
class Preset:
    """A named scenario and what it demonstrates."""

    name: str
    description: str
    scenario: Scenario


def read_document(data: Any) -> Scenario:
    """Parse a bare scenario or a versioned ``{"version", "scenario"}`` wrapper.

    :raises ScenarioValidationError: on an unknown version or invalid content.
    """
    if isinstance(data, Mapping) and "scenario" in data:
        version = data.get("version")
        if version != PRESET_FORMAT_VERSION:
            raise errors.ScenarioValidationError(
                "version",
                f"unsupported format version {version!r}",
                resolution=f"Use format version {PRESET_FORMAT_VERSION}.",
            )
        return Scenario.unmarshal(data["scenario"])
    return Scenario.unmarshal(data)


def load_scenario(path: pathlib.Path) -> Scenario:
    """Read and validate a scenario file.

    :raises ScenarioError: if the file cannot be read.
    :raises ScenarioValidationError: if it is not a valid scenario.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise errors.ScenarioError(
            f"Cannot read scenario file {str(path)!r}",
            details=str(error),
            resolution="Check the path and permissions of the scenario file.",
        ) from error
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise errors.ScenarioValidationError(
            "<document>",
            f"not valid JSON: {error.msg}",
            details=f"line {error.lineno}, column {error.colno}",
        ) from error
    logger.debug(f"Loaded scenario file {path}")
    return read_document(data)


def _read_preset(path: pathlib.Path) -> Preset:
    data = json.loads(path.read_text(encoding="utf-8"))
    return Preset(
        name=data.get("name", path.stem),
        description=data.get("description", ""),
        scenario=read_document(data),
    )


def preset_names() -> List[str]:
    """Names of every shipped preset, sorted."""
    return sorted(path.stem for path in PRESET_DIRECTORY.glob("*.json"))


def preset_catalog() -> List[Preset]:
    """Every shipped preset, sorted by name."""
    return [load_preset(name) for name in preset_names()]


def load_preset(name: str) -> Preset:
    """Load one preset by name.

    :raises PresetNotFoundError: if no preset has that name.
    """
    path = PRESET_DIRECTORY / f"{name}.json"
    if not path.is_file():
        raise errors.PresetNotFoundError(name, preset_names())
    return _read_preset(path)
