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

"""Scenario files, named presets and the command-line runner."""

from .errors import PresetNotFoundError, ScenarioError, ScenarioValidationError
from .models import (
    AutomorphismSpec,
    DistributionSpec,
    GroupSpec,
    PairSpec,
    Scenario,
    ScenarioOptions,
    SolenoidSpec,
    TorusSpec,
)
from .presets import Preset, load_preset, load_scenario, preset_catalog, preset_names
from .runner import EXIT_FAILED, EXIT_INVALID, EXIT_OK, Report, run_scenario

__all__ = [
    "EXIT_FAILED",
    "EXIT_INVALID",
    "EXIT_OK",
    "AutomorphismSpec",
    "DistributionSpec",
    "GroupSpec",
    "PairSpec",
    "Preset",
    "PresetNotFoundError",
    "Report",
    "Scenario",
    "ScenarioError",
    "ScenarioOptions",
    "ScenarioValidationError",
    "SolenoidSpec",
    "TorusSpec",
    "load_preset",
    "load_scenario",
    "preset_catalog",
    "preset_names",
    "run_scenario",
]
