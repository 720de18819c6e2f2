# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright 2023 Canonical Ltd.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
import json

import pytest
from heyde_haar.scenario import errors
from heyde_haar.scenario.presets import (
    PRESET_DIRECTORY,
    load_preset,
    load_scenario,
    preset_catalog,
    preset_names,
    read_document,
)

PRESETS = [
    "counterexample-suite",
    "equivalence-catalog",
    "prop-2.7-exhaustive",
    "remark-3.5-solenoid",
    "remark-3.5-torus",
    "remark-3.5-z2-blocks",
    "subgroup-condition-catalog",
    "theorem-2.1-z25",
    "tower-5-7",
    "zero-one-fibonacci",
]


def test_preset_names():
    assert preset_names() == PRESETS


@pytest.mark.parametrize(
    "name",
    [
        "remark-3.5-z2-blocks",
        "remark-3.5-torus",
        "remark-3.5-solenoid",
        "prop-2.7-exhaustive",
        "theorem-2.1-z25",
        "tower-5-7",
    ],
)
def test_catalog_ships_named_preset(name):
    assert name in preset_names()
    assert load_preset(name).name == name


def test_preset_catalog():
    catalog = preset_catalog()

    assert [preset.name for preset in catalog] == PRESETS
    assert all(preset.description for preset in catalog)


@pytest.mark.parametrize("name", PRESETS)
def test_preset_files_are_versioned(name):
    data = json.loads((PRESET_DIRECTORY / f"{name}.json").read_text())

    assert data["version"] == 1
    assert data["name"] == name
    assert load_preset(name).scenario.expect


def test_counterexample_suite_members_exist():
    suite = load_preset("counterexample-suite").scenario.suite

    assert suite == [
        "remark-3.5-z2-blocks",
        "remark-3.5-torus",
        "remark-3.5-solenoid",
    ]
    assert set(suite) <= set(preset_names())


def test_load_preset_unknown():
    with pytest.raises(errors.PresetNotFoundError) as raised:
        load_preset("no-such-preset")

    assert raised.value.name == "no-such-preset"
    assert raised.value.brief == "Unknown preset 'no-such-preset'"
    assert raised.value.details == f"Available presets: {', '.join(PRESETS)}"


def test_read_document_bare_and_wrapped():
    bare = {"kind": "haar-condition", "group": {"orders": [4]}}

    assert read_document(bare) == read_document({"version": 1, "scenario": bare})


@pytest.mark.parametrize("version", [None, 2, "1"])
def test_read_document_unsupported_version(version):
    data = {"version": version, "scenario": {"kind": "gaussian-check"}}

    with pytest.raises(errors.ScenarioValidationError) as raised:
        read_document(data)

    assert raised.value.field == "version"
    assert raised.value.resolution == "Use format version 1."


def test_load_scenario(test_data_dir):
    scenario = load_scenario(test_data_dir / "check-symmetry-z5.json")

    assert scenario.kind == "check-symmetry"
    assert len(scenario.pairs) == 3
    assert scenario.options.seed == 7


def test_load_scenario_not_json(test_data_dir):
    with pytest.raises(errors.ScenarioValidationError) as raised:
        load_scenario(test_data_dir / "not-json.json")

    assert raised.value.field == "<document>"
    assert "not valid JSON" in raised.value.brief
    assert raised.value.details.startswith("line ")


def test_load_scenario_malformed(test_data_dir):
    with pytest.raises(errors.ScenarioValidationError) as raised:
        load_scenario(test_data_dir / "malformed-orders.json")

    assert raised.value.field == "group.orders"


def test_load_scenario_missing(tmp_path):
    with pytest.raises(errors.ScenarioError) as raised:
        load_scenario(tmp_path / "missing.json")

    assert raised.value.brief.startswith("Cannot read scenario file")
    assert not isinstance(raised.value, errors.ScenarioValidationError)
