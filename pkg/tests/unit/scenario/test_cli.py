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
import logging

import pytest
from heyde_haar import __version__
from heyde_haar.scenario import cli
from heyde_haar.scenario.presets import load_preset, preset_names
from heyde_haar.scenario.runner import EXIT_FAILED, EXIT_INVALID, EXIT_OK, Report


def test_list_presets(capsys):
    assert cli.main(["list-presets"]) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert [line.split("\t")[0] for line in lines] == preset_names()
    assert all(line.split("\t")[1] for line in lines)


def test_run(test_data_dir, capsys):
    code = cli.main(["run", str(test_data_dir / "check-symmetry-z5.json")])

    assert code == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["status"] == "pass"
    assert document["seed"] == 7
    assert "timings" not in document


@pytest.mark.parametrize(("seed", "expected"), [("11", 11), ("-3", -3), ("abc", "abc")])
def test_run_seed_override(test_data_dir, capsys, seed, expected):
    code = cli.main(
        ["run", str(test_data_dir / "check-symmetry-z5.json"), "--seed", seed]
    )

    assert code == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["seed"] == expected
    assert document["scenario"]["options"]["seed"] == expected


def test_run_timings(test_data_dir, capsys):
    cli.main(["run", str(test_data_dir / "check-symmetry-z5.json"), "--timings"])

    assert "timings" in json.loads(capsys.readouterr().out)


def test_run_out(test_data_dir, tmp_path, capsys):
    out = tmp_path / "reports" / "z5.json"

    code = cli.main(
        ["run", str(test_data_dir / "check-symmetry-z5.json"), "--out", str(out)]
    )

    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["kind"] == "check-symmetry"


def test_run_failed_expectation(test_data_dir, capsys):
    code = cli.main(["run", str(test_data_dir / "broken-expectation.json")])

    assert code == EXIT_FAILED
    assert "witness" in json.loads(capsys.readouterr().out)


@pytest.mark.parametrize(
    ("name", "message"),
    [
        ("malformed-orders.json", "Error: Invalid scenario field 'group.orders'"),
        ("not-json.json", "Error: Invalid scenario field '<document>': not valid JSON"),
        ("missing.json", "Error: Cannot read scenario file"),
    ],
)
def test_run_invalid(test_data_dir, capsys, name, message):
    code = cli.main(["run", str(test_data_dir / name)])

    assert code == EXIT_INVALID
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith(message)
    assert "Resolution: " in captured.err


def test_run_invalid_jobs(test_data_dir, capsys):
    code = cli.main(
        ["run", str(test_data_dir / "check-symmetry-z5.json"), "--jobs", "0"]
    )

    assert code == EXIT_INVALID
    assert "'options.jobs'" in capsys.readouterr().err


def test_preset(mocker, capsys):
    run = mocker.patch.object(
        cli, "run_scenario", return_value=Report({"status": "pass"}, EXIT_OK)
    )

    code = cli.main(["preset", "theorem-2.1-z25", "--jobs", "2"])

    assert code == EXIT_OK
    scenario = run.call_args.args[0]
    expected = load_preset("theorem-2.1-z25").scenario.with_overrides(jobs=2)
    assert scenario == expected
    assert run.call_args.kwargs == {"timings": False}
    assert json.loads(capsys.readouterr().out) == {"status": "pass"}


def test_preset_unknown(capsys):
    code = cli.main(["preset", "no-such-preset"])

    assert code == EXIT_INVALID
    err = capsys.readouterr().err
    assert err.startswith("Error: Unknown preset 'no-such-preset'")
    assert "Available presets: counterexample-suite" in err


def test_hypothesis_error_exit_code(tmp_path, capsys):
    path = tmp_path / "even.json"
    path.write_text(
        json.dumps(
            {
                "kind": "verify-theorem",
                "group": {"orders": [4]},
                "automorphism": {"scalar": 3},
                "families": ["point-mass"],
            }
        )
    )

    assert cli.main(["run", str(path)]) == EXIT_INVALID
    assert "Hypothesis not met: the group has odd order" in capsys.readouterr().err


@pytest.mark.parametrize(
    ("flags", "level"),
    [([], logging.WARNING), (["-v"], logging.INFO), (["-vv"], logging.DEBUG)],
)
def test_verbosity(mocker, test_data_dir, flags, level):
    basic_config = mocker.patch("logging.basicConfig")

    cli.main(["run", str(test_data_dir / "check-symmetry-z5.json"), *flags])

    assert basic_config.call_args.kwargs["level"] == level


def test_version(capsys):
    with pytest.raises(SystemExit) as raised:
        cli.main(["--version"])

    assert raised.value.code == 0
    assert capsys.readouterr().out.strip() == __version__


def test_command_required():
    with pytest.raises(SystemExit) as raised:
        cli.main([])

    assert raised.value.code == 2
