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

"""Command-line front end: ``heyde-haar run|preset|list-presets``."""

import argparse
import logging
import pathlib
import sys
from typing import Optional, Sequence, TextIO, Union

from heyde_haar import __version__
from heyde_haar.errors import HeydeError

from .models import Scenario
from .presets import load_preset, load_scenario, preset_catalog
from .runner import EXIT_INVALID, EXIT_OK, Report, run_scenario

logger = logging.getLogger(__name__)


def _seed(text: str) -> Union[int, str]:
    return int(text) if text.lstrip("-").isdigit() else text


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heyde-haar",
        description=(
            "Exact conditional-symmetry checks on finite abelian groups, "
            "driven by scenario files."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    execution = argparse.ArgumentParser(add_help=False)
    execution.add_argument(
        "--out", type=pathlib.Path, help="Write the report here instead of stdout"
    )
    execution.add_argument(
        "--seed", type=_seed, help="Override the scenario seed (integer or string)"
    )
    execution.add_argument("--jobs", type=int, help="Worker processes for sweeps")
    execution.add_argument(
        "--timings",
        action="store_true",
        help="Add wall-clock timings; the report is then not reproducible",
    )
    execution.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr; repeat for debug output",
    )

    run = commands.add_parser(
        "run", parents=[execution], help="Run a scenario file"
    )
    run.add_argument("scenario", type=pathlib.Path, help="Scenario JSON file")

    preset = commands.add_parser(
        "preset", parents=[execution], help="Run a named preset"
    )
    preset.add_argument("name", help="Preset name, see list-presets")

    commands.add_parser("list-presets", help="List the shipped presets")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _report_error(error: HeydeError, stream: TextIO) -> None:
    print(f"Error: {error.brief}", file=stream)
    if error.details:
        print(error.details, file=stream)
    if error.resolution:
        print(f"Resolution: {error.resolution}", file=stream)


def _write_report(report: Report, out: Optional[pathlib.Path]) -> None:
    text = report.dumps()
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"Report written to {out}")


def _list_presets() -> int:
    for preset in preset_catalog():
        print(f"{preset.name}\t{preset.description}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit code.

    0 means every checked property held, 1 that one failed and the report
    carries a witness, 2 that the input was invalid or a hypothesis guard
    refused it.
    """
    args = _build_parser().parse_args(argv)
    _configure_logging(getattr(args, "verbose", 0))
    try:
        if args.command == "list-presets":
            return _list_presets()
        scenario: Scenario
        if args.command == "preset":
            scenario = load_preset(args.name).scenario
        else:
            scenario = load_scenario(args.scenario)
        scenario = scenario.with_overrides(seed=args.seed, jobs=args.jobs)
        report = run_scenario(scenario, timings=args.timings)
        _write_report(report, args.out)
    except HeydeError as error:
        _report_error(error, sys.stderr)
        return EXIT_INVALID
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
