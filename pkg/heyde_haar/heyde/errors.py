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

"""Heyde engine error definitions."""
from typing import Any, Optional

from heyde_haar.errors import HeydeError


class HeydeEngineError(HeydeError):
    """Heyde engine error base."""


class HypothesisError(HeydeEngineError):
    """A hypothesis of a checked statement does not hold for the input."""

    def __init__(self, hypothesis: str, details: Optional[str] = None) -> None:
        super().__init__(
            f"Hypothesis not met: {hypothesis}",
            details=details,
            resolution=(
                "Choose an odd-order group and an admissible automorphism, "
                "or run in exploratory mode for non-assertive verdicts."
            ),
        )
        self.hypothesis = hypothesis


class PropertyViolation(HeydeEngineError):
    """A checked property failed; ``witness`` reproduces the failure."""

    def __init__(
        self, name: str, witness: Any = None, details: Optional[str] = None
    ) -> None:
        if details is None and witness is not None:
            details = f"Witness: {witness!r}"
        super().__init__(f"Property violated: {name}", details=details)
        self.name = name
        self.witness = witness


class TowerLayerError(HeydeEngineError):
    """A check failed on one layer of a truncation tower."""

    def __init__(self, level: int, error: HeydeError) -> None:
        super().__init__(
            f"Tower layer {level} failed: {error.brief}",
            details=error.details,
            resolution=error.resolution,
        )
        self.level = level
        self.error = error
