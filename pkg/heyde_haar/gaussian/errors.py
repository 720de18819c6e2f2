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

"""Gaussian check error definitions."""
from typing import Any, Optional, Sequence

from heyde_haar.errors import HeydeError


class GaussianError(HeydeError):
    """Gaussian check error base."""


class FormError(GaussianError):
    """A matrix does not define a Gaussian quadratic form."""

    def __init__(self, brief: str, details: Optional[str] = None) -> None:
        super().__init__(
            f"Invalid quadratic form: {brief}",
            details=details,
            resolution="Use a symmetric positive semidefinite rational matrix.",
        )


class DimensionError(GaussianError):
    """Matrices of different sizes were combined."""

    def __init__(self, expected: int, got: Any) -> None:
        super().__init__(
            f"Dimension mismatch: expected {expected}, got {got!r}",
        )


class UnimodularityError(GaussianError):
    """A lattice map is not invertible over the integers."""

    def __init__(self, matrix: Sequence[Sequence[int]], determinant: int) -> None:
        super().__init__(
            f"Matrix {[list(row) for row in matrix]!r} is not unimodular",
            details=f"Determinant is {determinant}.",
            resolution="Use an integer matrix with determinant 1 or -1.",
        )
