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

"""Exact quadratic forms and lattice automorphisms.

A symmetric Gaussian distribution on the torus ``T^n`` has characteristic
function ``exp(-<A y, y>)`` on the dual lattice ``Z^n``.  Everything here
works with the rational matrix ``A`` only.
"""

import dataclasses
import logging
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

import sympy

from heyde_haar.utils import Rational, format_rational, parse_rational

from . import errors

logger = logging.getLogger(__name__)

RationalMatrix = Tuple[Tuple[Fraction, ...], ...]
IntegerMatrix = Tuple[Tuple[int, ...], ...]


def _square(rows: Sequence[Sequence[Any]]) -> List[List[Any]]:
    matrix = [list(row) for row in rows]
    size = len(matrix)
    if size == 0 or any(len(row) != size for row in matrix):
        raise errors.DimensionError(size, [len(row) for row in matrix])
    return matrix


def to_rational_matrix(rows: Sequence[Sequence[Any]]) -> RationalMatrix:
    """Parse a square matrix of ints, Fractions or ``"p/q"`` strings.

    :raises FormError: on floats or malformed entries.
    """
    try:
        return _parse_rows(rows)
    except ValueError as error:
        raise errors.FormError(
            "matrix entries must be exact rationals", str(error)
        ) from error


def _parse_rows(rows: Sequence[Sequence[Any]]) -> RationalMatrix:
    return tuple(
        tuple(
            entry if isinstance(entry, Fraction) else parse_rational(entry)
            for entry in row
        )
        for row in _square(rows)
    )


def _to_sympy(rows: Sequence[Sequence[Rational]]) -> sympy.Matrix:
    matrix = [[Fraction(entry) for entry in row] for row in _square(rows)]
    return sympy.Matrix(
        [[sympy.Rational(e.numerator, e.denominator) for e in row] for row in matrix]
    )


def determinant(rows: Sequence[Sequence[Rational]]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    det = sympy.Rational(_to_sympy(rows).det())
    return Fraction(int(det.p), int(det.q))


def is_positive_semidefinite(rows: Sequence[Sequence[Rational]]) -> bool:
    """Exact positive semidefiniteness test for a symmetric rational matrix."""
    return bool(_to_sympy(rows).is_positive_semidefinite)


def identity_matrix(size: int) -> IntegerMatrix:
    """The ``size x size`` identity."""
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


@dataclasses.dataclass(frozen=True)
class QuadraticGaussianSpec:
    """The matrix ``A`` of a symmetric Gaussian on ``T^n``.

    :param matrix: Square rational matrix; must be symmetric and positive
        semidefinite.
    :raises FormError: otherwise.
    """

    matrix: RationalMatrix

    def __post_init__(self) -> None:
        matrix = to_rational_matrix(self.matrix)
        size = len(matrix)
        for i in range(size):
            for j in range(i + 1, size):
                if matrix[i][j] != matrix[j][i]:
                    raise errors.FormError(
                        "matrix is not symmetric",
                        details=f"entries ({i}, {j}) and ({j}, {i}) differ",
                    )
        if not is_positive_semidefinite(matrix):
            raise errors.FormError("matrix is not positive semidefinite")
        object.__setattr__(self, "matrix", matrix)

    @property
    def dimension(self) -> int:
        """Size of the matrix."""
        return len(self.matrix)

    def value(self, y: Sequence[Rational]) -> Fraction:
        """``<A y, y>``."""
        return sum(
            (
                self.matrix[i][j] * y[i] * y[j]
                for i in range(self.dimension)
                for j in range(self.dimension)
            ),
            Fraction(0),
        )

    def marshal(self) -> Dict[str, Any]:
        """Return the form as a serializable dictionary."""
        return {"matrix": [[format_rational(e) for e in row] for row in self.matrix]}


@dataclasses.dataclass(frozen=True)
class LatticeAutomorphism:
    """An automorphism of ``Z^n``: an integer matrix with determinant +-1.

    :raises UnimodularityError: if the determinant is not +-1.
    """

    matrix: IntegerMatrix

    def __post_init__(self) -> None:
        matrix = _square(self.matrix)
        for row in matrix:
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise errors.FormError(f"entry {entry!r} is not an integer")
        det = determinant(matrix)
        if abs(det) != 1:
            raise errors.UnimodularityError(matrix, int(det))
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in matrix))

    @property
    def dimension(self) -> int:
        """Size of the matrix."""
        return len(self.matrix)

    def apply(self, y: Sequence[int]) -> Tuple[int, ...]:
        """``M y``."""
        return tuple(sum(a * b for a, b in zip(row, y)) for row in self.matrix)

    def transpose(self) -> IntegerMatrix:
        """``M^T``."""
        return tuple(zip(*self.matrix))

    def marshal(self) -> Dict[str, Any]:
        """Return the automorphism as a serializable dictionary."""
        return {"matrix": [list(row) for row in self.matrix]}
