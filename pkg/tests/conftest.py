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
"""Basic test configuration for heyde-haar."""
from fractions import Fraction
from pathlib import Path
from typing import List

import pytest
from heyde_haar.algebra import FiniteAbelianGroup, make_group
from heyde_haar.gaussian.forms import LatticeAutomorphism, QuadraticGaussianSpec
from heyde_haar.heyde.families import CATALOG_ORDERS


@pytest.fixture(scope="session")
def test_data_dir() -> Path:
    """test_data directory directly under tests directory."""
    path = Path(__file__).parent / "test_data"
    assert path.is_dir()
    return path


@pytest.fixture(scope="session")
def catalog() -> List[FiniteAbelianGroup]:
    """The small-group catalog, in catalog order."""
    return [make_group(orders) for orders in CATALOG_ORDERS]


@pytest.fixture(scope="session")
def small_catalog(catalog) -> List[FiniteAbelianGroup]:
    """Catalog groups of order at most 16, for exhaustive pair scans."""
    return [group for group in catalog if group.order <= 16]


@pytest.fixture(params=CATALOG_ORDERS, ids=lambda orders: "x".join(map(str, orders)))
def catalog_group(request) -> FiniteAbelianGroup:
    return make_group(request.param)


def _random_unimodular(rng, size):
    matrix = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(3 * size):
        i, j = rng.sample(range(size), 2) if size > 1 else (0, 0)
        if i == j:
            matrix = [[-x for x in row] for row in matrix]
            continue
        k = rng.choice([-2, -1, 1, 2])
        matrix[i] = [a + k * b for a, b in zip(matrix[i], matrix[j])]
    return matrix


def _gram(matrix):
    size = len(matrix)
    return [
        [sum(matrix[k][i] * matrix[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


def _random_gaussian_triple(rng, size):
    """A Gaussian pair solving the equation, optionally pushed off the solution set.

    ``alpha = -M^T M`` is unimodular, and ``A1 = -alpha^T A2`` for ``A2 = s I``.
    """
    gram = _gram(_random_unimodular(rng, size))
    scale = Fraction(rng.randint(1, 5), rng.randint(1, 3))
    a1 = [[scale * entry for entry in row] for row in gram]
    a2 = [[scale * int(i == j) for j in range(size)] for i in range(size)]
    alpha = [[-entry for entry in row] for row in gram]
    if rng.random() < 0.5:
        shift = Fraction(rng.randint(1, 3), rng.randint(1, 3))
        a1 = [
            [entry + shift * int(i == j) for j, entry in enumerate(row)]
            for i, row in enumerate(a1)
        ]
    return (
        QuadraticGaussianSpec(a1),
        QuadraticGaussianSpec(a2),
        LatticeAutomorphism(alpha),
    )


@pytest.fixture(scope="session")
def random_gaussian_triple():
    """Draw ``(A1, A2, alpha)`` from a :class:`random.Random`, about half solving."""
    return _random_gaussian_triple
