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

"""Symmetry conditions for pairs of Gaussian distributions.

With ``f_j(y) = exp(-<A_j y, y>)`` the characteristic-function equation is an
identity between rational quadratic exponents.  Its two sides differ by
``4 <(A1 + A2 a) u, v>``, so it holds exactly when ``A1 + a^T A2 = 0``.
The window checks evaluate the exponents directly and share nothing with
that closed form.
"""

import dataclasses
import itertools
import logging
import random
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from heyde_haar.utils import Rational, format_rational, lcm

from . import errors
from .forms import (
    LatticeAutomorphism,
    QuadraticGaussianSpec,
    determinant,
    identity_matrix,
)

logger = logging.getLogger(__name__)

#: Default half-width of the lattice window.
DEFAULT_WINDOW_RADIUS = 5
#: Default number of rational samples for the one-dimensional window.
DEFAULT_SOLENOID_SAMPLES = 1000
#: Bound on numerators and denominators of sampled rationals.
DEFAULT_SAMPLE_BOUND = 50

# Largest magnitude handled in int64 before falling back to Python integers.
_INT64_SAFE = 2**62


def _require_dimension(
    a1: QuadraticGaussianSpec, a2: QuadraticGaussianSpec, alpha: LatticeAutomorphism
) -> int:
    size = a1.dimension
    for other in (a2.dimension, alpha.dimension):
        if other != size:
            raise errors.DimensionError(size, other)
    return size


# region Torus
@dataclasses.dataclass(frozen=True)
class GaussianConditionResult:
    """Closed-form verdict and the symmetry of ``a^T A2``.

    :param product_symmetric: Whether ``a^T A2`` is symmetric; implied by a
        positive verdict because ``A1`` is symmetric.
    """

    holds: bool
    product_symmetric: bool

    def marshal(self) -> Dict[str, Any]:
        """Return the result as a serializable dictionary."""
        return {"holds": self.holds, "product-symmetric": self.product_symmetric}


def closed_form_condition(
    a1: QuadraticGaussianSpec, a2: QuadraticGaussianSpec, alpha: LatticeAutomorphism
) -> GaussianConditionResult:
    """Evaluate ``A1 + a^T A2 = 0`` and the symmetry of ``a^T A2``.

    :raises DimensionError: on mismatched sizes.
    """
    size = _require_dimension(a1, a2, alpha)
    transpose = alpha.transpose()
    product = [
        [
            sum((transpose[i][k] * a2.matrix[k][j] for k in range(size)), Fraction(0))
            for j in range(size)
        ]
        for i in range(size)
    ]
    holds = all(
        a1.matrix[i][j] + product[i][j] == 0 for i in range(size) for j in range(size)
    )
    symmetric = all(
        product[i][j] == product[j][i] for i in range(size) for j in range(size)
    )
    if holds and not symmetric:
        logger.warning("A1 + a^T A2 = 0 holds but a^T A2 is not symmetric")
    return GaussianConditionResult(holds, symmetric)


def gaussian_pair_symmetry_condition(
    a1: QuadraticGaussianSpec, a2: QuadraticGaussianSpec, alpha: LatticeAutomorphism
) -> bool:
    """True if the Gaussian pair solves the equation for the dual automorphism ``a``.

    :raises DimensionError: on mismatched sizes.
    """
    return closed_form_condition(a1, a2, alpha).holds


@dataclasses.dataclass(frozen=True)
class WindowResult:
    """Outcome of a brute-force window check.

    :param witness: The first ``(u, v)`` where the exponents differ.
    """

    holds: bool
    checked: int
    witness: Optional[Tuple[Tuple[Any, ...], Tuple[Any, ...]]] = None

    def marshal(self) -> Dict[str, Any]:
        """Return the result as a serializable dictionary."""
        return {
            "holds": self.holds,
            "checked": self.checked,
            "witness": None
            if self.witness is None
            else [
                [format_rational(x) if isinstance(x, Fraction) else x for x in part]
                for part in self.witness
            ],
        }


def _scaled(matrix: Sequence[Sequence[Fraction]], scale: int) -> List[List[int]]:
    return [[int(entry * scale) for entry in row] for row in matrix]


def window_verify(
    a1: QuadraticGaussianSpec,
    a2: QuadraticGaussianSpec,
    alpha: LatticeAutomorphism,
    radius: int = DEFAULT_WINDOW_RADIUS,
) -> WindowResult:
    """Compare both sides of the equation's exponents on ``|u|, |v| <= radius``.

    The forms are scaled to integers by their common denominator, so the
    comparison is exact; vectors are processed one ``v`` at a time against
    all ``u`` at once.

    :raises ValueError: if ``radius < 1``.
    :raises DimensionError: on mismatched sizes.
    """
    if radius < 1:
        raise ValueError(f"radius must be positive, not {radius}")
    size = _require_dimension(a1, a2, alpha)
    denominator = 1
    for entry in itertools.chain.from_iterable(a1.matrix + a2.matrix):
        denominator = lcm(denominator, entry.denominator)
    q1, q2 = _scaled(a1.matrix, denominator), _scaled(a2.matrix, denominator)
    alpha_norm = max(sum(abs(x) for x in row) for row in alpha.matrix)
    form_norm = max(abs(x) for x in itertools.chain.from_iterable(q1 + q2)) or 1
    bound = 4 * form_norm * size * size * ((1 + alpha_norm) * radius) ** 2
    dtype: Any = np.int64 if bound < _INT64_SAFE else object

    axis = range(-radius, radius + 1)
    points = np.array(list(itertools.product(axis, repeat=size)), dtype=dtype)
    first = np.array(q1, dtype=dtype)
    second = np.array(q2, dtype=dtype)
    rotation = np.array(alpha.matrix, dtype=dtype)

    def form(matrix: np.ndarray, vectors: np.ndarray) -> np.ndarray:
        return ((vectors @ matrix) * vectors).sum(axis=1)

    for v in points:
        image = rotation @ v
        left = form(first, points + v) + form(second, points + image)
        right = form(first, points - v) + form(second, points - image)
        mismatch = np.nonzero(left != right)[0]
        if mismatch.size:
            u = points[mismatch[0]]
            witness = (tuple(int(x) for x in u), tuple(int(x) for x in v))
            logger.debug(f"Window radius {radius}: violation at {witness}")
            return WindowResult(holds=False, checked=len(points) ** 2, witness=witness)
    return WindowResult(holds=True, checked=len(points) ** 2)


def admissibility_on_lattice(
    alpha: Union[LatticeAutomorphism, Sequence[Sequence[int]]],
) -> Tuple[bool, bool, bool]:
    """Unimodularity of ``a``, ``I + a`` and ``I - a`` from exact determinants."""
    matrix = alpha.matrix if isinstance(alpha, LatticeAutomorphism) else alpha
    size = len(matrix)
    one = identity_matrix(size)
    plus = [[one[i][j] + matrix[i][j] for j in range(size)] for i in range(size)]
    minus = [[one[i][j] - matrix[i][j] for j in range(size)] for i in range(size)]
    unit, plus_unit, minus_unit = (
        abs(determinant(m)) == 1 for m in (matrix, plus, minus)
    )
    return unit, plus_unit, minus_unit


# endregion
# region Solenoid
def _require_solenoid(sigma1: Fraction, sigma2: Fraction, alpha: Fraction) -> None:
    if sigma1 < 0 or sigma2 < 0:
        raise errors.FormError(
            "variances must be nonnegative", details=f"got {sigma1}, {sigma2}"
        )
    if alpha == 0:
        raise errors.FormError("alpha must be nonzero")


def solenoid_pair_condition(
    sigma1: Rational, sigma2: Rational, alpha: Rational
) -> bool:
    """``sigma1 + alpha * sigma2 = 0`` for Gaussians on the rational dual.

    :raises FormError: on negative variances or ``alpha = 0``.
    """
    s1, s2, a = Fraction(sigma1), Fraction(sigma2), Fraction(alpha)
    _require_solenoid(s1, s2, a)
    return s1 + a * s2 == 0


def solenoid_partner(sigma2: Rational, alpha: Rational) -> Fraction:
    """The ``sigma1`` pairing with ``sigma2``; nonnegative only for ``alpha < 0``."""
    return -Fraction(alpha) * Fraction(sigma2)


def random_rational(rng: random.Random, bound: int = DEFAULT_SAMPLE_BOUND) -> Fraction:
    """A rational ``p/q`` with ``|p| <= bound`` and ``1 <= q <= bound``."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def solenoid_window_verify(
    sigma1: Rational,
    sigma2: Rational,
    alpha: Rational,
    samples: int = DEFAULT_SOLENOID_SAMPLES,
    *,
    seed: Union[int, str] = 0,
) -> WindowResult:
    """Compare ``s1(u+v)^2 + s2(u+a v)^2`` with ``s1(u-v)^2 + s2(u-a v)^2``.

    ``u`` and ``v`` are seeded random rationals; ``(1, 1)`` is always tried.
    """
    s1, s2, a = Fraction(sigma1), Fraction(sigma2), Fraction(alpha)
    _require_solenoid(s1, s2, a)
    rng = random.Random(seed)
    candidates = [(Fraction(1), Fraction(1))]
    candidates.extend(
        (random_rational(rng), random_rational(rng)) for _ in range(samples)
    )
    for u, v in candidates:
        left = s1 * (u + v) ** 2 + s2 * (u + a * v) ** 2
        right = s1 * (u - v) ** 2 + s2 * (u - a * v) ** 2
        if left != right:
            return WindowResult(
                holds=False, checked=len(candidates), witness=((u,), (v,))
            )
    return WindowResult(holds=True, checked=len(candidates))


def solenoid_admissibility(alpha: Rational) -> Tuple[bool, bool, bool]:
    """Whether ``a``, ``1 + a`` and ``1 - a`` are automorphisms of the rationals."""
    a = Fraction(alpha)
    return a != 0, 1 + a != 0, 1 - a != 0


# endregion
