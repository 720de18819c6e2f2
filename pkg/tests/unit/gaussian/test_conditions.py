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
import random
from fractions import Fraction

import pytest
from heyde_haar.gaussian import errors
from heyde_haar.gaussian.conditions import (
    admissibility_on_lattice,
    closed_form_condition,
    gaussian_pair_symmetry_condition,
    random_rational,
    solenoid_admissibility,
    solenoid_pair_condition,
    solenoid_partner,
    solenoid_window_verify,
    window_verify,
)
from heyde_haar.gaussian.forms import LatticeAutomorphism, QuadraticGaussianSpec

TORUS_A1 = QuadraticGaussianSpec([[1, -1], [-1, 2]])
PERTURBED_A1 = QuadraticGaussianSpec([[2, -1], [-1, 2]])
IDENTITY = QuadraticGaussianSpec([[1, 0], [0, 1]])
ZERO = QuadraticGaussianSpec([[0, 0], [0, 0]])
TORUS_ALPHA = LatticeAutomorphism([[-1, 1], [1, -2]])
MINUS_ONE = LatticeAutomorphism([[-1, 0], [0, -1]])
FIBONACCI = LatticeAutomorphism([[0, 1], [1, 1]])


def _exponents(a1, a2, alpha, u, v):
    """Both sides of the exponent identity, evaluated with Fractions."""
    image = alpha.apply(v)

    def side(sign):
        first = [x + sign * y for x, y in zip(u, v)]
        second = [x + sign * y for x, y in zip(u, image)]
        return a1.value(first) + a2.value(second)

    return side(1), side(-1)


# region Torus
@pytest.mark.parametrize(
    ("a1", "a2", "alpha", "expected"),
    [
        (TORUS_A1, IDENTITY, TORUS_ALPHA, True),
        (IDENTITY, IDENTITY, MINUS_ONE, True),
        (PERTURBED_A1, IDENTITY, TORUS_ALPHA, False),
        (ZERO, ZERO, FIBONACCI, True),
        (IDENTITY, IDENTITY, FIBONACCI, False),
    ],
)
def test_closed_form(a1, a2, alpha, expected):
    assert gaussian_pair_symmetry_condition(a1, a2, alpha) is expected
    assert window_verify(a1, a2, alpha, radius=3).holds is expected


def test_closed_form_product_symmetry():
    result = closed_form_condition(TORUS_A1, IDENTITY, TORUS_ALPHA)

    assert result.holds
    assert result.product_symmetric
    assert result.marshal() == {"holds": True, "product-symmetric": True}
    assert not closed_form_condition(IDENTITY, IDENTITY, FIBONACCI).holds


def test_closed_form_dimension_mismatch():
    with pytest.raises(errors.DimensionError):
        closed_form_condition(TORUS_A1, QuadraticGaussianSpec([[1]]), TORUS_ALPHA)


def test_torus_window_radius_20():
    result = window_verify(TORUS_A1, IDENTITY, TORUS_ALPHA, radius=20)

    assert result.holds
    assert result.checked == 41**4
    assert result.witness is None


def test_perturbed_window_witness():
    result = window_verify(PERTURBED_A1, IDENTITY, TORUS_ALPHA, radius=2)

    assert not result.holds
    assert result.checked == 25**2
    u, v = result.witness
    assert max(abs(x) for x in u + v) <= 2
    left, right = _exponents(PERTURBED_A1, IDENTITY, TORUS_ALPHA, u, v)
    assert left != right


@pytest.mark.parametrize("radius", [1, 4])
def test_zero_forms_window(radius):
    assert window_verify(ZERO, ZERO, TORUS_ALPHA, radius=radius).holds


def test_window_rejects_radius():
    with pytest.raises(ValueError):
        window_verify(TORUS_A1, IDENTITY, TORUS_ALPHA, radius=0)


def test_window_rational_forms():
    half = QuadraticGaussianSpec([["1/2", 0], [0, "1/2"]])

    assert window_verify(half, half, MINUS_ONE, radius=2).holds
    skewed = QuadraticGaussianSpec([["1/3", 0], [0, 1]])
    result = window_verify(half, skewed, MINUS_ONE, 2)
    assert not result.holds
    assert result.marshal()["witness"] == [list(part) for part in result.witness]


@pytest.mark.parametrize("size", [1, 2, 3])
def test_closed_form_matches_window(random_gaussian_triple, size):
    rng = random.Random(f"gaussian:{size}")
    outcomes = set()
    for _ in range(20):
        a1, a2, alpha = random_gaussian_triple(rng, size)
        expected = gaussian_pair_symmetry_condition(a1, a2, alpha)
        assert window_verify(a1, a2, alpha, radius=3).holds is expected
        outcomes.add(expected)
    assert outcomes == {True, False}


@pytest.mark.parametrize(
    ("matrix", "expected"),
    [
        ([[-1, 1], [1, -2]], (True, True, False)),
        ([[-1, 0], [0, -1]], (True, False, False)),
        ([[0, 1], [1, 1]], (True, True, True)),
        ([[1, 0], [0, 1]], (True, False, False)),
        ([[2, 1], [1, 1]], (True, False, True)),
    ],
)
def test_admissibility_on_lattice(matrix, expected):
    assert admissibility_on_lattice(matrix) == expected
    assert admissibility_on_lattice(LatticeAutomorphism(matrix)) == expected


# endregion
# region Solenoid
@pytest.mark.parametrize(
    ("sigma1", "sigma2", "alpha", "expected"),
    [
        (2, 1, -2, True),
        (1, 1, -2, False),
        (0, 0, 3, True),
        (0, 0, Fraction(-1, 7), True),
        (Fraction(1, 2), Fraction(3, 2), Fraction(-1, 3), True),
        (1, 1, 1, False),
    ],
)
def test_solenoid_pair_condition(sigma1, sigma2, alpha, expected):
    assert solenoid_pair_condition(sigma1, sigma2, alpha) is expected
    assert solenoid_window_verify(sigma1, sigma2, alpha, samples=10).holds is expected


@pytest.mark.parametrize(
    ("sigma1", "sigma2", "alpha"), [(-1, 1, -1), (1, -1, -1), (1, 1, 0)]
)
def test_solenoid_invalid(sigma1, sigma2, alpha):
    with pytest.raises(errors.FormError):
        solenoid_pair_condition(sigma1, sigma2, alpha)
    with pytest.raises(errors.FormError):
        solenoid_window_verify(sigma1, sigma2, alpha)


def test_solenoid_partner():
    assert solenoid_partner(1, -2) == 2
    assert solenoid_partner(Fraction(3, 2), Fraction(-1, 3)) == Fraction(1, 2)
    assert solenoid_partner(1, 2) < 0


def test_solenoid_window_witness():
    result = solenoid_window_verify(1, 1, -2, samples=5)

    assert not result.holds
    assert result.witness == ((Fraction(1),), (Fraction(1),))
    assert result.marshal()["witness"] == [["1"], ["1"]]


def test_solenoid_window_deterministic():
    assert solenoid_window_verify(2, 1, -2, seed=4) == solenoid_window_verify(
        2, 1, -2, seed=4
    )
    assert solenoid_window_verify(2, 1, -2, samples=1000).checked == 1001


def test_solenoid_condition_matches_window():
    rng = random.Random("solenoid")
    outcomes = set()
    for _ in range(1000):
        alpha = random_rational(rng, 20) or Fraction(-1)
        sigma2 = abs(random_rational(rng, 20))
        if alpha < 0 and rng.random() < 0.5:
            sigma1 = solenoid_partner(sigma2, alpha)
        else:
            sigma1 = abs(random_rational(rng, 20))
        expected = solenoid_pair_condition(sigma1, sigma2, alpha)
        verdict = solenoid_window_verify(sigma1, sigma2, alpha, samples=3)
        assert verdict.holds is expected
        outcomes.add(expected)
    assert outcomes == {True, False}


@pytest.mark.parametrize(
    ("alpha", "expected"),
    [(-2, (True, True, True)), (1, (True, True, False)), (-1, (True, False, True))],
)
def test_solenoid_admissibility(alpha, expected):
    assert solenoid_admissibility(alpha) == expected


def test_random_rational_bounds():
    rng = random.Random(0)
    for _ in range(200):
        value = random_rational(rng, 7)
        assert abs(value.numerator) <= 7
        assert 1 <= value.denominator <= 7


# endregion
