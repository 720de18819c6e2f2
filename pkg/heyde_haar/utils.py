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

"""Integer and rational helpers shared across heyde-haar."""

import functools
import math
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import sympy

Rational = Union[int, Fraction]


@functools.lru_cache(maxsize=None)
def factorize(number: int) -> Tuple[Tuple[int, int], ...]:
    """Return the prime factorization of a positive integer.

    :param number: Integer >= 1.
    :returns: A sorted tuple of ``(prime, exponent)`` pairs; empty for 1.
    """
    if number < 1:
        raise ValueError(f"cannot factorize {number}")
    return tuple(
        (int(prime), int(exponent))
        for prime, exponent in sorted(sympy.factorint(number).items())
    )


def prime_power_split(number: int) -> List[int]:
    """Split ``number`` into its coprime prime-power factors (CRT)."""
    return [prime**exponent for prime, exponent in factorize(number)]


def prime_of(prime_power: int) -> int:
    """Return the prime underlying a prime power.

    :raises ValueError: if the argument is not a prime power.
    """
    factors = factorize(prime_power)
    if len(factors) != 1:
        raise ValueError(f"{prime_power} is not a prime power")
    return factors[0][0]


def is_prime_power(number: int) -> bool:
    """Return True if ``number`` is ``p**k`` for a prime ``p`` and ``k >= 1``."""
    return number >= 2 and len(factorize(number)) == 1


def is_prime(number: int) -> bool:
    """Return True if ``number`` is prime."""
    return bool(sympy.isprime(number))


def lcm(*numbers: int) -> int:
    """Least common multiple; the empty lcm is 1."""
    return math.lcm(*numbers)


@functools.lru_cache(maxsize=None)
def euler_phi(number: int) -> int:
    """Euler's totient."""
    return int(sympy.totient(number))


def divisors(number: int) -> List[int]:
    """Return the sorted positive divisors of ``number``."""
    return [int(divisor) for divisor in sympy.divisors(number)]


def common_denominator(values: Iterable[Rational]) -> int:
    """Return the least common denominator of a collection of rationals."""
    return lcm(*(Fraction(value).denominator for value in values))


def format_rational(value: Rational) -> str:
    """Serialize a rational as ``"p/q"`` (or ``"p"`` for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Union[str, int]) -> Fraction:
    """Parse the ``"p/q"`` form produced by :func:`format_rational`.

    :raises ValueError: if the text is not an exact rational.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not an exact rational: {text!r}")
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text.strip())
