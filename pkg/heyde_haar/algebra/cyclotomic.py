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

"""Exact arithmetic in cyclotomic fields.

Elements of Q(zeta_N) are stored in the power basis ``1, z, ..., z**(phi-1)``
reduced modulo the N-th cyclotomic polynomial, as integer numerators over one
positive common denominator.  The representation is canonical, so equality of
values is equality of the stored tuples.
"""

import dataclasses
import functools
import logging
import math
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from heyde_haar.utils import divisors, euler_phi, lcm

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

#: Interval evaluation starts at this many bits and doubles per round.
INITIAL_PRECISION = 32
#: Give up refining after this many bits; only reachable on a zero value.
MAX_PRECISION = 1 << 16


def _exact_divide(numerator: Sequence[int], divisor: Sequence[int]) -> List[int]:
    """Divide integer polynomials (low degree first) by a monic divisor."""
    remainder = list(numerator)
    degree = len(divisor) - 1
    quotient = [0] * (len(remainder) - degree)
    for k in range(len(quotient) - 1, -1, -1):
        coefficient = remainder[k + degree]
        quotient[k] = coefficient
        if coefficient:
            for i, value in enumerate(divisor):
                remainder[k + i] -= coefficient * value
    if any(remainder[:degree]):
        raise ArithmeticError("polynomial division left a remainder")
    return quotient


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(conductor: int) -> Tuple[int, ...]:
    """Return the coefficients of the ``conductor``-th cyclotomic polynomial.

    Computed by dividing ``x**N - 1`` by every lower-order cyclotomic
    polynomial whose order divides N.

    :returns: Integer coefficients, lowest degree first.
    """
    if conductor < 1:
        raise ValueError(f"conductor must be positive, not {conductor}")
    polynomial: List[int] = [-1] + [0] * (conductor - 1) + [1]
    for divisor in divisors(conductor)[:-1]:
        polynomial = _exact_divide(polynomial, cyclotomic_polynomial(divisor))
    return tuple(polynomial)


@dataclasses.dataclass(frozen=True)
class CyclotomicField:
    """The N-th cyclotomic field with its reduction tables.

    :param conductor: N.
    :param modulus: Coefficients of the N-th cyclotomic polynomial.
    :param powers: ``powers[t]`` is ``z**t`` reduced, for ``0 <= t < N``.
    """

    conductor: int
    modulus: Tuple[int, ...]
    powers: Tuple[Tuple[int, ...], ...] = dataclasses.field(repr=False)

    @property
    def degree(self) -> int:
        """Dimension over Q, i.e. Euler's phi of the conductor."""
        return len(self.modulus) - 1


@functools.lru_cache(maxsize=None)
def cyclotomic_field(conductor: int) -> CyclotomicField:
    """Build (once) the reduction tables for Q(zeta_N)."""
    modulus = cyclotomic_polynomial(conductor)
    degree = len(modulus) - 1
    if degree != euler_phi(conductor):
        raise ArithmeticError(f"degree mismatch for conductor {conductor}")
    powers: List[Tuple[int, ...]] = []
    current = [1] + [0] * (degree - 1)
    for _ in range(conductor):
        powers.append(tuple(current))
        top = current[-1]
        shifted = [0, *current[:-1]]
        if top:
            for i in range(degree):
                shifted[i] -= top * modulus[i]
        current = shifted
    logger.debug(f"Built cyclotomic field of conductor {conductor}, degree {degree}")
    return CyclotomicField(conductor, modulus, tuple(powers))


def _normalize(
    conductor: int, numerators: Sequence[int], denominator: int
) -> "CyclotomicNumber":
    if denominator < 0:
        numerators = [-n for n in numerators]
        denominator = -denominator
    common = functools.reduce(math.gcd, numerators, denominator)
    if common > 1:
        numerators = [n // common for n in numerators]
        denominator //= common
    return CyclotomicNumber(conductor, tuple(numerators), denominator)


def _lift(numerators: Sequence[int], source: int, target: int) -> List[int]:
    """Embed coefficients of Q(zeta_source) into Q(zeta_target)."""
    field = cyclotomic_field(target)
    step = target // source
    lifted = [0] * field.degree
    for i, value in enumerate(numerators):
        if value:
            row = field.powers[(i * step) % target]
            for j, entry in enumerate(row):
                if entry:
                    lifted[j] += value * entry
    return lifted


@dataclasses.dataclass(frozen=True)
class CyclotomicNumber:
    """An exact element of the cyclotomic field Q(zeta_N).

    Build values with :func:`root_of_unity`, :meth:`from_rational` or
    :meth:`from_coefficients`; the raw constructor expects normalized data.
    """

    conductor: int
    numerators: Tuple[int, ...]
    denominator: int = 1

    # region Constructors
    @classmethod
    def from_rational(cls, value: Scalar, conductor: int = 1) -> "CyclotomicNumber":
        """Embed a rational number into Q(zeta_N)."""
        value = Fraction(value)
        degree = cyclotomic_field(conductor).degree
        return _normalize(
            conductor,
            [value.numerator] + [0] * (degree - 1),
            value.denominator,
        )

    @classmethod
    def from_coefficients(
        cls, conductor: int, coefficients: Sequence[Scalar]
    ) -> "CyclotomicNumber":
        """Build a value from power-basis coefficients.

        The sequence may be longer than phi(N); higher powers are reduced.
        """
        field = cyclotomic_field(conductor)
        fractions = [Fraction(c) for c in coefficients]
        denominator = lcm(*(f.denominator for f in fractions))
        numerators = [0] * field.degree
        for t, value in enumerate(fractions):
            scaled = value.numerator * (denominator // value.denominator)
            if scaled:
                for j, entry in enumerate(field.powers[t % conductor]):
                    numerators[j] += scaled * entry
        return _normalize(conductor, numerators, denominator)

    @classmethod
    def from_exponent_weights(
        cls, conductor: int, weights: Sequence[int], denominator: int
    ) -> "CyclotomicNumber":
        """Build ``sum(weights[t] * z**t) / denominator`` for ``t < N``."""
        field = cyclotomic_field(conductor)
        numerators = [0] * field.degree
        for t, weight in enumerate(weights):
            if weight:
                for j, entry in enumerate(field.powers[t]):
                    if entry:
                        numerators[j] += weight * entry
        return _normalize(conductor, numerators, denominator)

    # endregion
    # region Accessors
    @property
    def field(self) -> CyclotomicField:
        """The field this value lives in."""
        return cyclotomic_field(self.conductor)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """Rational power-basis coefficients, length phi(N)."""
        return tuple(Fraction(n, self.denominator) for n in self.numerators)

    def is_zero(self) -> bool:
        """Exact zero test."""
        return not any(self.numerators)

    def is_rational(self) -> bool:
        """True if the value lies in Q."""
        return not any(self.numerators[1:])

    def is_one(self) -> bool:
        """Exact test for the multiplicative identity."""
        return self.is_rational() and self.numerators[0] == self.denominator

    def rational_value(self) -> Fraction:
        """Return the value as a Fraction.

        :raises ValueError: if the value is irrational.
        """
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.numerators[0], self.denominator)

    # endregion
    # region Ring operations
    def _coerce(self, other: object) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.conductor)
        return NotImplemented

    def _aligned(
        self, other: "CyclotomicNumber"
    ) -> Tuple[int, Sequence[int], Sequence[int]]:
        if other.conductor == self.conductor:
            return self.conductor, self.numerators, other.numerators
        target = lcm(self.conductor, other.conductor)
        return (
            target,
            _lift(self.numerators, self.conductor, target),
            _lift(other.numerators, other.conductor, target),
        )

    def __add__(self, other: object) -> "CyclotomicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        conductor, left, right = self._aligned(other)
        da, db = self.denominator, other.denominator
        return _normalize(
            conductor, [a * db + b * da for a, b in zip(left, right)], da * db
        )

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(
            self.conductor, tuple(-n for n in self.numerators), self.denominator
        )

    def __sub__(self, other: object) -> "CyclotomicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "CyclotomicNumber":
        return (-self) + other

    def __mul__(self, other: object) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return _normalize(
                self.conductor,
                [n * other.numerator for n in self.numerators],
                self.denominator * other.denominator,
            )
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        conductor, left, right = self._aligned(other)
        denominator = self.denominator * other.denominator
        field = cyclotomic_field(conductor)
        degree = field.degree
        if not any(left) or not any(right):
            return _normalize(conductor, [0] * degree, 1)
        product = [0] * (2 * degree - 1)
        for i, a in enumerate(left):
            if a:
                for j, b in enumerate(right):
                    if b:
                        product[i + j] += a * b
        result = product[:degree]
        for k in range(degree, 2 * degree - 1):
            coefficient = product[k]
            if coefficient:
                for j, entry in enumerate(field.powers[k % conductor]):
                    if entry:
                        result[j] += coefficient * entry
        return _normalize(conductor, result, denominator)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, CyclotomicNumber):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, exponent: int) -> "CyclotomicNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.from_rational(1, self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def lift(self, conductor: int) -> "CyclotomicNumber":
        """Embed the value into Q(zeta_M) for a multiple M of the conductor."""
        if conductor % self.conductor:
            raise ValueError(f"{conductor} is not a multiple of {self.conductor}")
        if conductor == self.conductor:
            return self
        return _normalize(
            conductor,
            _lift(self.numerators, self.conductor, conductor),
            self.denominator,
        )

    def galois(self, k: int) -> "CyclotomicNumber":
        """Apply the field automorphism ``z -> z**k`` (``k`` coprime to N)."""
        if math.gcd(k, self.conductor) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.conductor}")
        field = self.field
        result = [0] * field.degree
        for i, value in enumerate(self.numerators):
            if value:
                for j, entry in enumerate(field.powers[(i * k) % self.conductor]):
                    if entry:
                        result[j] += value * entry
        return _normalize(self.conductor, result, self.denominator)

    def conj(self) -> "CyclotomicNumber":
        """Complex conjugation, ``z -> z**-1``."""
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    def norm(self) -> Fraction:
        """Field norm down to Q: the product of all Galois conjugates."""
        result = CyclotomicNumber.from_rational(1, self.conductor)
        for k in range(1, max(self.conductor, 2)):
            if math.gcd(k, self.conductor) == 1:
                result = result * self.galois(k)
        return result.rational_value()

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse.

        :raises ZeroDivisionError: for zero.
        """
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        cofactor = CyclotomicNumber.from_rational(1, self.conductor)
        for k in range(2, self.conductor):
            if math.gcd(k, self.conductor) == 1:
                cofactor = cofactor * self.galois(k)
        return cofactor / (cofactor * self).rational_value()

    # endregion
    # region Comparison
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.conductor == self.conductor:
            return (
                self.numerators == other.numerators
                and self.denominator == other.denominator
            )
        return (self - other).is_zero()

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.conductor, self.numerators, self.denominator))

    def is_real(self) -> bool:
        """True if the value is fixed by complex conjugation."""
        return self == self.conj()

    def real_sign(self) -> int:
        """Return -1, 0 or 1 for a real value.

        Zero is decided exactly; other signs by interval evaluation whose
        precision doubles until the enclosure excludes zero.

        :raises ValueError: if the value is not real.
        """
        if self.is_zero():
            return 0
        if not self.is_real():
            raise ValueError(f"{self} is not real")
        if self.is_rational():
            return 1 if self.numerators[0] > 0 else -1
        bits = INITIAL_PRECISION
        while bits <= MAX_PRECISION:
            low, high = self._real_enclosure(bits)
            if low > 0:
                return 1
            if high < 0:
                return -1
            bits *= 2
        raise ArithmeticError(f"could not separate {self} from zero")

    def _real_enclosure(self, bits: int) -> Tuple[Fraction, Fraction]:
        low = Fraction(0)
        high = Fraction(0)
        for k, value in enumerate(self.numerators):
            if not value:
                continue
            cos_low, cos_high = cos_enclosure(k, self.conductor, bits)
            if value > 0:
                low += value * cos_low
                high += value * cos_high
            else:
                low += value * cos_high
                high += value * cos_low
        return low / self.denominator, high / self.denominator

    def approximate(self) -> complex:
        """Floating-point value, for display only."""
        angle = 2 * math.pi / self.conductor
        return sum(
            (
                n * complex(math.cos(angle * k), math.sin(angle * k))
                for k, n in enumerate(self.numerators)
            ),
            0j,
        ) / self.denominator

    # endregion

    def __str__(self) -> str:
        terms = []
        for k, value in enumerate(self.coeffs):
            if not value:
                continue
            if k == 0:
                terms.append(str(value))
            else:
                power = "" if k == 1 else f"^{k}"
                terms.append(f"{value}*z{self.conductor}{power}")
        return " + ".join(terms) if terms else "0"


def root_of_unity(conductor: int, exponent: int) -> CyclotomicNumber:
    """Return ``zeta_N ** t`` reduced modulo the N-th cyclotomic polynomial."""
    field = cyclotomic_field(conductor)
    return CyclotomicNumber(conductor, field.powers[exponent % conductor], 1)


# region Interval evaluation
def _arctan_inverse(x: int, bits: int) -> Tuple[Fraction, Fraction]:
    """Enclose arctan(1/x) for an integer x > 1 with width below 2**-bits."""
    eps = Fraction(1, 1 << bits)
    total = Fraction(0)
    n = 0
    while True:
        term = Fraction(1, (2 * n + 1) * x ** (2 * n + 1))
        total += term if n % 2 == 0 else -term
        next_term = Fraction(1, (2 * n + 3) * x ** (2 * n + 3))
        if next_term < eps:
            # Alternating series with decreasing terms.
            if n % 2 == 0:
                return total - next_term, total
            return total, total + next_term
        n += 1


@functools.lru_cache(maxsize=None)
def pi_enclosure(bits: int) -> Tuple[Fraction, Fraction]:
    """Enclose pi using Machin's formula."""
    low5, high5 = _arctan_inverse(5, bits + 6)
    low239, high239 = _arctan_inverse(239, bits + 4)
    return 16 * low5 - 4 * high239, 16 * high5 - 4 * low239


def _dyadic_floor(value: Fraction, bits: int) -> Fraction:
    return Fraction(math.floor(value * (1 << bits)), 1 << bits)


def _dyadic_ceil(value: Fraction, bits: int) -> Fraction:
    return Fraction(math.ceil(value * (1 << bits)), 1 << bits)


@functools.lru_cache(maxsize=None)
def cos_enclosure(k: int, conductor: int, bits: int) -> Tuple[Fraction, Fraction]:
    """Enclose cos(2*pi*k/N) in a dyadic interval of width about 2**-bits."""
    k %= conductor
    k = min(k, conductor - k)
    if k == 0:
        return Fraction(1), Fraction(1)
    if 2 * k == conductor:
        return Fraction(-1), Fraction(-1)
    if 4 * k == conductor:
        return Fraction(0), Fraction(0)
    pi_low, pi_high = pi_enclosure(bits + 4)
    theta_low = 2 * k * pi_low / conductor
    theta_high = 2 * k * pi_high / conductor
    theta = _dyadic_floor((theta_low + theta_high) / 2, bits + 4)
    spread = max(theta_high - theta, theta - theta_low)
    eps = Fraction(1, 1 << (bits + 4))
    theta_sq = theta * theta
    total = Fraction(1)
    term = Fraction(1)
    n = 0
    while True:
        n += 1
        term = term * theta_sq / ((2 * n - 1) * (2 * n))
        total += -term if n % 2 else term
        next_term = term * theta_sq / ((2 * n + 1) * (2 * n + 2))
        if next_term < eps:
            break
    # theta < 3.5, so the terms decrease from n = 1 on; |cos'| <= 1.
    slack = next_term + spread
    low = _dyadic_floor(total - slack, bits + 2)
    high = _dyadic_ceil(total + slack, bits + 2)
    return max(low, Fraction(-1)), min(high, Fraction(1))


# endregion
