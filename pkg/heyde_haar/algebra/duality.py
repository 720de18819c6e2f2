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

"""Characters, annihilators and characteristic functions.

The dual of ``Z(n_1) x ... x Z(n_r)`` is identified with the group itself:
the character ``y`` takes the value ``zeta_N ** sum(x_i * y_i * N / n_i)`` at
``x``, where ``N`` is the group exponent.
"""

import dataclasses
import logging
import math
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from . import errors
from .cyclotomic import CyclotomicNumber, root_of_unity
from .distributions import Distribution
from .group import Element, FiniteAbelianGroup, Subgroup, subgroup_generated

logger = logging.getLogger(__name__)

DualElement = Element


# region Pairing
def pairing_exponent(group: FiniteAbelianGroup, x: Element, y: DualElement) -> int:
    """The exponent ``t`` with ``(x, y) = zeta_N ** t``, reduced mod N."""
    total = 0
    for a, b, weight in zip(x, y, group.pairing_weights):
        total += a * b * weight
    return total % group.exponent


def pairing_phase(group: FiniteAbelianGroup, x: Element, y: DualElement) -> Fraction:
    """The pairing as a fraction of a full turn, in ``[0, 1)``."""
    return Fraction(pairing_exponent(group, x, y), group.exponent)


def pairing(group: FiniteAbelianGroup, x: Sequence[int], y: Sequence[int]) -> CyclotomicNumber:
    """The value of the character ``y`` at ``x``.

    :raises ElementError: if ``x`` or ``y`` does not fit the group's orders.
    """
    exponent = pairing_exponent(group, group.element(x), group.element(y))
    return root_of_unity(group.exponent, exponent)


def annihilator_of(group: FiniteAbelianGroup, elements: Iterable[Element]) -> Subgroup:
    """All characters equal to 1 on every one of ``elements``."""
    points = [x for x in elements if any(x)]
    return Subgroup(
        group,
        tuple(
            y
            for y in group.elements
            if all(pairing_exponent(group, x, y) == 0 for x in points)
        ),
    )


def annihilator(group: FiniteAbelianGroup, subgroup: Subgroup) -> Subgroup:
    """``A(Y, K)``; by self-duality the same call computes ``A(X, E)``.

    :raises GroupMismatchError: if the subgroup lives in another group.
    """
    if subgroup.parent != group:
        raise errors.GroupMismatchError(group.orders, subgroup.parent.orders)
    return annihilator_of(group, subgroup.generators)


# endregion
# region Characteristic functions
@dataclasses.dataclass(frozen=True)
class CharacteristicFunction:
    """A function on the dual group with exact cyclotomic values.

    :param parent: The group whose dual carries the function.
    :param values: One value per dual element, in ``parent.elements`` order.
    """

    parent: FiniteAbelianGroup
    values: Tuple[CyclotomicNumber, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.parent.order:
            raise errors.ElementError(
                len(self.values),
                self.parent.orders,
                "one value per dual element is required",
            )

    def __call__(self, y: DualElement) -> CyclotomicNumber:
        return self.values[self.parent.index[y]]

    def value(self, y: Sequence[int]) -> CyclotomicNumber:
        """The value at a validated dual element."""
        return self.values[self.parent.index[self.parent.element(y)]]

    def items(self) -> Iterator[Tuple[DualElement, CyclotomicNumber]]:
        """``(y, value)`` pairs in canonical order."""
        return zip(self.parent.elements, self.values)

    def __mul__(self, other: "CharacteristicFunction") -> "CharacteristicFunction":
        if other.parent != self.parent:
            raise errors.GroupMismatchError(self.parent.orders, other.parent.orders)
        return CharacteristicFunction(
            self.parent, tuple(a * b for a, b in zip(self.values, other.values))
        )

    def unit_set(self) -> Subgroup:
        """``{y : f(y) = 1}``, which is a subgroup for characteristic functions."""
        return Subgroup(self.parent, tuple(y for y, v in self.items() if v.is_one()))

    def indicator_of(self) -> Optional[Subgroup]:
        """The subgroup ``E`` if the function is the 0/1 indicator of ``E``."""
        ones = []
        for y, v in self.items():
            if v.is_one():
                ones.append(y)
            elif not v.is_zero():
                return None
        candidate = Subgroup(self.parent, tuple(ones))
        if subgroup_generated(self.parent, candidate.elements) != candidate:
            return None
        return candidate

    def takes_values_zero_one(self) -> bool:
        """True if every value is exactly 0 or 1."""
        return all(v.is_zero() or v.is_one() for v in self.values)

    def is_even(self) -> bool:
        """``f(-y) = f(y)`` for all ``y``."""
        negation = self.parent.negation_table
        return all(self.values[negation[i]] == v for i, v in enumerate(self.values))

    def is_real_nonnegative(self) -> bool:
        """Every value is real and nonnegative."""
        return all(is_real_nonnegative(v) for v in self.values)

    def check_invariants(self) -> List[str]:
        """Return a description of every violated characteristic-function law."""
        problems: List[str] = []
        if not self(self.parent.zero()).is_one():
            problems.append("value at zero is not 1")
        negation = self.parent.negation_table
        for i, v in enumerate(self.values):
            y = self.parent.elements[i]
            if self.values[negation[i]] != v.conj():
                problems.append(f"f(-y) != conj(f(y)) at {y}")
            if not is_real_nonnegative(1 - v * v.conj()):
                problems.append(f"|f(y)| > 1 at {y}")
        return problems


def _strides(group: FiniteAbelianGroup) -> List[int]:
    strides = [1] * group.rank
    for axis in range(group.rank - 2, -1, -1):
        strides[axis] = strides[axis + 1] * group.orders[axis + 1]
    return strides


def _separable_transform(
    group: FiniteAbelianGroup, vectors: List[List[int]], sign: int
) -> List[List[int]]:
    """Apply ``v(y) = sum_x v(x) zeta ** (sign * <x, y>)`` axis by axis.

    Values are integer vectors over the exponents ``0..N-1`` so that
    multiplying by a root of unity is a rotation.
    """
    conductor = group.exponent
    strides = _strides(group)
    current = vectors
    for axis, (order, weight) in enumerate(zip(group.orders, group.pairing_weights)):
        stride = strides[axis]
        result: List[List[int]] = [[]] * len(current)
        for base in range(len(current)):
            if (base // stride) % order:
                continue
            column = [current[base + b * stride] for b in range(order)]
            for a in range(order):
                accumulator = [0] * conductor
                for b, vector in enumerate(column):
                    rotation = (sign * a * b * weight) % conductor
                    for t, coefficient in enumerate(vector):
                        if coefficient:
                            accumulator[(t + rotation) % conductor] += coefficient
                result[base + a * stride] = accumulator
        current = result
    return current


def char_fn(mu: Distribution) -> CharacteristicFunction:
    """The characteristic function ``mu^(y) = sum_x mu(x) (x, y)``, exactly."""
    group = mu.parent
    conductor = group.exponent
    denominator, weights = mu.integer_weights()
    vectors = [[0] * conductor for _ in group.elements]
    index = group.index
    for x, weight in weights:
        vectors[index[x]][0] = weight
    transformed = _separable_transform(group, vectors, 1)
    return CharacteristicFunction(
        group,
        tuple(
            CyclotomicNumber.from_exponent_weights(conductor, vector, denominator)
            for vector in transformed
        ),
    )


def inverse_fourier(f: CharacteristicFunction) -> Distribution:
    """Recover ``mu(x) = |G|**-1 sum_y f(y) conj((x, y))``.

    :raises DistributionError: if a recovered mass is irrational or negative.
    """
    group = f.parent
    conductor = group.exponent
    values = [v.lift(conductor) for v in f.values]
    denominator = 1
    for v in values:
        denominator = denominator * v.denominator // math.gcd(denominator, v.denominator)
    vectors: List[List[int]] = []
    for v in values:
        scale = denominator // v.denominator
        vector = [0] * conductor
        for t, numerator in enumerate(v.numerators):
            vector[t] = numerator * scale
        vectors.append(vector)
    transformed = _separable_transform(group, vectors, -1)
    masses: List[Tuple[Element, Fraction]] = []
    for x, vector in zip(group.elements, transformed):
        value = CyclotomicNumber.from_exponent_weights(
            conductor, vector, denominator * group.order
        )
        if not value.is_rational():
            raise errors.DistributionError(
                f"recovered mass at {x} is not rational", details=str(value)
            )
        masses.append((x, value.rational_value()))
    return Distribution(group, tuple(masses))


def unit_set(mu: Distribution) -> Subgroup:
    """``E = {y : mu^(y) = 1}``, via ``(x, y) = 1`` on the whole support."""
    carrier = subgroup_generated(mu.parent, (x for x, _ in mu.pmf))
    return annihilator_of(mu.parent, carrier.generators)


def is_real_nonnegative(value: CyclotomicNumber) -> bool:
    """True if ``value`` is real and ``>= 0``.

    Zero is detected exactly; other signs come from interval evaluation.
    """
    if value.is_zero():
        return True
    if not value.is_real():
        return False
    return value.real_sign() > 0


def indicator(group: FiniteAbelianGroup, subgroup: Subgroup) -> CharacteristicFunction:
    """The exact 0/1 indicator function of a dual subgroup."""
    one = root_of_unity(group.exponent, 0)
    zero = one - one
    return CharacteristicFunction(
        group, tuple(one if y in subgroup else zero for y in group.elements)
    )


# endregion
