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

"""Finite abelian groups in primary decomposition, their elements and subgroups."""

import dataclasses
import functools
import itertools
import logging
import math
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Sequence,
    Set,
    Tuple,
)

from heyde_haar.utils import is_prime_power, lcm, prime_of, prime_power_split

from . import errors, structure
from .cyclotomic import CyclotomicField, cyclotomic_field

logger = logging.getLogger(__name__)

#: Largest group for which subgroups are enumerated unless told otherwise.
DEFAULT_SUBGROUP_CAP = 4096
#: Largest group for which an index addition table is materialized.
ADDITION_TABLE_CAP = 1024

Element = Tuple[int, ...]


def _canonical_key(order: int) -> Tuple[int, int]:
    return prime_of(order), order


@dataclasses.dataclass(frozen=True)
class FiniteAbelianGroup:
    """A direct product of cyclic groups of prime-power order.

    Elements are coordinate tuples ``x`` with ``0 <= x[i] < orders[i]``; the
    dual group uses the same coordinates (see :mod:`.duality`).

    :param orders: Prime-power cyclic orders in canonical order (by prime, then
        exponent).  Use :func:`make_group` for arbitrary input.
    """

    orders: Tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(self.orders)
        for order in orders:
            if not isinstance(order, int) or not is_prime_power(order):
                raise errors.InvalidGroupError(
                    orders,
                    f"{order!r} is not a prime power",
                    resolution="Use make_group() to normalize composite orders.",
                )
        if list(orders) != sorted(orders, key=_canonical_key):
            raise errors.InvalidGroupError(
                orders,
                "orders are not in canonical order",
                resolution="Use make_group() to sort the orders.",
            )
        object.__setattr__(self, "orders", orders)

    # region Structure
    @property
    def rank(self) -> int:
        """Number of cyclic factors."""
        return len(self.orders)

    @functools.cached_property
    def order(self) -> int:
        """Number of elements."""
        result = 1
        for order in self.orders:
            result *= order
        return result

    @functools.cached_property
    def exponent(self) -> int:
        """Least common multiple of the cyclic orders."""
        return lcm(*self.orders)

    @functools.cached_property
    def cyclotomic(self) -> CyclotomicField:
        """Reduction tables for the field of exponent-th roots of unity."""
        return cyclotomic_field(self.exponent)

    @property
    def primes(self) -> List[int]:
        """Sorted distinct primes dividing the group order."""
        return sorted({prime_of(order) for order in self.orders})

    @property
    def has_odd_order(self) -> bool:
        """True if the group has no elements of order 2."""
        return all(order % 2 for order in self.orders)

    @functools.cached_property
    def pairing_weights(self) -> Tuple[int, ...]:
        """``N // n_i`` for every factor, N the exponent."""
        return tuple(self.exponent // order for order in self.orders)

    def factor_indices(self, prime: int) -> List[int]:
        """Positions of the cyclic factors belonging to ``prime``."""
        return [i for i, order in enumerate(self.orders) if order % prime == 0]

    # endregion
    # region Elements
    @functools.cached_property
    def elements(self) -> Tuple[Element, ...]:
        """All elements in lexicographic order."""
        return tuple(itertools.product(*(range(order) for order in self.orders)))

    @functools.cached_property
    def index(self) -> Dict[Element, int]:
        """Position of every element in :attr:`elements`."""
        return {element: i for i, element in enumerate(self.elements)}

    @functools.cached_property
    def addition_table(self) -> Tuple[Tuple[int, ...], ...]:
        """``table[i][j]`` is the index of ``elements[i] + elements[j]``."""
        if self.order > ADDITION_TABLE_CAP:
            raise errors.CapExceededError(
                "an addition table", self.order, ADDITION_TABLE_CAP
            )
        index = self.index
        elements = self.elements
        return tuple(
            tuple(index[self.add(x, y)] for y in elements) for x in elements
        )

    @functools.cached_property
    def negation_table(self) -> Tuple[int, ...]:
        """``table[i]`` is the index of ``-elements[i]``."""
        index = self.index
        return tuple(index[self.neg(x)] for x in self.elements)

    def zero(self) -> Element:
        """The identity element."""
        return (0,) * self.rank

    def unit(self, position: int) -> Element:
        """The standard generator of the ``position``-th cyclic factor."""
        return tuple(1 if i == position else 0 for i in range(self.rank))

    def element(self, coords: Iterable[int]) -> Element:
        """Validate coordinates and return them as an element.

        :raises ElementError: if the shape or a residue is wrong.
        """
        element = tuple(coords)
        if len(element) != self.rank:
            raise errors.ElementError(
                element, self.orders, f"expected {self.rank} coordinates"
            )
        for value, order in zip(element, self.orders):
            if not isinstance(value, int) or not 0 <= value < order:
                raise errors.ElementError(
                    element, self.orders, f"residue {value!r} not in [0, {order})"
                )
        return element

    def reduce(self, coords: Iterable[int]) -> Element:
        """Reduce arbitrary integers coordinatewise into an element."""
        element = tuple(coords)
        if len(element) != self.rank:
            raise errors.ElementError(
                element, self.orders, f"expected {self.rank} coordinates"
            )
        return tuple(value % order for value, order in zip(element, self.orders))

    def __contains__(self, element: object) -> bool:
        return (
            isinstance(element, tuple)
            and len(element) == self.rank
            and all(
                isinstance(v, int) and 0 <= v < n for v, n in zip(element, self.orders)
            )
        )

    # endregion
    # region Arithmetic
    def add(self, x: Element, y: Element) -> Element:
        """Componentwise modular addition."""
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        """Additive inverse."""
        return tuple(-a % n for a, n in zip(x, self.orders))

    def sub(self, x: Element, y: Element) -> Element:
        """``x - y``."""
        return tuple((a - b) % n for a, b, n in zip(x, y, self.orders))

    def scale(self, x: Element, k: int) -> Element:
        """``k * x`` for any integer ``k``."""
        return tuple(a * k % n for a, n in zip(x, self.orders))

    def order_of(self, x: Element) -> int:
        """The order of ``x``."""
        result = 1
        for a, n in zip(x, self.orders):
            result = lcm(result, n // math.gcd(a, n))
        return result

    def checked_add(self, x: Element, y: Element) -> Element:
        """Validate both operands, then add them."""
        return self.add(self.element(x), self.element(y))

    def checked_neg(self, x: Element) -> Element:
        """Validate, then negate."""
        return self.neg(self.element(x))

    # endregion


def make_group(orders: Sequence[int]) -> FiniteAbelianGroup:
    """Build a group from arbitrary positive cyclic orders.

    Composite orders are split by the Chinese remainder theorem, factors of
    order 1 are dropped and the result is sorted canonically.

    :raises InvalidGroupError: on zero, negative or non-integer orders.
    """
    factors: List[int] = []
    for order in orders:
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise errors.InvalidGroupError(orders, f"{order!r} is not a positive integer")
        factors.extend(prime_power_split(order))
    group = FiniteAbelianGroup(tuple(sorted(factors, key=_canonical_key)))
    logger.debug(f"Constructed group with orders {list(group.orders)} from {list(orders)}")
    return group


@dataclasses.dataclass(frozen=True)
class Subgroup:
    """A subgroup stored as its full, canonically sorted element set.

    :param parent: The ambient group.
    :param elements: The elements; sorted and deduplicated on construction.
    """

    parent: FiniteAbelianGroup
    elements: Tuple[Element, ...]
    members: FrozenSet[Element] = dataclasses.field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        members = frozenset(self.elements)
        object.__setattr__(self, "elements", tuple(sorted(members)))
        object.__setattr__(self, "members", members)

    def __contains__(self, element: object) -> bool:
        return element in self.members

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        """Number of elements."""
        return len(self.elements)

    @property
    def index(self) -> int:
        """``[G : K]``."""
        return self.parent.order // self.order

    def is_trivial(self) -> bool:
        """True for ``{0}``."""
        return self.order == 1

    def is_full(self) -> bool:
        """True if the subgroup is the whole parent group."""
        return self.order == self.parent.order

    def issubset(self, other: "Subgroup") -> bool:
        """Inclusion of element sets."""
        return self.members <= other.members

    @functools.cached_property
    def basis(self) -> List[structure.BasisEntry]:
        """A primary basis: ``(generator, prime-power order)`` pairs."""
        return structure.primary_basis(
            self.parent, self.members, (self.parent.zero(),)
        )

    @functools.cached_property
    def coordinates(self) -> Dict[Element, Tuple[int, ...]]:
        """Coordinates of every element with respect to :attr:`basis`."""
        return structure.coordinate_map(self.parent, self.basis, (self.parent.zero(),))

    @functools.cached_property
    def generators(self) -> Tuple[Element, ...]:
        """A minimal generating sequence.

        Basis elements of coprime orders are summed, so the length is the
        largest rank of a primary component.
        """
        by_prime: Dict[int, List[Element]] = {}
        for generator, order in self.basis:
            by_prime.setdefault(prime_of(order), []).append(generator)
        length = max((len(gens) for gens in by_prime.values()), default=0)
        result: List[Element] = []
        for position in range(length):
            combined = self.parent.zero()
            for gens in by_prime.values():
                if position < len(gens):
                    combined = self.parent.add(combined, gens[-1 - position])
            result.append(combined)
        return tuple(sorted(result))

    def coset(self, x: Element) -> Tuple[Element, ...]:
        """The sorted coset ``x + K``."""
        return tuple(sorted(self.parent.add(x, k) for k in self.elements))

    def coset_representative(self, x: Element) -> Element:
        """The minimal element of ``x + K``."""
        return min(self.parent.add(x, k) for k in self.elements)

    def coset_representatives(self) -> Tuple[Element, ...]:
        """Minimal representatives of all cosets, sorted."""
        seen: Set[Element] = set()
        representatives: List[Element] = []
        for x in self.parent.elements:
            if x in seen:
                continue
            coset = self.coset(x)
            seen.update(coset)
            representatives.append(coset[0])
        return tuple(representatives)

    def verify(self) -> bool:
        """Check the subgroup axioms directly on the element set."""
        if self.parent.zero() not in self.members:
            return False
        if self.parent.order % self.order:
            return False
        if any(self.parent.neg(x) not in self.members for x in self.elements):
            return False
        closed = all(
            self.parent.add(x, g) in self.members
            for g in self.generators
            for x in self.elements
        )
        return closed and subgroup_generated(self.parent, self.generators) == self


def extend_subgroup(
    group: FiniteAbelianGroup, start: FrozenSet[Element], generator: Element
) -> FrozenSet[Element]:
    """Return the subgroup generated by the subgroup ``start`` and ``generator``."""
    if generator in start:
        return start
    result: Set[Element] = set(start)
    shifted = start
    step = generator
    while step not in start:
        shifted = frozenset(group.add(x, generator) for x in shifted)
        result.update(shifted)
        step = group.add(step, generator)
    return frozenset(result)


def subgroup_generated(
    group: FiniteAbelianGroup, generators: Iterable[Sequence[int]]
) -> Subgroup:
    """Return the smallest subgroup containing ``generators``.

    :raises ElementError: if a generator is not an element of ``group``.
    """
    members: FrozenSet[Element] = frozenset((group.zero(),))
    for generator in generators:
        members = extend_subgroup(group, members, group.element(generator))
    return Subgroup(group, tuple(members))


def _component_subgroups(
    group: FiniteAbelianGroup, positions: List[int]
) -> List[FrozenSet[Element]]:
    """All subgroups of the primary component on ``positions``, as element sets."""
    component = FiniteAbelianGroup(tuple(group.orders[i] for i in positions))
    cyclic: Dict[FrozenSet[Element], Element] = {}
    for x in component.elements:
        members = extend_subgroup(component, frozenset((component.zero(),)), x)
        cyclic.setdefault(members, x)
    found: Set[FrozenSet[Element]] = {frozenset((component.zero(),))}
    frontier = list(found)
    while frontier:
        next_frontier: List[FrozenSet[Element]] = []
        for members in frontier:
            for generator in cyclic.values():
                joined = extend_subgroup(component, members, generator)
                if joined not in found:
                    found.add(joined)
                    next_frontier.append(joined)
        frontier = next_frontier
    return list(found)


def enumerate_subgroups(
    group: FiniteAbelianGroup, *, cap: int = DEFAULT_SUBGROUP_CAP
) -> List[Subgroup]:
    """List every subgroup of ``group`` exactly once.

    Subgroups of each primary component are found by joining cyclic
    subgroups until no new subgroup appears; a subgroup of the whole group is
    the direct sum of its primary parts.

    :param cap: Refuse groups larger than this.
    :returns: Subgroups sorted by order, then by element list.
    :raises CapExceededError: if ``group.order > cap``.
    """
    if group.order > cap:
        raise errors.CapExceededError("subgroups", group.order, cap)
    per_prime: List[Tuple[List[int], List[FrozenSet[Element]]]] = []
    for prime in group.primes:
        positions = group.factor_indices(prime)
        per_prime.append((positions, _component_subgroups(group, positions)))
    subgroups: List[Subgroup] = []
    for choice in itertools.product(*(parts for _, parts in per_prime)):
        elements: List[Element] = [group.zero()]
        for (positions, _), members in zip(per_prime, choice):
            expanded: List[Element] = []
            for base in elements:
                for member in members:
                    coords = list(base)
                    for position, value in zip(positions, member):
                        coords[position] = value
                    expanded.append(tuple(coords))
            elements = expanded
        subgroups.append(Subgroup(group, tuple(elements)))
    subgroups.sort(key=lambda subgroup: (subgroup.order, subgroup.elements))
    logger.debug(f"Group {list(group.orders)} has {len(subgroups)} subgroups")
    return subgroups


def doubling_image(group: FiniteAbelianGroup) -> Subgroup:
    """The subgroup ``{2x : x in G}``."""
    return Subgroup(group, tuple({group.scale(x, 2) for x in group.elements}))


def two_torsion(group: FiniteAbelianGroup) -> Subgroup:
    """The subgroup ``{y : 2y = 0}``."""
    zero = group.zero()
    return Subgroup(
        group, tuple(x for x in group.elements if group.scale(x, 2) == zero)
    )

