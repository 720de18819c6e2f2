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

"""Exact rational probability distributions on finite abelian groups."""

import dataclasses
import functools
import logging
import random
from fractions import Fraction
from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from heyde_haar.utils import Rational, common_denominator, format_rational

from . import errors
from .group import Element, FiniteAbelianGroup, Subgroup, subgroup_generated

if TYPE_CHECKING:  # pragma: no cover
    from .morphisms import Homomorphism

logger = logging.getLogger(__name__)

#: Default weight bound used by :func:`random_distribution`.
DEFAULT_DENOMINATOR_BOUND = 6

MassItems = Tuple[Tuple[Element, Fraction], ...]


@dataclasses.dataclass(frozen=True)
class Distribution:
    """A probability distribution given by its exact mass function.

    Zero masses are dropped and the remaining items are sorted by element, so
    two distributions are equal exactly when their mass functions agree.

    :param parent: The group the distribution lives on.
    :param pmf: ``(element, mass)`` pairs or a mapping from element to mass.
    :raises DistributionError: on negative masses or a total other than 1.
    """

    parent: FiniteAbelianGroup
    pmf: MassItems

    def __post_init__(self) -> None:
        raw: Iterable[Tuple[Any, Any]] = (
            self.pmf.items() if isinstance(self.pmf, Mapping) else self.pmf
        )
        masses: Dict[Element, Fraction] = {}
        for element, mass in raw:
            if isinstance(mass, float):
                raise errors.DistributionError(
                    "masses must be exact rationals", details=f"got {mass!r}"
                )
            value = Fraction(mass)
            if value < 0:
                raise errors.DistributionError(
                    f"negative mass {value} at {tuple(element)}"
                )
            key = self.parent.element(element)
            masses[key] = masses.get(key, Fraction(0)) + value
        total = sum(masses.values(), Fraction(0))
        if total != 1:
            raise errors.DistributionError(f"masses sum to {total}, not 1")
        object.__setattr__(
            self,
            "pmf",
            tuple(sorted((x, m) for x, m in masses.items() if m)),
        )

    @functools.cached_property
    def masses(self) -> Dict[Element, Fraction]:
        """The mass function as a dictionary (zero masses omitted)."""
        return dict(self.pmf)

    def mass(self, element: Element) -> Fraction:
        """Mass at ``element``."""
        return self.masses.get(element, Fraction(0))

    @property
    def common_denominator(self) -> int:
        """Least common denominator of all masses."""
        return common_denominator(mass for _, mass in self.pmf)

    def integer_weights(self) -> Tuple[int, List[Tuple[Element, int]]]:
        """Return ``(D, [(x, D * mass(x))])`` with integer weights."""
        denominator = self.common_denominator
        return denominator, [
            (x, mass.numerator * (denominator // mass.denominator))
            for x, mass in self.pmf
        ]

    def marshal(self) -> Dict[str, Any]:
        """Return the distribution as a serializable dictionary."""
        return {
            "orders": list(self.parent.orders),
            "masses": [[list(x), format_rational(mass)] for x, mass in self.pmf],
        }


def _require_same_parent(*distributions: Distribution) -> FiniteAbelianGroup:
    parent = distributions[0].parent
    for other in distributions[1:]:
        if other.parent != parent:
            raise errors.GroupMismatchError(parent.orders, other.parent.orders)
    return parent


# region Constructors
def haar(group: FiniteAbelianGroup) -> Distribution:
    """The uniform distribution on the whole group."""
    mass = Fraction(1, group.order)
    return Distribution(group, tuple((x, mass) for x in group.elements))


def haar_on_subgroup(subgroup: Subgroup) -> Distribution:
    """The uniform distribution on a subgroup."""
    mass = Fraction(1, subgroup.order)
    return Distribution(subgroup.parent, tuple((x, mass) for x in subgroup.elements))


def dirac(group: FiniteAbelianGroup, element: Sequence[int]) -> Distribution:
    """The degenerate distribution at ``element``."""
    return Distribution(group, ((tuple(element), Fraction(1)),))


def mixture(
    components: Sequence[Tuple[Rational, Distribution]],
) -> Distribution:
    """Convex combination ``sum(weight * distribution)``.

    :raises DistributionError: if the weights are negative or do not sum to 1.
    """
    parent = _require_same_parent(*(mu for _, mu in components))
    masses: Dict[Element, Fraction] = {}
    for weight, mu in components:
        weight = Fraction(weight)
        if weight < 0:
            raise errors.DistributionError(f"negative mixture weight {weight}")
        for x, mass in mu.pmf:
            masses[x] = masses.get(x, Fraction(0)) + weight * mass
    return Distribution(parent, tuple(masses.items()))


def random_distribution(
    group: FiniteAbelianGroup,
    seed: Union[int, str],
    denominator_bound: int = DEFAULT_DENOMINATOR_BOUND,
) -> Distribution:
    """Draw a distribution with exact rational masses.

    ``denominator_bound`` is split into ``|G|`` nonnegative integer parts,
    uniformly over all such splits, and element ``x`` gets mass
    ``part[x] / denominator_bound``.  Every denominator divides the bound, so
    a bound of 1 always yields a degenerate distribution.

    :param seed: Seed of a private :class:`random.Random`; equal seeds give
        identical distributions.
    :raises ValueError: if ``denominator_bound < 1``.
    """
    if denominator_bound < 1:
        raise ValueError(f"denominator bound must be positive, not {denominator_bound}")
    rng = random.Random(seed)
    slots = denominator_bound + group.order - 1
    bars = sorted(rng.sample(range(slots), group.order - 1))
    parts = [right - left - 1 for left, right in zip([-1, *bars], [*bars, slots])]
    return Distribution(
        group,
        tuple(
            (x, Fraction(part, denominator_bound))
            for x, part in zip(group.elements, parts)
            if part
        ),
    )


# endregion
# region Operations
def shift(mu: Distribution, element: Sequence[int]) -> Distribution:
    """``mu * E_x``: translate every mass by ``x``."""
    x = mu.parent.element(element)
    return Distribution(mu.parent, tuple((mu.parent.add(y, x), m) for y, m in mu.pmf))


def reflect(mu: Distribution) -> Distribution:
    """The reflected distribution ``B -> mu(-B)``."""
    return Distribution(mu.parent, tuple((mu.parent.neg(y), m) for y, m in mu.pmf))


def convolve(first: Distribution, second: Distribution) -> Distribution:
    """The convolution ``(first * second)(z) = sum_x first(x) second(z - x)``.

    :raises GroupMismatchError: if the parents differ.
    """
    parent = _require_same_parent(first, second)
    masses: Dict[Element, Fraction] = {}
    for x, a in first.pmf:
        for y, b in second.pmf:
            z = parent.add(x, y)
            masses[z] = masses.get(z, Fraction(0)) + a * b
    return Distribution(parent, tuple(masses.items()))


def symmetrize(mu: Distribution) -> Distribution:
    """``nu = mu * reflect(mu)``; its transform is ``|mu^|**2``."""
    return convolve(mu, reflect(mu))


def pushforward(mu: Distribution, hom: "Homomorphism") -> Distribution:
    """The image distribution of ``mu`` under a homomorphism."""
    masses: Dict[Element, Fraction] = {}
    for x, m in mu.pmf:
        y = hom.apply(x)
        masses[y] = masses.get(y, Fraction(0)) + m
    return Distribution(hom.codomain, tuple(masses.items()))


def support(mu: Distribution) -> Tuple[Element, ...]:
    """Elements of positive mass, sorted."""
    return tuple(x for x, _ in mu.pmf)


def minimal_carrier_subgroup(first: Distribution, second: Distribution) -> Subgroup:
    """The subgroup generated by the union of both supports."""
    parent = _require_same_parent(first, second)
    return subgroup_generated(parent, sorted(set(support(first)) | set(support(second))))


def is_haar_shift(mu: Distribution) -> Optional[Tuple[Subgroup, Element]]:
    """Recognize ``mu = m_K * E_x``.

    :returns: ``(K, x)`` with ``x`` the minimal support element, or ``None``
        if the support is not a coset carrying uniform mass.
    """
    points = support(mu)
    if len(set(mass for _, mass in mu.pmf)) != 1:
        return None
    if mu.parent.order % len(points):
        return None
    origin = points[0]
    translated = {mu.parent.sub(x, origin) for x in points}
    subgroup = subgroup_generated(mu.parent, sorted(translated))
    if subgroup.order != len(translated):
        return None
    return subgroup, origin


# endregion
