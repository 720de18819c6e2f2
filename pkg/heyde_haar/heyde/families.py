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

"""Structured and random families of distribution pairs."""

import itertools
import logging
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from heyde_haar.algebra.distributions import (
    DEFAULT_DENOMINATOR_BOUND,
    Distribution,
    dirac,
    haar_on_subgroup,
    mixture,
    random_distribution,
    shift,
)
from heyde_haar.algebra.group import (
    FiniteAbelianGroup,
    Subgroup,
    enumerate_subgroups,
    make_group,
)

from .symmetry import DistributionPair

logger = logging.getLogger(__name__)

#: Cyclic orders of the test catalog of small groups.
CATALOG_ORDERS: Tuple[Tuple[int, ...], ...] = (
    (3,),
    (4,),
    (5,),
    (2, 2),
    (8,),
    (9,),
    (3, 3),
    (2, 4),
    (25,),
    (5, 5),
)

#: Mixing weights of the Haar-mixture family.
MIXTURE_WEIGHTS: Tuple[Fraction, ...] = tuple(Fraction(k, 4) for k in range(5))


def catalog_groups(*, max_order: Optional[int] = None) -> List[FiniteAbelianGroup]:
    """The catalog groups, optionally only those with at most ``max_order`` elements."""
    groups = [make_group(orders) for orders in CATALOG_ORDERS]
    if max_order is None:
        return groups
    return [group for group in groups if group.order <= max_order]


def point_mass_pairs(group: FiniteAbelianGroup) -> Iterator[DistributionPair]:
    """``(E_x1, E_x2)`` for every ordered pair of elements."""
    for x1, x2 in itertools.product(group.elements, repeat=2):
        yield dirac(group, x1), dirac(group, x2)


def haar_shift_pairs(
    group: FiniteAbelianGroup, subgroups: Optional[Sequence[Subgroup]] = None
) -> Iterator[DistributionPair]:
    """``(m_K * E_x1, m_K * E_x2)`` over subgroups and coset representatives."""
    for subgroup in subgroups if subgroups is not None else enumerate_subgroups(group):
        base = haar_on_subgroup(subgroup)
        representatives = subgroup.coset_representatives()
        for x1, x2 in itertools.product(representatives, repeat=2):
            yield shift(base, x1), shift(base, x2)


def haar_mixture_family(
    group: FiniteAbelianGroup,
    weights: Sequence[Union[int, Fraction]] = MIXTURE_WEIGHTS,
) -> List[Distribution]:
    """Distinct distributions ``l * m_K1 + (1 - l) * m_K2``.

    :returns: The family in first-seen order over subgroup pairs and weights.
    """
    bases = [haar_on_subgroup(subgroup) for subgroup in enumerate_subgroups(group)]
    seen = set()
    family: List[Distribution] = []
    for first, second in itertools.product(bases, repeat=2):
        for weight in weights:
            weight = Fraction(weight)
            mu = mixture([(weight, first), (1 - weight, second)])
            if mu.pmf not in seen:
                seen.add(mu.pmf)
                family.append(mu)
    logger.debug(
        f"Haar-mixture family on {list(group.orders)} has {len(family)} members"
    )
    return family


def haar_mixture_pairs(group: FiniteAbelianGroup) -> List[DistributionPair]:
    """All ordered pairs from :func:`haar_mixture_family`."""
    family = haar_mixture_family(group)
    return list(itertools.product(family, repeat=2))


def random_pairs(
    group: FiniteAbelianGroup,
    count: int,
    *,
    seed: Union[int, str] = 0,
    denominator_bound: int = DEFAULT_DENOMINATOR_BOUND,
) -> List[DistributionPair]:
    """``count`` seeded pairs of random distributions.

    Each distribution has its own derived seed, so a prefix of a longer run
    reproduces a shorter one.
    """
    return [
        (
            random_distribution(group, f"{seed}:{i}:1", denominator_bound),
            random_distribution(group, f"{seed}:{i}:2", denominator_bound),
        )
        for i in range(count)
    ]
