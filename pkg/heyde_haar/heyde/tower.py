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

"""Truncation towers ``G_m = Z(p^m) x Z(q^m) x ...`` of a product of p-adic groups.

Every layer is a finite group; a solution subgroup ``E`` of the dual of
``G_m`` pulls back along the inclusion ``y -> p y`` of the dual of
``G_{m-1}``, and the pullback must again be a solution.
"""

import dataclasses
import enum
import logging
import random
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple, Union

from heyde_haar.algebra.distributions import dirac, haar_on_subgroup
from heyde_haar.algebra.group import (
    FiniteAbelianGroup,
    Subgroup,
    enumerate_subgroups,
    make_group,
)
from heyde_haar.algebra.morphisms import (
    Homomorphism,
    check_heyde_admissible,
    diagonal_hom,
    make_hom,
    scalar_hom,
)
from heyde_haar.errors import HeydeError
from heyde_haar.utils import is_prime

from . import errors
from .reports import marshal_matrix, marshal_subgroup
from .solutions import enumerate_zero_one_solutions
from .symmetry import DistributionPair
from .theorem import theorem1_verifier

logger = logging.getLogger(__name__)

#: Subgroup enumeration cap used on tower layers.
DEFAULT_TOWER_SUBGROUP_CAP = 50000
#: Largest layer on which indicator solutions are decided by brute force.
TOWER_EXHAUSTIVE_LIMIT = 128
#: Largest subgroup whose Haar pair is fed to the characterization check.
TOWER_HAAR_LIMIT = 256
#: Random point-mass pairs per layer for the characterization check.
DEFAULT_TOWER_TRIALS = 50

AlphaSpec = Union[int, Sequence[int], Sequence[Sequence[int]]]


class TowerCheck(str, enum.Enum):
    """The check run on every layer."""

    ADMISSIBILITY = "admissibility"
    ZERO_ONE_SOLUTIONS = "zero-one-solutions"
    THEOREM = "theorem"


@dataclasses.dataclass(frozen=True)
class TowerLayer:
    """The result of one check on one layer for one automorphism.

    :param consistent: Whether the solutions pull back to solutions of the
        previous layer; None where nothing is compared.
    """

    level: int
    family_index: int
    alpha: Homomorphism
    admissible: bool
    solutions: Tuple[Subgroup, ...] = ()
    holds: Optional[bool] = None
    consistent: Optional[bool] = None

    def marshal(self) -> Dict[str, Any]:
        """Return the layer as a serializable dictionary."""
        return {
            "level": self.level,
            "family-index": self.family_index,
            "group": list(self.alpha.domain.orders),
            "alpha": marshal_matrix(self.alpha),
            "admissible": self.admissible,
            "solutions": [marshal_subgroup(e) for e in self.solutions],
            "holds": self.holds,
            "consistent": self.consistent,
        }


@dataclasses.dataclass(frozen=True)
class TowerReport:
    """Outcome of :func:`truncation_tower_sweep`."""

    primes: Tuple[int, ...]
    max_level: int
    check: TowerCheck
    layers: Tuple[TowerLayer, ...]

    @property
    def admissibility_uniform(self) -> bool:
        """True if every family member is admissible on all layers or on none."""
        verdicts: Dict[int, Set[bool]] = {}
        for layer in self.layers:
            verdicts.setdefault(layer.family_index, set()).add(layer.admissible)
        return all(len(values) == 1 for values in verdicts.values())

    @property
    def holds(self) -> bool:
        """True if no layer failed a check or a consistency comparison."""
        return self.admissibility_uniform and all(
            layer.holds is not False and layer.consistent is not False
            for layer in self.layers
        )

    def marshal(self) -> Dict[str, Any]:
        """Return the report as a serializable dictionary."""
        return {
            "primes": list(self.primes),
            "max-level": self.max_level,
            "check": self.check.value,
            "admissibility-uniform": self.admissibility_uniform,
            "layers": [layer.marshal() for layer in self.layers],
        }


def tower_group(primes: Sequence[int], level: int) -> FiniteAbelianGroup:
    """``Z(p^level)`` for every prime, in canonical order."""
    return make_group([prime**level for prime in primes])


def lift_alpha(group: FiniteAbelianGroup, spec: AlphaSpec) -> Homomorphism:
    """Reduce an integer scalar, diagonal or matrix onto a layer."""
    if isinstance(spec, int):
        return scalar_hom(group, spec)
    items = list(spec)
    if all(isinstance(item, int) for item in items):
        return diagonal_hom(group, items)  # type: ignore[arg-type]
    return make_hom(items, group)  # type: ignore[arg-type]


def scalar_family(primes: Sequence[int]) -> List[int]:
    """Scalars representing every residue class mod the product of the primes.

    Admissibility of a scalar on any layer depends only on these classes.
    """
    modulus = 1
    for prime in set(primes):
        modulus *= prime
    return list(range(modulus))


def inclusion(lower: FiniteAbelianGroup, upper: FiniteAbelianGroup) -> Homomorphism:
    """The map ``y -> p y`` from the dual of one layer into the next."""
    factors = [high // low for low, high in zip(lower.orders, upper.orders)]
    return make_hom(
        [
            [factors[i] if i == j else 0 for j in range(lower.rank)]
            for i in range(upper.rank)
        ],
        lower,
        upper,
    )


def _theorem_pairs(
    group: FiniteAbelianGroup, subgroups: Sequence[Subgroup], trials: int, seed: str
) -> List[DistributionPair]:
    rng = random.Random(seed)
    pairs: List[DistributionPair] = [
        (
            dirac(group, rng.choice(group.elements)),
            dirac(group, rng.choice(group.elements)),
        )
        for _ in range(trials)
    ]
    for subgroup in subgroups:
        if subgroup.order <= TOWER_HAAR_LIMIT:
            base = haar_on_subgroup(subgroup)
            pairs.append((base, base))
    return pairs


def _run_layer(
    check: TowerCheck,
    level: int,
    index: int,
    alpha: Homomorphism,
    previous: Optional[TowerLayer],
    *,
    subgroup_cap: int,
    trials: int,
    seed: Union[int, str],
    exploratory: bool,
) -> TowerLayer:
    group = alpha.domain
    admissible = check_heyde_admissible(alpha)
    if check is TowerCheck.ADMISSIBILITY:
        return TowerLayer(level, index, alpha, admissible)
    report = enumerate_zero_one_solutions(
        group, alpha, cap=subgroup_cap, exhaustive_limit=TOWER_EXHAUSTIVE_LIMIT
    )
    if check is TowerCheck.THEOREM:
        subgroups = enumerate_subgroups(group, cap=subgroup_cap)
        pairs = _theorem_pairs(group, subgroups, trials, f"{seed}:{level}:{index}")
        verdict = theorem1_verifier(group, alpha, pairs, exploratory=exploratory)
        return TowerLayer(
            level, index, alpha, admissible, report.solutions, verdict.holds
        )
    consistent = None
    if previous is not None:
        embed = inclusion(previous.alpha.domain, group)
        known = {e.elements for e in previous.solutions}
        consistent = all(embed.preimage(e).elements in known for e in report.solutions)
        if not consistent:
            logger.warning(
                f"Layer {level} solutions do not pull back to layer {level - 1}"
            )
    return TowerLayer(
        level, index, alpha, admissible, report.solutions, consistent=consistent
    )


def truncation_tower_sweep(
    primes: Sequence[int],
    max_level: int,
    alphas: Sequence[AlphaSpec],
    check: Union[TowerCheck, str] = TowerCheck.ZERO_ONE_SOLUTIONS,
    *,
    subgroup_cap: int = DEFAULT_TOWER_SUBGROUP_CAP,
    trials: int = DEFAULT_TOWER_TRIALS,
    seed: Union[int, str] = 0,
    exploratory: bool = True,
) -> TowerReport:
    """Run ``check`` on layers ``1..max_level`` for every automorphism spec.

    :param alphas: Integer scalars, per-factor diagonals or matrices; each is
        reduced onto every layer.
    :raises HypothesisError: if a prime is 2 or not prime.
    :raises TowerLayerError: wrapping any engine error with its layer.
    """
    check = TowerCheck(check)
    ordered = tuple(sorted(primes))
    for prime in ordered:
        if prime == 2 or not is_prime(prime):
            raise errors.HypothesisError(
                "every tower prime is an odd prime", details=f"primes {list(primes)}"
            )
    layers: List[TowerLayer] = []
    for index, spec in enumerate(alphas):
        previous: Optional[TowerLayer] = None
        for level in range(1, max_level + 1):
            try:
                group = tower_group(ordered, level)
                alpha = lift_alpha(group, spec)
                layer = _run_layer(
                    check,
                    level,
                    index,
                    alpha,
                    previous,
                    subgroup_cap=subgroup_cap,
                    trials=trials,
                    seed=seed,
                    exploratory=exploratory,
                )
            except errors.TowerLayerError:
                raise
            except HeydeError as error:
                raise errors.TowerLayerError(level, error) from error
            logger.debug(
                f"Tower {list(ordered)} level {level} alpha #{index}: "
                f"admissible={layer.admissible}, {len(layer.solutions)} solutions"
            )
            layers.append(layer)
            previous = layer
    return TowerReport(ordered, max_level, check, tuple(layers))
