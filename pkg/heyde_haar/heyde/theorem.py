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

"""The characterization of Haar-shift pairs, checked on finite groups."""

import dataclasses
import itertools
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from heyde_haar.algebra.distributions import (
    Distribution,
    haar_on_subgroup,
    is_haar_shift,
    minimal_carrier_subgroup,
    shift,
    symmetrize,
)
from heyde_haar.algebra.group import (
    Element,
    FiniteAbelianGroup,
    Subgroup,
    enumerate_subgroups,
)
from heyde_haar.algebra.morphisms import Homomorphism

from . import errors
from .conditions import haar_shift_pair_condition
from .instance import HeydeInstance, HypothesisFlags, hypothesis_flags
from .reports import marshal_element, marshal_matrix, marshal_subgroup
from .symmetry import DistributionPair, conditional_symmetry_oracle

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Decomposition:
    """``mu1 = m_K * E_x1`` and ``mu2 = m_K * E_x2`` for a symmetric pair."""

    pair_index: int
    subgroup: Subgroup
    x1: Element
    x2: Element

    def marshal(self) -> Dict[str, Any]:
        """Return the decomposition as a serializable dictionary."""
        return {
            "pair": self.pair_index,
            "subgroup": marshal_subgroup(self.subgroup),
            "x1": marshal_element(self.x1),
            "x2": marshal_element(self.x2),
        }


@dataclasses.dataclass(frozen=True)
class TheoremReport:
    """Outcome of :func:`theorem1_verifier`.

    :param assertive: False when run with unmet hypotheses; failures are
        then descriptive only.
    """

    orders: Tuple[int, ...]
    alpha: Homomorphism
    hypotheses: HypothesisFlags
    assertive: bool
    trials: int
    symmetric: int
    decompositions: Tuple[Decomposition, ...]
    failures: Tuple[Tuple[int, str], ...]

    @property
    def asymmetric(self) -> int:
        """Number of pairs judged asymmetric."""
        return self.trials - self.symmetric

    @property
    def holds(self) -> bool:
        """True unless an assertive run found a symmetric non-Haar-shift pair."""
        return not (self.assertive and self.failures)

    def marshal(self) -> Dict[str, Any]:
        """Return the report as a serializable dictionary."""
        return {
            "group": list(self.orders),
            "alpha": marshal_matrix(self.alpha),
            "hypotheses": self.hypotheses.marshal(),
            "assertive": self.assertive,
            "trials": self.trials,
            "symmetric": self.symmetric,
            "asymmetric": self.asymmetric,
            "decompositions": [d.marshal() for d in self.decompositions],
            "failures": [
                {"pair": index, "reason": reason} for index, reason in self.failures
            ],
        }


def _decompose(
    alpha: Homomorphism, mu1: Distribution, mu2: Distribution
) -> Tuple[Optional[Tuple[Subgroup, Element, Element]], str]:
    first, second = is_haar_shift(mu1), is_haar_shift(mu2)
    if first is None or second is None:
        return None, "a distribution is not a shift of a Haar distribution"
    if first[0] != second[0]:
        return None, "the Haar components differ"
    subgroup = first[0]
    if alpha.image_of(subgroup) != subgroup:
        return None, "the common subgroup is not alpha-invariant"
    carrier = minimal_carrier_subgroup(symmetrize(mu1), symmetrize(mu2))
    if carrier != subgroup:
        return None, "the subgroup is not the carrier of the symmetrized pair"
    return (subgroup, first[1], second[1]), ""


def theorem1_verifier(
    group: FiniteAbelianGroup,
    alpha: Homomorphism,
    pairs: Iterable[DistributionPair],
    *,
    exploratory: bool = False,
) -> TheoremReport:
    """Check that every symmetric pair is a pair of shifts of one Haar distribution.

    Symmetry is decided by the oracle.  Each symmetric pair must decompose
    as ``(m_K * E_x1, m_K * E_x2)`` with a common ``alpha``-invariant ``K``.

    :raises HypothesisError: if the group has even order or ``alpha`` is not
        admissible, unless ``exploratory`` is set.
    """
    flags = hypothesis_flags(alpha)
    flags.require(exploratory=exploratory)
    trials = 0
    decompositions: List[Decomposition] = []
    failures: List[Tuple[int, str]] = []
    for index, (mu1, mu2) in enumerate(pairs):
        trials += 1
        if not conditional_symmetry_oracle(HeydeInstance(alpha, mu1, mu2)).symmetric:
            continue
        found, reason = _decompose(alpha, mu1, mu2)
        if found is None:
            logger.info(f"Symmetric pair {index} is not a Haar-shift pair: {reason}")
            failures.append((index, reason))
        else:
            decompositions.append(Decomposition(index, *found))
    report = TheoremReport(
        orders=group.orders,
        alpha=alpha,
        hypotheses=flags,
        assertive=flags.met,
        trials=trials,
        symmetric=len(decompositions) + len(failures),
        decompositions=tuple(decompositions),
        failures=tuple(failures),
    )
    logger.debug(
        f"Characterization on {list(group.orders)}: {report.symmetric} of "
        f"{trials} pairs symmetric, {len(failures)} failures"
    )
    return report


@dataclasses.dataclass(frozen=True)
class ShiftConditionReport:
    """Outcome of :func:`shift_condition_sweep`.

    :param sufficiency_failures: Instances meeting the shift condition that
        the oracle judged asymmetric; any entry is a failed property.
    :param necessity_counterexamples: Symmetric instances violating the
        condition; recorded, not asserted.
    """

    orders: Tuple[int, ...]
    alpha: Homomorphism
    instances: int
    condition_met: int
    sufficiency_failures: Tuple[Tuple[Tuple[Element, ...], Element, Element], ...]
    necessity_counterexamples: Tuple[Tuple[Tuple[Element, ...], Element, Element], ...]

    @property
    def holds(self) -> bool:
        """True if the condition was sufficient on every instance."""
        return not self.sufficiency_failures

    def marshal(self) -> Dict[str, Any]:
        """Return the report as a serializable dictionary."""

        def entries(
            items: Sequence[Tuple[Tuple[Element, ...], Element, Element]],
        ) -> List[Dict[str, Any]]:
            return [
                {
                    "generators": [marshal_element(g) for g in gens],
                    "x1": marshal_element(x1),
                    "x2": marshal_element(x2),
                }
                for gens, x1, x2 in items
            ]

        return {
            "group": list(self.orders),
            "alpha": marshal_matrix(self.alpha),
            "instances": self.instances,
            "condition-met": self.condition_met,
            "sufficiency-failures": entries(self.sufficiency_failures),
            "necessity-counterexamples": entries(self.necessity_counterexamples),
        }


def shift_condition_sweep(
    group: FiniteAbelianGroup,
    alpha: Homomorphism,
    *,
    subgroups: Optional[Sequence[Subgroup]] = None,
    exploratory: bool = False,
) -> ShiftConditionReport:
    """Compare the shift condition with the oracle on Haar-shift pairs.

    Every ``alpha``-invariant subgroup ``K`` and every pair of coset
    representatives is tried.

    :raises HypothesisError: unless ``alpha`` is admissible or ``exploratory``.
    """
    flags = hypothesis_flags(alpha)
    if not flags.admissible and not exploratory:
        raise errors.HypothesisError(flags.failed()[-1])
    candidates = subgroups if subgroups is not None else enumerate_subgroups(group)
    instances = 0
    met = 0
    sufficiency: List[Tuple[Tuple[Element, ...], Element, Element]] = []
    necessity: List[Tuple[Tuple[Element, ...], Element, Element]] = []
    for subgroup in candidates:
        if alpha.image_of(subgroup) != subgroup:
            continue
        base = haar_on_subgroup(subgroup)
        representatives = subgroup.coset_representatives()
        for x1, x2 in itertools.product(representatives, repeat=2):
            instances += 1
            condition = haar_shift_pair_condition(subgroup, x1, x2, alpha)
            inst = HeydeInstance(alpha, shift(base, x1), shift(base, x2))
            symmetric = conditional_symmetry_oracle(inst).symmetric
            entry = (subgroup.generators, x1, x2)
            if condition:
                met += 1
                if not symmetric:
                    sufficiency.append(entry)
            elif symmetric:
                necessity.append(entry)
    logger.debug(
        f"Shift condition on {list(group.orders)}: {met} of {instances} met, "
        f"{len(necessity)} symmetric instances outside the condition"
    )
    return ShiftConditionReport(
        orders=group.orders,
        alpha=alpha,
        instances=instances,
        condition_met=met,
        sufficiency_failures=tuple(sufficiency),
        necessity_counterexamples=tuple(necessity),
    )


def haar_lemma_check(mu: Distribution) -> Optional[Tuple[Subgroup, Element]]:
    """If ``mu * reflect(mu)`` is Haar on ``K``, ``mu`` must be a shift of ``m_K``.

    :returns: The decomposition ``(K, x)`` when the premise holds, else None.
    :raises PropertyViolation: if the premise holds but the conclusion fails.
    """
    symmetrized = is_haar_shift(symmetrize(mu))
    if symmetrized is None:
        return None
    subgroup, _ = symmetrized
    found = is_haar_shift(mu)
    if found is None or found[0] != subgroup:
        raise errors.PropertyViolation(
            "a distribution whose symmetrization is Haar is a Haar shift",
            witness=mu.pmf,
        )
    return found
