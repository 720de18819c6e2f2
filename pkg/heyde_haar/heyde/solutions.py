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

"""Distributions with 0/1 characteristic functions.

If ``mu1^ = mu2^ = 1_E`` for a dual subgroup ``E``, the equation reduces to
a statement about ``E`` alone: for every ``v``, ``(I - alpha~) v`` in ``E``
implies ``2v`` in ``E``.
"""

import dataclasses
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from heyde_haar.algebra.duality import CharacteristicFunction, char_fn, indicator
from heyde_haar.algebra.group import (
    DEFAULT_SUBGROUP_CAP,
    Element,
    FiniteAbelianGroup,
    Subgroup,
    enumerate_subgroups,
)
from heyde_haar.algebra.morphisms import Homomorphism, adjoint, id_plus_minus

from . import errors
from .instance import HeydeInstance, HypothesisFlags, hypothesis_flags
from .reports import marshal_matrix, marshal_subgroup
from .symmetry import DistributionPair, equation_witness, heyde_equation_holds

logger = logging.getLogger(__name__)

#: Largest dual group on which indicator solutions are decided by brute force.
DEFAULT_EXHAUSTIVE_LIMIT = 256


def indicator_equation_holds(subgroup: Subgroup, dual_alpha: Homomorphism) -> bool:
    """Decide the equation for ``f1 = f2 = 1_E`` without multiplying anything."""
    group = subgroup.parent
    _, minus = id_plus_minus(dual_alpha)
    return all(
        group.scale(v, 2) in subgroup
        for v in group.elements
        if minus.apply(v) in subgroup
    )


def brute_force_indicator_holds(subgroup: Subgroup, dual_alpha: Homomorphism) -> bool:
    """Decide the equation for ``f1 = f2 = 1_E`` over the whole dual square."""
    values = indicator(subgroup.parent, subgroup)
    return equation_witness(values, values, dual_alpha) is None


@dataclasses.dataclass(frozen=True)
class ZeroOneReport:
    """Dual subgroups whose indicators solve the equation."""

    orders: Tuple[int, ...]
    alpha: Homomorphism
    hypotheses: HypothesisFlags
    method: str
    candidates: int
    solutions: Tuple[Subgroup, ...]

    @property
    def hypotheses_met(self) -> bool:
        """True if the verdicts are assertive."""
        return self.hypotheses.met

    def marshal(self) -> Dict[str, Any]:
        """Return the report as a serializable dictionary."""
        return {
            "group": list(self.orders),
            "alpha": marshal_matrix(self.alpha),
            "hypotheses": self.hypotheses.marshal(),
            "hypotheses-met": self.hypotheses_met,
            "method": self.method,
            "candidates": self.candidates,
            "solutions": [marshal_subgroup(e) for e in self.solutions],
        }


def enumerate_zero_one_solutions(
    group: FiniteAbelianGroup,
    alpha: Homomorphism,
    *,
    cap: int = DEFAULT_SUBGROUP_CAP,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> ZeroOneReport:
    """Scan every dual subgroup ``E`` and keep those with ``1_E`` a solution.

    Groups up to ``exhaustive_limit`` elements are decided by brute force
    over the dual square, larger ones by :func:`indicator_equation_holds`.
    When the hypotheses hold every solution must be ``alpha~``-invariant.

    :raises CapExceededError: if the group exceeds ``cap``.
    :raises PropertyViolation: if a solution is not ``alpha~``-invariant
        although the hypotheses hold.
    """
    dual_alpha = adjoint(alpha)
    flags = hypothesis_flags(alpha)
    exhaustive = group.order <= exhaustive_limit
    decide = brute_force_indicator_holds if exhaustive else indicator_equation_holds
    candidates = enumerate_subgroups(group, cap=cap)
    solutions = tuple(e for e in candidates if decide(e, dual_alpha))
    if flags.met:
        for subgroup in solutions:
            if dual_alpha.image_of(subgroup) != subgroup:
                raise errors.PropertyViolation(
                    "solution subgroups are invariant under the adjoint",
                    witness=subgroup.generators,
                )
    logger.debug(
        f"{len(solutions)} of {len(candidates)} dual subgroups of "
        f"{list(group.orders)} solve the equation"
    )
    return ZeroOneReport(
        orders=group.orders,
        alpha=alpha,
        hypotheses=flags,
        method="brute-force" if exhaustive else "reformulation",
        candidates=len(candidates),
        solutions=solutions,
    )


@dataclasses.dataclass(frozen=True)
class SpectrumReport:
    """Outcome of the nonnegative-spectrum sweep."""

    orders: Tuple[int, ...]
    pairs: int
    solutions: int
    unit_sets: Tuple[Subgroup, ...]
    violations: Tuple[Tuple[int, str], ...]

    @property
    def holds(self) -> bool:
        """True if no solving pair broke a conclusion."""
        return not self.violations

    def marshal(self) -> Dict[str, Any]:
        """Return the report as a serializable dictionary."""
        return {
            "group": list(self.orders),
            "pairs": self.pairs,
            "solutions": self.solutions,
            "unit-sets": [marshal_subgroup(e) for e in self.unit_sets],
            "violations": [
                {"pair": index, "reason": reason} for index, reason in self.violations
            ],
        }


def _spectrum_violation(
    first: CharacteristicFunction,
    second: CharacteristicFunction,
    dual_alpha: Homomorphism,
) -> Tuple[Optional[str], Optional[Subgroup]]:
    if first.values != second.values:
        return "transforms differ", None
    subgroup = first.indicator_of()
    if subgroup is None:
        return "transform is not a subgroup indicator", None
    if dual_alpha.image_of(subgroup) != subgroup:
        return "unit set is not invariant under the adjoint", subgroup
    plus, minus = id_plus_minus(dual_alpha)
    if plus.image_of(subgroup) != subgroup or minus.image_of(subgroup) != subgroup:
        return "unit set is not invariant under I +- adjoint", subgroup
    return None, subgroup


def nonnegative_spectrum_sweep(
    group: FiniteAbelianGroup,
    alpha: Homomorphism,
    pairs: Sequence[DistributionPair],
    *,
    exploratory: bool = False,
) -> SpectrumReport:
    """Check the 0/1-spectrum conclusion on every solving pair.

    A solving pair whose transforms are real and nonnegative must have equal
    transforms equal to the indicator of an ``alpha~``-invariant subgroup
    ``E`` with ``(I +- alpha~)(E) = E``.  Other pairs are skipped.

    :raises HypothesisError: unless the hypotheses hold or ``exploratory``.
    """
    hypothesis_flags(alpha).require(exploratory=exploratory)
    dual_alpha = adjoint(alpha)
    solving = 0
    unit_sets: Dict[Tuple[Element, ...], Subgroup] = {}
    violations: List[Tuple[int, str]] = []
    for index, (mu1, mu2) in enumerate(pairs):
        inst = HeydeInstance(alpha, mu1, mu2)
        if not heyde_equation_holds(inst).symmetric:
            continue
        first, second = char_fn(mu1), char_fn(mu2)
        if not (first.is_real_nonnegative() and second.is_real_nonnegative()):
            continue
        solving += 1
        reason, subgroup = _spectrum_violation(first, second, dual_alpha)
        if subgroup is not None:
            unit_sets.setdefault(subgroup.elements, subgroup)
        if reason is not None:
            logger.info(f"Pair {index} solves the equation but {reason}")
            violations.append((index, reason))
    return SpectrumReport(
        orders=group.orders,
        pairs=len(pairs),
        solutions=solving,
        unit_sets=tuple(unit_sets[key] for key in sorted(unit_sets)),
        violations=tuple(violations),
    )
