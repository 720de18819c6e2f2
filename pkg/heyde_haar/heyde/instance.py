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

"""Instances of the two-variable characterization problem."""

import dataclasses
import functools
import logging
from typing import Any, Dict, List

from heyde_haar.algebra.distributions import Distribution
from heyde_haar.algebra.errors import GroupMismatchError
from heyde_haar.algebra.group import FiniteAbelianGroup
from heyde_haar.algebra.morphisms import (
    Homomorphism,
    adjoint,
    check_heyde_admissible,
    is_automorphism,
)

from . import errors

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class HypothesisFlags:
    """Which hypotheses of the characterization theorem hold.

    :param odd_order: The group has no element of order 2.
    :param admissible: ``alpha``, ``I + alpha`` and ``I - alpha`` are automorphisms.
    """

    odd_order: bool
    admissible: bool

    @property
    def met(self) -> bool:
        """True if every hypothesis holds."""
        return self.odd_order and self.admissible

    def failed(self) -> List[str]:
        """Names of the hypotheses that do not hold."""
        names = []
        if not self.odd_order:
            names.append("the group has odd order")
        if not self.admissible:
            names.append("alpha, I + alpha and I - alpha are automorphisms")
        return names

    def require(self, *, exploratory: bool = False) -> None:
        """Raise unless every hypothesis holds or ``exploratory`` is set.

        :raises HypothesisError: naming the first failed hypothesis.
        """
        failed = self.failed()
        if failed and not exploratory:
            raise errors.HypothesisError(failed[0], details="; ".join(failed))
        if failed:
            logger.info(f"Exploratory run with unmet hypotheses: {failed}")

    def marshal(self) -> Dict[str, Any]:
        """Return the flags as a serializable dictionary."""
        return {"odd-order": self.odd_order, "admissible": self.admissible}


def hypothesis_flags(alpha: Homomorphism) -> HypothesisFlags:
    """Evaluate the hypotheses for an endomorphism of its domain."""
    return HypothesisFlags(
        odd_order=alpha.domain.has_odd_order,
        admissible=check_heyde_admissible(alpha),
    )


@dataclasses.dataclass(frozen=True)
class HeydeInstance:
    """Independent variables with distributions ``mu1``, ``mu2`` and the forms
    ``L1 = xi1 + xi2``, ``L2 = xi1 + alpha xi2``.

    :raises GroupMismatchError: if the distributions live elsewhere.
    :raises HypothesisError: if ``alpha`` is not an automorphism.
    """

    alpha: Homomorphism
    mu1: Distribution
    mu2: Distribution

    def __post_init__(self) -> None:
        group = self.alpha.domain
        for mu in (self.mu1, self.mu2):
            if mu.parent != group:
                raise GroupMismatchError(group.orders, mu.parent.orders)
        if not is_automorphism(self.alpha):
            raise errors.HypothesisError(
                "alpha is an automorphism", details=f"matrix {self.alpha.matrix}"
            )

    @property
    def group(self) -> FiniteAbelianGroup:
        """The common parent group."""
        return self.alpha.domain

    @functools.cached_property
    def dual_alpha(self) -> Homomorphism:
        """The adjoint automorphism acting on the dual group."""
        return adjoint(self.alpha)

    def marshal(self) -> Dict[str, Any]:
        """Return the instance as a serializable dictionary."""
        return {
            "alpha": self.alpha.marshal(),
            "mu1": self.mu1.marshal(),
            "mu2": self.mu2.marshal(),
        }
