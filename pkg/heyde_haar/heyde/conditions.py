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

"""Subgroup conditions that decide symmetry for Haar-type distributions."""

import logging
from typing import Sequence

from heyde_haar.algebra.group import (
    FiniteAbelianGroup,
    Subgroup,
    doubling_image,
    two_torsion,
)
from heyde_haar.algebra.morphisms import (
    Homomorphism,
    adjoint,
    id_plus_minus,
    is_automorphism,
)

from . import errors

logger = logging.getLogger(__name__)


def proposition_haar_condition(group: FiniteAbelianGroup, alpha: Homomorphism) -> bool:
    """``2G`` is contained in ``(I - alpha)(G)``.

    Equivalent to symmetry for ``mu1 = mu2 = m_G``.
    """
    _, minus = id_plus_minus(alpha)
    image = minus.image()
    verdict = doubling_image(group).issubset(image)
    logger.debug(
        f"2G (order {doubling_image(group).order}) in (I - alpha)(G) "
        f"(order {image.order}): {verdict}"
    )
    return verdict


def proposition_haar_condition_dual(
    group: FiniteAbelianGroup, alpha: Homomorphism
) -> bool:
    """``Ker(I - alpha~)`` is contained in the 2-torsion of the dual group."""
    _, minus = id_plus_minus(adjoint(alpha))
    return minus.kernel().issubset(two_torsion(group))


def lemma_subgroup_condition(subgroup: Subgroup, alpha: Homomorphism) -> bool:
    """``K`` is contained in ``(I + alpha)^-1 (I - alpha)(K)``.

    Equivalent to symmetry for ``mu1 = mu2 = m_K`` when ``I +- alpha`` are
    automorphisms.

    :raises HypothesisError: if ``I + alpha`` is not an automorphism.
    """
    plus, minus = id_plus_minus(alpha)
    if not is_automorphism(plus):
        raise errors.HypothesisError(
            "I + alpha is an automorphism", details=f"matrix {plus.matrix}"
        )
    target = minus.image_of(subgroup)
    return subgroup.issubset(plus.preimage(target))


def haar_shift_pair_condition(
    subgroup: Subgroup,
    x1: Sequence[int],
    x2: Sequence[int],
    alpha: Homomorphism,
) -> bool:
    """``alpha(K) = K`` and ``2(x1 + alpha x2)`` lies in ``K``.

    Sufficient for symmetry of ``(m_K * E_x1, m_K * E_x2)``.
    """
    group = subgroup.parent
    first, second = group.element(x1), group.element(x2)
    if alpha.image_of(subgroup) != subgroup:
        return False
    shift = group.add(first, alpha.apply(second))
    return group.scale(shift, 2) in subgroup


def invariant_subgroup_images(subgroup: Subgroup, alpha: Homomorphism) -> bool:
    """``(I + alpha)(K) = K`` and ``(I - alpha)(K) = K``."""
    plus, minus = id_plus_minus(alpha)
    return plus.image_of(subgroup) == subgroup and minus.image_of(subgroup) == subgroup
