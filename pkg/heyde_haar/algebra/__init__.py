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

"""Exact harmonic analysis on finite abelian groups."""

from .cyclotomic import CyclotomicNumber, root_of_unity
from .distributions import (
    Distribution,
    convolve,
    dirac,
    haar,
    haar_on_subgroup,
    is_haar_shift,
    minimal_carrier_subgroup,
    mixture,
    pushforward,
    random_distribution,
    reflect,
    shift,
    support,
    symmetrize,
)
from .duality import (
    CharacteristicFunction,
    annihilator,
    char_fn,
    indicator,
    inverse_fourier,
    pairing,
    unit_set,
)
from .group import (
    FiniteAbelianGroup,
    Subgroup,
    doubling_image,
    enumerate_subgroups,
    make_group,
    subgroup_generated,
    two_torsion,
)
from .morphisms import (
    Homomorphism,
    adjoint,
    block_map,
    check_heyde_admissible,
    count_automorphisms,
    diagonal_hom,
    enumerate_automorphisms,
    id_plus_minus,
    identity,
    induced_on_quotient,
    invert,
    is_automorphism,
    make_hom,
    quotient,
    quotient_transform,
    restrict,
    sample_automorphisms,
    scalar_hom,
)

__all__ = [
    "CharacteristicFunction",
    "CyclotomicNumber",
    "Distribution",
    "FiniteAbelianGroup",
    "Homomorphism",
    "Subgroup",
    "adjoint",
    "annihilator",
    "block_map",
    "char_fn",
    "check_heyde_admissible",
    "convolve",
    "count_automorphisms",
    "diagonal_hom",
    "dirac",
    "doubling_image",
    "enumerate_automorphisms",
    "enumerate_subgroups",
    "haar",
    "haar_on_subgroup",
    "id_plus_minus",
    "identity",
    "indicator",
    "induced_on_quotient",
    "inverse_fourier",
    "invert",
    "is_automorphism",
    "is_haar_shift",
    "make_group",
    "make_hom",
    "minimal_carrier_subgroup",
    "mixture",
    "pairing",
    "pushforward",
    "quotient",
    "quotient_transform",
    "random_distribution",
    "reflect",
    "restrict",
    "root_of_unity",
    "sample_automorphisms",
    "scalar_hom",
    "shift",
    "subgroup_generated",
    "support",
    "symmetrize",
    "two_torsion",
    "unit_set",
]
