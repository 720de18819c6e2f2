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

"""Verification of conditional-symmetry characterizations."""

from .conditions import (
    haar_shift_pair_condition,
    invariant_subgroup_images,
    lemma_subgroup_condition,
    proposition_haar_condition,
    proposition_haar_condition_dual,
)
from .families import (
    CATALOG_ORDERS,
    catalog_groups,
    haar_mixture_family,
    haar_mixture_pairs,
    haar_shift_pairs,
    point_mass_pairs,
    random_pairs,
)
from .instance import HeydeInstance, HypothesisFlags, hypothesis_flags
from .iteration import IterationReport, iteration_identities_check
from .solutions import (
    SpectrumReport,
    ZeroOneReport,
    enumerate_zero_one_solutions,
    indicator_equation_holds,
    nonnegative_spectrum_sweep,
)
from .symmetry import (
    EquivalenceReport,
    Method,
    SymmetryVerdict,
    conditional_symmetry_oracle,
    heyde_equation_holds,
    lemma1_equivalence_sweep,
    recheck_witness,
)
from .theorem import (
    ShiftConditionReport,
    TheoremReport,
    haar_lemma_check,
    shift_condition_sweep,
    theorem1_verifier,
)
from .tower import TowerCheck, TowerReport, truncation_tower_sweep

__all__ = [
    "CATALOG_ORDERS",
    "EquivalenceReport",
    "HeydeInstance",
    "HypothesisFlags",
    "IterationReport",
    "Method",
    "ShiftConditionReport",
    "SpectrumReport",
    "SymmetryVerdict",
    "TheoremReport",
    "TowerCheck",
    "TowerReport",
    "ZeroOneReport",
    "catalog_groups",
    "conditional_symmetry_oracle",
    "enumerate_zero_one_solutions",
    "haar_lemma_check",
    "haar_mixture_family",
    "haar_mixture_pairs",
    "haar_shift_pair_condition",
    "haar_shift_pairs",
    "heyde_equation_holds",
    "hypothesis_flags",
    "indicator_equation_holds",
    "invariant_subgroup_images",
    "iteration_identities_check",
    "lemma1_equivalence_sweep",
    "lemma_subgroup_condition",
    "nonnegative_spectrum_sweep",
    "point_mass_pairs",
    "proposition_haar_condition",
    "proposition_haar_condition_dual",
    "random_pairs",
    "recheck_witness",
    "shift_condition_sweep",
    "theorem1_verifier",
    "truncation_tower_sweep",
]
