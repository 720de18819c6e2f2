# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright 2023 Canonical Ltd.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
import pytest
from heyde_haar.algebra import errors as algebra_errors
from heyde_haar.algebra.group import enumerate_subgroups, make_group
from heyde_haar.algebra.morphisms import (
    adjoint,
    make_hom,
    sample_automorphisms,
    scalar_hom,
)
from heyde_haar.heyde import errors
from heyde_haar.heyde.families import haar_mixture_pairs, random_pairs
from heyde_haar.heyde.solutions import (
    brute_force_indicator_holds,
    enumerate_zero_one_solutions,
    indicator_equation_holds,
    nonnegative_spectrum_sweep,
)

FIBONACCI = [[0, 1], [1, 1]]


# region Indicator solutions
def test_fibonacci_solutions():
    group = make_group([3, 3])
    report = enumerate_zero_one_solutions(group, make_hom(FIBONACCI, group))

    assert report.method == "brute-force"
    assert report.candidates == 6
    assert [e.order for e in report.solutions] == [1, 9]
    assert report.hypotheses_met


def test_fibonacci_solutions_reformulated():
    group = make_group([3, 3])
    report = enumerate_zero_one_solutions(
        group, make_hom(FIBONACCI, group), exhaustive_limit=0
    )

    assert report.method == "reformulation"
    assert [e.order for e in report.solutions] == [1, 9]


def test_scalar_solutions_z25():
    group = make_group([25])
    report = enumerate_zero_one_solutions(group, scalar_hom(group, 2))

    assert [e.order for e in report.solutions] == [1, 5, 25]


def test_solutions_marshal():
    group = make_group([5])
    document = enumerate_zero_one_solutions(group, scalar_hom(group, 2)).marshal()

    assert document == {
        "group": [5],
        "alpha": [[2]],
        "hypotheses": {"odd-order": True, "admissible": True},
        "hypotheses-met": True,
        "method": "brute-force",
        "candidates": 2,
        "solutions": [
            {"order": 1, "generators": []},
            {"order": 5, "generators": [[1]]},
        ],
    }


def test_solutions_without_hypotheses():
    group = make_group([4])
    report = enumerate_zero_one_solutions(group, scalar_hom(group, 1))

    assert not report.hypotheses_met
    assert [e.order for e in report.solutions] == [2, 4]


def test_solutions_cap():
    with pytest.raises(algebra_errors.CapExceededError):
        enumerate_zero_one_solutions(
            make_group([5, 5]), scalar_hom(make_group([5, 5]), 2), cap=10
        )


def test_reformulation_matches_brute_force(small_catalog):
    for group in small_catalog:
        subgroups = enumerate_subgroups(group)
        for alpha in sample_automorphisms(group, 5, seed="indicator"):
            dual_alpha = adjoint(alpha)
            for subgroup in subgroups:
                assert indicator_equation_holds(
                    subgroup, dual_alpha
                ) == brute_force_indicator_holds(subgroup, dual_alpha)


def test_solutions_are_invariant(catalog_group):
    group = catalog_group
    for alpha in sample_automorphisms(group, 5, seed="invariant"):
        report = enumerate_zero_one_solutions(group, alpha, exhaustive_limit=16)
        if report.hypotheses_met:
            dual_alpha = adjoint(alpha)
            for subgroup in report.solutions:
                assert dual_alpha.image_of(subgroup) == subgroup


def test_non_invariant_solution_is_violation(mocker):
    group = make_group([3, 3])
    mocker.patch(
        "heyde_haar.heyde.solutions.brute_force_indicator_holds", return_value=True
    )

    with pytest.raises(errors.PropertyViolation) as raised:
        enumerate_zero_one_solutions(group, make_hom(FIBONACCI, group))

    assert raised.value.name == "solution subgroups are invariant under the adjoint"


# endregion
# region Nonnegative spectra
def test_spectrum_sweep_z5():
    group = make_group([5])
    report = nonnegative_spectrum_sweep(
        group, scalar_hom(group, 2), haar_mixture_pairs(group)
    )

    assert report.holds
    assert report.pairs == 25
    assert report.solutions >= 2
    assert [e.order for e in report.unit_sets] == [1, 5]


def test_spectrum_sweep_fibonacci():
    group = make_group([3, 3])
    pairs = random_pairs(group, 10, seed="spectrum")
    report = nonnegative_spectrum_sweep(group, make_hom(FIBONACCI, group), pairs)

    assert report.holds
    assert report.pairs == 10
    assert report.marshal()["violations"] == []


def test_spectrum_sweep_requires_hypotheses():
    group = make_group([4])

    with pytest.raises(errors.HypothesisError):
        nonnegative_spectrum_sweep(group, scalar_hom(group, 3), [])


def test_spectrum_sweep_exploratory():
    group = make_group([2, 2])
    report = nonnegative_spectrum_sweep(
        group, scalar_hom(group, 1), haar_mixture_pairs(group)[:40], exploratory=True
    )

    assert report.pairs == 40


# endregion
