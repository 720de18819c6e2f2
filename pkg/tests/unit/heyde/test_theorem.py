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
from heyde_haar.algebra.distributions import (
    Distribution,
    dirac,
    haar,
    haar_on_subgroup,
    random_distribution,
    shift,
)
from heyde_haar.algebra.group import enumerate_subgroups, make_group, subgroup_generated
from heyde_haar.algebra.morphisms import identity, make_hom, scalar_hom
from heyde_haar.heyde import errors
from heyde_haar.heyde.families import (
    haar_mixture_pairs,
    haar_shift_pairs,
    point_mass_pairs,
    random_pairs,
)
from heyde_haar.heyde.theorem import (
    haar_lemma_check,
    shift_condition_sweep,
    theorem1_verifier,
)

FIBONACCI = [[0, 1], [1, 1]]


# region Characterization of symmetric pairs
def test_point_masses_z5():
    group = make_group([5])
    report = theorem1_verifier(group, scalar_hom(group, 2), point_mass_pairs(group))

    assert report.holds
    assert report.assertive
    assert report.trials == 25
    assert report.symmetric == 5
    assert report.asymmetric == 20
    assert [(d.x1, d.x2) for d in report.decompositions] == [
        ((0,), (0,)),
        ((1,), (2,)),
        ((2,), (4,)),
        ((3,), (1,)),
        ((4,), (3,)),
    ]
    assert all(d.subgroup.is_trivial() for d in report.decompositions)


def test_haar_mixtures_z5():
    group = make_group([5])
    report = theorem1_verifier(group, scalar_hom(group, 3), haar_mixture_pairs(group))

    assert report.holds
    assert report.trials == 25
    assert report.failures == ()


def test_random_pairs_z25():
    group = make_group([25])
    report = theorem1_verifier(
        group, scalar_hom(group, 7), random_pairs(group, 20, seed="theorem")
    )

    assert report.holds
    assert report.trials == 20


def test_haar_shift_pairs_fibonacci():
    group = make_group([3, 3])
    alpha = make_hom(FIBONACCI, group)
    report = theorem1_verifier(group, alpha, haar_shift_pairs(group))

    assert report.holds
    orders = {d.subgroup.order for d in report.decompositions}
    assert orders <= {1, 9}
    assert 9 in orders


@pytest.mark.slow
def test_haar_mixtures_fibonacci():
    group = make_group([3, 3])
    alpha = make_hom(FIBONACCI, group)
    report = theorem1_verifier(group, alpha, haar_mixture_pairs(group))

    assert report.holds
    assert report.symmetric > 0


def test_report_marshal():
    group = make_group([5])
    alpha = scalar_hom(group, 2)
    pairs = [
        (dirac(group, (3,)), dirac(group, (1,))),
        (haar(group), dirac(group, (0,))),
    ]
    document = theorem1_verifier(group, alpha, pairs).marshal()

    assert document == {
        "group": [5],
        "alpha": [[2]],
        "hypotheses": {"odd-order": True, "admissible": True},
        "assertive": True,
        "trials": 2,
        "symmetric": 1,
        "asymmetric": 1,
        "decompositions": [
            {
                "pair": 0,
                "subgroup": {"order": 1, "generators": []},
                "x1": [3],
                "x2": [1],
            }
        ],
        "failures": [],
    }


@pytest.mark.parametrize(
    ("orders", "k"), [([4], 3), ([9], 4), ([5], 1), ([2, 2], 1)]
)
def test_hypotheses_required(orders, k):
    group = make_group(orders)

    with pytest.raises(errors.HypothesisError):
        theorem1_verifier(group, scalar_hom(group, k), [])


def test_exploratory_records_failures():
    group = make_group([2])
    skewed = Distribution(group, {(0,): "1/3", (1,): "2/3"})
    report = theorem1_verifier(
        group,
        identity(group),
        [(skewed, dirac(group, (0,))), (haar(group), haar(group))],
        exploratory=True,
    )

    assert not report.assertive
    assert report.holds
    assert report.failures == (
        (0, "a distribution is not a shift of a Haar distribution"),
    )
    assert report.symmetric == 2


@pytest.mark.parametrize(
    ("pair", "reason"),
    [
        ("components", "the Haar components differ"),
        ("invariance", "the common subgroup is not alpha-invariant"),
    ],
)
def test_exploratory_failure_reasons(pair, reason):
    # Every pair is symmetric on an elementary abelian 2-group.
    group = make_group([2, 2])
    line = subgroup_generated(group, [(1, 0)])
    other = subgroup_generated(group, [(0, 1)])
    if pair == "components":
        alpha = identity(group)
        mu1, mu2 = haar_on_subgroup(line), haar_on_subgroup(other)
    else:
        alpha = make_hom(FIBONACCI, group)
        mu1 = mu2 = haar_on_subgroup(line)
    report = theorem1_verifier(group, alpha, [(mu1, mu2)], exploratory=True)

    assert report.failures == ((0, reason),)


# endregion
# region Haar-shift condition
def test_shift_condition_sweep_z5_squared():
    group = make_group([5, 5])
    report = shift_condition_sweep(group, scalar_hom(group, 2))

    assert report.holds
    assert report.instances == 625 + 6 * 25 + 1
    assert report.necessity_counterexamples == ()
    assert 0 < report.condition_met < report.instances


def test_shift_condition_sweep_subgroups():
    group = make_group([5, 5])
    diagonal = subgroup_generated(group, [(1, 1)])
    report = shift_condition_sweep(group, scalar_hom(group, 2), subgroups=[diagonal])

    assert report.instances == 25
    assert report.condition_met == 5
    assert report.marshal()["condition-met"] == 5


def test_shift_condition_skips_non_invariant():
    group = make_group([3, 3])
    lines = [s for s in enumerate_subgroups(group) if s.order == 3]
    report = shift_condition_sweep(group, make_hom(FIBONACCI, group), subgroups=lines)

    assert report.instances == 0


def test_shift_condition_requires_admissible():
    group = make_group([5])

    with pytest.raises(errors.HypothesisError):
        shift_condition_sweep(group, scalar_hom(group, 1))


def test_shift_condition_exploratory_even_group():
    group = make_group([4])
    report = shift_condition_sweep(group, scalar_hom(group, 3), exploratory=True)

    assert report.instances == 16 + 4 + 1


# endregion
# region Symmetrized Haar distributions
def test_haar_lemma_point_mass():
    group = make_group([9])
    subgroup, origin = haar_lemma_check(dirac(group, (4,)))

    assert subgroup.is_trivial()
    assert origin == (4,)


def test_haar_lemma_shifted_haar():
    group = make_group([9])
    subgroup = subgroup_generated(group, [(3,)])
    found = haar_lemma_check(shift(haar_on_subgroup(subgroup), (2,)))

    assert found == (subgroup, (2,))


def test_haar_lemma_premise_fails():
    group = make_group([5])

    assert haar_lemma_check(Distribution(group, {(0,): "1/2", (1,): "1/2"})) is None


def test_haar_lemma_random(catalog_group):
    for i in range(20):
        mu = random_distribution(catalog_group, f"lemma:{i}", 2)
        found = haar_lemma_check(mu)
        if found is not None:
            assert shift(haar_on_subgroup(found[0]), found[1]) == mu


def test_haar_lemma_violation(mocker):
    group = make_group([3])
    subgroup = subgroup_generated(group, [])
    mocker.patch(
        "heyde_haar.heyde.theorem.is_haar_shift",
        side_effect=[(subgroup, (0,)), None],
    )

    with pytest.raises(errors.PropertyViolation) as raised:
        haar_lemma_check(dirac(group, (1,)))

    assert raised.value.witness == (((1,), 1),)


# endregion
