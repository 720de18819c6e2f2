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
from heyde_haar.algebra.distributions import dirac, haar, haar_on_subgroup, shift
from heyde_haar.algebra.group import make_group, subgroup_generated
from heyde_haar.algebra.morphisms import make_hom, scalar_hom
from heyde_haar.heyde import errors
from heyde_haar.heyde.instance import HeydeInstance
from heyde_haar.heyde.iteration import (
    DEFAULT_ITERATION_DEPTH,
    iteration_identities_check,
)


@pytest.mark.parametrize(
    ("orders", "matrix", "mu1", "mu2"),
    [
        pytest.param([5], [[2]], "haar", "haar", id="z5-haar"),
        pytest.param([5], [[2]], (3,), (1,), id="z5-points"),
        pytest.param([3, 3], [[0, 1], [1, 1]], "haar", "haar", id="z3xz3-haar"),
        pytest.param([25], [[7]], (0,), (0,), id="z25-origin"),
    ],
)
def test_identities_hold(orders, matrix, mu1, mu2):
    group = make_group(orders)

    def build(spec):
        return haar(group) if spec == "haar" else dirac(group, spec)

    inst = HeydeInstance(make_hom(matrix, group), build(mu1), build(mu2))
    report = iteration_identities_check(inst)

    assert report.holds
    assert report.first_identity
    assert report.second_identity
    assert report.witness is None
    assert report.depth == DEFAULT_ITERATION_DEPTH
    assert len(report.expansions) == 2 * DEFAULT_ITERATION_DEPTH


def test_identities_on_shifted_haar():
    group = make_group([25])
    subgroup = subgroup_generated(group, [(5,)])
    base = haar_on_subgroup(subgroup)
    # 2 (x1 + 7 x2) = 2 (5 + 0) lies in the subgroup of order 5.
    inst = HeydeInstance(scalar_hom(group, 7), shift(base, (5,)), base)

    report = iteration_identities_check(inst, depth=4)

    assert report.holds
    assert len(report.terms) == 8


def test_report_marshal():
    group = make_group([5])
    mu = haar(group)
    document = iteration_identities_check(
        HeydeInstance(scalar_hom(group, 2), mu, mu), depth=1
    ).marshal()

    assert document == {
        "depth": 1,
        "first-identity": True,
        "second-identity": True,
        "expansions": [
            {"function": 1, "depth": 1, "holds": True},
            {"function": 2, "depth": 1, "holds": True},
        ],
        "terms": [2, 2],
        "witness": None,
    }


def test_requires_solution():
    group = make_group([5])
    inst = HeydeInstance(scalar_hom(group, 2), dirac(group, (1,)), dirac(group, (1,)))

    with pytest.raises(errors.HypothesisError) as raised:
        iteration_identities_check(inst)

    assert raised.value.hypothesis == "the characteristic-function equation holds"


def test_requires_real_transforms_without_symmetrizing():
    group = make_group([5])
    inst = HeydeInstance(scalar_hom(group, 2), dirac(group, (3,)), dirac(group, (1,)))

    with pytest.raises(errors.HypothesisError) as raised:
        iteration_identities_check(inst, symmetrize_first=False)

    assert raised.value.hypothesis == "the transforms are real, nonnegative and even"


def test_requires_invertible_difference():
    group = make_group([5])
    origin = dirac(group, (0,))
    inst = HeydeInstance(scalar_hom(group, 1), origin, origin)

    with pytest.raises(errors.HypothesisError) as raised:
        iteration_identities_check(inst)

    assert raised.value.hypothesis == "I - alpha~ is an automorphism"
