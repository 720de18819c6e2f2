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
import concurrent.futures
import itertools

import pytest
from heyde_haar.algebra.distributions import dirac, haar, random_distribution
from heyde_haar.algebra.group import make_group
from heyde_haar.algebra.morphisms import (
    enumerate_automorphisms,
    make_hom,
    sample_automorphisms,
    scalar_hom,
)
from heyde_haar.heyde.families import (
    haar_mixture_pairs,
    haar_shift_pairs,
    point_mass_pairs,
    random_pairs,
)
from heyde_haar.heyde.instance import HeydeInstance
from heyde_haar.heyde.symmetry import (
    Method,
    SymmetryVerdict,
    conditional_symmetry_oracle,
    heyde_equation_holds,
    joint_masses,
    lemma1_equivalence_sweep,
    recheck_witness,
)


@pytest.fixture
def z5():
    return make_group([5])


def _instance(group, k, x1, x2):
    return HeydeInstance(scalar_hom(group, k), dirac(group, x1), dirac(group, x2))


# region Verdicts
def test_verdict_requires_witness_for_negative():
    with pytest.raises(ValueError):
        SymmetryVerdict(symmetric=False, method=Method.ORACLE)


def test_verdict_rejects_witness_for_positive():
    with pytest.raises(ValueError):
        SymmetryVerdict(symmetric=True, method=Method.EQUATION, witness=((0,), (0,)))


def test_verdict_marshal():
    verdict = SymmetryVerdict(False, Method.ORACLE, ((2,), (3,)))

    assert verdict.marshal() == {
        "symmetric": False,
        "method": "oracle",
        "witness": [[2], [3]],
    }
    assert SymmetryVerdict(True, Method.EQUATION).marshal()["witness"] is None


# endregion
# region Point masses
def test_point_masses_symmetric(z5):
    inst = _instance(z5, 2, (3,), (1,))

    assert heyde_equation_holds(inst).symmetric
    assert conditional_symmetry_oracle(inst).symmetric


def test_point_masses_asymmetric(z5):
    inst = _instance(z5, 2, (1,), (1,))
    equation = heyde_equation_holds(inst)
    oracle = conditional_symmetry_oracle(inst)

    assert not equation.symmetric
    assert equation.method is Method.EQUATION
    assert not oracle.symmetric
    assert oracle.witness == ((2,), (3,))
    assert recheck_witness(inst, equation)
    assert recheck_witness(inst, oracle)


def test_symmetric_point_masses_z5(z5):
    alpha = scalar_hom(z5, 2)
    symmetric = [
        (mu1.pmf[0][0], mu2.pmf[0][0])
        for mu1, mu2 in point_mass_pairs(z5)
        if conditional_symmetry_oracle(HeydeInstance(alpha, mu1, mu2)).symmetric
    ]

    assert symmetric == [((3 * x % 5,), (x,)) for x in (0, 2, 4, 1, 3)]


def test_point_masses_need_second_form_in_two_torsion(catalog_group):
    group = catalog_group
    for alpha in sample_automorphisms(group, 3, seed="points"):
        for x1, x2 in itertools.islice(
            itertools.product(group.elements, repeat=2), 64
        ):
            inst = HeydeInstance(alpha, dirac(group, x1), dirac(group, x2))
            second = group.add(x1, alpha.apply(x2))
            expected = group.scale(second, 2) == group.zero()
            assert heyde_equation_holds(inst).symmetric is expected


def test_recheck_positive_verdict(z5):
    inst = _instance(z5, 2, (3,), (1,))

    assert not recheck_witness(inst, heyde_equation_holds(inst))


# endregion
# region Haar distributions
@pytest.mark.parametrize(("k", "expected"), [(3, True), (1, False)])
def test_haar_z4(k, expected):
    group = make_group([4])
    mu = haar(group)
    inst = HeydeInstance(scalar_hom(group, k), mu, mu)

    assert heyde_equation_holds(inst).symmetric is expected
    assert conditional_symmetry_oracle(inst).symmetric is expected


def test_joint_masses_haar():
    group = make_group([3])
    mu = haar(group)
    joint = joint_masses(HeydeInstance(scalar_hom(group, 2), mu, mu))

    assert len(joint) == 9
    assert set(joint.values()) == {1}


def test_joint_masses_weights():
    group = make_group([3])
    mu1 = random_distribution(group, "joint-1")
    mu2 = random_distribution(group, "joint-2")
    joint = joint_masses(HeydeInstance(scalar_hom(group, 1), mu1, mu2))

    assert sum(joint.values()) == mu1.common_denominator * mu2.common_denominator


# endregion
# region Agreement of the two methods
def test_methods_agree_exhaustively(small_catalog):
    for group in small_catalog:
        pairs = list(haar_shift_pairs(group)) + random_pairs(group, 10, seed="agree")
        for alpha in sample_automorphisms(group, 4, seed="agree"):
            for mu1, mu2 in pairs:
                inst = HeydeInstance(alpha, mu1, mu2)
                equation = heyde_equation_holds(inst)
                oracle = conditional_symmetry_oracle(inst)
                assert equation.symmetric == oracle.symmetric
                if not oracle.symmetric:
                    assert recheck_witness(inst, equation)
                    assert recheck_witness(inst, oracle)


def test_methods_agree_mixed_group():
    group = make_group([2, 4])
    alpha = make_hom([[1, 1], [2, 1]], group)
    for mu1, mu2 in haar_mixture_pairs(group)[:200]:
        inst = HeydeInstance(alpha, mu1, mu2)
        assert heyde_equation_holds(inst).symmetric == (
            conditional_symmetry_oracle(inst).symmetric
        )


# endregion
# region Equivalence sweep
def test_equivalence_sweep_z5(z5):
    report = lemma1_equivalence_sweep(
        z5, enumerate_automorphisms(z5), list(point_mass_pairs(z5))
    )

    assert report.holds
    assert report.instances == 100
    assert report.agreements == 100
    assert report.symmetric == 20
    assert report.marshal() == {
        "group": [5],
        "instances": 100,
        "agreements": 100,
        "symmetric": 20,
        "agreement-rate": "1",
        "discrepancies": [],
    }


def test_equivalence_sweep_empty(z5):
    report = lemma1_equivalence_sweep(z5, [], [])

    assert report.holds
    assert report.marshal()["agreement-rate"] == "1"


def test_equivalence_sweep_jobs_do_not_change_report(mocker):
    mocker.patch.object(
        concurrent.futures, "ProcessPoolExecutor", concurrent.futures.ThreadPoolExecutor
    )
    group = make_group([3, 3])
    automorphisms = sample_automorphisms(group, 6, seed="jobs")
    pairs = random_pairs(group, 5, seed="jobs")

    serial = lemma1_equivalence_sweep(group, automorphisms, pairs)
    parallel = lemma1_equivalence_sweep(group, automorphisms, pairs, jobs=3)

    assert parallel == serial


def test_equivalence_sweep_reports_discrepancy(mocker, z5):
    mocker.patch(
        "heyde_haar.heyde.symmetry.heyde_equation_holds",
        return_value=SymmetryVerdict(True, Method.EQUATION),
    )
    report = lemma1_equivalence_sweep(
        z5, [scalar_hom(z5, 2)], [(dirac(z5, (1,)), dirac(z5, (1,)))]
    )

    assert not report.holds
    assert report.agreements == 0
    assert report.marshal()["discrepancies"] == [
        {
            "alpha": [[2]],
            "pair": 0,
            "equation": {"symmetric": True, "method": "equation", "witness": None},
            "oracle": {"symmetric": False, "method": "oracle", "witness": [[2], [3]]},
        }
    ]
    assert report.marshal()["agreement-rate"] == "0"


# endregion
