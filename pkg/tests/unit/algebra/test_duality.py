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
import itertools
from fractions import Fraction

import pytest
from heyde_haar.algebra import errors
from heyde_haar.algebra.cyclotomic import root_of_unity
from heyde_haar.algebra.distributions import (
    Distribution,
    convolve,
    dirac,
    haar,
    haar_on_subgroup,
    random_distribution,
    reflect,
)
from heyde_haar.algebra.duality import (
    CharacteristicFunction,
    annihilator,
    char_fn,
    indicator,
    inverse_fourier,
    is_real_nonnegative,
    pairing,
    pairing_exponent,
    unit_set,
)
from heyde_haar.algebra.group import enumerate_subgroups, make_group, subgroup_generated
from hypothesis import given
from hypothesis import strategies as st


# region Pairing
def test_pairing_z9():
    assert pairing(make_group([9]), (3,), (3,)).is_one()


def test_pairing_mixed_orders():
    group = make_group([2, 4])

    assert pairing_exponent(group, (1, 1), (1, 2)) == 0
    assert pairing(group, (1, 1), (1, 2)).is_one()
    assert pairing(group, (0, 1), (0, 1)) == root_of_unity(4, 1)


def test_pairing_zero(catalog_group):
    zero = catalog_group.zero()

    assert all(pairing(catalog_group, zero, y).is_one() for y in catalog_group.elements)


def test_pairing_order_mismatch():
    with pytest.raises(errors.ElementError):
        pairing(make_group([2, 4]), (1,), (1, 1))


def test_pairing_bilinear_and_nondegenerate(catalog_group):
    group = catalog_group
    for x, x2, y in itertools.product(group.elements, repeat=3):
        assert pairing_exponent(group, group.add(x, x2), y) == (
            pairing_exponent(group, x, y) + pairing_exponent(group, x2, y)
        ) % group.exponent
        assert pairing_exponent(group, y, group.add(x, x2)) == (
            pairing_exponent(group, y, x) + pairing_exponent(group, y, x2)
        ) % group.exponent
    for x in group.elements:
        trivial = all(pairing_exponent(group, x, y) == 0 for y in group.elements)
        assert trivial == (x == group.zero())


@st.composite
def element_triples(draw):
    """A group with up to three large factors and three of its elements."""
    orders = draw(st.sampled_from([(8, 9, 25), (4, 16), (27, 49), (2, 2, 32)]))
    group = make_group(orders)
    elements = [
        group.element([draw(st.integers(0, order - 1)) for order in group.orders])
        for _ in range(3)
    ]
    return group, elements


@given(element_triples())
def test_pairing_bilinear_large_groups(triple):
    group, (x, x2, y) = triple

    assert pairing_exponent(group, group.add(x, x2), y) == (
        pairing_exponent(group, x, y) + pairing_exponent(group, x2, y)
    ) % group.exponent
    assert pairing_exponent(group, x, y) == pairing_exponent(group, y, x)
    assert pairing_exponent(group, group.neg(x), y) == (
        -pairing_exponent(group, x, y)
    ) % group.exponent


# endregion
# region Annihilators
def test_annihilator_z9():
    group = make_group([9])
    subgroup = subgroup_generated(group, [(3,)])

    assert annihilator(group, subgroup).elements == ((0,), (3,), (6,))


def test_annihilator_z2_z4():
    group = make_group([2, 4])
    subgroup = subgroup_generated(group, [(0, 1)])

    assert annihilator(group, subgroup).elements == ((0, 0), (1, 0))


def test_annihilator_laws(catalog_group):
    group = catalog_group
    for subgroup in enumerate_subgroups(group):
        dual = annihilator(group, subgroup)
        assert dual.verify()
        assert dual.order * subgroup.order == group.order
        assert annihilator(group, dual) == subgroup
        if subgroup.is_trivial():
            assert dual.is_full()
        if subgroup.is_full():
            assert dual.is_trivial()


def test_annihilator_group_mismatch():
    subgroup = subgroup_generated(make_group([9]), [(3,)])

    with pytest.raises(errors.GroupMismatchError):
        annihilator(make_group([3]), subgroup)


# endregion
# region Characteristic functions
def test_char_fn_dirac_zero(catalog_group):
    f = char_fn(dirac(catalog_group, catalog_group.zero()))

    assert all(v.is_one() for v in f.values)


def test_char_fn_two_point():
    group = make_group([3])
    mu = Distribution(group, (((0,), Fraction(1, 2)), ((1,), Fraction(1, 2))))

    assert char_fn(mu)((1,)) == Fraction(1, 2) + root_of_unity(3, 1) * Fraction(1, 2)


def test_char_fn_haar_is_annihilator_indicator(catalog_group):
    group = catalog_group
    for subgroup in enumerate_subgroups(group):
        f = char_fn(haar_on_subgroup(subgroup))
        dual = annihilator(group, subgroup)
        assert f.values == indicator(group, dual).values
        assert f.indicator_of() == dual


def test_char_fn_invariants(catalog_group):
    mu = random_distribution(catalog_group, "invariants")

    assert char_fn(mu).check_invariants() == []


def test_char_fn_convolution_theorem(catalog_group):
    first = random_distribution(catalog_group, "left", 3)
    second = random_distribution(catalog_group, "right", 3)

    assert char_fn(convolve(first, second)) == char_fn(first) * char_fn(second)


def test_char_fn_reflection_is_conjugate(catalog_group):
    mu = random_distribution(catalog_group, "reflect")
    f, g = char_fn(mu), char_fn(reflect(mu))

    assert all(b == a.conj() for a, b in zip(f.values, g.values))


def test_characteristic_function_length():
    group = make_group([3])

    with pytest.raises(errors.ElementError):
        CharacteristicFunction(group, (root_of_unity(3, 0),))


def test_characteristic_function_group_mismatch():
    first = char_fn(haar(make_group([3])))
    second = char_fn(haar(make_group([5])))

    with pytest.raises(errors.GroupMismatchError):
        _ = first * second


# endregion
# region Inverse transform
def test_inverse_flat_spectrum():
    group = make_group([2, 4])
    one = root_of_unity(group.exponent, 0)
    f = CharacteristicFunction(group, (one,) * group.order)

    assert inverse_fourier(f) == dirac(group, group.zero())


def test_inverse_indicator_at_zero():
    group = make_group([9])
    trivial = subgroup_generated(group, [])

    assert inverse_fourier(indicator(group, trivial)) == haar(group)


def test_inverse_haar_fixed_point():
    group = make_group([5])

    assert inverse_fourier(char_fn(haar(group))) == haar(group)


def test_inverse_round_trip(catalog_group):
    for trial in range(50):
        mu = random_distribution(catalog_group, f"round-trip:{trial}")
        assert inverse_fourier(char_fn(mu)) == mu


def test_inverse_rejects_non_distribution():
    group = make_group([3])
    f = CharacteristicFunction(group, (root_of_unity(3, 1),) * 3)

    with pytest.raises(errors.DistributionError):
        inverse_fourier(f)


# endregion
# region Unit sets
def test_unit_set_haar_is_trivial(catalog_group):
    assert unit_set(haar(catalog_group)).is_trivial()


def test_unit_set_subgroup():
    group = make_group([9])
    subgroup = subgroup_generated(group, [(3,)])

    assert unit_set(haar_on_subgroup(subgroup)).elements == ((0,), (3,), (6,))


def test_unit_set_matches_values(catalog_group):
    for x in catalog_group.elements[:6]:
        mu = dirac(catalog_group, x)
        expected = char_fn(mu).unit_set()
        assert unit_set(mu) == expected
        assert expected == annihilator(
            catalog_group, subgroup_generated(catalog_group, [x])
        )


# endregion
# region Signs of values
@pytest.mark.parametrize(
    ("value", "expected"),
    [
        (Fraction(1, 2) + root_of_unity(3, 1) * Fraction(1, 2), False),
        (root_of_unity(5, 1) + root_of_unity(5, 4), True),
        (root_of_unity(5, 2) + root_of_unity(5, 3), False),
        (root_of_unity(3, 0) - root_of_unity(3, 0), True),
    ],
)
def test_is_real_nonnegative(value, expected):
    assert is_real_nonnegative(value) is expected


def test_symmetrized_transform_is_nonnegative(catalog_group):
    mu = random_distribution(catalog_group, "nonnegative")
    nu = convolve(mu, reflect(mu))

    assert char_fn(nu).is_real_nonnegative()
    assert char_fn(nu).is_even()


# endregion
