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

"""The characteristic-function equation and the conditional-symmetry oracle.

Two independent computations decide whether the conditional distribution of
``L2`` given ``L1`` is symmetric: :func:`heyde_equation_holds` works on the dual
group with exact cyclotomic transforms, :func:`conditional_symmetry_oracle`
builds the joint law of ``(L1, L2)`` from the masses.  They must always agree.
"""

import concurrent.futures
import dataclasses
import enum
import logging
from fractions import Fraction
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

from heyde_haar.algebra.cyclotomic import CyclotomicNumber
from heyde_haar.algebra.distributions import Distribution
from heyde_haar.algebra.duality import CharacteristicFunction, char_fn, pairing
from heyde_haar.algebra.group import ADDITION_TABLE_CAP, Element, FiniteAbelianGroup
from heyde_haar.algebra.morphisms import Homomorphism
from heyde_haar.utils import format_rational

from .instance import HeydeInstance
from .reports import marshal_element, marshal_matrix

logger = logging.getLogger(__name__)

Witness = Tuple[Element, Element]
DistributionPair = Tuple[Distribution, Distribution]


class Method(str, enum.Enum):
    """How a verdict was reached."""

    EQUATION = "equation"
    ORACLE = "oracle"


@dataclasses.dataclass(frozen=True)
class SymmetryVerdict:
    """Outcome of a symmetry check.

    :param symmetric: True if the conditional distribution is symmetric.
    :param method: The computation that produced the verdict.
    :param witness: ``(u, v)`` on the dual group for the equation, ``(u, w)``
        values of ``(L1, L2)`` for the oracle; present exactly when the verdict
        is negative.
    """

    symmetric: bool
    method: Method
    witness: Optional[Witness] = None

    def __post_init__(self) -> None:
        if self.symmetric == (self.witness is not None):
            raise ValueError("a witness is required exactly for negative verdicts")

    def marshal(self) -> Dict[str, Any]:
        """Return the verdict as a serializable dictionary."""
        return {
            "symmetric": self.symmetric,
            "method": self.method.value,
            "witness": None
            if self.witness is None
            else [marshal_element(part) for part in self.witness],
        }


def _index_adder(group: FiniteAbelianGroup) -> Callable[[int, int], int]:
    if group.order <= ADDITION_TABLE_CAP:
        table = group.addition_table
        return lambda i, j: table[i][j]
    elements, index = group.elements, group.index
    return lambda i, j: index[group.add(elements[i], elements[j])]


# region Equation
def equation_witness(
    first: CharacteristicFunction,
    second: CharacteristicFunction,
    dual_alpha: Homomorphism,
) -> Optional[Witness]:
    """Find ``(u, v)`` with ``f1(u+v) f2(u+a v) != f1(u-v) f2(u-a v)``.

    ``a`` is the adjoint automorphism acting on the dual group.  Products
    with a vanishing factor are never multiplied out.

    :returns: The first violating pair in canonical order, or ``None``.
    """
    dual = first.parent
    add = _index_adder(dual)
    negation = dual.negation_table
    images = dual_alpha.image_indices
    f1, f2 = first.values, second.values
    zero1 = [v.is_zero() for v in f1]
    zero2 = [v.is_zero() for v in f2]
    for v in range(dual.order):
        minus_v = negation[v]
        if minus_v < v:
            continue
        w, minus_w = images[v], negation[images[v]]
        for u in range(dual.order):
            a, b = add(u, v), add(u, w)
            c, d = add(u, minus_v), add(u, minus_w)
            left_zero = zero1[a] or zero2[b]
            right_zero = zero1[c] or zero2[d]
            if left_zero and right_zero:
                continue
            if left_zero != right_zero or f1[a] * f2[b] != f1[c] * f2[d]:
                return dual.elements[u], dual.elements[v]
    return None


def heyde_equation_holds(inst: HeydeInstance) -> SymmetryVerdict:
    """Decide symmetry through the exact characteristic-function equation."""
    witness = equation_witness(
        char_fn(inst.mu1), char_fn(inst.mu2), inst.dual_alpha
    )
    return SymmetryVerdict(witness is None, Method.EQUATION, witness)


# endregion
# region Oracle
def joint_masses(inst: HeydeInstance) -> Dict[Witness, int]:
    """Integer-weighted joint law of ``(L1, L2)``.

    :returns: ``{(u, w): weight}``; weights share the denominator
        ``D1 * D2`` of the two integer weightings.
    """
    group = inst.group
    _, first = inst.mu1.integer_weights()
    _, second = inst.mu2.integer_weights()
    joint: Dict[Witness, int] = {}
    for x2, w2 in second:
        image = inst.alpha.apply(x2)
        for x1, w1 in first:
            key = (group.add(x1, x2), group.add(x1, image))
            joint[key] = joint.get(key, 0) + w1 * w2
    return joint


def conditional_symmetry_oracle(inst: HeydeInstance) -> SymmetryVerdict:
    """Decide symmetry from the definition: ``P(L1=u, L2=w) = P(L1=u, L2=-w)``."""
    group = inst.group
    joint = joint_masses(inst)
    for (u, w), weight in sorted(joint.items()):
        if joint.get((u, group.neg(w)), 0) != weight:
            return SymmetryVerdict(
                symmetric=False, method=Method.ORACLE, witness=(u, w)
            )
    return SymmetryVerdict(symmetric=True, method=Method.ORACLE)


# endregion
# region Witness checks
def _direct_transform(mu: Distribution, y: Element) -> CyclotomicNumber:
    total = CyclotomicNumber.from_rational(0, mu.parent.exponent)
    for x, mass in mu.pmf:
        total = total + pairing(mu.parent, x, y) * mass
    return total


def _direct_joint(inst: HeydeInstance, u: Element, w: Element) -> Fraction:
    group = inst.group
    target = group.sub(w, u)
    total = Fraction(0)
    for x2 in group.elements:
        if group.sub(inst.alpha.apply(x2), x2) == target:
            total += inst.mu1.mass(group.sub(u, x2)) * inst.mu2.mass(x2)
    return total


def recheck_witness(inst: HeydeInstance, verdict: SymmetryVerdict) -> bool:
    """Recompute a negative verdict's witness from first principles.

    Transforms are summed character by character and joint masses are
    summed over the whole group, sharing no code with the checkers.

    :returns: True if the witness reproduces a violation.
    """
    if verdict.witness is None:
        return False
    group = inst.group
    first, second = verdict.witness
    if verdict.method is Method.EQUATION:
        u, v = first, second
        w = inst.dual_alpha.apply(v)
        left = _direct_transform(inst.mu1, group.add(u, v)) * _direct_transform(
            inst.mu2, group.add(u, w)
        )
        right = _direct_transform(inst.mu1, group.sub(u, v)) * _direct_transform(
            inst.mu2, group.sub(u, w)
        )
        return left != right
    return _direct_joint(inst, first, second) != _direct_joint(
        inst, first, group.neg(second)
    )


# endregion
# region Equivalence sweep
@dataclasses.dataclass(frozen=True)
class Discrepancy:
    """An instance on which the two methods disagree."""

    alpha: Homomorphism
    pair_index: int
    equation: SymmetryVerdict
    oracle: SymmetryVerdict

    def marshal(self) -> Dict[str, Any]:
        """Return the discrepancy as a serializable dictionary."""
        return {
            "alpha": marshal_matrix(self.alpha),
            "pair": self.pair_index,
            "equation": self.equation.marshal(),
            "oracle": self.oracle.marshal(),
        }


@dataclasses.dataclass(frozen=True)
class EquivalenceReport:
    """Agreement statistics of the equation checker and the oracle."""

    orders: Tuple[int, ...]
    instances: int
    agreements: int
    symmetric: int
    discrepancies: Tuple[Discrepancy, ...]

    @property
    def holds(self) -> bool:
        """True if the methods agreed on every instance."""
        return not self.discrepancies

    def marshal(self) -> Dict[str, Any]:
        """Return the report as a serializable dictionary."""
        return {
            "group": list(self.orders),
            "instances": self.instances,
            "agreements": self.agreements,
            "symmetric": self.symmetric,
            "agreement-rate": format_rational(
                Fraction(self.agreements, self.instances) if self.instances else 1
            ),
            "discrepancies": [d.marshal() for d in self.discrepancies],
        }


def _equivalence_cell(
    alpha: Homomorphism, pairs: Sequence[DistributionPair]
) -> Tuple[int, List[Discrepancy]]:
    symmetric = 0
    found: List[Discrepancy] = []
    for index, (mu1, mu2) in enumerate(pairs):
        inst = HeydeInstance(alpha, mu1, mu2)
        equation = heyde_equation_holds(inst)
        oracle = conditional_symmetry_oracle(inst)
        if equation.symmetric != oracle.symmetric:
            logger.warning(
                f"Equation and oracle disagree for alpha={alpha.matrix}, pair {index}"
            )
            found.append(Discrepancy(alpha, index, equation, oracle))
        elif oracle.symmetric:
            symmetric += 1
    return symmetric, found


def lemma1_equivalence_sweep(
    group: FiniteAbelianGroup,
    automorphisms: Iterable[Homomorphism],
    pairs: Sequence[DistributionPair],
    *,
    jobs: int = 1,
) -> EquivalenceReport:
    """Run both methods on every (automorphism, pair) cell and compare them.

    :param jobs: Worker processes; cells are merged in automorphism order, so
        the report does not depend on this value.
    """
    alphas = list(automorphisms)
    pair_list = list(pairs)
    if jobs > 1 and len(alphas) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(
                executor.map(_equivalence_cell, alphas, [pair_list] * len(alphas))
            )
    else:
        results = [_equivalence_cell(alpha, pair_list) for alpha in alphas]
    symmetric = sum(count for count, _ in results)
    discrepancies = tuple(d for _, found in results for d in found)
    instances = len(alphas) * len(pair_list)
    logger.debug(
        f"Equivalence sweep on {list(group.orders)}: {instances} instances, "
        f"{symmetric} symmetric, {len(discrepancies)} discrepancies"
    )
    return EquivalenceReport(
        orders=group.orders,
        instances=instances,
        agreements=instances - len(discrepancies),
        symmetric=symmetric,
        discrepancies=discrepancies,
    )


# endregion
