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

"""Functional identities obeyed by real solutions of the equation.

For real, even transforms satisfying the equation, substituting
``u = alpha~ y, v = -y`` and ``u = y, v = -y`` gives

    f1((I - a) y) = f1((I + a) y) f2(2 a y)
    f2((I - a) y) = f1(2 y) f2((I + a) y)

and, with ``b = (I + a)(I - a)^-1``, ``c = 2a(I - a)^-1`` and
``d = 2(I - a)^-1``, the substitution rules ``f1(M) -> f1(bM) f2(cM)`` and
``f2(M) -> f1(dM) f2(bM)`` can be iterated to any depth.
"""

import dataclasses
import logging
from typing import Any, Dict, List, Optional, Tuple

from heyde_haar.algebra.cyclotomic import CyclotomicNumber
from heyde_haar.algebra.distributions import symmetrize
from heyde_haar.algebra.duality import CharacteristicFunction, char_fn
from heyde_haar.algebra.morphisms import (
    Homomorphism,
    id_plus_minus,
    identity,
    invert,
    is_automorphism,
)

from . import errors
from .instance import HeydeInstance
from .reports import marshal_element
from .symmetry import heyde_equation_holds

logger = logging.getLogger(__name__)

#: Default number of substitution rounds.
DEFAULT_ITERATION_DEPTH = 3

# (function index, matrix) -> multiplicity
Terms = Dict[Tuple[int, Homomorphism], int]


@dataclasses.dataclass(frozen=True)
class IterationReport:
    """Outcome of :func:`iteration_identities_check`.

    :param expansions: ``(j, n, holds)`` for every function and depth.
    :param witness: The first failing identity and dual element, if any.
    """

    depth: int
    first_identity: bool
    second_identity: bool
    expansions: Tuple[Tuple[int, int, bool], ...]
    terms: Tuple[int, ...]
    witness: Optional[Tuple[str, Tuple[int, ...]]] = None

    @property
    def holds(self) -> bool:
        """True if every identity held."""
        return (
            self.first_identity
            and self.second_identity
            and all(ok for _, _, ok in self.expansions)
        )

    def marshal(self) -> Dict[str, Any]:
        """Return the report as a serializable dictionary."""
        return {
            "depth": self.depth,
            "first-identity": self.first_identity,
            "second-identity": self.second_identity,
            "expansions": [
                {"function": j, "depth": n, "holds": ok}
                for j, n, ok in self.expansions
            ],
            "terms": list(self.terms),
            "witness": None
            if self.witness is None
            else {"identity": self.witness[0], "y": marshal_element(self.witness[1])},
        }


def _evaluate(
    functions: Tuple[CharacteristicFunction, CharacteristicFunction],
    terms: Terms,
    position: int,
) -> CyclotomicNumber:
    product: Optional[CyclotomicNumber] = None
    for (k, matrix), multiplicity in terms.items():
        value = functions[k - 1].values[matrix.image_indices[position]]
        if value.is_zero():
            return value
        factor = value**multiplicity
        product = factor if product is None else product * factor
    if product is None:
        raise ValueError("empty product")
    return product


def _expand(terms: Terms, rules: Dict[int, List[Tuple[int, Homomorphism]]]) -> Terms:
    expanded: Terms = {}
    for (k, matrix), multiplicity in terms.items():
        for target, factor in rules[k]:
            key = (target, factor @ matrix)
            expanded[key] = expanded.get(key, 0) + multiplicity
    return expanded


def _require_real_even(
    first: CharacteristicFunction, second: CharacteristicFunction
) -> None:
    for values in (first, second):
        if not (values.is_real_nonnegative() and values.is_even()):
            raise errors.HypothesisError(
                "the transforms are real, nonnegative and even",
                details="pass symmetrize=True to replace mu_j by mu_j * reflect(mu_j)",
            )


def iteration_identities_check(
    inst: HeydeInstance,
    depth: int = DEFAULT_ITERATION_DEPTH,
    *,
    symmetrize_first: bool = True,
) -> IterationReport:
    """Verify the two substitution identities and their iterates exactly.

    :param depth: Number of substitution rounds to expand.
    :param symmetrize_first: Replace ``mu_j`` by ``mu_j * reflect(mu_j)``,
        whose transform is ``|mu_j^|**2``, after checking the equation.
    :raises HypothesisError: if the instance does not solve the equation,
        the transforms are not real, nonnegative and even, or
        ``I - alpha~`` is not an automorphism.
    """
    if not heyde_equation_holds(inst).symmetric:
        raise errors.HypothesisError("the characteristic-function equation holds")
    if symmetrize_first:
        inst = HeydeInstance(inst.alpha, symmetrize(inst.mu1), symmetrize(inst.mu2))
    first, second = char_fn(inst.mu1), char_fn(inst.mu2)
    _require_real_even(first, second)
    dual_alpha = inst.dual_alpha
    plus, minus = id_plus_minus(dual_alpha)
    if not is_automorphism(minus):
        raise errors.HypothesisError("I - alpha~ is an automorphism")
    inverse = invert(minus)
    b = plus @ inverse
    c = dual_alpha.scaled(2) @ inverse
    d = inverse.scaled(2)
    dual = first.parent
    functions = (first, second)
    witness: Optional[Tuple[str, Tuple[int, ...]]] = None

    double = dual_alpha.scaled(2)
    two = identity(dual).scaled(2)
    identities = {
        "first": ((1, minus), {(1, plus): 1, (2, double): 1}),
        "second": ((2, minus), {(1, two): 1, (2, plus): 1}),
    }
    verdicts: Dict[str, bool] = {}
    for label, ((k, matrix), right) in identities.items():
        verdicts[label] = True
        for position, y in enumerate(dual.elements):
            left = functions[k - 1].values[matrix.image_indices[position]]
            if left != _evaluate(functions, right, position):
                verdicts[label] = False
                witness = witness or (label, y)
                break

    rules = {1: [(1, b), (2, c)], 2: [(1, d), (2, b)]}
    expansions: List[Tuple[int, int, bool]] = []
    sizes: List[int] = []
    for j in (1, 2):
        terms: Terms = {(j, identity(dual)): 1}
        for n in range(1, depth + 1):
            terms = _expand(terms, rules)
            sizes.append(len(terms))
            ok = True
            for position, y in enumerate(dual.elements):
                if functions[j - 1].values[position] != _evaluate(
                    functions, terms, position
                ):
                    ok = False
                    witness = witness or (f"expansion f{j} depth {n}", y)
                    break
            expansions.append((j, n, ok))
    logger.debug(
        f"Iteration identities to depth {depth}: first={verdicts['first']}, "
        f"second={verdicts['second']}, expansions={expansions}"
    )
    return IterationReport(
        depth=depth,
        first_identity=verdicts["first"],
        second_identity=verdicts["second"],
        expansions=tuple(expansions),
        terms=tuple(sizes),
        witness=witness,
    )
