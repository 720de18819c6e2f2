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

"""Homomorphisms as congruence-constrained integer matrices.

A homomorphism ``Z(m_1) x ... x Z(m_s) -> Z(n_1) x ... x Z(n_r)`` is an
``r x s`` matrix whose entry ``a_ij`` is the image of the ``j``-th standard
generator in the ``i``-th target factor.  It is well defined exactly when
``a_ij`` is divisible by ``n_i / gcd(n_i, m_j)``.
"""

import dataclasses
import functools
import itertools
import logging
import math
import random
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

from heyde_haar.utils import factorize

from . import errors, structure
from .distributions import Distribution, pushforward
from .duality import CharacteristicFunction, char_fn, pairing_phase
from .group import (
    Element,
    FiniteAbelianGroup,
    Subgroup,
    extend_subgroup,
    subgroup_generated,
)

logger = logging.getLogger(__name__)

#: Largest group whose automorphisms are enumerated unless told otherwise.
DEFAULT_AUTOMORPHISM_CAP = 256
#: Largest automorphism group that is materialized in full.
DEFAULT_AUTOMORPHISM_LIMIT = 50000
#: Number of automorphisms drawn by :func:`sample_automorphisms` by default.
DEFAULT_SAMPLE_COUNT = 100
#: Adjoints are checked on all pairs up to this many of them, else on generators.
ADJOINT_EXHAUSTIVE_PAIRS = 4096

Matrix = Tuple[Tuple[int, ...], ...]


def _step(target: int, source: int) -> int:
    """Smallest positive entry allowed for a map ``Z(source) -> Z(target)``."""
    return target // math.gcd(target, source)


@dataclasses.dataclass(frozen=True)
class Homomorphism:
    """A homomorphism between finite abelian groups.

    :param domain: The source group.
    :param codomain: The target group.
    :param matrix: One row per codomain factor, one column per domain factor,
        every entry already reduced modulo its row's order.  Use
        :func:`make_hom` for unreduced input.
    :raises HomomorphismError: on a shape or congruence violation.
    """

    domain: FiniteAbelianGroup
    codomain: FiniteAbelianGroup
    matrix: Matrix

    def __post_init__(self) -> None:
        matrix = tuple(tuple(row) for row in self.matrix)
        if len(matrix) != self.codomain.rank or any(
            len(row) != self.domain.rank for row in matrix
        ):
            raise errors.HomomorphismError(
                "wrong matrix shape",
                details=(
                    f"Expected {self.codomain.rank} rows of {self.domain.rank} "
                    f"entries, got {[len(row) for row in matrix]}."
                ),
            )
        for i, (row, target) in enumerate(zip(matrix, self.codomain.orders)):
            for j, (entry, source) in enumerate(zip(row, self.domain.orders)):
                if not isinstance(entry, int) or not 0 <= entry < target:
                    raise errors.HomomorphismError(
                        f"entry a_{i + 1}{j + 1} = {entry!r} is not reduced mod {target}"
                    )
                if entry % _step(target, source):
                    raise errors.HomomorphismError(
                        f"entry a_{i + 1}{j + 1} = {entry} does not define a map "
                        f"Z({source}) -> Z({target})"
                    )
        object.__setattr__(self, "matrix", matrix)

    # region Evaluation
    def apply(self, x: Element) -> Element:
        """Image of a domain element.

        :raises ElementError: if ``x`` has the wrong number of coordinates.
        """
        if len(x) != self.domain.rank:
            raise errors.ElementError(
                x, self.domain.orders, f"expected {self.domain.rank} coordinates"
            )
        return tuple(
            sum(a * b for a, b in zip(row, x)) % order
            for row, order in zip(self.matrix, self.codomain.orders)
        )

    __call__ = apply

    @functools.cached_property
    def image_indices(self) -> Tuple[int, ...]:
        """``table[i]`` is the codomain index of the image of ``domain.elements[i]``."""
        index = self.codomain.index
        return tuple(index[self.apply(x)] for x in self.domain.elements)

    def columns(self) -> List[Element]:
        """Images of the standard generators of the domain."""
        return [
            tuple(row[j] for row in self.matrix) for j in range(self.domain.rank)
        ]

    def is_endomorphism(self) -> bool:
        """True if domain and codomain coincide."""
        return self.domain == self.codomain

    # endregion
    # region Algebra
    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """``self o other``: apply ``other`` first.

        :raises GroupMismatchError: if ``other.codomain != self.domain``.
        """
        if other.codomain != self.domain:
            raise errors.GroupMismatchError(self.domain.orders, other.codomain.orders)
        product = [
            [
                sum(self.matrix[i][k] * other.matrix[k][j] for k in range(self.domain.rank))
                for j in range(other.domain.rank)
            ]
            for i in range(self.codomain.rank)
        ]
        return make_hom(product, other.domain, self.codomain)

    def __matmul__(self, other: "Homomorphism") -> "Homomorphism":
        return self.compose(other)

    def _require_parallel(self, other: "Homomorphism") -> None:
        if other.domain != self.domain:
            raise errors.GroupMismatchError(self.domain.orders, other.domain.orders)
        if other.codomain != self.codomain:
            raise errors.GroupMismatchError(self.codomain.orders, other.codomain.orders)

    def __add__(self, other: "Homomorphism") -> "Homomorphism":
        self._require_parallel(other)
        return make_hom(
            [
                [a + b for a, b in zip(left, right)]
                for left, right in zip(self.matrix, other.matrix)
            ],
            self.domain,
            self.codomain,
        )

    def __neg__(self) -> "Homomorphism":
        return make_hom(
            [[-a for a in row] for row in self.matrix], self.domain, self.codomain
        )

    def __sub__(self, other: "Homomorphism") -> "Homomorphism":
        return self + (-other)

    def scaled(self, k: int) -> "Homomorphism":
        """``k * self``."""
        return make_hom(
            [[k * a for a in row] for row in self.matrix], self.domain, self.codomain
        )

    def __pow__(self, exponent: int) -> "Homomorphism":
        if not self.is_endomorphism():
            raise errors.GroupMismatchError(self.domain.orders, self.codomain.orders)
        if exponent < 0:
            return invert(self) ** -exponent
        result = identity(self.domain)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    # endregion
    # region Subgroups
    def kernel(self) -> Subgroup:
        """``{x : self(x) = 0}``, by a full scan of the domain."""
        zero = self.codomain.zero()
        return Subgroup(
            self.domain, tuple(x for x in self.domain.elements if self.apply(x) == zero)
        )

    def image(self) -> Subgroup:
        """The subgroup generated by the images of the standard generators."""
        return subgroup_generated(self.codomain, self.columns())

    def image_of(self, subgroup: Subgroup) -> Subgroup:
        """``self(K)`` for a subgroup ``K`` of the domain."""
        if subgroup.parent != self.domain:
            raise errors.GroupMismatchError(self.domain.orders, subgroup.parent.orders)
        return subgroup_generated(
            self.codomain, (self.apply(g) for g in subgroup.generators)
        )

    def preimage(self, subgroup: Subgroup) -> Subgroup:
        """``{x : self(x) in K}`` for a subgroup ``K`` of the codomain."""
        if subgroup.parent != self.codomain:
            raise errors.GroupMismatchError(
                self.codomain.orders, subgroup.parent.orders
            )
        return Subgroup(
            self.domain,
            tuple(x for x in self.domain.elements if self.apply(x) in subgroup),
        )

    def leaves_invariant(self, subgroup: Subgroup) -> bool:
        """True if ``self(K)`` is contained in ``K``."""
        return all(self.apply(g) in subgroup for g in subgroup.generators)

    # endregion
    def marshal(self) -> Dict[str, Any]:
        """Return the homomorphism as a serializable dictionary."""
        return {
            "domain": list(self.domain.orders),
            "codomain": list(self.codomain.orders),
            "matrix": [list(row) for row in self.matrix],
        }


# region Constructors
def make_hom(
    matrix: Sequence[Sequence[int]],
    domain: FiniteAbelianGroup,
    codomain: Optional[FiniteAbelianGroup] = None,
) -> Homomorphism:
    """Reduce a matrix entrywise and validate it as a homomorphism.

    :param codomain: Defaults to ``domain``.
    :raises HomomorphismError: on a shape or congruence violation.
    """
    target = domain if codomain is None else codomain
    rows = [list(row) for row in matrix]
    if len(rows) != target.rank:
        raise errors.HomomorphismError(
            "wrong matrix shape",
            details=f"Expected {target.rank} rows, got {len(rows)}.",
        )
    for row in rows:
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise errors.HomomorphismError(f"entry {entry!r} is not an integer")
    reduced = tuple(
        tuple(entry % order for entry in row) for row, order in zip(rows, target.orders)
    )
    return Homomorphism(domain, target, reduced)


def identity(group: FiniteAbelianGroup) -> Homomorphism:
    """The identity automorphism."""
    return scalar_hom(group, 1)


def scalar_hom(group: FiniteAbelianGroup, k: int) -> Homomorphism:
    """Multiplication by the integer ``k``."""
    return make_hom(
        [[k if i == j else 0 for j in range(group.rank)] for i in range(group.rank)],
        group,
    )


def diagonal_hom(group: FiniteAbelianGroup, factors: Sequence[int]) -> Homomorphism:
    """Multiply the ``i``-th coordinate by ``factors[i]``."""
    if len(factors) != group.rank:
        raise errors.HomomorphismError(
            "wrong number of diagonal factors",
            details=f"Expected {group.rank}, got {len(factors)}.",
        )
    return make_hom(
        [
            [factors[i] if i == j else 0 for j in range(group.rank)]
            for i in range(group.rank)
        ],
        group,
    )


def block_map(blocks: int) -> Homomorphism:
    """``(x1, x2) -> (x2, x1 + x2)`` on each of ``blocks`` copies of ``Z(2)**2``."""
    group = FiniteAbelianGroup((2,) * (2 * blocks))
    rows = [[0] * (2 * blocks) for _ in range(2 * blocks)]
    for b in range(blocks):
        first, second = 2 * b, 2 * b + 1
        rows[first][second] = 1
        rows[second][first] = 1
        rows[second][second] = 1
    return make_hom(rows, group)


# endregion
# region Automorphisms
def _prime_order_elements(group: FiniteAbelianGroup) -> List[Element]:
    """Every element of prime order; a kernel is trivial iff it misses them all."""
    result: List[Element] = []
    for prime in group.primes:
        positions = group.factor_indices(prime)
        steps = [group.orders[i] // prime for i in positions]
        for coefficients in itertools.product(range(prime), repeat=len(positions)):
            if not any(coefficients):
                continue
            coords = [0] * group.rank
            for position, step, c in zip(positions, steps, coefficients):
                coords[position] = c * step
            result.append(tuple(coords))
    return result


def is_automorphism(alpha: Homomorphism) -> bool:
    """True if ``alpha`` is a bijective endomorphism.

    The kernel is scanned on elements of prime order only, since any
    nontrivial kernel contains one.
    """
    if not alpha.is_endomorphism():
        return False
    zero = alpha.domain.zero()
    return all(alpha.apply(x) != zero for x in _prime_order_elements(alpha.domain))


def invert(alpha: Homomorphism) -> Homomorphism:
    """The two-sided inverse of an automorphism.

    :raises NotInvertibleError: if ``alpha`` is not an automorphism.
    """
    if not is_automorphism(alpha):
        raise errors.NotInvertibleError(details=f"matrix {alpha.matrix}")
    group = alpha.domain
    wanted = {group.unit(j): j for j in range(group.rank)}
    columns: Dict[int, Element] = {}
    for x in group.elements:
        j = wanted.get(alpha.apply(x))
        if j is not None:
            columns[j] = x
            if len(columns) == group.rank:
                break
    return make_hom(
        [[columns[j][i] for j in range(group.rank)] for i in range(group.rank)], group
    )


def _adjoint_pairs(
    alpha: Homomorphism,
) -> Tuple[Sequence[Element], Sequence[Element]]:
    domain, codomain = alpha.domain, alpha.codomain
    if domain.order * codomain.order <= ADJOINT_EXHAUSTIVE_PAIRS:
        return domain.elements, codomain.elements
    # The pairing is bi-additive, so generators suffice.
    return (
        [domain.unit(j) for j in range(domain.rank)],
        [codomain.unit(i) for i in range(codomain.rank)],
    )


def adjoint(alpha: Homomorphism) -> Homomorphism:
    """The adjoint ``alpha~`` on the duals, with ``(alpha x, y) = (x, alpha~ y)``.

    For ``alpha: G -> H`` the adjoint maps the dual of ``H`` to the dual of
    ``G``; its entries are ``a_ij * m_j / n_i`` reduced mod ``m_j``.  The
    pairing law is verified on every pair for small groups and on generator
    pairs otherwise.
    """
    domain, codomain = alpha.domain, alpha.codomain
    rows: List[List[int]] = []
    for j, source in enumerate(domain.orders):
        row: List[int] = []
        for i, target in enumerate(codomain.orders):
            numerator = alpha.matrix[i][j] * source
            if numerator % target:
                raise ArithmeticError(f"non-integral adjoint entry at ({j}, {i})")
            row.append(numerator // target)
        rows.append(row)
    result = make_hom(rows, codomain, domain)
    xs, ys = _adjoint_pairs(alpha)
    for x in xs:
        image = alpha.apply(x)
        for y in ys:
            if pairing_phase(codomain, image, y) != pairing_phase(
                domain, x, result.apply(y)
            ):
                raise ArithmeticError(f"adjoint pairing law fails at x={x}, y={y}")
    return result


def id_plus_minus(alpha: Homomorphism) -> Tuple[Homomorphism, Homomorphism]:
    """Return ``(I + alpha, I - alpha)``."""
    if not alpha.is_endomorphism():
        raise errors.GroupMismatchError(alpha.domain.orders, alpha.codomain.orders)
    one = identity(alpha.domain)
    return one + alpha, one - alpha


def check_heyde_admissible(alpha: Homomorphism) -> bool:
    """True if ``alpha``, ``I + alpha`` and ``I - alpha`` are all automorphisms."""
    if not is_automorphism(alpha):
        return False
    plus, minus = id_plus_minus(alpha)
    return is_automorphism(plus) and is_automorphism(minus)


def _prime_count(prime: int, exponents: List[int]) -> int:
    """Order of Aut of the p-group with sorted cyclic exponents ``e_1 <= ... <= e_n``."""
    n = len(exponents)
    result = 1
    for k in range(1, n + 1):
        e = exponents[k - 1]
        d = max(m for m in range(1, n + 1) if exponents[m - 1] == e)
        c = min(m for m in range(1, n + 1) if exponents[m - 1] == e)
        result *= prime**d - prime ** (k - 1)
        result *= (prime**e) ** (n - d)
        result *= (prime ** (e - 1)) ** (n - c + 1)
    return result


def count_automorphisms(group: FiniteAbelianGroup) -> int:
    """``|Aut(G)|`` from the classical formula, one factor per prime."""
    result = 1
    for prime in group.primes:
        exponents = sorted(
            factorize(group.orders[i])[0][1] for i in group.factor_indices(prime)
        )
        result *= _prime_count(prime, exponents)
    return result


def enumerate_automorphisms(
    group: FiniteAbelianGroup,
    *,
    cap: int = DEFAULT_AUTOMORPHISM_CAP,
    limit: int = DEFAULT_AUTOMORPHISM_LIMIT,
) -> List[Homomorphism]:
    """List every automorphism of ``group`` exactly once.

    Images of the standard generators are chosen one at a time; each must
    have the generator's order and meet the span of the earlier images
    trivially, which makes every leaf a bijection.

    :param cap: Refuse groups with more elements than this.
    :param limit: Refuse automorphism groups larger than this.
    :returns: Automorphisms sorted by matrix.
    :raises CapExceededError: if either bound is exceeded.
    """
    if group.order > cap:
        raise errors.CapExceededError("automorphisms", group.order, cap)
    expected = count_automorphisms(group)
    if expected > limit:
        raise errors.CapExceededError("automorphisms", expected, limit)
    by_order: Dict[int, List[Element]] = {}
    for x in group.elements:
        by_order.setdefault(group.order_of(x), []).append(x)

    found: List[Homomorphism] = []

    def extend(images: List[Element], span: FrozenSet[Element]) -> None:
        position = len(images)
        if position == group.rank:
            found.append(
                make_hom(
                    [[images[j][i] for j in range(group.rank)] for i in range(group.rank)],
                    group,
                )
            )
            return
        order = group.orders[position]
        for candidate in by_order.get(order, ()):
            grown = extend_subgroup(group, span, candidate)
            if len(grown) == len(span) * order:
                extend(images + [candidate], grown)

    extend([], frozenset((group.zero(),)))
    if len(found) != expected:
        raise ArithmeticError(
            f"enumerated {len(found)} automorphisms, the order formula gives {expected}"
        )
    found.sort(key=lambda alpha: alpha.matrix)
    logger.debug(f"Group {list(group.orders)} has {len(found)} automorphisms")
    return found


def sample_automorphisms(
    group: FiniteAbelianGroup,
    count: int = DEFAULT_SAMPLE_COUNT,
    *,
    seed: Union[int, str] = 0,
    max_attempts: int = 100000,
) -> List[Homomorphism]:
    """Draw distinct automorphisms by rejection sampling of admissible matrices.

    At most ``count`` are returned, fewer if ``Aut(G)`` is smaller.
    """
    rng = random.Random(seed)
    wanted = min(count, count_automorphisms(group))
    seen: Set[Matrix] = set()
    result: List[Homomorphism] = []
    attempts = 0
    while len(result) < wanted and attempts < max_attempts:
        attempts += 1
        matrix = [
            [
                rng.randrange(0, target, _step(target, source))
                for source in group.orders
            ]
            for target in group.orders
        ]
        alpha = make_hom(matrix, group)
        if alpha.matrix in seen or not is_automorphism(alpha):
            continue
        seen.add(alpha.matrix)
        result.append(alpha)
    logger.debug(
        f"Sampled {len(result)} automorphisms of {list(group.orders)} "
        f"in {attempts} attempts"
    )
    return result


# endregion
# region Subgroups and quotients
def subgroup_structure(subgroup: Subgroup) -> Tuple[FiniteAbelianGroup, Homomorphism]:
    """An abstract group isomorphic to ``K`` and its embedding into the parent."""
    basis = subgroup.basis
    abstract = FiniteAbelianGroup(tuple(order for _, order in basis))
    parent = subgroup.parent
    embedding = make_hom(
        [[generator[i] for generator, _ in basis] for i in range(parent.rank)],
        abstract,
        parent,
    )
    return abstract, embedding


def restrict(alpha: Homomorphism, subgroup: Subgroup) -> Homomorphism:
    """``alpha`` restricted to ``K``, on the group of :func:`subgroup_structure`.

    :raises InvarianceError: unless ``alpha(K)`` is contained in ``K``.
    """
    if not alpha.leaves_invariant(subgroup):
        raise errors.InvarianceError(
            details=f"alpha does not map {list(subgroup.generators)} into the subgroup"
        )
    abstract, _ = subgroup_structure(subgroup)
    coordinates = subgroup.coordinates
    images = [coordinates[alpha.apply(g)] for g, _ in subgroup.basis]
    return make_hom(
        [[image[i] for image in images] for i in range(abstract.rank)], abstract
    )


@functools.lru_cache(maxsize=256)
def _quotient_data(
    subgroup: Subgroup,
) -> Tuple[FiniteAbelianGroup, Homomorphism, Tuple[Element, ...]]:
    parent = subgroup.parent
    units = [parent.unit(j) for j in range(parent.rank)]
    basis = structure.primary_basis(parent, units, subgroup.generators)
    factor = FiniteAbelianGroup(tuple(order for _, order in basis))
    coordinates = structure.coordinate_map(parent, basis, subgroup.members)
    columns = [coordinates[parent.unit(j)] for j in range(parent.rank)]
    projection = make_hom(
        [[column[i] for column in columns] for i in range(factor.rank)],
        parent,
        factor,
    )
    logger.debug(
        f"Quotient of {list(parent.orders)} by a subgroup of order "
        f"{subgroup.order} is {list(factor.orders)}"
    )
    return factor, projection, tuple(generator for generator, _ in basis)


def quotient(
    group: FiniteAbelianGroup, subgroup: Subgroup
) -> Tuple[FiniteAbelianGroup, Homomorphism]:
    """The factor group ``G/K`` in primary form and the coset projection.

    :raises GroupMismatchError: if ``K`` lives in another group.
    """
    if subgroup.parent != group:
        raise errors.GroupMismatchError(group.orders, subgroup.parent.orders)
    factor, projection, _ = _quotient_data(subgroup)
    return factor, projection


def coset_lifts(subgroup: Subgroup) -> Tuple[Element, ...]:
    """Elements of ``G`` projecting onto the standard generators of ``G/K``."""
    return _quotient_data(subgroup)[2]


def induced_on_quotient(alpha: Homomorphism, subgroup: Subgroup) -> Homomorphism:
    """The map ``x + K -> alpha(x) + K`` on the factor group.

    :raises InvarianceError: unless ``alpha(K)`` is contained in ``K``.
    """
    if not alpha.is_endomorphism():
        raise errors.GroupMismatchError(alpha.domain.orders, alpha.codomain.orders)
    if not alpha.leaves_invariant(subgroup):
        raise errors.InvarianceError(
            details="the induced map on the factor group is not well defined"
        )
    factor, projection = quotient(alpha.domain, subgroup)
    images = [projection.apply(alpha.apply(lift)) for lift in coset_lifts(subgroup)]
    return make_hom(
        [[image[i] for image in images] for i in range(factor.rank)], factor
    )


def quotient_transform(
    mu: Distribution, subgroup: Subgroup
) -> Tuple[CharacteristicFunction, Homomorphism]:
    """Transform of ``mu`` pushed to ``G/K``, and the dual embedding.

    The second item is the adjoint of the projection, mapping the dual of
    ``G/K`` onto ``A(Y, K)``; the transform at ``q`` equals ``mu^`` at its
    image.
    """
    _, projection = quotient(mu.parent, subgroup)
    return char_fn(pushforward(mu, projection)), adjoint(projection)


# endregion
