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

"""Primary bases of subquotients S/M of a concrete finite abelian group.

Both subgroups (M trivial) and quotient groups (S the whole group) go through
the same reduction.  Pulled back to ``Z^r``, S and M become full-rank lattices
that contain the relations ``orders[i] * e_i``.  Written in a Hermite basis of
the lattice of S, the lattice of M is a relation matrix whose Smith form gives
the invariant factors of S/M; each factor is then split into prime powers.
"""

import logging
from typing import TYPE_CHECKING, Collection, Dict, List, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from heyde_haar.utils import factorize, prime_of

if TYPE_CHECKING:  # pragma: no cover
    from heyde_haar.algebra.group import Element, FiniteAbelianGroup

logger = logging.getLogger(__name__)

BasisEntry = Tuple["Element", int]


def _lattice(
    group: "FiniteAbelianGroup", generators: Collection["Element"]
) -> DomainMatrix:
    """Columns: the generators, then the relations ``orders[j] * e_j``."""
    columns = [list(generator) for generator in generators]
    columns.extend(
        [order if i == j else 0 for i in range(group.rank)]
        for j, order in enumerate(group.orders)
    )
    rows = [[ZZ(column[i]) for column in columns] for i in range(group.rank)]
    return DomainMatrix(rows, (group.rank, len(columns)), ZZ)


def primary_basis(
    group: "FiniteAbelianGroup",
    generators: Collection["Element"],
    modulus: Collection["Element"],
) -> List[BasisEntry]:
    """Compute a basis of the subquotient ``S / M``.

    :param group: The ambient group.
    :param generators: Elements generating a subgroup S.
    :param modulus: Elements generating a subgroup M of S.
    :returns: ``(generator, order)`` pairs with prime-power orders, sorted by
        prime and then order, such that S/M is the direct sum of the cyclic
        groups generated by the images of the generators.
    """
    if group.rank == 0:
        return []
    span = hermite_normal_form(
        _lattice(group, generators), D=ZZ(group.order)
    ).to_Matrix()
    relations = span.inv() * _lattice(group, modulus).to_Matrix()
    smith, left, _ = smith_normal_decomp(
        DomainMatrix.from_Matrix(relations).convert_to(ZZ)
    )
    invariants = smith.to_Matrix()
    change = span * left.to_Matrix().inv()
    basis: List[BasisEntry] = []
    for position in range(group.rank):
        factor = abs(int(invariants[position, position]))
        column = change.col(position)
        cyclic = tuple(int(column[i]) % n for i, n in enumerate(group.orders))
        for prime, exponent in factorize(factor):
            order = prime**exponent
            basis.append((group.scale(cyclic, factor // order), order))
    basis.sort(key=lambda entry: (prime_of(entry[1]), entry[1]))
    logger.debug(
        f"Primary basis of a subquotient with invariant factors "
        f"{[abs(int(invariants[i, i])) for i in range(group.rank)]}: "
        f"orders {[order for _, order in basis]}"
    )
    return basis


def coordinate_map(
    group: "FiniteAbelianGroup",
    basis: List[BasisEntry],
    modulus: Collection["Element"],
) -> Dict["Element", Tuple[int, ...]]:
    """Map every element of ``span(basis) + modulus`` to its basis coordinates."""
    rank = len(basis)
    coordinates: Dict["Element", Tuple[int, ...]] = {m: (0,) * rank for m in modulus}
    for position, (generator, order) in enumerate(basis):
        extended: Dict["Element", Tuple[int, ...]] = {}
        for element, coords in coordinates.items():
            current = element
            for t in range(order):
                extended[current] = coords[:position] + (t,) + coords[position + 1 :]
                current = group.add(current, generator)
        coordinates = extended
    return coordinates
