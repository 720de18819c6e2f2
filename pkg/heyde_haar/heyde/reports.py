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

"""Serialization helpers shared by the engine's report types.

Reports marshal to plain dictionaries with kebab-case keys, lists for
elements and matrices, and ``"p/q"`` strings for rationals.
"""

from typing import Any, Dict, List, Sequence

from heyde_haar.algebra.group import Subgroup
from heyde_haar.algebra.morphisms import Homomorphism


def marshal_element(element: Sequence[int]) -> List[int]:
    """An element as a list of residues."""
    return list(element)


def marshal_subgroup(subgroup: Subgroup) -> Dict[str, Any]:
    """A subgroup by its order and minimal generators."""
    return {
        "order": subgroup.order,
        "generators": [marshal_element(g) for g in subgroup.generators],
    }


def marshal_matrix(alpha: Homomorphism) -> List[List[int]]:
    """The matrix of a homomorphism as nested lists."""
    return [list(row) for row in alpha.matrix]
