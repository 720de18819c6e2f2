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

"""Finite abelian group algebra error definitions."""
from typing import Any, Optional, Sequence

from heyde_haar.errors import HeydeError


class AlgebraError(HeydeError):
    """Algebra error base."""


class InvalidGroupError(AlgebraError):
    """Group orders are invalid."""

    def __init__(
        self,
        orders: Sequence[Any],
        brief: str,
        resolution: Optional[str] = None,
    ) -> None:
        super().__init__(
            f"Invalid group orders {list(orders)!r}: {brief}",
            resolution=resolution or "Use positive integer cyclic orders.",
        )


class ElementError(AlgebraError):
    """An element does not belong to the group it is used with."""

    def __init__(self, element: Any, orders: Sequence[int], reason: str) -> None:
        super().__init__(
            f"Element {element!r} is not in the group with orders {list(orders)!r}",
            details=reason,
        )


class GroupMismatchError(AlgebraError):
    """Two objects live over different groups."""

    def __init__(self, left: Sequence[int], right: Sequence[int]) -> None:
        super().__init__(
            "Mismatched parent groups",
            details=f"Orders {list(left)!r} and {list(right)!r} differ.",
        )


class CapExceededError(AlgebraError):
    """A brute-force computation was asked to exceed its configured cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(
            f"Cannot enumerate {what}: size {size} exceeds cap {cap}",
            resolution="Raise the cap explicitly or use a smaller group.",
        )


class HomomorphismError(AlgebraError):
    """A matrix does not define a homomorphism."""

    def __init__(self, brief: str, details: Optional[str] = None) -> None:
        super().__init__(
            f"Ill-defined homomorphism: {brief}",
            details=details,
            resolution=(
                "Entry a_ij must be divisible by n_i / gcd(n_i, m_j) and the "
                "matrix must have one row per codomain factor."
            ),
        )


class NotInvertibleError(AlgebraError):
    """A homomorphism that was required to be invertible is not."""

    def __init__(self, details: Optional[str] = None) -> None:
        super().__init__("Homomorphism is not an automorphism", details=details)


class InvarianceError(AlgebraError):
    """A subgroup is not mapped into itself."""

    def __init__(self, details: Optional[str] = None) -> None:
        super().__init__(
            "Subgroup is not invariant under the homomorphism", details=details
        )


class DistributionError(AlgebraError):
    """Masses do not form a probability distribution."""

    def __init__(self, brief: str, details: Optional[str] = None) -> None:
        super().__init__(f"Not a probability distribution: {brief}", details=details)
