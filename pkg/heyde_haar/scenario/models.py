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

"""Scenario documents: what to build and which check to run on it."""

import abc
from fractions import Fraction
from typing import Any, Dict, List, Literal, Mapping, Optional, Sequence, Tuple, Union

import pydantic
from overrides import overrides  # pyright: ignore[reportUnknownVariableType]
from pydantic import StrictBool, StrictInt, StrictStr

from heyde_haar.algebra import (
    Distribution,
    FiniteAbelianGroup,
    Homomorphism,
    block_map,
    check_heyde_admissible,
    count_automorphisms,
    diagonal_hom,
    dirac,
    enumerate_automorphisms,
    haar,
    haar_on_subgroup,
    is_automorphism,
    make_group,
    make_hom,
    mixture,
    random_distribution,
    sample_automorphisms,
    scalar_hom,
    subgroup_generated,
)
from heyde_haar.algebra.distributions import DEFAULT_DENOMINATOR_BOUND
from heyde_haar.algebra.group import DEFAULT_SUBGROUP_CAP
from heyde_haar.algebra.morphisms import (
    DEFAULT_AUTOMORPHISM_CAP,
    DEFAULT_AUTOMORPHISM_LIMIT,
    DEFAULT_SAMPLE_COUNT,
)
from heyde_haar.gaussian import (
    DEFAULT_WINDOW_RADIUS,
    LatticeAutomorphism,
    QuadraticGaussianSpec,
)
from heyde_haar.gaussian.conditions import DEFAULT_SOLENOID_SAMPLES
from heyde_haar.gaussian.forms import to_rational_matrix
from heyde_haar.heyde.families import catalog_groups
from heyde_haar.heyde.tower import AlphaSpec, scalar_family, tower_group
from heyde_haar.utils import parse_rational

from . import errors

#: Groups whose automorphism group is at most this large are enumerated in
#: full by the ``auto`` family; larger ones are sampled.
AUTO_ENUMERATION_LIMIT = 500

ScenarioKind = Literal[
    "check-symmetry",
    "verify-theorem",
    "enumerate-solutions",
    "haar-condition",
    "counterexample-suite",
    "truncation-sweep",
    "gaussian-check",
    "equivalence-sweep",
]
FamilyName = Literal["point-mass", "haar-shift", "haar-mixture", "random"]
RationalValue = Union[StrictInt, StrictStr]


def _alias_generator(value: str) -> str:
    return value.replace("_", "-")


def _check_rational(value: RationalValue) -> RationalValue:
    parse_rational(value)
    return value


class ScenarioModel(pydantic.BaseModel):
    """Base of every scenario document model."""

    model_config = pydantic.ConfigDict(
        frozen=True,
        extra="forbid",
        populate_by_name=True,
        alias_generator=_alias_generator,
    )

    def marshal(self) -> Dict[str, Any]:
        """Return the model data as a dictionary."""
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)


# region Groups
class GroupSpec(ScenarioModel):
    """One group by its cyclic orders, a tower layer, or the test catalog."""

    orders: Optional[List[StrictInt]] = None
    primes: Optional[List[StrictInt]] = None
    level: Optional[StrictInt] = None
    catalog: Optional[StrictBool] = None
    max_order: Optional[StrictInt] = None

    @pydantic.field_validator("orders")
    @classmethod
    def _positive_orders(cls, orders: Optional[List[int]]) -> Optional[List[int]]:
        if orders is not None:
            if not orders:
                raise ValueError("orders must be a non-empty list")
            for order in orders:
                if order < 1:
                    raise ValueError(f"order {order} is not a positive integer")
        return orders

    @pydantic.model_validator(mode="after")
    def _one_shape(self) -> "GroupSpec":
        shapes = [self.orders is not None, self.primes is not None, bool(self.catalog)]
        if sum(shapes) != 1:
            raise ValueError(
                "exactly one of 'orders', 'primes' or 'catalog' is required"
            )
        if self.primes is not None and (self.level is None or self.level < 1):
            raise ValueError("'primes' requires a positive 'level'")
        if self.level is not None and self.primes is None:
            raise ValueError("'level' is only valid together with 'primes'")
        if self.max_order is not None and not self.catalog:
            raise ValueError("'max-order' is only valid together with 'catalog'")
        return self

    @property
    def single(self) -> bool:
        """Whether the spec names exactly one group."""
        return not self.catalog

    def build(self) -> List[FiniteAbelianGroup]:
        """Construct the groups in canonical order."""
        if self.orders is not None:
            return [make_group(self.orders)]
        if self.primes is not None and self.level is not None:
            return [tower_group(sorted(self.primes), self.level)]
        return catalog_groups(max_order=self.max_order)


# endregion
# region Automorphisms
class AutomorphismSpec(ScenarioModel):
    """One automorphism, or a family of them.

    Matrices refer to the canonical orders of the group, after composite
    orders are split into prime powers.
    """

    scalar: Optional[StrictInt] = None
    diagonal: Optional[List[StrictInt]] = None
    matrix: Optional[List[List[StrictInt]]] = None
    named: Optional[Literal["block-map"]] = None
    blocks: StrictInt = 3
    family: Optional[Literal["all", "auto", "sample", "admissible", "scalars"]] = None
    count: StrictInt = DEFAULT_SAMPLE_COUNT

    @pydantic.model_validator(mode="after")
    def _one_form(self) -> "AutomorphismSpec":
        forms = [
            self.scalar is not None,
            self.diagonal is not None,
            self.matrix is not None,
            self.named is not None,
            self.family is not None,
        ]
        if sum(forms) != 1:
            raise ValueError(
                "exactly one of 'scalar', 'diagonal', 'matrix', 'named' or "
                "'family' is required"
            )
        if self.blocks < 1 or self.count < 1:
            raise ValueError("'blocks' and 'count' must be positive")
        return self

    def build(
        self,
        group: FiniteAbelianGroup,
        *,
        seed: Union[int, str] = 0,
        cap: int = DEFAULT_AUTOMORPHISM_CAP,
        limit: int = DEFAULT_AUTOMORPHISM_LIMIT,
    ) -> List[Homomorphism]:
        """The automorphisms this spec names on ``group``.

        :raises ScenarioValidationError: if a named map lives on another group.
        """
        if self.scalar is not None:
            return [scalar_hom(group, self.scalar)]
        if self.diagonal is not None:
            return [diagonal_hom(group, self.diagonal)]
        if self.matrix is not None:
            return [make_hom(self.matrix, group)]
        if self.named is not None:
            alpha = block_map(self.blocks)
            if alpha.domain != group:
                raise errors.ScenarioValidationError(
                    "automorphism.named",
                    f"the block map with {self.blocks} blocks lives on "
                    f"{list(alpha.domain.orders)}, not {list(group.orders)}",
                )
            return [alpha]
        if self.family == "sample":
            return sample_automorphisms(group, self.count, seed=seed)
        large = count_automorphisms(group) > AUTO_ENUMERATION_LIMIT
        if self.family == "auto" and large:
            return sample_automorphisms(group, self.count, seed=seed)
        if self.family == "scalars":
            scalars = (scalar_hom(group, k) for k in range(1, group.exponent))
            return [alpha for alpha in scalars if is_automorphism(alpha)]
        automorphisms = enumerate_automorphisms(group, cap=cap, limit=limit)
        if self.family == "admissible":
            return [alpha for alpha in automorphisms if check_heyde_admissible(alpha)]
        return automorphisms

    def alpha_specs(self, primes: Sequence[int]) -> List[AlphaSpec]:
        """Layer-independent descriptions for a truncation tower.

        :raises ScenarioValidationError: for forms that depend on one layer.
        """
        if self.scalar is not None:
            return [self.scalar]
        if self.diagonal is not None:
            return [self.diagonal]
        if self.matrix is not None:
            return [self.matrix]
        if self.family == "scalars":
            return list(scalar_family(primes))
        raise errors.ScenarioValidationError(
            "automorphism",
            "a truncation tower needs a scalar, diagonal, matrix or the "
            "'scalars' family",
        )


# endregion
# region Distributions
class DistributionSpec(ScenarioModel, abc.ABC):
    """The base class for distribution specs."""

    @abc.abstractmethod
    def build(self, group: FiniteAbelianGroup, *, seed: str) -> Distribution:
        """Construct the distribution on ``group``.

        :param seed: Seed derived from the scenario seed and the spec position.
        """


class HaarSpec(DistributionSpec):
    """The Haar distribution of the whole group."""

    type: Literal["haar"]

    @overrides
    def build(self, group: FiniteAbelianGroup, *, seed: str) -> Distribution:
        """Construct the distribution on ``group``."""
        return haar(group)


class HaarOnSubgroupSpec(DistributionSpec):
    """The Haar distribution of the subgroup spanned by ``generators``."""

    type: Literal["haar-on-subgroup"]
    generators: List[List[StrictInt]]

    @overrides
    def build(self, group: FiniteAbelianGroup, *, seed: str) -> Distribution:
        """Construct the distribution on ``group``."""
        elements = [group.element(g) for g in self.generators]
        return haar_on_subgroup(subgroup_generated(group, elements))


class DiracSpec(DistributionSpec):
    """A point mass."""

    type: Literal["dirac"]
    element: List[StrictInt]

    @overrides
    def build(self, group: FiniteAbelianGroup, *, seed: str) -> Distribution:
        """Construct the distribution on ``group``."""
        return dirac(group, group.element(self.element))


class RandomSpec(DistributionSpec):
    """A seeded random distribution with small rational masses."""

    type: Literal["random"]
    seed: Optional[Union[StrictInt, StrictStr]] = None
    bound: StrictInt = DEFAULT_DENOMINATOR_BOUND

    @pydantic.field_validator("bound")
    @classmethod
    def _positive_bound(cls, bound: int) -> int:
        if bound < 1:
            raise ValueError(f"bound {bound} is not positive")
        return bound

    @overrides
    def build(self, group: FiniteAbelianGroup, *, seed: str) -> Distribution:
        """Construct the distribution on ``group``."""
        own = seed if self.seed is None else self.seed
        return random_distribution(group, own, self.bound)


class MixtureComponent(ScenarioModel):
    """A weighted component of a mixture."""

    weight: RationalValue
    distribution: "AnyDistributionSpec" = pydantic.Field(discriminator="type")

    @pydantic.field_validator("weight")
    @classmethod
    def _rational_weight(cls, weight: RationalValue) -> RationalValue:
        return _check_rational(weight)


class MixtureSpec(DistributionSpec):
    """A convex combination with exact rational weights."""

    type: Literal["mixture"]
    components: List[MixtureComponent]

    @overrides
    def build(self, group: FiniteAbelianGroup, *, seed: str) -> Distribution:
        """Construct the distribution on ``group``."""
        parts: List[Any] = []
        for index, component in enumerate(self.components):
            mu = component.distribution.build(group, seed=f"{seed}:{index}")
            parts.append((parse_rational(component.weight), mu))
        return mixture(parts)


AnyDistributionSpec = Union[
    HaarSpec, HaarOnSubgroupSpec, DiracSpec, RandomSpec, MixtureSpec
]
MixtureComponent.model_rebuild()
MixtureSpec.model_rebuild()


class PairSpec(ScenarioModel):
    """The distributions of the two independent variables."""

    first: AnyDistributionSpec = pydantic.Field(discriminator="type")
    second: AnyDistributionSpec = pydantic.Field(discriminator="type")


# endregion
# region Continuous groups
class TorusSpec(ScenarioModel):
    """Two Gaussian forms on ``T^n`` and the dual automorphism."""

    a1: List[List[RationalValue]]
    a2: List[List[RationalValue]]
    alpha: List[List[StrictInt]]

    def build(
        self,
    ) -> Tuple[QuadraticGaussianSpec, QuadraticGaussianSpec, LatticeAutomorphism]:
        """Validate and construct the forms and the automorphism.

        :raises GaussianError: if a form or the automorphism is invalid.
        """
        return (
            QuadraticGaussianSpec(to_rational_matrix(self.a1)),
            QuadraticGaussianSpec(to_rational_matrix(self.a2)),
            LatticeAutomorphism(tuple(tuple(row) for row in self.alpha)),
        )


class SolenoidSpec(ScenarioModel):
    """Variances on the rational dual and the multiplier ``alpha``."""

    sigma1: RationalValue
    sigma2: RationalValue
    alpha: RationalValue

    @pydantic.field_validator("sigma1", "sigma2", "alpha")
    @classmethod
    def _rational_parameters(cls, value: RationalValue) -> RationalValue:
        return _check_rational(value)

    def values(self) -> Tuple[Fraction, Fraction, Fraction]:
        """The three parameters as exact rationals."""
        return (
            parse_rational(self.sigma1),
            parse_rational(self.sigma2),
            parse_rational(self.alpha),
        )


# endregion
# region Scenario
class ScenarioOptions(ScenarioModel):
    """Tunable sizes, seeds and switches.

    Unset sizes fall back to the engine defaults of the selected kind.
    """

    trials: Optional[StrictInt] = None
    denominator_bound: StrictInt = DEFAULT_DENOMINATOR_BOUND
    subgroup_cap: StrictInt = DEFAULT_SUBGROUP_CAP
    automorphism_cap: StrictInt = DEFAULT_AUTOMORPHISM_CAP
    automorphism_limit: StrictInt = DEFAULT_AUTOMORPHISM_LIMIT
    tower_subgroup_cap: Optional[StrictInt] = None
    radius: StrictInt = DEFAULT_WINDOW_RADIUS
    samples: StrictInt = DEFAULT_SOLENOID_SAMPLES
    depth: Optional[StrictInt] = None
    seed: Union[StrictInt, StrictStr] = 0
    jobs: StrictInt = 1
    exploratory: StrictBool = False
    subgroups: StrictBool = False
    check: Literal["admissibility", "zero-one-solutions", "theorem"] = (
        "zero-one-solutions"
    )

    @pydantic.field_validator(
        "denominator_bound",
        "subgroup_cap",
        "automorphism_cap",
        "automorphism_limit",
        "tower_subgroup_cap",
        "radius",
        "samples",
        "depth",
        "jobs",
    )
    @classmethod
    def _positive(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError(f"{value} is not a positive integer")
        return value

    @pydantic.field_validator("trials")
    @classmethod
    def _non_negative(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 0:
            raise ValueError(f"{value} is negative")
        return value


_NEEDS_GROUP = {
    "check-symmetry",
    "verify-theorem",
    "enumerate-solutions",
    "haar-condition",
    "truncation-sweep",
    "equivalence-sweep",
}
_NEEDS_AUTOMORPHISM = {"check-symmetry", "verify-theorem", "enumerate-solutions"}
_NEEDS_PAIRS = {"check-symmetry", "verify-theorem"}
_USES_PAIRS = _NEEDS_PAIRS | {"enumerate-solutions", "equivalence-sweep"}


class Scenario(ScenarioModel):
    """A complete scenario document."""

    kind: ScenarioKind
    description: Optional[StrictStr] = None
    group: Optional[GroupSpec] = None
    automorphism: Optional[AutomorphismSpec] = None
    pairs: List[PairSpec] = pydantic.Field(default_factory=list)
    families: List[FamilyName] = pydantic.Field(default_factory=list)
    torus: Optional[TorusSpec] = None
    solenoid: Optional[SolenoidSpec] = None
    suite: List[StrictStr] = pydantic.Field(default_factory=list)
    options: ScenarioOptions = pydantic.Field(default_factory=ScenarioOptions)
    expect: Dict[str, Any] = pydantic.Field(default_factory=dict)

    @pydantic.model_validator(mode="after")
    def _required_for_kind(self) -> "Scenario":
        kind = self.kind
        if kind in _NEEDS_GROUP and self.group is None:
            raise ValueError(f"kind {kind!r} requires 'group'")
        if kind in _NEEDS_AUTOMORPHISM and self.automorphism is None:
            raise ValueError(f"kind {kind!r} requires 'automorphism'")
        if kind in _NEEDS_PAIRS and not (self.pairs or self.families):
            raise ValueError(f"kind {kind!r} requires 'pairs' or 'families'")
        if kind not in _USES_PAIRS and (self.pairs or self.families):
            raise ValueError(f"kind {kind!r} takes no 'pairs' or 'families'")
        if kind == "truncation-sweep" and (self.group is None or not self.group.primes):
            raise ValueError("kind 'truncation-sweep' requires 'group.primes'")
        if kind == "gaussian-check" and self.torus is None and self.solenoid is None:
            raise ValueError("kind 'gaussian-check' requires 'torus' or 'solenoid'")
        if kind == "counterexample-suite" and not self.suite:
            raise ValueError("kind 'counterexample-suite' requires 'suite'")
        return self

    @classmethod
    def unmarshal(cls, data: Mapping[str, Any]) -> "Scenario":
        """Create a scenario from the given data.

        :raises ScenarioValidationError: with the path of the first bad field.
        """
        if not isinstance(data, dict):  # pyright: ignore[reportUnnecessaryIsInstance]
            raise errors.ScenarioValidationError(
                "<document>",
                "invalid object",
                details="A scenario must be a JSON object.",
            )
        try:
            return cls.model_validate(data)
        except pydantic.ValidationError as error:
            raise _create_validation_error(error) from error

    def with_overrides(
        self, *, seed: Optional[Union[int, str]] = None, jobs: Optional[int] = None
    ) -> "Scenario":
        """Return a copy with command-line values replacing the options."""
        update: Dict[str, Any] = {}
        if seed is not None:
            update["seed"] = seed
        if jobs is not None:
            update["jobs"] = jobs
        if not update:
            return self
        try:
            options = ScenarioOptions.model_validate(
                {**self.options.marshal(), **update}
            )
        except pydantic.ValidationError as error:
            raise _create_validation_error(error, prefix="options") from error
        return self.model_copy(update={"options": options})


def _field_path(location: Sequence[Union[int, str]], prefix: str = "") -> str:
    parts = [prefix, *location] if prefix else list(location)
    return ".".join(str(part) for part in parts) or "<document>"


def _create_validation_error(
    error: pydantic.ValidationError, *, prefix: str = ""
) -> errors.ScenarioValidationError:
    """Condense a pydantic error into one with the first field path as brief."""
    problems = error.errors()
    first = problems[0]
    return errors.ScenarioValidationError(
        _field_path(first["loc"], prefix),
        first["msg"],
        details="\n".join(
            f"{_field_path(problem['loc'], prefix)}: {problem['msg']}"
            for problem in problems
        ),
    )


# endregion
