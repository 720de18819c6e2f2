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

"""Run a scenario and assemble its deterministic report.

Reports are sorted JSON documents.  Two runs of the same scenario with the
same seed produce byte-identical output unless timings are requested.
"""

import dataclasses
import enum
import json
import logging
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from heyde_haar import __version__
from heyde_haar.algebra import (
    FiniteAbelianGroup,
    Homomorphism,
    Subgroup,
    check_heyde_admissible,
    enumerate_subgroups,
    haar,
    haar_on_subgroup,
    id_plus_minus,
    is_automorphism,
)
from heyde_haar.gaussian import (
    admissibility_on_lattice,
    closed_form_condition,
    solenoid_admissibility,
    solenoid_pair_condition,
    solenoid_window_verify,
    window_verify,
)
from heyde_haar.heyde import (
    HeydeInstance,
    conditional_symmetry_oracle,
    enumerate_zero_one_solutions,
    haar_mixture_pairs,
    haar_shift_pairs,
    heyde_equation_holds,
    hypothesis_flags,
    invariant_subgroup_images,
    iteration_identities_check,
    lemma1_equivalence_sweep,
    lemma_subgroup_condition,
    nonnegative_spectrum_sweep,
    point_mass_pairs,
    proposition_haar_condition,
    proposition_haar_condition_dual,
    random_pairs,
    recheck_witness,
    shift_condition_sweep,
    theorem1_verifier,
    truncation_tower_sweep,
)
from heyde_haar.heyde.errors import HypothesisError, PropertyViolation, TowerLayerError
from heyde_haar.heyde.reports import marshal_matrix, marshal_subgroup
from heyde_haar.heyde.symmetry import DistributionPair
from heyde_haar.heyde.tower import DEFAULT_TOWER_SUBGROUP_CAP, DEFAULT_TOWER_TRIALS
from heyde_haar.utils import format_rational

from . import errors
from .models import AutomorphismSpec, Scenario
from .presets import load_preset

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

#: Random pairs drawn per group when a scenario does not set ``trials``.
DEFAULT_RANDOM_TRIALS = 25


@dataclasses.dataclass(frozen=True)
class Outcome:
    """What one scenario kind found.

    :param summary: Verdicts that ``expect`` entries are matched against.
    :param result: Full detail for the report.
    :param holds: False if a checked property failed.
    :param witness: Evidence for the first failure.
    """

    summary: Dict[str, Any]
    result: Dict[str, Any]
    holds: bool
    witness: Optional[Any] = None


@dataclasses.dataclass(frozen=True)
class Report:
    """A finished report and the exit code it maps to."""

    document: Dict[str, Any]
    exit_code: int

    @property
    def passed(self) -> bool:
        """True if every checked property and expectation held."""
        return self.exit_code == EXIT_OK

    def dumps(self) -> str:
        """Serialize the report with sorted keys and exact rationals."""
        return (
            json.dumps(self.document, indent=2, sort_keys=True, default=_json_default)
            + "\n"
        )


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Subgroup):
        return marshal_subgroup(value)
    marshal = getattr(value, "marshal", None)
    if callable(marshal):
        return marshal()
    raise TypeError(f"{type(value).__name__} is not serializable")


def _normalized(value: Any) -> Any:
    return json.loads(json.dumps(value, default=_json_default))


# region Scenario inputs
def _single_group(scenario: Scenario) -> FiniteAbelianGroup:
    if scenario.group is None:
        raise errors.ScenarioValidationError("group", "a group is required")
    groups = scenario.group.build()
    if len(groups) != 1:
        raise errors.ScenarioValidationError(
            "group", f"kind {scenario.kind!r} needs one group, not the catalog"
        )
    return groups[0]


def _groups(scenario: Scenario) -> List[FiniteAbelianGroup]:
    if scenario.group is None:
        raise errors.ScenarioValidationError("group", "a group is required")
    return scenario.group.build()


def _automorphisms(
    scenario: Scenario, group: FiniteAbelianGroup, default: str = "all"
) -> List[Homomorphism]:
    spec = scenario.automorphism or AutomorphismSpec.model_validate({"family": default})
    options = scenario.options
    return spec.build(
        group,
        seed=options.seed,
        cap=options.automorphism_cap,
        limit=options.automorphism_limit,
    )


def _pairs(scenario: Scenario, group: FiniteAbelianGroup) -> List[DistributionPair]:
    options = scenario.options
    seed = options.seed
    pairs: List[DistributionPair] = [
        (
            pair.first.build(group, seed=f"{seed}:pair:{index}:1"),
            pair.second.build(group, seed=f"{seed}:pair:{index}:2"),
        )
        for index, pair in enumerate(scenario.pairs)
    ]
    for family in scenario.families:
        if family == "point-mass":
            pairs.extend(point_mass_pairs(group))
        elif family == "haar-shift":
            subgroups = enumerate_subgroups(group, cap=options.subgroup_cap)
            pairs.extend(haar_shift_pairs(group, subgroups))
        elif family == "haar-mixture":
            pairs.extend(haar_mixture_pairs(group))
        else:
            trials = DEFAULT_RANDOM_TRIALS if options.trials is None else options.trials
            pairs.extend(
                random_pairs(
                    group,
                    trials,
                    seed=seed,
                    denominator_bound=options.denominator_bound,
                )
            )
    logger.debug(f"Scenario uses {len(pairs)} pairs on {list(group.orders)}")
    return pairs


def _pair_witness(pair: DistributionPair) -> Dict[str, Any]:
    return {"mu1": pair[0].marshal(), "mu2": pair[1].marshal()}


# endregion
# region Kinds
def _check_symmetry(scenario: Scenario) -> Outcome:
    group = _single_group(scenario)
    alphas = _automorphisms(scenario, group)
    pairs = _pairs(scenario, group)
    depth = scenario.options.depth
    rows: List[Dict[str, Any]] = []
    witness: Optional[Dict[str, Any]] = None
    symmetric = 0
    agreements = 0
    for alpha in alphas:
        for index, pair in enumerate(pairs):
            inst = HeydeInstance(alpha, *pair)
            equation = heyde_equation_holds(inst)
            oracle = conditional_symmetry_oracle(inst)
            agree = equation.symmetric == oracle.symmetric
            verified = all(
                recheck_witness(inst, verdict)
                for verdict in (equation, oracle)
                if not verdict.symmetric
            )
            row: Dict[str, Any] = {
                "alpha": marshal_matrix(alpha),
                "pair": index,
                "equation": equation.marshal(),
                "oracle": oracle.marshal(),
                "agree": agree,
                "witnesses-verified": verified,
            }
            ok = agree and verified
            if depth is not None and equation.symmetric:
                try:
                    iteration = iteration_identities_check(inst, depth)
                except HypothesisError as error:
                    row["iteration"] = {"skipped": error.brief}
                else:
                    row["iteration"] = iteration.marshal()
                    ok = ok and iteration.holds
            symmetric += oracle.symmetric
            agreements += agree
            if not ok and witness is None:
                witness = {**row, **_pair_witness(pair)}
            rows.append(row)
    summary: Dict[str, Any] = {
        "instances": len(rows),
        "symmetric": symmetric,
        "agreements": agreements,
        "all-symmetric": symmetric == len(rows),
        "holds": witness is None,
    }
    if len(alphas) == 1:
        summary["hypotheses"] = hypothesis_flags(alphas[0]).marshal()
    return Outcome(summary, {"instances": rows}, witness is None, witness)


def _plus_minus_automorphisms(alpha: Homomorphism) -> bool:
    plus, minus = id_plus_minus(alpha)
    return is_automorphism(plus) and is_automorphism(minus)


def _verify_theorem(scenario: Scenario) -> Outcome:
    group = _single_group(scenario)
    alphas = _automorphisms(scenario, group)
    pairs = _pairs(scenario, group)
    exploratory = scenario.options.exploratory
    with_shifts = "haar-shift" in scenario.families
    subgroups = (
        enumerate_subgroups(group, cap=scenario.options.subgroup_cap)
        if with_shifts
        else None
    )
    reports: List[Dict[str, Any]] = []
    witness: Optional[Dict[str, Any]] = None
    totals = {"trials": 0, "symmetric": 0, "failures": 0, "sufficiency": 0}
    necessity = 0
    holds = True
    for alpha in alphas:
        theorem = theorem1_verifier(group, alpha, pairs, exploratory=exploratory)
        entry: Dict[str, Any] = {"theorem": theorem.marshal()}
        totals["trials"] += theorem.trials
        totals["symmetric"] += theorem.symmetric
        totals["failures"] += len(theorem.failures)
        holds = holds and theorem.holds
        if not theorem.holds and witness is None:
            index, reason = theorem.failures[0]
            witness = {
                "alpha": marshal_matrix(alpha),
                "pair": index,
                "reason": reason,
                **_pair_witness(pairs[index]),
            }
        if with_shifts:
            shifts = shift_condition_sweep(
                group, alpha, subgroups=subgroups, exploratory=exploratory
            )
            entry["shift-condition"] = shifts.marshal()
            totals["sufficiency"] += len(shifts.sufficiency_failures)
            necessity += len(shifts.necessity_counterexamples)
            holds = holds and shifts.holds
            if not shifts.holds and witness is None:
                witness = {
                    "alpha": marshal_matrix(alpha),
                    "sufficiency-failure": shifts.marshal()["sufficiency-failures"][0],
                }
        reports.append(entry)
    summary: Dict[str, Any] = {
        "trials": totals["trials"],
        "symmetric": totals["symmetric"],
        "all-symmetric": totals["symmetric"] == totals["trials"],
        "haar-shift-failures": totals["failures"],
        "non-haar-shift-pairs-exist": totals["failures"] > 0,
        "plus-minus-automorphisms": all(_plus_minus_automorphisms(a) for a in alphas),
        "holds": holds,
    }
    if with_shifts:
        summary["sufficiency-failures"] = totals["sufficiency"]
        summary["necessity-counterexamples"] = necessity
    if len(alphas) == 1:
        summary["hypotheses"] = hypothesis_flags(alphas[0]).marshal()
    return Outcome(summary, {"automorphisms": reports}, holds, witness)


def _enumerate_solutions(scenario: Scenario) -> Outcome:
    group = _single_group(scenario)
    alphas = _automorphisms(scenario, group)
    pairs = _pairs(scenario, group)
    options = scenario.options
    reports: List[Dict[str, Any]] = []
    orders: List[int] = []
    candidates = 0
    spectrum_holds = True
    witness: Optional[Dict[str, Any]] = None
    for alpha in alphas:
        report = enumerate_zero_one_solutions(group, alpha, cap=options.subgroup_cap)
        entry: Dict[str, Any] = {"solutions": report.marshal()}
        orders.extend(e.order for e in report.solutions)
        candidates += report.candidates
        if pairs:
            spectrum = nonnegative_spectrum_sweep(
                group, alpha, pairs, exploratory=options.exploratory
            )
            entry["spectrum"] = spectrum.marshal()
            spectrum_holds = spectrum_holds and spectrum.holds
            if not spectrum.holds and witness is None:
                index, reason = spectrum.violations[0]
                witness = {
                    "alpha": marshal_matrix(alpha),
                    "pair": index,
                    "reason": reason,
                    **_pair_witness(pairs[index]),
                }
        reports.append(entry)
    summary: Dict[str, Any] = {
        "candidates": candidates,
        "solutions": len(orders),
        "solution-orders": sorted(orders),
        "holds": spectrum_holds,
    }
    if pairs:
        summary["spectrum-holds"] = spectrum_holds
    if len(alphas) == 1:
        summary["hypotheses"] = hypothesis_flags(alphas[0]).marshal()
    return Outcome(summary, {"automorphisms": reports}, spectrum_holds, witness)


def _subgroup_rows(
    group: FiniteAbelianGroup, alpha: Homomorphism, subgroups: List[Subgroup]
) -> List[Dict[str, Any]]:
    rows: List[Dict[str, Any]] = []
    for subgroup in subgroups:
        condition = lemma_subgroup_condition(subgroup, alpha)
        base = haar_on_subgroup(subgroup)
        symmetric = conditional_symmetry_oracle(
            HeydeInstance(alpha, base, base)
        ).symmetric
        invariant = alpha.image_of(subgroup) == subgroup
        rows.append(
            {
                "group": list(group.orders),
                "alpha": marshal_matrix(alpha),
                "subgroup": marshal_subgroup(subgroup),
                "condition": condition,
                "symmetric": symmetric,
                "agree": condition == symmetric,
                "invariant-images": invariant_subgroup_images(subgroup, alpha)
                if invariant
                else None,
            }
        )
    return rows


def _haar_condition(scenario: Scenario) -> Outcome:
    options = scenario.options
    rows: List[Dict[str, Any]] = []
    subgroup_rows: List[Dict[str, Any]] = []
    for group in _groups(scenario):
        base = haar(group)
        subgroups = (
            enumerate_subgroups(group, cap=options.subgroup_cap)
            if options.subgroups
            else []
        )
        for alpha in _automorphisms(scenario, group):
            condition = proposition_haar_condition(group, alpha)
            dual = proposition_haar_condition_dual(group, alpha)
            symmetric = conditional_symmetry_oracle(
                HeydeInstance(alpha, base, base)
            ).symmetric
            rows.append(
                {
                    "group": list(group.orders),
                    "alpha": marshal_matrix(alpha),
                    "condition": condition,
                    "dual-condition": dual,
                    "symmetric": symmetric,
                    "agree": condition == symmetric == dual,
                }
            )
            if subgroups and check_heyde_admissible(alpha):
                subgroup_rows.extend(_subgroup_rows(group, alpha, subgroups))
    failed = [row for row in rows if not row["agree"]]
    failed += [
        row
        for row in subgroup_rows
        if not row["agree"] or row["invariant-images"] is False
    ]
    summary: Dict[str, Any] = {
        "instances": len(rows),
        "agreements": sum(row["agree"] for row in rows),
        "holds": not failed,
    }
    if len(rows) == 1:
        summary["condition"] = rows[0]["condition"]
        summary["oracle-symmetric"] = rows[0]["symmetric"]
    if options.subgroups:
        summary["subgroup-instances"] = len(subgroup_rows)
        summary["subgroup-agreements"] = sum(row["agree"] for row in subgroup_rows)
    result = {"instances": rows, "subgroup-instances": subgroup_rows}
    return Outcome(summary, result, not failed, failed[0] if failed else None)


def _equivalence_sweep(scenario: Scenario) -> Outcome:
    options = scenario.options
    reports: List[Dict[str, Any]] = []
    witness: Optional[Dict[str, Any]] = None
    totals = {"instances": 0, "agreements": 0, "symmetric": 0, "discrepancies": 0}
    for group in _groups(scenario):
        alphas = _automorphisms(scenario, group, default="auto")
        pairs = _pairs(scenario, group)
        if not scenario.pairs and not scenario.families:
            trials = DEFAULT_RANDOM_TRIALS if options.trials is None else options.trials
            pairs = random_pairs(
                group,
                trials,
                seed=options.seed,
                denominator_bound=options.denominator_bound,
            )
        report = lemma1_equivalence_sweep(group, alphas, pairs, jobs=options.jobs)
        reports.append({**report.marshal(), "automorphisms": len(alphas)})
        totals["instances"] += report.instances
        totals["agreements"] += report.agreements
        totals["symmetric"] += report.symmetric
        totals["discrepancies"] += len(report.discrepancies)
        if report.discrepancies and witness is None:
            first = report.discrepancies[0]
            witness = {**first.marshal(), **_pair_witness(pairs[first.pair_index])}
    summary = {**totals, "groups": len(reports), "holds": witness is None}
    return Outcome(summary, {"groups": reports}, witness is None, witness)


def _truncation_sweep(scenario: Scenario) -> Outcome:
    spec = scenario.group
    if spec is None or spec.primes is None or spec.level is None:
        raise errors.ScenarioValidationError("group.primes", "a tower is required")
    options = scenario.options
    automorphism = scenario.automorphism or AutomorphismSpec.model_validate(
        {"family": "scalars"}
    )
    report = truncation_tower_sweep(
        spec.primes,
        spec.level,
        automorphism.alpha_specs(spec.primes),
        options.check,
        subgroup_cap=options.tower_subgroup_cap or DEFAULT_TOWER_SUBGROUP_CAP,
        trials=DEFAULT_TOWER_TRIALS if options.trials is None else options.trials,
        seed=options.seed,
        exploratory=options.exploratory,
    )
    broken = [
        layer
        for layer in report.layers
        if layer.holds is False or layer.consistent is False
    ]
    summary = {
        "layers": len(report.layers),
        "admissibility-uniform": report.admissibility_uniform,
        "consistent": all(layer.consistent is not False for layer in report.layers),
        "admissible-layers": sum(layer.admissible for layer in report.layers),
        "holds": report.holds,
    }
    witness: Optional[Dict[str, Any]] = broken[0].marshal() if broken else None
    if witness is None and not report.admissibility_uniform:
        witness = {"admissibility-uniform": False}
    return Outcome(summary, report.marshal(), report.holds, witness)


def _gaussian_check(scenario: Scenario) -> Outcome:
    options = scenario.options
    summary: Dict[str, Any] = {}
    result: Dict[str, Any] = {}
    witness: Dict[str, Any] = {}
    if scenario.torus is not None:
        a1, a2, alpha = scenario.torus.build()
        closed = closed_form_condition(a1, a2, alpha)
        window = window_verify(a1, a2, alpha, options.radius)
        agree = closed.holds == window.holds
        summary["torus"] = {
            "closed-form": closed.holds,
            "product-symmetric": closed.product_symmetric,
            "window": window.holds,
            "admissibility": list(admissibility_on_lattice(alpha)),
            "agree": agree,
        }
        result["torus"] = {
            "closed-form": closed.marshal(),
            "window": window.marshal(),
            "radius": options.radius,
        }
        if not agree:
            witness["torus"] = window.marshal()
    if scenario.solenoid is not None:
        sigma1, sigma2, multiplier = scenario.solenoid.values()
        condition = solenoid_pair_condition(sigma1, sigma2, multiplier)
        samples = solenoid_window_verify(
            sigma1, sigma2, multiplier, options.samples, seed=options.seed
        )
        agree = condition == samples.holds
        summary["solenoid"] = {
            "condition": condition,
            "window": samples.holds,
            "admissibility": list(solenoid_admissibility(multiplier)),
            "agree": agree,
        }
        result["solenoid"] = {"window": samples.marshal(), "samples": options.samples}
        if not agree:
            witness["solenoid"] = samples.marshal()
    summary["holds"] = not witness
    return Outcome(summary, result, not witness, witness or None)


def _counterexample_suite(scenario: Scenario) -> Outcome:
    items: Dict[str, Any] = {}
    statuses: Dict[str, str] = {}
    witness: Optional[Dict[str, Any]] = None
    for name in scenario.suite:
        member = load_preset(name).scenario
        if member.kind == "counterexample-suite":
            raise errors.ScenarioValidationError(
                "suite", f"preset {name!r} is itself a suite"
            )
        member = member.with_overrides(jobs=scenario.options.jobs)
        outcome, expectations, passed = _evaluate(member)
        statuses[name] = "pass" if passed else "fail"
        items[name] = {
            "kind": member.kind,
            "summary": outcome.summary,
            "expectations": expectations,
        }
        if not passed and witness is None:
            witness = {"preset": name, "witness": outcome.witness}
    holds = witness is None
    return Outcome({**statuses, "holds": holds}, {"presets": items}, holds, witness)


_RUNNERS: Dict[str, Callable[[Scenario], Outcome]] = {
    "check-symmetry": _check_symmetry,
    "verify-theorem": _verify_theorem,
    "enumerate-solutions": _enumerate_solutions,
    "haar-condition": _haar_condition,
    "counterexample-suite": _counterexample_suite,
    "truncation-sweep": _truncation_sweep,
    "gaussian-check": _gaussian_check,
    "equivalence-sweep": _equivalence_sweep,
}


# endregion
# region Reports
_MISSING = object()


def _lookup(summary: Dict[str, Any], key: str) -> Any:
    if key in summary:
        return summary[key]
    current: Any = summary
    for part in key.split("."):
        if not isinstance(current, dict) or part not in current:
            return _MISSING
        current = current[part]
    return current


def _check_expectations(
    expect: Dict[str, Any], outcome: Outcome
) -> List[Dict[str, Any]]:
    """Compare pinned values with the summary, as canonical JSON.

    :raises ScenarioValidationError: if a key names no summary entry of a
        run that completed.
    """
    checked: List[Dict[str, Any]] = []
    for key in sorted(expect):
        actual = _lookup(outcome.summary, key)
        if actual is _MISSING:
            if outcome.holds:
                raise errors.ScenarioValidationError(
                    f"expect.{key}", "no such summary entry"
                )
            actual = None
        actual = _normalized(actual)
        expected = expect[key]
        met = json.dumps(actual, sort_keys=True) == json.dumps(expected, sort_keys=True)
        if not met:
            logger.warning(f"Expectation {key!r} not met: {actual!r} != {expected!r}")
        checked.append({"key": key, "expected": expected, "actual": actual, "met": met})
    return checked


def _violation_outcome(violation: PropertyViolation, **context: Any) -> Outcome:
    witness = {"property": violation.name, "witness": violation.witness, **context}
    return Outcome({"holds": False}, {}, holds=False, witness=_normalized(witness))


def _evaluate(scenario: Scenario) -> Tuple[Outcome, List[Dict[str, Any]], bool]:
    try:
        outcome = _RUNNERS[scenario.kind](scenario)
    except PropertyViolation as violation:
        outcome = _violation_outcome(violation)
    except TowerLayerError as error:
        if not isinstance(error.error, PropertyViolation):
            raise
        outcome = _violation_outcome(error.error, level=error.level)
    expectations = _check_expectations(scenario.expect, outcome)
    unmet = [e for e in expectations if not e["met"]]
    if outcome.witness is None and unmet:
        outcome = dataclasses.replace(outcome, witness={"expectation": unmet[0]})
    return outcome, expectations, outcome.holds and not unmet


def run_scenario(scenario: Scenario, *, timings: bool = False) -> Report:
    """Run a validated scenario.

    :param timings: Add wall-clock seconds; this makes reports differ run
        to run.
    :returns: The report, with exit code 0 if everything held and 1 if a
        property or an expectation failed.
    :raises HeydeError: on invalid input or an unmet hypothesis guard.
    """
    start = time.perf_counter()
    logger.info(f"Running {scenario.kind} scenario")
    outcome, expectations, passed = _evaluate(scenario)
    document: Dict[str, Any] = {
        "engine": {"name": "heyde-haar", "version": __version__},
        "kind": scenario.kind,
        "scenario": scenario.marshal(),
        "seed": scenario.options.seed,
        "status": "pass" if passed else "fail",
        "summary": outcome.summary,
        "result": outcome.result,
        "expectations": expectations,
    }
    if outcome.witness is not None:
        document["witness"] = outcome.witness
    if timings:
        document["timings"] = {"seconds": round(time.perf_counter() - start, 3)}
    logger.info(f"Scenario {scenario.kind} finished: {document['status']}")
    return Report(document, EXIT_OK if passed else EXIT_FAILED)


# endregion
