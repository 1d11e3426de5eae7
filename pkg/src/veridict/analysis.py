"""Exhaustive sweep over selection combinations, with regularity checks.

Materializes the scored product of configured countries x all other option
combinations x phases, in deterministic lexicographic order (taxonomy
option order, phase fastest). Checks verify education monotonicity,
country ordering, and phase sensitivity; reports emit as CSV or JSON
lines, byte-identical for identical inputs.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from enum import Enum

from . import scoring
from .errors import SweepError
from .scoring import Verdict
from .taxonomy import Selection, Taxonomy

DEFAULT_COUNTRIES = ("portugal", "angola", "guine-bissau")

COUNTRY_PARAMETER = "pais"
EDUCATION_PARAMETER = "educacao"

# Report column name for the country parameter.
_COLUMN_ALIASES = {COUNTRY_PARAMETER: "country"}


@dataclass(frozen=True)
class SweepConfig:
    countries: tuple[str, ...] = DEFAULT_COUNTRIES
    phases: tuple[int, ...] = scoring.PHASES


@dataclass(frozen=True)
class SweepRow:
    selection: Selection
    sum: int
    count: int
    display_percent: str
    verdict: Verdict

    @property
    def phase(self) -> int:
        return self.selection.phase


class PhaseCategory(str, Enum):
    STABLE = "stable"
    VARIABLE = "variable"


@dataclass(frozen=True)
class PhaseSensitivity:
    """Verdicts of one base selection across all four phases."""

    choices: dict[str, str]
    verdicts_by_phase: dict[int, Verdict]

    @property
    def category(self) -> PhaseCategory:
        if len(set(self.verdicts_by_phase.values())) == 1:
            return PhaseCategory.STABLE
        return PhaseCategory.VARIABLE


@dataclass(frozen=True)
class Counterexample:
    context: str
    expected: str
    observed: str

    def __str__(self) -> str:
        return f"[{self.context}] expected {self.expected}, observed {self.observed}"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    counterexamples: tuple[Counterexample, ...] = field(default=())


def _resolve_config(taxonomy: Taxonomy, cfg: SweepConfig) -> tuple[tuple[str, ...], tuple[int, ...]]:
    country = taxonomy.find_parameter(COUNTRY_PARAMETER)
    if country is None:
        raise SweepError(f"taxonomy has no {COUNTRY_PARAMETER!r} parameter")
    if not cfg.countries:
        raise SweepError("no countries configured")
    unknown = sorted(set(cfg.countries) - set(country.option_ids()))
    if unknown:
        raise SweepError(
            f"unknown countries: {', '.join(unknown)} "
            f"(valid: {', '.join(country.option_ids())})"
        )
    if not cfg.phases:
        raise SweepError("no phases configured")
    bad_phases = sorted(set(cfg.phases) - set(scoring.PHASES))
    if bad_phases:
        raise SweepError(f"phases out of range 1..4: {bad_phases}")

    # Row order follows taxonomy option order, not config order.
    wanted = set(cfg.countries)
    countries = tuple(i for i in country.option_ids() if i in wanted)
    phases = tuple(p for p in scoring.PHASES if p in set(cfg.phases))
    return countries, phases


def sweep(taxonomy: Taxonomy, cfg: SweepConfig = SweepConfig()) -> list[SweepRow]:
    """Score every configured (selection x phase) combination."""
    countries, phases = _resolve_config(taxonomy, cfg)

    axes: list[tuple[str, ...]] = []
    for param in taxonomy.parameters:
        if param.id == COUNTRY_PARAMETER:
            axes.append(countries)
        else:
            axes.append(param.option_ids())
    param_ids = taxonomy.parameter_ids()

    rows = []
    for combo in itertools.product(*axes, phases):
        selection = Selection(choices=dict(zip(param_ids, combo[:-1])), phase=combo[-1])
        sc = scoring.score(taxonomy, selection)
        rows.append(
            SweepRow(
                selection=selection,
                sum=sc.sum,
                count=sc.count,
                display_percent=sc.display_percent(),
                verdict=scoring.verdict(sc),
            )
        )
    return rows


def _context_string(choices: dict[str, str], phase: int, skip: str | None = None) -> str:
    parts = [f"{k}={v}" for k, v in choices.items() if k != skip]
    parts.append(f"phase={phase}")
    return " ".join(parts)


def check_education_monotonicity(taxonomy: Taxonomy, rows: list[SweepRow]) -> CheckResult:
    """Mean must strictly increase along the education options, all else fixed."""
    education = taxonomy.find_parameter(EDUCATION_PARAMETER)
    if education is None:
        raise SweepError(f"taxonomy has no {EDUCATION_PARAMETER!r} parameter")
    order = education.option_ids()

    groups: dict[tuple, dict[str, SweepRow]] = {}
    for row in rows:
        key = tuple(
            (k, v) for k, v in row.selection.choices.items() if k != EDUCATION_PARAMETER
        ) + (("phase", row.phase),)
        groups.setdefault(key, {})[row.selection.choices[EDUCATION_PARAMETER]] = row

    counterexamples = []
    for key, by_level in groups.items():
        missing = [i for i in order if i not in by_level]
        if missing:
            raise SweepError(
                f"incomplete product: missing {EDUCATION_PARAMETER} options "
                f"{', '.join(missing)} for context {dict(key)}"
            )
        for lower, higher in zip(order, order[1:]):
            a, b = by_level[lower], by_level[higher]
            if not a.sum < b.sum:
                counterexamples.append(
                    Counterexample(
                        context=_context_string(
                            a.selection.choices, a.phase, skip=EDUCATION_PARAMETER
                        ),
                        expected=f"mean({lower}) < mean({higher})",
                        observed=f"{a.display_percent} >= {b.display_percent}",
                    )
                )
    return CheckResult(
        check_id="education_monotonicity",
        passed=not counterexamples,
        counterexamples=tuple(counterexamples),
    )


def check_country_ordering(taxonomy: Taxonomy, rows: list[SweepRow]) -> CheckResult:
    """Means must order exactly as the country option weights order."""
    country = taxonomy.find_parameter(COUNTRY_PARAMETER)
    if country is None:
        raise SweepError(f"taxonomy has no {COUNTRY_PARAMETER!r} parameter")
    weights = {o.id: o.weight if o.weight is not None else 0 for o in country.options}

    covered = {row.selection.choices[COUNTRY_PARAMETER] for row in rows}
    ordered_countries = [i for i in country.option_ids() if i in covered]

    groups: dict[tuple, dict[str, SweepRow]] = {}
    for row in rows:
        key = tuple(
            (k, v) for k, v in row.selection.choices.items() if k != COUNTRY_PARAMETER
        ) + (("phase", row.phase),)
        groups.setdefault(key, {})[row.selection.choices[COUNTRY_PARAMETER]] = row

    counterexamples = []
    for key, by_country in groups.items():
        missing = [i for i in ordered_countries if i not in by_country]
        if missing:
            raise SweepError(
                f"incomplete product: missing countries {', '.join(missing)} "
                f"for context {dict(key)}"
            )
        for c1, c2 in itertools.combinations(ordered_countries, 2):
            r1, r2 = by_country[c1], by_country[c2]
            w1, w2 = weights[c1], weights[c2]
            if w1 == w2:
                ok = r1.sum == r2.sum
                expected = f"mean({c1}) == mean({c2})"
            elif w1 > w2:
                ok = r1.sum > r2.sum
                expected = f"mean({c1}) > mean({c2})"
            else:
                ok = r1.sum < r2.sum
                expected = f"mean({c1}) < mean({c2})"
            if not ok:
                counterexamples.append(
                    Counterexample(
                        context=_context_string(
                            r1.selection.choices, r1.phase, skip=COUNTRY_PARAMETER
                        ),
                        expected=expected,
                        observed=f"{r1.display_percent} vs {r2.display_percent}",
                    )
                )
    return CheckResult(
        check_id="country_ordering",
        passed=not counterexamples,
        counterexamples=tuple(counterexamples),
    )


def categorize_phase_sensitivity(rows: list[SweepRow]) -> list[PhaseSensitivity]:
    """Partition base selections by whether the verdict survives all phases."""
    by_base: dict[tuple, dict[int, Verdict]] = {}
    for row in rows:
        base = tuple(row.selection.choices.items())
        by_base.setdefault(base, {})[row.phase] = row.verdict

    result = []
    for base, verdicts in by_base.items():
        missing = sorted(set(scoring.PHASES) - set(verdicts))
        if missing:
            raise SweepError(
                f"incomplete phase coverage: base {dict(base)} missing phases {missing}"
            )
        result.append(
            PhaseSensitivity(
                choices=dict(base),
                verdicts_by_phase={p: verdicts[p] for p in scoring.PHASES},
            )
        )
    return result


def check_phase_sensitivity(rows: list[SweepRow]) -> CheckResult:
    """Both stable and variable bases must occur (as observed in testing)."""
    sensitivities = categorize_phase_sensitivity(rows)
    present = {s.category for s in sensitivities}
    counterexamples = []
    for category in (PhaseCategory.STABLE, PhaseCategory.VARIABLE):
        if category not in present:
            counterexamples.append(
                Counterexample(
                    context=f"{len(sensitivities)} bases",
                    expected=f"at least one {category.value} base",
                    observed="none",
                )
            )
    return CheckResult(
        check_id="phase_sensitivity_both_categories",
        passed=not counterexamples,
        counterexamples=tuple(counterexamples),
    )


def _report_columns(taxonomy: Taxonomy) -> list[tuple[str, str]]:
    return [(_COLUMN_ALIASES.get(p.id, p.id), p.id) for p in taxonomy.parameters]


def emit_report(taxonomy: Taxonomy, rows: list[SweepRow], format: str = "csv") -> bytes:
    """Render rows as CSV or JSON lines; byte-identical for identical inputs."""
    columns = _report_columns(taxonomy)
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([name for name, _ in columns] + ["phase", "mean_percent", "verdict"])
        for row in rows:
            writer.writerow(
                [row.selection.choices[pid] for _, pid in columns]
                + [row.phase, row.display_percent, row.verdict.value]
            )
        return out.getvalue().encode("utf-8")
    if format == "jsonl":
        lines = []
        for row in rows:
            record = {name: row.selection.choices[pid] for name, pid in columns}
            record["phase"] = row.phase
            record["mean_percent"] = row.display_percent
            record["verdict"] = row.verdict.value
            lines.append(json.dumps(record, ensure_ascii=False, separators=(",", ":")))
        return ("\n".join(lines) + ("\n" if lines else "")).encode("utf-8")
    raise ValueError(f"unsupported report format: {format!r}")
