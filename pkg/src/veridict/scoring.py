"""Probability score: exact mean of the selected weights, and its verdict.

All arithmetic is integer centipercent. The mean is kept as the exact
rational sum/count; verdict thresholds compare cross-multiplied integers,
and only the display string rounds (half-up, two decimals).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    MissingParameterError,
    PhaseOutOfRangeError,
    UnknownOptionError,
    UnknownParameterError,
)
from .taxonomy import Kind, Selection, Taxonomy, Weight

# Mean thresholds in centipercent; both outer boundaries inclusive.
LIKELY_FAKE_MAX_MEAN: Weight = 4400
LIKELY_TRUE_MIN_MEAN: Weight = 6200

# Employment weight permutations, one per test phase. Across the four
# phases every option takes every value exactly once.
PHASE_TABLES: dict[int, dict[str, Weight]] = {
    1: {"autonomo": 0, "desempregado": 3330, "privado": 6660, "publico": 9990},
    2: {"autonomo": 9990, "desempregado": 0, "privado": 3330, "publico": 6660},
    3: {"autonomo": 6660, "desempregado": 9990, "privado": 0, "publico": 3330},
    4: {"autonomo": 3330, "desempregado": 6660, "privado": 9990, "publico": 0},
}

PHASES = tuple(PHASE_TABLES)


class Verdict(str, Enum):
    LIKELY_FAKE = "likely_fake"
    ALERT = "alert"
    LIKELY_TRUE = "likely_true"


@dataclass(frozen=True)
class Score:
    """Exact score: `sum` of the selected weights over `count` parameters."""

    sum: int
    count: int

    def display_percent(self) -> str:
        """Mean as a percent string, rounded half-up to two decimals."""
        hundredths = (2 * self.sum + self.count) // (2 * self.count)
        return f"{hundredths // 100}.{hundredths % 100:02d}"


@dataclass(frozen=True)
class Contribution:
    parameter: str
    option: str
    weight: Weight


@dataclass(frozen=True)
class WhatIf:
    """A single-option substitution that would change the verdict."""

    parameter: str
    option: str
    verdict: Verdict


@dataclass(frozen=True)
class Explanation:
    contributions: tuple[Contribution, ...]
    score: Score
    verdict: Verdict
    display_percent: str
    what_if: tuple[WhatIf, ...]


def employment_weight(phase: int, option_id: str) -> Weight:
    """Weight of an employment option under the given phase permutation."""
    table = PHASE_TABLES.get(phase)
    if table is None:
        raise PhaseOutOfRangeError(f"phase out of range (expected 1..4): {phase}")
    if option_id not in table:
        raise UnknownOptionError(
            f"unknown option {option_id!r} for parameter 'emprego' "
            f"(valid: {', '.join(table)})",
            parameter="emprego",
        )
    return table[option_id]


def _selected_weights(taxonomy: Taxonomy, selection: Selection) -> list[Contribution]:
    if selection.phase not in PHASE_TABLES:
        raise PhaseOutOfRangeError(
            f"phase out of range (expected 1..4): {selection.phase}"
        )
    known = {p.id for p in taxonomy.parameters}
    for key in selection.choices:
        if key not in known:
            raise UnknownParameterError(f"unknown parameter: {key!r}")

    contributions = []
    for param in taxonomy.parameters:
        option_id = selection.choices.get(param.id)
        if option_id is None:
            raise MissingParameterError(
                f"missing parameter: {param.id}", parameter=param.id
            )
        option = param.find_option(option_id)
        if option is None:
            raise UnknownOptionError(
                f"unknown option {option_id!r} for parameter {param.id!r} "
                f"(valid: {', '.join(param.option_ids())})",
                parameter=param.id,
            )
        if param.kind is Kind.PHASED:
            weight = employment_weight(selection.phase, option.id)
        elif option.weight is None:
            raise ValueError(f"static option {param.id}/{option.id} has no weight")
        else:
            weight = option.weight
        contributions.append(Contribution(param.id, option.id, weight))
    return contributions


def score(taxonomy: Taxonomy, selection: Selection) -> Score:
    """Sum the selected weights; the mean divides by the parameter count."""
    contributions = _selected_weights(taxonomy, selection)
    return Score(
        sum=sum(c.weight for c in contributions),
        count=len(taxonomy.parameters),
    )


def verdict(sc: Score) -> Verdict:
    """Three-way classification of the exact mean, boundaries inclusive."""
    if sc.sum <= LIKELY_FAKE_MAX_MEAN * sc.count:
        return Verdict.LIKELY_FAKE
    if sc.sum >= LIKELY_TRUE_MIN_MEAN * sc.count:
        return Verdict.LIKELY_TRUE
    return Verdict.ALERT


def explain(taxonomy: Taxonomy, selection: Selection) -> Explanation:
    """Score with per-option contributions and verdict-flipping what-ifs."""
    contributions = _selected_weights(taxonomy, selection)
    base = Score(sum=sum(c.weight for c in contributions), count=len(taxonomy.parameters))
    base_verdict = verdict(base)

    chosen = {c.parameter: c for c in contributions}
    what_if = []
    for param in taxonomy.parameters:
        current = chosen[param.id]
        for option in param.options:
            if option.id == current.option:
                continue
            if param.kind is Kind.PHASED:
                alt_weight = employment_weight(selection.phase, option.id)
            else:
                alt_weight = option.weight if option.weight is not None else 0
            alt = Score(sum=base.sum - current.weight + alt_weight, count=base.count)
            alt_verdict = verdict(alt)
            if alt_verdict is not base_verdict:
                what_if.append(WhatIf(param.id, option.id, alt_verdict))

    return Explanation(
        contributions=tuple(contributions),
        score=base,
        verdict=base_verdict,
        display_percent=base.display_percent(),
        what_if=tuple(what_if),
    )
