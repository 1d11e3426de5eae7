"""Rebuild parameter classifications from raw characteristic ratings.

Each rating scheme splits 100% evenly across its characteristics; a
characteristic rated at the risky extreme contributes 0, the middle level
contributes half the characteristic budget, and the safe extreme the full
budget. Row totals classify tri-level with inclusive cuts at 33.3%/66.6%.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .taxonomy import MAX_WEIGHT, Weight

# Inclusive tri-level cut points, in centipercent.
MUITO_PROVAVEL_MAX: Weight = 3330
POUCO_PROVAVEL_MIN: Weight = 6660


class Level(str, Enum):
    """Tri-valued likelihood of fake-news propagation.

    The color names are aliases of the probability names: red marks the
    most propagation-prone level, green the least.
    """

    MUITO_PROVAVEL = "muito_provavel"
    PROVAVEL = "provavel"
    POUCO_PROVAVEL = "pouco_provavel"

    VERMELHO = "muito_provavel"
    LARANJA = "provavel"
    VERDE = "pouco_provavel"


@dataclass(frozen=True)
class RatingScheme:
    """How many characteristics a parameter is rated on, and each one's budget."""

    name: str
    characteristic_count: int
    characteristic_budget: Weight
    labels: tuple[str, ...]
    tokens: tuple[str, ...]  # CLI/API input tokens, in Level declaration order


COUNTRY = RatingScheme(
    name="country",
    characteristic_count=5,
    characteristic_budget=2000,
    labels=(
        "1ª Comparação",
        "2ª Comparação",
        "Leis",
        "Transparência",
        "Confiança",
    ),
    tokens=("mp", "p", "pp"),
)

AGE = RatingScheme(
    name="age",
    characteristic_count=3,
    characteristic_budget=3330,
    labels=(
        "Consumo de Fake News",
        "Partilha de Fake News",
        "Nº de utilizadores nas redes sociais",
    ),
    tokens=("vermelho", "laranja", "verde"),
)

SCHEMES = {s.name: s for s in (COUNTRY, AGE)}


@dataclass(frozen=True)
class CharacteristicRatings:
    scheme: RatingScheme
    ratings: tuple[Level, ...]


def rating_value(scheme: RatingScheme, level: Level) -> Weight:
    """Centipercent contribution of one characteristic rated at `level`."""
    if level is Level.MUITO_PROVAVEL:
        return 0
    if level is Level.PROVAVEL:
        return scheme.characteristic_budget // 2
    return scheme.characteristic_budget


def aggregate(ratings: CharacteristicRatings) -> Weight:
    """Sum the per-characteristic values of a rating row."""
    if len(ratings.ratings) != ratings.scheme.characteristic_count:
        raise ValueError(
            f"expected {ratings.scheme.characteristic_count} ratings, "
            f"got {len(ratings.ratings)}"
        )
    return sum(rating_value(ratings.scheme, level) for level in ratings.ratings)


def classify_level(total: Weight) -> Level:
    """Tri-level classification of an aggregated total, cuts inclusive."""
    if not 0 <= total <= MAX_WEIGHT:
        raise ValueError(f"total out of range 0..{MAX_WEIGHT}: {total}")
    if total <= MUITO_PROVAVEL_MAX:
        return Level.MUITO_PROVAVEL
    if total >= POUCO_PROVAVEL_MIN:
        return Level.POUCO_PROVAVEL
    return Level.PROVAVEL


def derive_country_profile(
    name: str, ratings: CharacteristicRatings
) -> tuple[Level, Weight]:
    """Classify a country from its five characteristic ratings.

    The returned weight is usable directly as the country's option weight
    in a taxonomy. `name` is display context only.
    """
    if ratings.scheme is not COUNTRY:
        raise ValueError(f"expected the country scheme, got {ratings.scheme.name!r}")
    total = aggregate(ratings)
    return classify_level(total), total


def derive_age_profile(
    group: str, ratings: CharacteristicRatings
) -> tuple[Level, Weight]:
    """Classify an age group from its three characteristic ratings."""
    if ratings.scheme is not AGE:
        raise ValueError(f"expected the age scheme, got {ratings.scheme.name!r}")
    total = aggregate(ratings)
    return classify_level(total), total


def parse_ratings(scheme: RatingScheme, tokens: list[str]) -> CharacteristicRatings:
    """Build a rating row from input tokens (country: mp|p|pp, age colors)."""
    if len(tokens) != scheme.characteristic_count:
        raise ValueError(
            f"expected {scheme.characteristic_count} ratings, got {len(tokens)}"
        )
    token_levels = dict(
        zip(scheme.tokens, (Level.MUITO_PROVAVEL, Level.PROVAVEL, Level.POUCO_PROVAVEL))
    )
    levels = []
    for token in tokens:
        level = token_levels.get(token.strip().lower())
        if level is None:
            raise ValueError(
                f"unknown rating token {token!r} (valid: {', '.join(scheme.tokens)})"
            )
        levels.append(level)
    return CharacteristicRatings(scheme=scheme, ratings=tuple(levels))
