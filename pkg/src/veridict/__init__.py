"""Veridict: weighted-checklist news credibility scoring."""
from .analysis import (
    CheckResult,
    PhaseCategory,
    PhaseSensitivity,
    SweepConfig,
    SweepRow,
    categorize_phase_sensitivity,
    check_country_ordering,
    check_education_monotonicity,
    check_phase_sensitivity,
    emit_report,
    sweep,
)
from .derivation import (
    AGE,
    COUNTRY,
    CharacteristicRatings,
    Level,
    RatingScheme,
    aggregate,
    classify_level,
    derive_age_profile,
    derive_country_profile,
    rating_value,
)
from .errors import (
    MissingParameterError,
    PhaseOutOfRangeError,
    SelectionError,
    SweepError,
    TaxonomyParseError,
    TaxonomyValidationError,
    UnknownOptionError,
    UnknownParameterError,
    VeridictError,
    WeightPrecisionError,
)
from .scoring import (
    Explanation,
    Score,
    Verdict,
    employment_weight,
    explain,
    score,
    verdict,
)
from .taxonomy import (
    Band,
    Kind,
    Option,
    Parameter,
    Selection,
    Taxonomy,
    Violation,
    builtin_taxonomy,
    format_percent,
    load_taxonomy,
    parse_percent,
    resolve_selection,
    serialize_taxonomy,
    validate_taxonomy,
)

__version__ = "0.1.0"
