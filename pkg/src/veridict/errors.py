"""Exception hierarchy shared by the library, CLI and HTTP service."""
from __future__ import annotations


class VeridictError(Exception):
    """Base class for all errors raised by this package."""


class TaxonomyParseError(VeridictError):
    """Taxonomy document is malformed (bad JSON or wrong structure)."""


class WeightPrecisionError(VeridictError):
    """Weight string carries more than two decimal places."""


class TaxonomyValidationError(VeridictError):
    """Taxonomy parsed but breaks invariants; carries the violation list."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid taxonomy: {lines}")


class SelectionError(VeridictError):
    """Selection input cannot be resolved against the taxonomy.

    `code` is a stable machine token; `parameter` names the offending
    parameter when there is one.
    """

    code = "selection_error"

    def __init__(self, message: str, parameter: str | None = None):
        super().__init__(message)
        self.parameter = parameter


class UnknownParameterError(SelectionError):
    code = "unknown_parameter"


class UnknownOptionError(SelectionError):
    code = "unknown_option"


class MissingParameterError(SelectionError):
    code = "missing_parameter"


class PhaseOutOfRangeError(SelectionError):
    code = "phase_out_of_range"


class SweepError(VeridictError):
    """Sweep configuration or row set is unusable (bad ids, incomplete product)."""
