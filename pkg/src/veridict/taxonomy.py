"""Taxonomy data model, builtin weight tables, and file loading/validation.

The taxonomy is the scoring universe: an ordered list of parameters, each
with named options carrying fixed-point weights. Weights are integers in
centipercent (1 unit = 0.01%), so every shipped value (33.3, 16.65, 49.95,
99.9) is exact and threshold comparisons downstream stay integer-exact.

A constructed taxonomy is immutable; constructors do not validate, so
invalid structures can be built on purpose and inspected with
`validate_taxonomy`, which returns violations as data.
"""
from __future__ import annotations

import difflib
import json
import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from importlib.resources import files
from typing import Iterable, Mapping

import jsonschema

from .errors import (
    MissingParameterError,
    PhaseOutOfRangeError,
    TaxonomyParseError,
    TaxonomyValidationError,
    UnknownOptionError,
    UnknownParameterError,
    WeightPrecisionError,
)

# Weights are plain ints in centipercent, 0..=10000.
Weight = int

MAX_WEIGHT: Weight = 10_000

BUILTIN_VERSION = "builtin-1"

# Option vocabulary of phased parameters; their weights come from the phase
# tables in `scoring`, so any other id would be unpriceable.
PHASED_OPTION_IDS = ("autonomo", "desempregado", "privado", "publico")

_ID_PATTERN = re.compile(r"^[a-z0-9][a-z0-9-]*$")


class Band(Enum):
    """Min/mid/max classification of an option, when one is assigned."""

    MIN = "min"
    MID = "mid"
    MAX = "max"
    UNBANDED = "unbanded"


class Kind(Enum):
    STATIC = "static"
    PHASED = "phased"


@dataclass(frozen=True)
class Option:
    """A selectable value of a parameter.

    `weight` is None exactly when the owning parameter is phased.
    """

    id: str
    label: str
    weight: Weight | None
    band: Band = Band.UNBANDED


@dataclass(frozen=True)
class Parameter:
    id: str
    label: str
    kind: Kind
    options: tuple[Option, ...]

    def option_ids(self) -> tuple[str, ...]:
        return tuple(o.id for o in self.options)

    def find_option(self, option_id: str) -> Option | None:
        for o in self.options:
            if o.id == option_id:
                return o
        return None


@dataclass(frozen=True)
class Taxonomy:
    version: str
    parameters: tuple[Parameter, ...]

    def parameter_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.parameters)

    def find_parameter(self, parameter_id: str) -> Parameter | None:
        for p in self.parameters:
            if p.id == parameter_id:
                return p
        return None


@dataclass(frozen=True)
class Selection:
    """One chosen option per parameter, plus the employment weight phase."""

    choices: Mapping[str, str]
    phase: int = 1


@dataclass(frozen=True)
class Violation:
    """A broken taxonomy invariant, located by parameter/option path."""

    path: str
    rule: str

    def __str__(self) -> str:
        return f"{self.path}: {self.rule}"


def parse_percent(text: str) -> Weight:
    """Parse a decimal-percent string ("49.95") to exact centipercent.

    At most two decimal places are accepted; more raise WeightPrecisionError
    because they cannot be represented exactly.
    """
    m = re.fullmatch(r"(\d+)(?:\.(\d+))?", text.strip())
    if m is None:
        raise TaxonomyParseError(f"not a decimal percent: {text!r}")
    whole, frac = m.group(1), m.group(2) or ""
    if len(frac) > 2:
        raise WeightPrecisionError(
            f"weight {text!r} has more than 2 decimal places"
        )
    return int(whole) * 100 + int(frac.ljust(2, "0") or "0")


def format_percent(weight: Weight) -> str:
    """Centipercent to its canonical 2-decimal percent string (7000 -> "70.00")."""
    if weight < 0:
        raise ValueError(f"negative weight: {weight}")
    return f"{weight // 100}.{weight % 100:02d}"


def fold_token(text: str) -> str:
    """Normalize user input to id form: strip diacritics, casefold, dashes.

    "Educação" -> "educacao", "São Tomé e Príncipe" -> "sao-tome-e-principe".
    """
    decomposed = unicodedata.normalize("NFKD", text)
    ascii_only = "".join(c for c in decomposed if not unicodedata.combining(c))
    return re.sub(r"\s+", "-", ascii_only.casefold().strip())


def _static(param_id: str, label: str, options: Iterable[tuple[str, str, Weight, Band]]) -> Parameter:
    return Parameter(
        id=param_id,
        label=label,
        kind=Kind.STATIC,
        options=tuple(Option(id=i, label=l, weight=w, band=b) for i, l, w, b in options),
    )


def builtin_taxonomy() -> Taxonomy:
    """The shipped six-parameter taxonomy with its fixed weight tables."""
    emprego = Parameter(
        id="emprego",
        label="Emprego",
        kind=Kind.PHASED,
        options=tuple(
            Option(id=i, label=l, weight=None, band=Band.UNBANDED)
            for i, l in (
                ("autonomo", "Autónomo"),
                ("desempregado", "Desempregado"),
                ("privado", "Privado"),
                ("publico", "Público"),
            )
        ),
    )
    return Taxonomy(
        version=BUILTIN_VERSION,
        parameters=(
            _static("pais", "País", (
                ("angola", "Angola", 5000, Band.MID),
                ("brasil", "Brasil", 5000, Band.MID),
                ("cabo-verde", "Cabo Verde", 5000, Band.MID),
                ("guine-bissau", "Guiné-Bissau", 3000, Band.MIN),
                ("guine-equatorial", "Guiné Equatorial", 7000, Band.MAX),
                ("mocambique", "Moçambique", 5000, Band.MID),
                ("portugal", "Portugal", 7000, Band.MAX),
                ("sao-tome-e-principe", "São Tomé e Príncipe", 4000, Band.MID),
                ("timor-leste", "Timor-Leste", 7000, Band.MAX),
            )),
            _static("idade", "Idade", (
                ("jovem", "Jovem", 6660, Band.MAX),
                ("adulto", "Adulto", 4995, Band.MID),
                ("idoso", "Idoso", 3330, Band.MIN),
            )),
            _static("educacao", "Educação", (
                ("basico", "Ensino Básico", 0, Band.MIN),
                ("secundario", "Ensino Secundário", 5000, Band.MID),
                ("superior", "Ensino Superior", 10000, Band.MAX),
            )),
            emprego,
            _static("fonte", "Fonte", (
                ("publica", "Pública", 0, Band.MIN),
                ("privada", "Privada", 5000, Band.MID),
                ("respeitada", "Respeitada", 10000, Band.MAX),
            )),
            _static("relacao", "Relação Interpessoal", (
                ("familiar", "Familiar", 4900, Band.MIN),
                ("amizade", "Amizade", 6800, Band.MID),
                ("profissional", "Contacto Profissional", 9100, Band.MAX),
                ("outro", "Outro tipo de contacto", 9100, Band.MAX),
            )),
        ),
    )


def validate_taxonomy(taxonomy: Taxonomy) -> list[Violation]:
    """Check every invariant; empty list means the taxonomy is sound.

    Violations come back in document order so reports are deterministic.
    """
    violations: list[Violation] = []
    if not taxonomy.parameters:
        violations.append(Violation("taxonomy", "taxonomy has no parameters"))

    seen_params: set[str] = set()
    for param in taxonomy.parameters:
        if not _ID_PATTERN.match(param.id):
            violations.append(Violation(param.id, "invalid parameter id (must be lowercase ASCII token)"))
        if param.id in seen_params:
            violations.append(Violation(param.id, "duplicate parameter id"))
        seen_params.add(param.id)

        if len(param.options) < 2:
            violations.append(Violation(param.id, "parameter has fewer than 2 options"))

        seen_options: set[str] = set()
        for option in param.options:
            path = f"{param.id}.{option.id}"
            if not _ID_PATTERN.match(option.id):
                violations.append(Violation(path, "invalid option id (must be lowercase ASCII token)"))
            if option.id in seen_options:
                violations.append(Violation(path, f"duplicate option id {option.id!r} in parameter {param.id!r}"))
            seen_options.add(option.id)

            if param.kind is Kind.STATIC:
                if option.weight is None:
                    violations.append(Violation(path, "static option missing weight"))
                elif not 0 <= option.weight <= MAX_WEIGHT:
                    violations.append(Violation(path, "weight out of range"))
            else:
                if option.weight is not None:
                    violations.append(Violation(path, "phased option must not carry a fixed weight"))
                if option.id not in PHASED_OPTION_IDS:
                    violations.append(Violation(path, "phased option id has no phase-table weight"))
    return violations


def _schema() -> dict:
    return json.loads(files("veridict.schema").joinpath("taxonomy.schema.json").read_text("utf-8"))


def load_taxonomy(document: bytes | str) -> Taxonomy:
    """Parse and validate a taxonomy file (see schema/taxonomy.schema.json)."""
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise TaxonomyParseError(f"document is not UTF-8: {exc}") from exc
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise TaxonomyParseError(f"document is not valid JSON: {exc}") from exc

    try:
        jsonschema.validate(instance=data, schema=_schema())
    except jsonschema.ValidationError as exc:
        location = "/".join(str(p) for p in exc.absolute_path) or "document"
        raise TaxonomyParseError(f"malformed taxonomy at {location}: {exc.message}") from exc

    parameters = []
    for p in data["parameters"]:
        kind = Kind(p["kind"])
        options = []
        for o in p["options"]:
            if kind is Kind.STATIC:
                if "weight" not in o:
                    raise TaxonomyParseError(
                        f"static option {p['id']}/{o['id']} is missing its weight"
                    )
                weight = parse_percent(o["weight"])
            else:
                if "weight" in o:
                    raise TaxonomyParseError(
                        f"phased option {p['id']}/{o['id']} must not carry a weight"
                    )
                weight = None
            band = Band(o["band"]) if o.get("band") is not None else Band.UNBANDED
            options.append(Option(id=o["id"], label=o["label"], weight=weight, band=band))
        parameters.append(Parameter(id=p["id"], label=p["label"], kind=kind, options=tuple(options)))

    taxonomy = Taxonomy(version=data["version"], parameters=tuple(parameters))
    violations = validate_taxonomy(taxonomy)
    if violations:
        raise TaxonomyValidationError(violations)
    return taxonomy


def serialize_taxonomy(taxonomy: Taxonomy) -> bytes:
    """Canonical UTF-8 serialization in the taxonomy file format.

    Deterministic: equal taxonomies serialize to identical bytes, and the
    output round-trips through `load_taxonomy`.
    """
    doc = {
        "version": taxonomy.version,
        "parameters": [
            {
                "id": p.id,
                "label": p.label,
                "kind": p.kind.value,
                "options": [_serialize_option(p, o) for o in p.options],
            }
            for p in taxonomy.parameters
        ],
    }
    return (json.dumps(doc, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def _serialize_option(param: Parameter, option: Option) -> dict:
    out: dict = {"id": option.id, "label": option.label}
    if param.kind is Kind.STATIC:
        out["weight"] = format_percent(option.weight if option.weight is not None else 0)
    out["band"] = None if option.band is Band.UNBANDED else option.band.value
    return out


def resolve_selection(taxonomy: Taxonomy, raw: Mapping[str, str], phase: int = 1) -> Selection:
    """Match raw key/value strings to parameter/option ids.

    Matching is case-insensitive and diacritic-folded, so "Educação" finds
    "educacao" and "Guiné-Bissau" finds "guine-bissau". Unknown names raise
    with the nearest valid ids; a missing parameter or an out-of-range phase
    raises too.
    """
    if not isinstance(phase, int) or isinstance(phase, bool) or not 1 <= phase <= 4:
        raise PhaseOutOfRangeError(f"phase out of range (expected 1..4): {phase}")

    by_folded_param = {fold_token(p.id): p for p in taxonomy.parameters}
    choices: dict[str, str] = {}
    for raw_key, raw_value in raw.items():
        param = by_folded_param.get(fold_token(raw_key))
        if param is None:
            raise UnknownParameterError(
                f"unknown parameter: {raw_key!r}"
                f"{_nearest(fold_token(raw_key), taxonomy.parameter_ids())}",
            )
        if param.id in choices:
            raise UnknownParameterError(
                f"parameter given more than once: {param.id!r}", parameter=param.id
            )
        folded_value = fold_token(raw_value)
        option = next((o for o in param.options if fold_token(o.id) == folded_value), None)
        if option is None:
            raise UnknownOptionError(
                f"unknown option {raw_value!r} for parameter {param.id!r}"
                f"{_nearest(folded_value, param.option_ids())}",
                parameter=param.id,
            )
        choices[param.id] = option.id

    for param in taxonomy.parameters:
        if param.id not in choices:
            raise MissingParameterError(f"missing parameter: {param.id}", parameter=param.id)

    ordered = {p.id: choices[p.id] for p in taxonomy.parameters}
    return Selection(choices=ordered, phase=phase)


def _nearest(token: str, valid: tuple[str, ...]) -> str:
    close = difflib.get_close_matches(token, valid, n=3, cutoff=0.4) or list(valid)
    return f" (valid: {', '.join(close)})"
