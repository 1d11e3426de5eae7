"""Shared fixtures and reference data for the test suite."""
from __future__ import annotations

import dataclasses

import pytest

from veridict.taxonomy import Option, Parameter, Taxonomy, builtin_taxonomy

# The known-good worked example: highest-credibility choices everywhere.
# At phase 1 this sums to 52750 centipercent and displays "87.92".
TRUE_NEWS_SELECTION = {
    "pais": "portugal",
    "idade": "jovem",
    "educacao": "superior",
    "emprego": "publico",
    "fonte": "respeitada",
    "relacao": "profissional",
}

# Reference rating rows behind the builtin country weights: five
# characteristic ratings each (mp=0, p=1000, pp=2000 centipercent),
# with the expected aggregated level and total.
COUNTRY_RATING_ROWS = {
    "Angola": ("p,pp,pp,mp,mp", "provavel", 5000),
    "Brasil": ("mp,mp,pp,p,pp", "provavel", 5000),
    "Cabo Verde": ("mp,p,pp,pp,mp", "provavel", 5000),
    "Guiné-Bissau": ("pp,mp,mp,mp,p", "muito_provavel", 3000),
    "Guiné Equatorial": ("pp,pp,pp,mp,p", "pouco_provavel", 7000),
    "Moçambique": ("pp,p,pp,mp,mp", "provavel", 5000),
    "Portugal": ("mp,p,pp,pp,pp", "pouco_provavel", 7000),
    "São Tomé e Príncipe": ("p,mp,pp,p,mp", "provavel", 4000),
    "Timor-Leste": ("p,p,pp,p,pp", "pouco_provavel", 7000),
}

# Reference rating rows behind the builtin age weights: three
# characteristic ratings each (vermelho=0, laranja=1665, verde=3330).
AGE_RATING_ROWS = {
    "Jovem": ("verde,verde,vermelho", "pouco_provavel", 6660),
    "Adulto": ("laranja,laranja,laranja", "provavel", 4995),
    "Idoso": ("vermelho,vermelho,verde", "muito_provavel", 3330),
}


@pytest.fixture(scope="session")
def builtin() -> Taxonomy:
    return builtin_taxonomy()


def with_option_weights(taxonomy: Taxonomy, parameter_id: str, weights: dict[str, int]) -> Taxonomy:
    """Copy of `taxonomy` with some static option weights replaced."""
    parameters = []
    for param in taxonomy.parameters:
        if param.id == parameter_id:
            options = tuple(
                dataclasses.replace(o, weight=weights.get(o.id, o.weight))
                for o in param.options
            )
            param = dataclasses.replace(param, options=options)
        parameters.append(param)
    return dataclasses.replace(taxonomy, parameters=tuple(parameters))


def uniform_taxonomy(weight: int, parameter_count: int = 3, options_per_parameter: int = 2) -> Taxonomy:
    """Synthetic taxonomy where every option carries the same weight."""
    from veridict.taxonomy import Kind

    parameters = tuple(
        Parameter(
            id=f"p{i}",
            label=f"P{i}",
            kind=Kind.STATIC,
            options=tuple(
                Option(id=f"o{j}", label=f"O{j}", weight=weight)
                for j in range(options_per_parameter)
            ),
        )
        for i in range(parameter_count)
    )
    return Taxonomy(version="synthetic", parameters=parameters)
