"""Exact polynomial arithmetic, Groebner bases, and ideal operations."""

from .groebner import groebner_basis, normal_form
from .ideals import (
    IdealPresentation,
    eliminate,
    hadamard_ideals,
    hadamard_transform,
    hadamard_transform_ideal,
    ideal_equal,
    ideal_from_json,
    ideal_intersection,
    ideal_power,
    ideal_sum,
    ideal_to_json,
    irrelevant_power,
    join_ideals,
)
from .orders import GREVLEX, LEX, MonomialOrder, elimination_order
from .poly import (
    PLANE,
    Polynomial,
    VariableBlock,
    format_rational,
    monomials_of_degree,
    parse_rational,
    variables,
)

__all__ = [
    "GREVLEX",
    "LEX",
    "IdealPresentation",
    "MonomialOrder",
    "PLANE",
    "Polynomial",
    "VariableBlock",
    "eliminate",
    "elimination_order",
    "format_rational",
    "groebner_basis",
    "hadamard_ideals",
    "hadamard_transform",
    "hadamard_transform_ideal",
    "ideal_equal",
    "ideal_from_json",
    "ideal_intersection",
    "ideal_power",
    "ideal_sum",
    "ideal_to_json",
    "irrelevant_power",
    "join_ideals",
    "monomials_of_degree",
    "normal_form",
    "parse_rational",
    "variables",
]
