"""Exact 2-color Rado numbers for x1 + ... + x_{m-1} = a*x_m.

The package computes the nested-ceiling value C(m, a) and its polynomial
closed form, builds solution-free colorings certifying lower bounds, checks
arbitrary colorings for monochromatic solutions, and determines Rado numbers
exactly by exhaustive search with machine-checkable certificates.
"""

__version__ = "0.1.0"

from .checker import (
    SumsetTable,
    find_mono_solution,
    is_valid_coloring,
    naive_find_mono_solution,
    verify_witness,
)
from .construction import lower_bound_coloring, small_case_coloring
from .core import (
    Color,
    Coloring,
    RadoEquation,
    SolutionTemplate,
    Witness,
    evaluate_template,
    template_values,
)
from .formula import (
    FormulaBreakdown,
    KnownNumber,
    KnownSource,
    ceil_div,
    ceiling_formula,
    closed_form,
    correction_term_bounded,
    decompose,
    general_threshold,
    known_rado_number,
    solution_values_fit,
)
from .search import (
    SearchOutcome,
    SearchStats,
    SweepEntry,
    exact_rado_number,
    prefix_is_solution_free,
    sweep,
)

__all__ = [
    "Color",
    "Coloring",
    "FormulaBreakdown",
    "KnownNumber",
    "KnownSource",
    "RadoEquation",
    "SearchOutcome",
    "SearchStats",
    "SolutionTemplate",
    "SumsetTable",
    "SweepEntry",
    "Witness",
    "ceil_div",
    "ceiling_formula",
    "closed_form",
    "correction_term_bounded",
    "decompose",
    "evaluate_template",
    "exact_rado_number",
    "find_mono_solution",
    "general_threshold",
    "is_valid_coloring",
    "known_rado_number",
    "lower_bound_coloring",
    "naive_find_mono_solution",
    "prefix_is_solution_free",
    "small_case_coloring",
    "solution_values_fit",
    "sweep",
    "template_values",
    "verify_witness",
]
