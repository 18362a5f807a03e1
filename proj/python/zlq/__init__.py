"""Limited augmented Zarankiewicz numbers for incidence graphs of complete graphs."""

from ._core import (
    Family,
    InputError,
    ParseError,
    candidates,
    classify,
    embed,
    export_lp,
    format_gap_ratio,
    gap_ratio,
    import_solution,
    is_admissible,
    k4t_bound,
    lift,
    recognize_incidence,
    reference_family,
    reference_table,
    search,
    solve_exact,
    stats,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Family",
    "InputError",
    "ParseError",
    "candidates",
    "classify",
    "embed",
    "export_lp",
    "format_gap_ratio",
    "gap_ratio",
    "import_solution",
    "is_admissible",
    "k4t_bound",
    "lift",
    "recognize_incidence",
    "reference_family",
    "reference_table",
    "search",
    "solve_exact",
    "stats",
    "verify",
]
