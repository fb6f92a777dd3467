"""Contextuality-by-Default analysis of systems of random variables.

Probabilities are exact: they are returned as ``fractions.Fraction`` and
accepted as anything whose ``str()`` is an exact rational.
"""

from ._contextlab import (
    ContextlabError,
    System,
    bell_system,
    build_system,
    cbd_contextuality,
    cyclic_system,
    fine_model,
    format_system,
    is_consistently_connected,
    leggett_garg_system,
    load_system,
    maximal_coupling_values,
    maximal_couplings,
    nonsignaling_report,
    octuple_model,
    parse_system,
    pr_box_parameters,
    rank2_system,
    report_json,
    solve_lp,
    specker_system,
)

__all__ = [
    "ContextlabError",
    "System",
    "bell_system",
    "build_system",
    "cbd_contextuality",
    "cyclic_system",
    "fine_model",
    "format_system",
    "is_consistently_connected",
    "leggett_garg_system",
    "load_system",
    "maximal_coupling_values",
    "maximal_couplings",
    "nonsignaling_report",
    "octuple_model",
    "parse_system",
    "pr_box_parameters",
    "rank2_system",
    "report_json",
    "solve_lp",
    "specker_system",
]

__version__ = "0.1.0"
