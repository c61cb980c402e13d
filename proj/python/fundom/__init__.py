"""Coset representatives and connected fundamental domains for Gamma0(N), Gamma1(N), Gamma(N)."""

from ._core import (
    DuplicateVertex,
    VerificationFailed,
    big_m,
    coset_list,
    cusp_table,
    enumerate_p1,
    evaluate,
    gamma1_quotient_reps,
    graph_summary,
    inv_mod,
    is_connected,
    list_json,
    m_distribution,
    m_table,
    normalize,
    render_json,
    render_svg,
    sym_rep,
    verify,
)

__all__ = [
    "DuplicateVertex",
    "VerificationFailed",
    "big_m",
    "coset_list",
    "cusp_table",
    "enumerate_p1",
    "evaluate",
    "gamma1_quotient_reps",
    "graph_summary",
    "inv_mod",
    "is_connected",
    "list_json",
    "m_distribution",
    "m_table",
    "normalize",
    "render_json",
    "render_svg",
    "sym_rep",
    "verify",
]
