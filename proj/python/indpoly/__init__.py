"""Exact independence-polynomial toolkit.

Counts independent sets, evaluates I(G;-1), computes decycling numbers,
and synthesizes connected graphs hitting any target (k, q) with
|q| <= 2^k, together with machine-checkable construction certificates.
"""

from ._core import (
    BoundError,
    CertificateError,
    EdgeListError,
    Graph,
    RootedGraph,
    SizeLimitError,
    bound_sweep,
    brute_force_census,
    compute_bracket,
    extend,
    extend_bracket,
    format_edge_list,
    independence_number,
    independence_polynomial,
    is_acyclic,
    is_connected,
    make_complete,
    make_cycle,
    make_path,
    min_decycling,
    parse_edge_list,
    paste,
    paste_brackets,
    synth,
    value_at_minus_one,
    verify_certificate,
    verify_graph,
)

__version__ = "1.0.0"

__all__ = [
    "BoundError",
    "CertificateError",
    "EdgeListError",
    "Graph",
    "RootedGraph",
    "SizeLimitError",
    "bound_sweep",
    "brute_force_census",
    "compute_bracket",
    "extend",
    "extend_bracket",
    "format_edge_list",
    "independence_number",
    "independence_polynomial",
    "is_acyclic",
    "is_connected",
    "make_complete",
    "make_cycle",
    "make_path",
    "min_decycling",
    "parse_edge_list",
    "paste",
    "paste_brackets",
    "synth",
    "value_at_minus_one",
    "verify_certificate",
    "verify_graph",
]
