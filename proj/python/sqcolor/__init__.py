"""2-distance and injective list coloring toolkit for sparse graphs.

The heavy lifting lives in the compiled extension ``sqcolor._core``; this
package re-exports its public surface. Rational quantities (densities,
charges, the pot) come back as :class:`fractions.Fraction`, so every
comparison stays exact.
"""

from ._core import (
    Error,
    Graph,
    average_degree,
    brooks_list_color,
    check_coloring,
    chi2_exact,
    classify,
    color,
    detect,
    detect_any,
    discharge,
    euler_check,
    format_edge_list,
    gen_gadget,
    gen_sparse,
    girth,
    list_color_exact,
    mad_bruteforce,
    mad_exact,
    max_degree,
    parse_edge_list,
    square,
)

__all__ = [
    "Error",
    "Graph",
    "average_degree",
    "brooks_list_color",
    "check_coloring",
    "chi2_exact",
    "classify",
    "color",
    "detect",
    "detect_any",
    "discharge",
    "euler_check",
    "format_edge_list",
    "gen_gadget",
    "gen_sparse",
    "girth",
    "list_color_exact",
    "mad_bruteforce",
    "mad_exact",
    "max_degree",
    "parse_edge_list",
    "square",
]
