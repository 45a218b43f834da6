"""Equilateral constructions on vertex triples in R^d.

Thin re-export of the compiled module; triples are (3, d) arrays.
"""

from ._napoleon import (
    AlignmentResult,
    LagrangeDiagnostics,
    NoConvergence,
    __version__,
    alignment_objective,
    centroid,
    double_outer_napoleon,
    equilaterality_residual,
    fermat_point,
    is_collinear,
    kkt_residual,
    napoleon,
    napoleon_iter,
    optimal_equilateral_alignment,
    oracle_alignment,
    torricelli,
    weiszfeld,
    wide_angle_vertex,
)

__all__ = [
    "AlignmentResult",
    "LagrangeDiagnostics",
    "NoConvergence",
    "__version__",
    "alignment_objective",
    "centroid",
    "double_outer_napoleon",
    "equilaterality_residual",
    "fermat_point",
    "is_collinear",
    "kkt_residual",
    "napoleon",
    "napoleon_iter",
    "optimal_equilateral_alignment",
    "oracle_alignment",
    "torricelli",
    "weiszfeld",
    "wide_angle_vertex",
]
