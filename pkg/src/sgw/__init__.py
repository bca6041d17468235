"""Exact computation of super Gromov-Witten numbers.

Subpackages: exact rational/polynomial arithmetic (`exact`), genus-zero
psi/kappa integrals (`taut`), point-target invariants (`point`),
fixed-point graph data (`graphs`), degree-one localization sums
(`localize`), and the first-order quantum product (`quantum`).
"""

from .errors import (
    DimensionError,
    DomainError,
    InconsistencyError,
    ResampleSignal,
    UnsupportedError,
)
from .exact import LinForm, Poly, Rational, RatFunc, complete_homogeneous
from .graphs import (
    EdgeConfig,
    EulerData,
    FixedGraph,
    GraphGeometry,
    enumerate_graphs,
    euler_data,
    ev_pullback,
    geometry,
    single_edge_weights,
)
from .localize import LocalizationJob, check_extension, graph_contribution, invariant
from .point import Invariant, mapping_to_point, sgw_point
from .quantum import PairingMatrix, QElement, star, structure_table
from .taut import TautExpr, TautMonomial, integrate, integrate_monomial, pushforward_step

__all__ = [
    "DimensionError",
    "DomainError",
    "EdgeConfig",
    "EulerData",
    "FixedGraph",
    "GraphGeometry",
    "InconsistencyError",
    "Invariant",
    "LinForm",
    "LocalizationJob",
    "PairingMatrix",
    "Poly",
    "QElement",
    "RatFunc",
    "Rational",
    "ResampleSignal",
    "TautExpr",
    "TautMonomial",
    "UnsupportedError",
    "check_extension",
    "complete_homogeneous",
    "enumerate_graphs",
    "euler_data",
    "ev_pullback",
    "geometry",
    "graph_contribution",
    "integrate",
    "integrate_monomial",
    "invariant",
    "mapping_to_point",
    "pushforward_step",
    "sgw_point",
    "single_edge_weights",
    "star",
    "structure_table",
]
