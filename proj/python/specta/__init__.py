"""Exact planar decompositions, spectral fingerprints and formal path evaluation."""

from ._core import (
    CellComplex,
    Decomposition,
    Function,
    Path,
    Series,
    SpectaError,
    analysis_report,
    bricks,
    compare,
    constant_term,
    contains_point,
    decompose,
    eta,
    eval_on_path,
    fingerprint,
    ideal_membership,
    neighborhood_membership,
    positivity_bound,
    rho_sequence,
    run_cli,
    separate,
)

__all__ = [
    "CellComplex",
    "Decomposition",
    "Function",
    "Path",
    "Series",
    "SpectaError",
    "analysis_report",
    "bricks",
    "compare",
    "constant_term",
    "contains_point",
    "decompose",
    "eta",
    "eval_on_path",
    "fingerprint",
    "ideal_membership",
    "neighborhood_membership",
    "positivity_bound",
    "rho_sequence",
    "run_cli",
    "separate",
]
