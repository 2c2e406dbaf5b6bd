"""Universal gl and so weight systems evaluated on permutations."""

from .casimir_series import (
    FamilySpec,
    PPData,
    build_F,
    pp_F,
    solve_odd_casimirs,
    verify_pp,
)
from .engine import GL, SO, WeightSystem, eval_wgl, eval_wso
from .fourterm import dim_A, h_check, kernel_dims, kernel_report, quotient_basis
from .pbw import AlgebraSpec, casimir_pbw, centrality_check, normal_form, oracle_check, w_envelope
from .perm import (
    ChordDiagram,
    Permutation,
    canonical_code,
    chord_to_permutation,
    cycles,
    cyclic_conjugate,
    enumerate_diagrams,
    parse_diagram,
    parse_permutation,
)
from .poly import C, InversePowerSeries, Polynomial, parse_polynomial
from .supersigns import distinguished_sets, sign_value

__all__ = [
    "AlgebraSpec",
    "C",
    "ChordDiagram",
    "FamilySpec",
    "GL",
    "InversePowerSeries",
    "PPData",
    "Permutation",
    "Polynomial",
    "SO",
    "WeightSystem",
    "build_F",
    "canonical_code",
    "casimir_pbw",
    "centrality_check",
    "chord_to_permutation",
    "cycles",
    "cyclic_conjugate",
    "dim_A",
    "distinguished_sets",
    "enumerate_diagrams",
    "eval_wgl",
    "eval_wso",
    "h_check",
    "kernel_dims",
    "kernel_report",
    "normal_form",
    "oracle_check",
    "parse_diagram",
    "parse_permutation",
    "parse_polynomial",
    "pp_F",
    "quotient_basis",
    "sign_value",
    "solve_odd_casimirs",
    "verify_pp",
    "w_envelope",
]
