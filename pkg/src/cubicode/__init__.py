"""Ternary images of trace codes over the chain ring F_{3^m}[u]/(u^3 - 1)."""

from .bounds import BoundsVerdict, DualWitness, GriesmerReport, dual_weight_search, griesmer, verdict
from .chain_ring import ChainRing, DefiningSet, code_length, defining_set, get_ring
from .gf3m import GF3m, get_field
from .sss import AccessStructure, MinimalityReport, access_structure, massey_shares, minimal_codewords, reconstruct
from .trace_code import CodeSpec, TernaryCode, build_code, export_generators, gray_image
from .weight_dist import (
    GaussPeriods,
    WeightDistribution,
    charsum_distribution,
    enumerate_distribution,
    formula_distribution,
    gauss_periods,
)

__version__ = "0.1.0"

__all__ = [
    "AccessStructure",
    "BoundsVerdict",
    "ChainRing",
    "CodeSpec",
    "DefiningSet",
    "DualWitness",
    "GF3m",
    "GaussPeriods",
    "GriesmerReport",
    "MinimalityReport",
    "TernaryCode",
    "WeightDistribution",
    "access_structure",
    "build_code",
    "charsum_distribution",
    "code_length",
    "defining_set",
    "dual_weight_search",
    "enumerate_distribution",
    "export_generators",
    "formula_distribution",
    "gauss_periods",
    "get_field",
    "get_ring",
    "gray_image",
    "griesmer",
    "massey_shares",
    "minimal_codewords",
    "reconstruct",
    "verdict",
    "__version__",
]
