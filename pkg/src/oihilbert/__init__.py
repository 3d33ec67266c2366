"""Equivariant Hilbert series of monomial submodules of free OI-modules.

The width-n components of such a module assemble into a two-variable
series that is rational with a controlled denominator; this package
computes it exactly by compiling generators to a weighted automaton,
and extracts growth invariants from the result.
"""

from .analysis import (
    ArtinianCertificate,
    DegreeFit,
    DimensionGrowth,
    MultiplicityGrowth,
    ShapeReport,
    artinian_test,
    asymptotic_dimension,
    asymptotic_multiplicity,
    fixed_degree_polynomial,
    validate_shape,
)
from .decomposition import (
    Decomposition,
    compute_decomposition,
    repeated_division_sides,
    verify_decomposition,
)
from .errors import OihError
from .oicore import (
    ModulePresentation,
    Monomial,
    dim_deg_width,
    hilbert_width,
    size_invariants,
    symmetrize_fi_ideal,
)
from .schema import InputDocument, load_document, parse_document
from .series import SeriesResult, free_series, module_series
from .words import decode, encode

__version__ = "0.1.0"

__all__ = [
    "ArtinianCertificate",
    "Decomposition",
    "DegreeFit",
    "DimensionGrowth",
    "InputDocument",
    "ModulePresentation",
    "Monomial",
    "MultiplicityGrowth",
    "OihError",
    "SeriesResult",
    "ShapeReport",
    "artinian_test",
    "asymptotic_dimension",
    "asymptotic_multiplicity",
    "compute_decomposition",
    "decode",
    "dim_deg_width",
    "encode",
    "fixed_degree_polynomial",
    "free_series",
    "hilbert_width",
    "load_document",
    "module_series",
    "parse_document",
    "repeated_division_sides",
    "size_invariants",
    "symmetrize_fi_ideal",
    "validate_shape",
    "verify_decomposition",
]
