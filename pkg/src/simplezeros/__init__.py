"""Coefficient conditions for simple zeros of complex polynomials, with
numerical oracles and sharpness witnesses."""

__version__ = "0.1.0"

from .certifier import Certificate, Strictness, Theorem, Verdict, certify
from .constants import INF, ThresholdTable, cubic_sharp_constant, phi, solve_b
from .polyseries import (
    AnnulusPartition,
    ComplexPoly,
    QuotientSeq,
    from_quotients,
    normalize,
    parse_poly,
    quotients,
    radii,
    serialize_poly,
)
from .rootlab import RootReport, find_roots, realness_check, verify_annuli, winding_count

__all__ = [
    "INF",
    "AnnulusPartition",
    "Certificate",
    "ComplexPoly",
    "QuotientSeq",
    "RootReport",
    "Strictness",
    "Theorem",
    "ThresholdTable",
    "Verdict",
    "certify",
    "cubic_sharp_constant",
    "find_roots",
    "from_quotients",
    "normalize",
    "parse_poly",
    "phi",
    "quotients",
    "radii",
    "realness_check",
    "serialize_poly",
    "solve_b",
    "verify_annuli",
    "winding_count",
]
