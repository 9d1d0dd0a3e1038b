"""Exact computation with banded Hessenberg recurrence matrices of fold-symmetric
multiple orthogonal polynomials: bidiagonal factorisations, lattice-path
generating polynomials, production matrices, orthogonality, total positivity,
zeros, and the hypergeometric Appell example."""
from starhess.bidiag import AlphaSpec, BandedHessenberg, closed_form_entries, hessenberg_product
from starhess.kernels import BACKEND
from starhess.ring import MultiPoly, UniPoly, pochhammer, substitute_alpha

__all__ = [
    "AlphaSpec",
    "BACKEND",
    "BandedHessenberg",
    "MultiPoly",
    "UniPoly",
    "closed_form_entries",
    "hessenberg_product",
    "pochhammer",
    "substitute_alpha",
]
__version__ = "0.1.0"
