"""Exact degrees of secant varieties from Segre-class integrals."""

from .descriptors import ParseError, curve, from_text, surface, to_text, veronese
from .secant import (
    SecantReport,
    CrossValidationMismatch,
    closed_form_report,
    coeff_a,
    cross_validate,
    curve_sigma3,
    deg_sigma2,
    deg_sigma3,
    derive_via_blowup,
    mult_sigma2_along_X,
    surface_sigma3,
)
from .xring import AmbientClass, SegreIntegralTable

__version__ = "0.1.0"
