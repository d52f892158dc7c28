"""Spectral factorization of trigonometric and almost periodic polynomials.

Factor a nonnegative weight w as |h|^2 with h outer, three ways on the
circle (roots, log-domain, Toeplitz sections) and one on the 2-torus under
an archimedean frequency order; extend the results to entire functions of
exponential type and certify outerness by zero counting.
"""

from .almost_periodic import (
    APFunc,
    ap_from_trig,
    ap_mul,
    bohr_mean,
    bohr_mean_interval,
    entire_extend,
    poisson_extend,
    poisson_kernel_mean,
)
from .cepstral import (
    CepstralTrace,
    cepstral_factor_circle,
    cepstral_factor_ordered,
    herglotz_factor,
    ladder_stages,
    wiener_norm_check,
)
from .entire import (
    AhiezerPair,
    ahiezer_from_factor,
    certified_height,
    exp_type,
    outer_by_zero_count,
    upper_halfplane_zero_count,
    upper_zero_count_certified,
    upper_zero_count_period,
)
from .errors import (
    NumericalError,
    SpecfactError,
    ValidationError,
)
from .levinson import (
    SzegoSection,
    levinson_solve,
    szego_factor,
    toeplitz_moments,
)
from .ordering import ArchOrder, analytic_transform, hilbert_transform
from .report import FactorReport
from .roots import (
    RootFactorization,
    fejer_riesz,
    inner_outer_split,
    is_outer,
    mahler_jensen,
    mahler_quadrature,
)
from .trig import BivarPoly, TrigPoly, fejer_smooth, min_on_grid

__version__ = "0.1.0"

__all__ = [
    "APFunc",
    "AhiezerPair",
    "ArchOrder",
    "BivarPoly",
    "CepstralTrace",
    "FactorReport",
    "NumericalError",
    "RootFactorization",
    "SpecfactError",
    "SzegoSection",
    "TrigPoly",
    "ValidationError",
    "ahiezer_from_factor",
    "certified_height",
    "analytic_transform",
    "ap_from_trig",
    "ap_mul",
    "bohr_mean",
    "bohr_mean_interval",
    "cepstral_factor_circle",
    "cepstral_factor_ordered",
    "entire_extend",
    "exp_type",
    "fejer_riesz",
    "fejer_smooth",
    "herglotz_factor",
    "hilbert_transform",
    "inner_outer_split",
    "is_outer",
    "ladder_stages",
    "levinson_solve",
    "mahler_jensen",
    "mahler_quadrature",
    "min_on_grid",
    "outer_by_zero_count",
    "poisson_extend",
    "poisson_kernel_mean",
    "szego_factor",
    "toeplitz_moments",
    "upper_halfplane_zero_count",
    "upper_zero_count_certified",
    "upper_zero_count_period",
    "wiener_norm_check",
]
