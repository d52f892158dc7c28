"""Spectral factorization through finite Toeplitz sections.

The best monic one-sided predictor of order n against a nonnegative weight
w solves a Hermitian Toeplitz system in the moments w_0 .. w_n; its
prediction error decreases to the geometric mean of w, and the normalized
reciprocal of the predictor converges to the outer factor. Circle
polynomials only: factorization on the torus goes through the cepstral
route, which respects an archimedean order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotNonnegative, NotRealValued, SingularToeplitz
from .report import FactorReport
from .roots import mahler_quadrature
from .trig import TrigPoly, analyze_circle, min_on_grid, sample_circle

REFLECTION_CAP = 1.0 - 1e-12


def toeplitz_moments(w: TrigPoly, n: int) -> np.ndarray:
    """Moments [w_0, ..., w_n] read off the sparse coefficient map."""
    if n < 0:
        raise ValueError("section order must be nonnegative")
    return np.array([w.coeff(k) for k in range(n + 1)], dtype=complex)


@dataclass
class SzegoSection:
    """Order-n solution of the Toeplitz normal equations.

    predictor holds the monic coefficients [1, a_1, ..., a_n]; eps is the
    prediction error, nonincreasing in n with limit the geometric mean of
    the weight; flatness is max/min of |predictor|^2 * w over a grid, which
    heads to 1 as the section grows.
    """

    order: int
    predictor: np.ndarray
    eps: float
    reflections: np.ndarray
    eps_path: np.ndarray
    flatness: float | None = None

    def predictor_poly(self) -> TrigPoly:
        return TrigPoly({j: self.predictor[j] for j in range(self.order + 1)})


def predictor_min_root_modulus(section: SzegoSection) -> float:
    """Smallest root modulus of the predictor; >= 1 when the section is sane."""
    if section.order == 0:
        return np.inf
    lam = np.roots(section.predictor[::-1])
    return float(np.min(np.abs(lam)))


def levinson_solve(
    moments: np.ndarray, weight: TrigPoly | None = None, flatness_grid: int = 4096
) -> SzegoSection:
    """Levinson-Durbin recursion on Hermitian Toeplitz normal equations.

    Raises SingularToeplitz as soon as a reflection coefficient reaches
    modulus 1 - 1e-12. When the weight is not passed, flatness is computed
    against the polynomial rebuilt from the moments by conjugate symmetry,
    which matches the true weight whenever n covers its degree.
    """
    r = np.asarray(moments, dtype=complex)
    n = len(r) - 1
    if abs(r[0].imag) > 1e-12 or r[0].real <= 0:
        raise SingularToeplitz(f"zeroth moment {r[0]:.3e} is not a positive real")
    a = np.zeros(n + 1, dtype=complex)
    a[0] = 1.0
    eps = r[0].real
    reflections = np.zeros(n, dtype=complex)
    eps_path = np.zeros(n + 1)
    eps_path[0] = eps
    for i in range(1, n + 1):
        acc = r[i] + np.dot(a[1:i], r[1:i][::-1])
        k = acc / eps
        if abs(k) >= REFLECTION_CAP:
            raise SingularToeplitz(
                f"reflection coefficient |k_{i}| = {abs(k):.12f} at the cap"
            )
        reflections[i - 1] = k
        a[1 : i + 1] = a[1 : i + 1] - k * np.conj(a[:i][::-1])
        eps = eps * (1.0 - abs(k) ** 2)
        eps_path[i] = eps

    if weight is None:
        weight = TrigPoly(
            {k: r[k] for k in range(n + 1)} | {-k: np.conj(r[k]) for k in range(1, n + 1)}
        )
    section = SzegoSection(
        order=n, predictor=a, eps=float(eps), reflections=reflections, eps_path=eps_path
    )
    grid = max(flatness_grid, 4 * (n + weight.degree + 1))
    a_vals = sample_circle(section.predictor_poly(), grid)
    w_vals = sample_circle(weight, grid).real
    flat = np.abs(a_vals) ** 2 * w_vals
    lo = float(np.min(flat))
    section.flatness = float(np.max(flat) / lo) if lo > 0 else np.inf
    return section


def szego_factor(
    w: TrigPoly,
    n: int | None = None,
    grid_n: int = 4096,
    threshold: float = 1e-10,
) -> FactorReport:
    """Outer factor sqrt(eps_n) / predictor, expanded back to coefficients.

    The reciprocal is taken by grid division, re-analyzed, and truncated at
    the relative threshold; the mean coefficient is pinned to sqrt(eps_n),
    which the construction makes exact. Default section order is 4x the
    weight degree.
    """
    if not w.is_real():
        raise NotRealValued("weight must be real valued")
    # reject sign-indefinite input up front; the recursion would otherwise
    # surface it obliquely as a reflection-coefficient blowup
    gmin = min_on_grid(w)
    if gmin < -1e-9:
        raise NotNonnegative(f"weight dips to {gmin:.3e} on the check grid")
    if n is None:
        n = max(1, 4 * w.degree)
    if grid_n < 4 * (max(n, w.degree) + 1):
        raise ValueError("analysis grid too small for the section order")
    moments = toeplitz_moments(w, n)
    section = levinson_solve(moments, weight=w)

    a_vals = sample_circle(section.predictor_poly(), grid_n)
    a_min = float(np.min(np.abs(a_vals)))
    root = float(np.sqrt(section.eps))
    h_vals = root / a_vals
    coeffs = analyze_circle(h_vals)
    top = max(abs(c) for c in coeffs.values())
    kept = {
        k: c for k, c in coeffs.items() if k >= 0 and abs(c) >= threshold * top
    }
    kept[0] = root  # exact by construction: the predictor is monic
    h = TrigPoly(kept)

    back = h.squared_modulus()
    union = set(back.coeffs) | set(w.coeffs)
    residual = max(abs(back.coeff(k) - w.coeff(k)) for k in union)
    quad, clipped = mahler_quadrature(w)
    return FactorReport(
        method="levinson",
        kind="trig",
        factor=h,
        mahler=float(section.eps),
        residual=float(residual),
        spectrum=[0.0, float(max(h.support))] if h else [0.0, 0.0],
        diagnostics={
            "order": n,
            "eps": section.eps,
            "sqrt_eps": root,
            "mahler_quadrature": quad,
            "eps_vs_quadrature_gap": float(section.eps - quad),
            "flatness": section.flatness,
            "predictor_grid_min": a_min,
            "clipped_log_samples": clipped,
        },
        config={"n": n, "grid": grid_n, "threshold": threshold},
    )
