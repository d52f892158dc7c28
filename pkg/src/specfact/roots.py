"""Spectral factorization of nonnegative circle polynomials through the
roots of the associated algebraic polynomial, plus the Mahler measure,
the outerness test, and the inner/outer splitting that fall out of the
same root data.

A real nonnegative w of degree d equals |h|^2 for an analytic polynomial
h of degree d. The roots of z^d * w(z) come in reflection pairs
lam <-> 1/conj(lam); keeping one root per pair with modulus >= 1 and
rescaling gives the outer (minimum phase) factor directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AllCoefficientsZero,
    DegenerateLeadingCoeff,
    NonpolynomialInner,
    NotNonnegative,
    OddBoundaryCluster,
)
from .trig import TrigPoly, min_on_grid, sample_circle

LEADING_FLOOR = 1e-14
LOG_CLIP = -700.0


@dataclass
class RootFactorization:
    """Outer factor h with the root data that produced it.

    squared_modulus(h) matches the input within residual (max coefficient
    error); every kept root has modulus >= 1 up to pairing noise, and the
    mean coefficient of h is real positive.
    """

    h: TrigPoly
    roots: np.ndarray
    scale: float
    residual: float
    boundary_pairs: int = 0


def _analytic_coeff_array(h: TrigPoly) -> np.ndarray:
    """Ascending coefficients [h_0, ..., h_d]; rejects negative frequencies."""
    if not h:
        raise AllCoefficientsZero("polynomial has no nonzero coefficients")
    lo, hi = min(h.support), max(h.support)
    if lo < 0:
        raise ValueError("analytic-polynomial operation needs support in [0, d]")
    arr = np.zeros(hi + 1, dtype=complex)
    for k, v in h.coeffs.items():
        arr[k] = v
    return arr


def _pair_boundary(boundary: list, tol: float) -> list:
    """Greedy nearest-neighbor pairing; each pair contributes its midpoint."""
    if len(boundary) % 2 != 0:
        raise OddBoundaryCluster(
            f"{len(boundary)} roots sit on the unit circle band; cannot pair"
        )
    reps = []
    left = list(boundary)
    while left:
        z = left.pop(0)
        dists = [abs(z - u) for u in left]
        j = int(np.argmin(dists))
        if dists[j] > 8 * tol:
            raise OddBoundaryCluster(
                f"boundary root {z:.8g} has no partner within {8 * tol:.1e}"
            )
        reps.append((z + left.pop(j)) / 2)
    return reps


def fejer_riesz(
    w: TrigPoly,
    nonneg_tol: float = 1e-9,
    boundary_tol: float = 1e-6,
    refine: bool = False,
) -> RootFactorization:
    """Factor a real nonnegative trig polynomial as |h|^2 with h outer.

    Parameters
    ----------
    w : TrigPoly
        Real valued (conjugate symmetric) and nonnegative on the grid.
    nonneg_tol : float
        How far below zero the grid minimum may dip before rejection.
    boundary_tol : float
        Half-width of the band around the unit circle whose roots get
        matched into reflection pairs.
    refine : bool
        One Newton step per off-circle root before rebuilding, off by default.
    """
    if min_on_grid(w) < -nonneg_tol:  # also enforces realness
        raise NotNonnegative("weight dips below -tolerance on the check grid")
    d = max(w.support) if w else 0
    lead = w.coeff(d)
    if abs(lead) < LEADING_FLOOR:
        raise DegenerateLeadingCoeff(f"|w_{d}| = {abs(lead):.2e} below {LEADING_FLOOR}")
    if d == 0:
        c = float(np.sqrt(w.coeff(0).real))
        return RootFactorization(
            h=TrigPoly({0: c}), roots=np.array([]), scale=c, residual=0.0
        )

    # roots of P(z) = sum_k w_k z^(k+d), a degree-2d polynomial with P(0) != 0
    p_desc = np.array([w.coeff(k) for k in range(d, -d - 1, -1)], dtype=complex)
    lam = np.roots(p_desc)

    radius = np.abs(lam)
    on_band = np.abs(radius - 1.0) <= boundary_tol
    outside = lam[(~on_band) & (radius > 1.0)]
    boundary = list(lam[on_band])
    pair_reps = _pair_boundary(boundary, boundary_tol)

    selected = list(outside) + pair_reps
    if len(selected) != d:
        raise OddBoundaryCluster(
            f"kept {len(selected)} roots where degree {d} was expected"
        )

    if refine:
        p_der = np.polyder(p_desc)
        refined = []
        for z in selected:
            dp = np.polyval(p_der, z)
            if z in pair_reps or dp == 0:
                refined.append(z)
            else:
                refined.append(z - np.polyval(p_desc, z) / dp)
        selected = refined

    selected = np.array(selected, dtype=complex)
    g = np.poly(selected)[::-1]  # ascending, monic
    trial = TrigPoly({j: g[j] for j in range(d + 1)})
    s = trial.squared_modulus()

    keys = set(w.coeffs) | set(s.coeffs)
    num = sum((np.conj(s.coeff(k)) * w.coeff(k)).real for k in keys)
    den = sum(abs(s.coeff(k)) ** 2 for k in keys)
    t2 = num / den
    if t2 <= 0:
        raise NotNonnegative("no positive scaling matches the weight")
    t = float(np.sqrt(t2))

    phase = np.conj(g[0]) / abs(g[0])  # makes the mean coefficient real positive
    h = TrigPoly({j: t * phase * g[j] for j in range(d + 1)})

    back = h.squared_modulus()
    residual = max(abs(back.coeff(k) - w.coeff(k)) for k in keys)
    return RootFactorization(
        h=h,
        roots=selected,
        scale=t,
        residual=float(residual),
        boundary_pairs=len(pair_reps),
    )


def mahler_jensen(h: TrigPoly) -> float:
    """Geometric mean of |h| over the circle, via the root product.

    Equals |first nonzero coefficient| times the product of 1/|lam| over
    roots lam inside the open unit disk (a factor of e^{imx} contributes
    nothing to the modulus).
    """
    arr = _analytic_coeff_array(h)
    m0 = int(np.argmax(np.abs(arr) > 0))
    g = arr[m0:]
    if len(g) == 1:
        return float(abs(g[0]))
    lam = np.roots(g[::-1])
    factors = np.maximum(1.0 / np.abs(lam), 1.0)
    return float(abs(g[0]) * np.prod(factors))


def mahler_quadrature(h: TrigPoly, n: int = 2**14) -> tuple:
    """Trapezoid oracle exp(mean log |h|) on n uniform samples.

    Returns (value, clipped) where clipped counts samples whose log fell
    below the clip floor of -700.
    """
    if not h:
        raise AllCoefficientsZero("polynomial has no nonzero coefficients")
    vals = np.abs(sample_circle(h, n))
    with np.errstate(divide="ignore"):
        logs = np.log(vals)
    clipped = int(np.sum(logs < LOG_CLIP))
    logs = np.maximum(logs, LOG_CLIP)
    return float(np.exp(np.mean(logs))), clipped


def is_outer(h: TrigPoly, tol: float = 1e-8) -> bool:
    """True when the mean of h already carries the full geometric mean,
    i.e. |M(h) - |h_0|| <= tol * (1 + |h_0|); cross-checked against the
    equivalent statement that no root lies more than tol inside the circle."""
    arr = _analytic_coeff_array(h)
    h0 = abs(arr[0])
    mean_test = abs(mahler_jensen(h) - h0) <= tol * (1.0 + h0)
    if len(arr) == 1:
        return mean_test
    lam = np.roots(arr[::-1])
    root_test = bool(np.all(np.abs(lam) >= 1.0 - tol))
    return mean_test and root_test


@dataclass
class BlaschkeInner:
    """Inner factor that is not a plain monomial: a finite Blaschke product
    z^m * C * prod (lam - z)/(1 - conj(lam) z) with |C| = 1 and |lam| < 1."""

    monomial: int
    constant: complex
    roots: np.ndarray

    def __call__(self, x):
        z = np.exp(1j * np.asarray(x, dtype=float))
        out = self.constant * z**self.monomial
        for lam in self.roots:
            out = out * (lam - z) / (1.0 - np.conj(lam) * z)
        return out

    def numerator(self) -> TrigPoly:
        num = np.poly(self.roots)[::-1] * (-1) ** len(self.roots)  # prod (lam - z)
        return TrigPoly(
            {self.monomial + j: self.constant * num[j] for j in range(len(num))}
        )

    def denominator(self) -> TrigPoly:
        den = np.poly(1.0 / np.conj(self.roots))[::-1]
        den = den * np.prod(-np.conj(self.roots))  # prod (1 - conj(lam) z)
        return TrigPoly({j: den[j] for j in range(len(den))})


def inner_outer_split(h: TrigPoly, allow_rational: bool = True):
    """Split h into an inner factor of unit modulus and an outer factor.

    The outer part reflects every root inside the open disk to its mirror
    1/conj(lam), rescaled so the moduli agree on the circle and the mean
    coefficient is real positive. The inner quotient is a monomial times a
    unimodular constant when no roots needed reflection, and otherwise a
    finite Blaschke product (returned as BlaschkeInner, or refused with
    NonpolynomialInner when allow_rational is false).
    """
    arr = _analytic_coeff_array(h)
    m0 = int(np.argmax(np.abs(arr) > 0))
    g = arr[m0:]
    d_g = len(g) - 1
    if d_g == 0:
        const = g[0] / abs(g[0])
        outer = TrigPoly({0: abs(g[0])})
        inner = TrigPoly({m0: const})
        return inner, outer

    lead = g[-1]
    lam = np.roots(g[::-1])
    inside = lam[np.abs(lam) < 1.0]
    kept = np.where(np.abs(lam) < 1.0, 1.0 / np.conj(lam), lam)

    if len(inside) and not allow_rational:
        raise NonpolynomialInner(
            f"{len(inside)} roots inside the disk make the inner factor rational"
        )

    t = abs(lead) * float(np.prod(np.abs(inside))) if len(inside) else abs(lead)
    mono = np.poly(kept)[::-1]
    phase = np.conj(mono[0]) / abs(mono[0])
    outer = TrigPoly({j: t * phase * mono[j] for j in range(d_g + 1)})

    const = (lead / (t * phase)) * (np.prod(np.conj(inside)) if len(inside) else 1.0)
    if len(inside) == 0:
        inner = TrigPoly({m0: const})
    else:
        inner = BlaschkeInner(monomial=m0, constant=const, roots=inside)
    return inner, outer
