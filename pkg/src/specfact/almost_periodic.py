"""Almost periodic exponential polynomials  f(x) = sum c(w) e^{iwx}.

Frequencies w are arbitrary reals, held sparsely. Frequencies closer than
MERGE_TOL are treated as the same frequency and their coefficients merged,
which keeps products of lifted lattice polynomials well defined.

Harmonic extension to the closed upper half-plane follows the two-sided
series: negative frequencies ride on conj(z), positive ones on z, and the
mean stays put. For one-sided spectra this coincides with the entire
extension wherever both are defined.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import quad

MERGE_TOL = 1e-12


def _canonical(terms):
    """Sort terms by frequency and merge keys closer than MERGE_TOL.

    The sort is stable, so coefficients landing on one canonical frequency
    accumulate in input order. Exact zeros are dropped afterwards.
    """
    merged = []
    for w, c in sorted(terms, key=lambda t: t[0]):
        w = float(w)
        c = complex(c)
        if merged and w - merged[-1][0] <= MERGE_TOL:
            merged[-1][1] += c
        else:
            merged.append([w, c])
    return [(w, c) for w, c in merged if c != 0]


class APFunc:
    """Sparse almost periodic polynomial with real frequencies."""

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        if hasattr(terms, "items"):
            terms = terms.items()
        pairs = _canonical(terms)
        self._omegas = np.array([w for w, _ in pairs], dtype=float)
        self._coeffs = np.array([c for _, c in pairs], dtype=complex)

    @property
    def frequencies(self) -> np.ndarray:
        return self._omegas.copy()

    @property
    def terms(self) -> dict:
        return dict(zip(self._omegas.tolist(), self._coeffs.tolist()))

    def coeff(self, omega: float) -> complex:
        i = np.searchsorted(self._omegas, omega)
        for j in (i - 1, i):
            if 0 <= j < len(self._omegas) and abs(self._omegas[j] - omega) <= MERGE_TOL:
                return complex(self._coeffs[j])
        return 0j

    def items(self) -> list:
        """(frequency, coefficient) pairs in ascending frequency order."""
        return [(float(w), complex(c)) for w, c in zip(self._omegas, self._coeffs)]

    def is_real(self, tol: float = MERGE_TOL) -> bool:
        return all(
            abs(self.coeff(-w) - np.conj(c)) <= tol for w, c in self.items()
        )

    def __len__(self):
        return len(self._omegas)

    def __bool__(self):
        return len(self._omegas) > 0

    def __eq__(self, other):
        return (
            isinstance(other, APFunc)
            and np.array_equal(self._omegas, other._omegas)
            and np.array_equal(self._coeffs, other._coeffs)
        )

    def __repr__(self):
        body = ", ".join(
            f"{w:.6g}: {c:.6g}" for w, c in zip(self._omegas, self._coeffs)
        )
        return f"APFunc({{{body}}})"

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=complex)
        for w, c in zip(self._omegas, self._coeffs):
            out += c * np.exp(1j * w * x)
        return out if out.shape else complex(out)

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = APFunc({0.0: other})
        pairs = list(zip(self._omegas, self._coeffs))
        pairs += list(zip(other._omegas, other._coeffs))
        return APFunc(pairs)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return APFunc(zip(self._omegas, other * self._coeffs))
        return ap_mul(self, other)

    __rmul__ = __mul__

    def conj(self) -> "APFunc":
        """Coefficient map of the pointwise conjugate: c(w) -> conj(c(-w))."""
        return APFunc(zip(-self._omegas, np.conj(self._coeffs)))

    def shift(self, delta: float) -> "APFunc":
        """Multiply by e^{i delta x}: every frequency moves up by delta."""
        return APFunc(zip(self._omegas + delta, self._coeffs))

    def squared_modulus(self) -> "APFunc":
        return ap_mul(self, self.conj())


def ap_from_trig(p) -> APFunc:
    """Reinterpret a circle polynomial as almost periodic (frequency k -> float k)."""
    return APFunc({float(k): v for k, v in p.coeffs.items()})


def ap_mul(f: APFunc, g: APFunc) -> APFunc:
    """Product by convolution over the Minkowski sum of the supports.

    Terms are generated with both factors traversed in ascending frequency,
    so coefficients merging onto one output frequency add in that order.
    """
    terms = []
    for w1, c1 in zip(f._omegas, f._coeffs):
        for w2, c2 in zip(g._omegas, g._coeffs):
            terms.append((w1 + w2, c1 * c2))
    return APFunc(terms)


def bohr_mean(f: APFunc) -> complex:
    """Mean value of f, read off as the zero-frequency coefficient."""
    return f.coeff(0.0)


def bohr_mean_interval(f: APFunc, length: float) -> complex:
    """Average of f over [-L, L], integrated term by term in closed form.

    Differs from bohr_mean(f) by at most sum_{w != 0} |c(w)| / (|w| L).
    """
    if length <= 0:
        raise ValueError("interval half-length must be positive")
    out = 0j
    for w, c in zip(f._omegas, f._coeffs):
        if abs(w) <= MERGE_TOL:
            out += c
        else:
            out += c * np.sin(w * length) / (w * length)
    return complex(out)


def entire_extend(f: APFunc, z) -> complex | np.ndarray:
    """Entire extension  sum c(w) e^{iwz}  evaluated at complex z."""
    z = np.asarray(z, dtype=complex)
    out = np.zeros(z.shape, dtype=complex)
    for w, c in zip(f._omegas, f._coeffs):
        out += c * np.exp(1j * w * z)
    return out if out.shape else complex(out)


def poisson_extend(f: APFunc, z) -> complex | np.ndarray:
    """Harmonic extension to the closed upper half-plane.

    Negative frequencies contribute c(w) e^{iw conj(z)}, the mean stays,
    positive frequencies contribute c(w) e^{iwz}. Restricted to the real
    axis this is eval; for one-sided spectra it agrees with entire_extend
    on the closed upper half-plane.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag < 0):
        raise ValueError("poisson_extend is defined only for Im z >= 0")
    out = np.zeros(z.shape, dtype=complex)
    for w, c in zip(f._omegas, f._coeffs):
        if w < -MERGE_TOL:
            out += c * np.exp(1j * w * np.conj(z))
        else:
            out += c * np.exp(1j * w * z)
    return out if out.shape else complex(out)


def poisson_decay_bound(f: APFunc, y: float) -> float:
    """sum_{w != 0} |c(w)| e^{-|w| y}, the distance-to-mean bound at height y."""
    out = 0.0
    for w, c in zip(f._omegas, f._coeffs):
        if abs(w) > MERGE_TOL:
            out += abs(c) * np.exp(-abs(w) * y)
    return float(out)


def poisson_tail_bound(f: APFunc, y: float, cutoff: float) -> float:
    """Mass of the Poisson kernel beyond the truncation window, times ||f||_A."""
    tail = 1.0 - (2.0 / np.pi) * np.arctan(cutoff / y)
    return float(tail * np.sum(np.abs(f._coeffs))) if len(f) else 0.0


def poisson_kernel_mean(
    f: APFunc, x: float, y: float, cutoff: float = 1e3, rel_tol: float = 1e-8
) -> complex:
    """Poisson average  integral of f(x - s) * (y/pi) / (s^2 + y^2)  over |s| <= cutoff.

    Each frequency is integrated with an oscillatory-weight adaptive rule to
    the requested relative target. The truncation to |s| <= cutoff leaves an
    error bounded by poisson_tail_bound(f, y, cutoff), which shrinks like y/cutoff.
    """
    if y <= 0:
        raise ValueError("height y must be positive")
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    total = 0j
    for w, c in zip(f._omegas, f._coeffs):
        kernel = lambda s: 1.0 / (s * s + y * y)
        if abs(w) <= MERGE_TOL:
            val, _ = quad(kernel, 0.0, cutoff, epsabs=1e-14, epsrel=rel_tol, limit=400)
        else:
            # cos(w s) factor handled by the oscillatory rule; the sin part
            # integrates to zero over the symmetric window.
            val, _ = quad(
                kernel,
                0.0,
                cutoff,
                weight="cos",
                wvar=abs(w),
                epsabs=1e-14,
                epsrel=rel_tol,
                limit=400,
            )
        total += c * np.exp(1j * w * x) * (y / np.pi) * (2.0 * val)
    return complex(total)
