"""Sparse trigonometric polynomials on the circle and the 2-torus.

Coefficients live in dicts keyed by integer frequencies (or lattice pairs),
so supports can be ragged without padding. Evaluation, products, conjugate
reflection, Fejer smoothing and uniform-grid sampling are the primitives
everything downstream builds on.
"""

from __future__ import annotations

import numpy as np

from .errors import NotRealValued

# Absolute tolerance for the conjugate-symmetry test c_k == conj(c_{-k}).
REAL_SYMMETRY_TOL = 1e-12


def _clean(items):
    out = {}
    for k, v in items:
        v = complex(v)
        if v != 0:
            out[k] = out.get(k, 0j) + v
    return {k: v for k, v in out.items() if v != 0}


class TrigPoly:
    """Finite sum  f(x) = sum_k c_k e^{ikx}  with integer frequencies k."""

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        if hasattr(coeffs, "items"):
            coeffs = coeffs.items()
        self._c = _clean((int(k), v) for k, v in coeffs)

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    @property
    def support(self) -> tuple:
        return tuple(sorted(self._c))

    @property
    def degree(self) -> int:
        return max((abs(k) for k in self._c), default=0)

    def coeff(self, k: int) -> complex:
        return self._c.get(int(k), 0j)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        return isinstance(other, TrigPoly) and self._c == other._c

    def __repr__(self):
        body = ", ".join(f"{k}: {v:.6g}" for k, v in sorted(self._c.items()))
        return f"TrigPoly({{{body}}})"

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=complex)
        for k, v in self._c.items():
            out += v * np.exp(1j * k * x)
        return out if out.shape else complex(out)

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = TrigPoly({0: other})
        merged = dict(self._c)
        for k, v in other._c.items():
            merged[k] = merged.get(k, 0j) + v
        return TrigPoly(merged)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return TrigPoly({k: other * v for k, v in self._c.items()})
        out = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                out[k] = out.get(k, 0j) + v1 * v2
        return TrigPoly(out)

    __rmul__ = __mul__

    def conj_reflect(self) -> "TrigPoly":
        """Coefficient map of the pointwise conjugate: c_k -> conj(c_{-k})."""
        return TrigPoly({-k: np.conj(v) for k, v in self._c.items()})

    def squared_modulus(self) -> "TrigPoly":
        """|f|^2 as a trig polynomial, computed as f * conj_reflect(f)."""
        return self * self.conj_reflect()

    def is_real(self, tol: float = REAL_SYMMETRY_TOL) -> bool:
        keys = set(self._c) | {-k for k in self._c}
        return all(abs(self.coeff(k) - np.conj(self.coeff(-k))) <= tol for k in keys)

    def shift(self, j: int) -> "TrigPoly":
        """Multiply by e^{ijx}: moves every frequency up by j."""
        return TrigPoly({k + int(j): v for k, v in self._c.items()})


class BivarPoly:
    """Finite sum  f(x, y) = sum_{(m,n)} c_{mn} e^{i(mx+ny)}  on the 2-torus."""

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        if hasattr(coeffs, "items"):
            coeffs = coeffs.items()
        self._c = _clean(((int(k[0]), int(k[1])), v) for k, v in coeffs)

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    @property
    def support(self) -> tuple:
        return tuple(sorted(self._c))

    @property
    def degree(self) -> int:
        return max((max(abs(m), abs(n)) for m, n in self._c), default=0)

    def coeff(self, m: int, n: int) -> complex:
        return self._c.get((int(m), int(n)), 0j)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self._c == other._c

    def __repr__(self):
        body = ", ".join(f"{k}: {v:.6g}" for k, v in sorted(self._c.items()))
        return f"BivarPoly({{{body}}})"

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        out = np.zeros(np.broadcast(x, y).shape, dtype=complex)
        for (m, n), v in self._c.items():
            out += v * np.exp(1j * (m * x + n * y))
        return out if out.shape else complex(out)

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = BivarPoly({(0, 0): other})
        merged = dict(self._c)
        for k, v in other._c.items():
            merged[k] = merged.get(k, 0j) + v
        return BivarPoly(merged)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return BivarPoly({k: other * v for k, v in self._c.items()})
        out = {}
        for (m1, n1), v1 in self._c.items():
            for (m2, n2), v2 in other._c.items():
                k = (m1 + m2, n1 + n2)
                out[k] = out.get(k, 0j) + v1 * v2
        return BivarPoly(out)

    __rmul__ = __mul__

    def conj_reflect(self) -> "BivarPoly":
        return BivarPoly({(-m, -n): np.conj(v) for (m, n), v in self._c.items()})

    def squared_modulus(self) -> "BivarPoly":
        return self * self.conj_reflect()

    def is_real(self, tol: float = REAL_SYMMETRY_TOL) -> bool:
        keys = set(self._c) | {(-m, -n) for m, n in self._c}
        return all(
            abs(self.coeff(m, n) - np.conj(self.coeff(-m, -n))) <= tol
            for m, n in keys
        )


# ---------------------------------------------------------------------------
# Fejer smoothing
# ---------------------------------------------------------------------------

def fejer_weight(k: int, n: int) -> float:
    return max(0.0, 1.0 - abs(k) / n)


def fejer_smooth(p, n: int):
    """Order-n Fejer kernel smoothing: coefficient c_k is scaled by
    max(0, 1 - |k|/n), per axis on the torus.  Preserves nonnegativity."""
    if n <= 0:
        raise ValueError("fejer order must be positive")
    if isinstance(p, TrigPoly):
        return TrigPoly({k: v * fejer_weight(k, n) for k, v in p.coeffs.items()})
    return BivarPoly(
        {
            (m, kn): v * fejer_weight(m, n) * fejer_weight(kn, n)
            for (m, kn), v in p.coeffs.items()
        }
    )


# ---------------------------------------------------------------------------
# Uniform-grid sampling and analysis (FFT based)
# ---------------------------------------------------------------------------

def sample_circle(p: TrigPoly, n: int) -> np.ndarray:
    """Values of p at x_j = 2 pi j / n.  Exact when n > 2 * degree."""
    arr = np.zeros(n, dtype=complex)
    for k, v in p.coeffs.items():
        arr[k % n] += v
    return n * np.fft.ifft(arr)


def analyze_circle(values: np.ndarray) -> dict:
    """Inverse of sample_circle: dict frequency -> coefficient, k in [-n/2, n/2)."""
    n = len(values)
    vhat = np.fft.fft(values) / n
    out = {}
    for idx in range(n):
        k = idx if idx < (n + 1) // 2 else idx - n
        out[k] = vhat[idx]
    return out


def sample_torus(p: BivarPoly, n: int) -> np.ndarray:
    """Values of p on the n x n grid (x_j, y_l) = 2 pi (j, l) / n, row major in j."""
    arr = np.zeros((n, n), dtype=complex)
    for (m, kn), v in p.coeffs.items():
        arr[m % n, kn % n] += v
    return n * n * np.fft.ifft2(arr)


def analyze_torus(values: np.ndarray) -> dict:
    n = values.shape[0]
    vhat = np.fft.fft2(values) / (n * n)
    half = (n + 1) // 2
    out = {}
    for i in range(n):
        m = i if i < half else i - n
        for j in range(n):
            kn = j if j < half else j - n
            out[(m, kn)] = vhat[i, j]
    return out


def min_on_grid(w, n: int | None = None, tol: float = REAL_SYMMETRY_TOL) -> float:
    """Minimum of Re w over a uniform grid with n points per axis.

    Requires n >= 4 * (degree + 1) so the grid resolves every oscillation,
    and requires w to pass the realness (conjugate symmetry) test.
    """
    if n is None:
        n = 1 << max(6, (8 * (w.degree + 1) - 1).bit_length())
    if n < 4 * (w.degree + 1):
        raise ValueError(
            f"grid of {n} points is below 4*(degree+1) = {4 * (w.degree + 1)}"
        )
    if not w.is_real(tol):
        raise NotRealValued("coefficients break conjugate reflection symmetry")
    if isinstance(w, TrigPoly):
        vals = sample_circle(w, n)
    else:
        vals = sample_torus(w, n)
    return float(np.min(vals.real))
