"""Log-domain (cepstral) spectral factorization on the circle and, through
an archimedean order on the lattice, on the 2-torus.

The factor is exp(A(log(w)/2)) where A doubles positive frequencies, keeps
the mean, and kills negative ones. For weights with zeros, a ladder of
regularized stages fejer_smooth(w, n) + 1/m walks toward the target; the
successive factors form a Cauchy-like sequence whose grid distances shrink
for strictly positive weights. A Herglotz-kernel evaluation of the same
factor at a point, plus a Wiener-norm sanity certificate, round the module
out.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    FrequencyCollision,
    GridTooCoarse,
    NonpositiveStage,
    NotRealValued,
)
from .ordering import ArchOrder
from .trig import (
    BivarPoly,
    TrigPoly,
    analyze_circle,
    analyze_torus,
    fejer_smooth,
    sample_circle,
    sample_torus,
)


class LogSingularWarning(UserWarning):
    """Quadrature hit an exact zero of the weight; sample nudged by half-step."""


@dataclass
class LadderStage:
    """Telemetry for one regularized stage.

    inv_onesided is the relative size of the negative-frequency content of
    1/h_stage after grid analysis; it certifies that the stage factor is
    invertible inside the one-sided algebra when small.
    """

    m: float | None
    n: int | None
    grid_min: float
    abs_min: float
    delta: float | None
    inv_onesided: float


@dataclass
class CepstralTrace:
    """Full record of a cepstral factorization run."""

    u: np.ndarray
    v: object
    h: object
    ladder: list
    residual: float
    tau: float | None = None
    containment_margin: float | None = None
    diagnostics: dict = field(default_factory=dict)


def ladder_stages(m_max: float | None = None, n_max: int | None = None) -> list:
    """Stage schedule: m runs over powers of ten up to m_max while the Fejer
    order climbs to n_max; both None gives the single exact stage."""
    if m_max is None and n_max is None:
        return [(None, None)]
    if m_max is not None:
        ms = []
        p = 10.0
        while p < m_max:
            ms.append(p)
            p *= 10.0
        ms.append(float(m_max))
    else:
        ms = [None] * 4
    if n_max is not None:
        count = len(ms)
        ns = sorted({max(1, int(np.ceil(n_max * (j + 1) / count))) for j in range(count)})
    else:
        ns = [None]
    # pad the shorter schedule with its final value, then walk both together
    length = max(len(ms), len(ns))
    ms = ms + [ms[-1]] * (length - len(ms))
    ns = ns + [ns[-1]] * (length - len(ns))
    return list(zip(ms, ns))


def _normalize_ladder(ladder) -> list:
    if ladder is None:
        return [(None, None)]
    if isinstance(ladder, tuple) and len(ladder) == 2 and not isinstance(ladder[0], tuple):
        return ladder_stages(*ladder)
    return [(m, n) for m, n in ladder]


def _grid_size(requested: int | None, degree: int) -> int:
    need = 8 * (degree + 1)
    if requested is None:
        n = 1 << max(6, int(need - 1).bit_length())
        return n
    if requested & (requested - 1) or requested < need:
        raise ValueError(f"grid must be a power of two >= {need}, got {requested}")
    return requested


def _stage_weight(w, m, n):
    ws = fejer_smooth(w, n) if n is not None else w
    if m is not None:
        ws = ws + 1.0 / m
    return ws


def _alias_check(uhat_sq_by_dist: np.ndarray, total: float, tol: float) -> None:
    if total > 0 and uhat_sq_by_dist.sum() / total > tol:
        raise GridTooCoarse(
            "log-weight energy within 2 bins of Nyquist exceeds tolerance; "
            "raise the grid size"
        )


def cepstral_factor_circle(
    w: TrigPoly,
    grid_n: int | None = None,
    ladder=None,
    trunc_tol: float = 1e-10,
    alias_tol: float = 1e-8,
) -> CepstralTrace:
    """Outer factor of a nonnegative circle polynomial by the log route.

    Each ladder stage samples w_stage = fejer_smooth(w, n) + 1/m on the
    grid, halves its log, keeps mean plus doubled positive frequencies,
    exponentiates on the grid, and re-analyzes. The returned h is the last
    stage truncated at the relative coefficient threshold; its spectrum is
    one-sided by construction and its mean is exp of the real grid mean of
    u, hence positive.
    """
    if not w.is_real():
        raise NotRealValued("weight must be real valued")
    n_grid = _grid_size(grid_n, w.degree)
    stages = _normalize_ladder(ladder)

    records = []
    prev_vals = None
    u = v_hat = h_vals = None
    for m, n in stages:
        ws = _stage_weight(w, m, n)
        vals = sample_circle(ws, n_grid).real
        gmin = float(np.min(vals))
        if gmin <= 0.0:
            raise NonpositiveStage(
                f"stage (m={m}, n={n}) has grid min {gmin:.3e}; regularize first"
            )
        u = 0.5 * np.log(vals)
        u_hat = np.fft.fft(u) / n_grid

        half = n_grid // 2
        near = np.abs(u_hat[half - 2 : half + 3]) ** 2
        _alias_check(near, float(np.sum(np.abs(u_hat) ** 2)), alias_tol)

        v_hat = np.zeros_like(u_hat)
        v_hat[0] = u_hat[0].real
        v_hat[1:half] = 2.0 * u_hat[1:half]
        h_vals = np.exp(np.fft.ifft(v_hat) * n_grid)

        inv_hat = np.fft.fft(1.0 / h_vals) / n_grid
        neg = np.max(np.abs(inv_hat[half + 1 :])) if half + 1 < n_grid else 0.0
        rec = LadderStage(
            m=m,
            n=n,
            grid_min=gmin,
            abs_min=float(np.min(np.abs(h_vals))),
            delta=None
            if prev_vals is None
            else float(np.sqrt(np.mean(np.abs(h_vals - prev_vals) ** 2))),
            inv_onesided=float(neg / np.max(np.abs(inv_hat))),
        )
        records.append(rec)
        prev_vals = h_vals

    h_hat = np.fft.fft(h_vals) / n_grid
    top = float(np.max(np.abs(h_hat)))
    half = n_grid // 2
    kept = {
        k: complex(h_hat[k])
        for k in range(half)
        if abs(h_hat[k]) >= trunc_tol * top
    }
    if 0 in kept:
        kept[0] = kept[0].real
    h = TrigPoly(kept)

    v_coeffs = TrigPoly(
        {
            k: complex(v_hat[k])
            for k in range(half)
            if abs(v_hat[k]) >= trunc_tol * max(1e-300, float(np.max(np.abs(v_hat))))
        }
    )
    w_vals = sample_circle(w, n_grid).real
    h_back = sample_circle(h, n_grid)
    residual = float(np.max(np.abs(w_vals - np.abs(h_back) ** 2)))
    return CepstralTrace(
        u=u,
        v=v_coeffs,
        h=h,
        ladder=records,
        residual=residual,
        diagnostics={"grid": n_grid, "stages": len(records)},
    )


def cepstral_factor_ordered(
    w: BivarPoly,
    order: ArchOrder,
    grid_n: int | None = None,
    ladder=None,
    trunc_tol: float = 1e-10,
    alias_tol: float = 1e-8,
) -> CepstralTrace:
    """Torus analogue of cepstral_factor_circle under an archimedean order.

    Positive/negative frequency is decided by the sign of theta_hat(m, n),
    so the factor's spectrum lands in the order-nonnegative half, and the
    trace reports how far its theta_hat support sticks out of [0, tau],
    tau being the largest |theta_hat| over the weight's support.
    """
    if not w.is_real():
        raise NotRealValued("weight must be real valued")
    n_grid = _grid_size(grid_n, w.degree)
    stages = _normalize_ladder(ladder)

    idx = np.arange(n_grid)
    centered = np.where(idx < (n_grid + 1) // 2, idx, idx - n_grid)
    theta = centered[:, None] + order.alpha * centered[None, :]
    nonzero = np.ones((n_grid, n_grid), dtype=bool)
    nonzero[0, 0] = False
    if np.any((np.abs(theta) <= order.floor) & nonzero):
        raise FrequencyCollision(
            "a grid frequency sits within the collision floor of zero; "
            "the slope is too close to rational for this grid"
        )
    pos = theta > 0

    records = []
    prev_vals = None
    u = v_hat = h_vals = None
    for m, n in stages:
        ws = _stage_weight(w, m, n)
        vals = sample_torus(ws, n_grid).real
        gmin = float(np.min(vals))
        if gmin <= 0.0:
            raise NonpositiveStage(
                f"stage (m={m}, n={n}) has grid min {gmin:.3e}; regularize first"
            )
        u = 0.5 * np.log(vals)
        u_hat = np.fft.fft2(u) / (n_grid * n_grid)

        half = n_grid // 2
        dist = np.maximum(np.abs(centered)[:, None], np.abs(centered)[None, :])
        near = np.abs(u_hat[dist >= half - 2]) ** 2
        _alias_check(near, float(np.sum(np.abs(u_hat) ** 2)), alias_tol)

        v_hat = np.where(pos, 2.0 * u_hat, 0.0)
        v_hat[0, 0] = u_hat[0, 0].real
        h_vals = np.exp(np.fft.ifft2(v_hat) * (n_grid * n_grid))

        inv_hat = np.fft.fft2(1.0 / h_vals) / (n_grid * n_grid)
        neg_mask = theta < 0
        neg = float(np.max(np.abs(inv_hat[neg_mask]))) if neg_mask.any() else 0.0
        rec = LadderStage(
            m=m,
            n=n,
            grid_min=gmin,
            abs_min=float(np.min(np.abs(h_vals))),
            delta=None
            if prev_vals is None
            else float(np.sqrt(np.mean(np.abs(h_vals - prev_vals) ** 2))),
            inv_onesided=float(neg / np.max(np.abs(inv_hat))),
        )
        records.append(rec)
        prev_vals = h_vals

    h_hat = np.fft.fft2(h_vals) / (n_grid * n_grid)
    top = float(np.max(np.abs(h_hat)))
    keep = (np.abs(h_hat) >= trunc_tol * top) & (pos | ~nonzero)
    kept = {}
    for i, j in zip(*np.nonzero(keep)):
        key = (int(centered[i]), int(centered[j]))
        kept[key] = complex(h_hat[i, j])
    if (0, 0) in kept:
        kept[(0, 0)] = kept[(0, 0)].real
    h = BivarPoly(kept)

    tau = max(
        (abs(order.theta_hat(m, n)) for (m, n) in w.coeffs), default=0.0
    )
    margin = 0.0
    for m, n in h.coeffs:
        t = order.theta_hat(m, n)
        margin = max(margin, t - tau, -t)
    v_top = float(np.max(np.abs(v_hat)))
    v_keep = (np.abs(v_hat) >= trunc_tol * max(v_top, 1e-300)) & (pos | ~nonzero)
    v_coeffs = BivarPoly(
        {
            (int(centered[i]), int(centered[j])): complex(v_hat[i, j])
            for i, j in zip(*np.nonzero(v_keep))
        }
    )
    w_vals = sample_torus(w, n_grid).real
    h_back = sample_torus(h, n_grid)
    residual = float(np.max(np.abs(w_vals - np.abs(h_back) ** 2)))
    return CepstralTrace(
        u=u,
        v=v_coeffs,
        h=h,
        ladder=records,
        residual=residual,
        tau=float(tau),
        containment_margin=float(margin),
        diagnostics={"grid": n_grid, "stages": len(records), "alpha": order.alpha},
    )


def herglotz_factor(w: TrigPoly, z: complex, n: int, min_samples: int = 64) -> complex:
    """Outer-factor value at r z, r = 1 - 1/n, by the Herglotz-kernel mean

        exp( mean_t  (e^{it} + r z) / (e^{it} - r z) * log(w(t)) / 2 ).

    Trapezoid size is the next power of two at or above 64 n. A sample
    landing on an exact zero of w is nudged by half a step and flagged
    with LogSingularWarning.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    r = 1.0 - 1.0 / n
    if abs(r * z) >= 1.0:
        raise ValueError("need |(1 - 1/n) z| < 1")
    m = 1 << int(max(min_samples, 64 * n) - 1).bit_length()
    t = 2.0 * np.pi * np.arange(m) / m
    vals = sample_circle(w, m).real
    bad = vals <= 0.0
    if np.any(bad):
        warnings.warn(
            f"{int(bad.sum())} quadrature samples hit a zero of w; nudged",
            LogSingularWarning,
        )
        t = t.copy()
        t[bad] += np.pi / m
        vals = vals.copy()
        vals[bad] = w(t[bad]).real
        if np.any(vals <= 0.0):
            raise NonpositiveStage("weight nonpositive even after the nudge")
    e = np.exp(1j * t)
    kernel = (e + r * z) / (e - r * z)
    return complex(np.exp(np.mean(kernel * np.log(vals) * 0.5)))


def wiener_norm_check(f) -> tuple:
    """(sum |coeffs of f|, sum |coeffs of grid-computed exp f|).

    The second never exceeds exp of the first (submultiplicativity of the
    absolutely convergent series); a violation beyond 1e-8 raises.
    """
    norm_f = float(sum(abs(c) for c in f.coeffs.values()))
    if isinstance(f, TrigPoly):
        n_grid = _grid_size(None, f.degree)
        vals = np.exp(sample_circle(f, n_grid))
        coeffs = analyze_circle(vals)
    else:
        n_grid = _grid_size(None, f.degree)
        vals = np.exp(sample_torus(f, n_grid))
        coeffs = analyze_torus(vals)
    norm_exp = float(sum(abs(c) for c in coeffs.values()))
    if norm_exp > np.exp(norm_f) + 1e-8:
        raise AssertionError(
            f"norm(exp f) = {norm_exp:.12g} exceeds exp(norm f) = {np.exp(norm_f):.12g}"
        )
    return norm_f, norm_exp
