"""Entire extensions of almost periodic polynomials: exponential type,
symmetric factor pairs, and certified zero counting in the upper half-plane.

A nonnegative almost periodic w = |h|^2 with one-sided h extends to an
entire function F of exponential type tau equal to the bandwidth of h.
Centering h's spectrum at the origin gives the symmetric factor S with
F(z) = S(z) * conj(S(conj z)) identically; h is outer exactly when the
extension has no zeros in the open upper half-plane, which a winding-number
count over a certified box family can decide for functions with a nonzero
mean.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .almost_periodic import APFunc, ap_from_trig, ap_mul, entire_extend, MERGE_TOL
from .errors import SpectrumNotOneSided, ZeroFunction, ZeroMeanFactor, ZeroOnContour
from .trig import TrigPoly


def exp_type(f: APFunc) -> float:
    """Exponential type of the entire extension: max(|inf W|, |sup W|) over
    the frequency support W."""
    if not f:
        raise ZeroFunction("type of the zero function is undefined here")
    freqs = f.frequencies
    return float(max(abs(freqs[0]), abs(freqs[-1])))


@dataclass
class AhiezerPair:
    """Symmetric factorization F(z) = S(z) * conj(S(conj z)) of type tau.

    identity_residual is the largest deviation of the identity over the
    verification grid; upper_zero_count stays None until a contour count
    is requested and must be 0 for S to be the zero-free factor.
    """

    F: APFunc
    S: APFunc
    tau: float
    identity_residual: float
    upper_zero_count: int | None = None


def ahiezer_from_factor(
    h: APFunc, half_width: float = 5.0, height: float = 2.0
) -> AhiezerPair:
    """Build the symmetric pair from a one-sided factor with nonzero mean.

    F = |h|^2 as an almost periodic polynomial, tau its type, and S the
    frequency shift of h by -tau/2, so h(x) = e^{i tau x / 2} S(x) exactly
    and the spectrum of S sits inside [-tau/2, tau/2]. The identity is
    verified on a 100-point grid covering |Re z| <= half_width,
    |Im z| <= height.
    """
    if not h:
        raise ZeroFunction("cannot factor the zero function")
    freqs = h.frequencies
    if freqs[0] < -MERGE_TOL:
        raise SpectrumNotOneSided(f"lowest frequency {freqs[0]:.6g} is negative")
    if h.coeff(0.0) == 0:
        raise ZeroMeanFactor(
            "factor has no zero-frequency coefficient; its centered shift "
            "would overshoot the half-type band"
        )
    F = ap_mul(h, h.conj())
    tau = exp_type(F)
    fw = F.frequencies
    bandwidth = float(fw[-1] - fw[0])
    if abs(tau - bandwidth / 2.0) > 1e-9 * (1.0 + tau):
        raise ValueError(
            f"type {tau:.12g} != bandwidth/2 {bandwidth / 2.0:.12g}; "
            "spectrum is not symmetric"
        )
    S = h.shift(-tau / 2.0)
    sw = S.frequencies
    if sw[0] < -tau / 2.0 - MERGE_TOL or sw[-1] > tau / 2.0 + MERGE_TOL:
        raise RuntimeError("centered spectrum escaped [-tau/2, tau/2]")

    re = np.linspace(-half_width, half_width, 10)
    im = np.linspace(-height, height, 10)
    zz = re[None, :] + 1j * im[:, None]
    lhs = entire_extend(F, zz)
    rhs = entire_extend(S, zz) * np.conj(entire_extend(S, np.conj(zz)))
    residual = float(np.max(np.abs(lhs - rhs)))
    return AhiezerPair(F=F, S=S, tau=tau, identity_residual=residual)


def _box_contour(box, samples: int) -> np.ndarray:
    """Counterclockwise closed rectangle boundary, samples points per edge."""
    x0, x1, y0, y1 = box
    bottom = x0 + np.linspace(0.0, 1.0, samples, endpoint=False) * (x1 - x0) + 1j * y0
    right = x1 + 1j * (y0 + np.linspace(0.0, 1.0, samples, endpoint=False) * (y1 - y0))
    top = x1 + np.linspace(0.0, 1.0, samples, endpoint=False) * (x0 - x1) + 1j * y1
    left = x0 + 1j * (y1 + np.linspace(0.0, 1.0, samples, endpoint=False) * (y0 - y1))
    pts = np.concatenate([bottom, right, top, left])
    return np.append(pts, pts[0])


def _halve_all(pts: np.ndarray) -> np.ndarray:
    mids = (pts[:-1] + pts[1:]) / 2.0
    return np.insert(pts, np.arange(1, len(pts)), mids)


def _phase_sum(
    f: APFunc,
    pts: np.ndarray,
    floor: float,
    max_bound_retries: int,
    max_points: int,
) -> float:
    """Summed phase increments of entire_extend(f, .) along a point chain.

    Increments at or above pi/2 are refined by midpoint insertion. A sample
    with |F| at or below floor triggers a global halving; after
    max_bound_retries of those the sum is refused as untrustworthy.
    """
    bound_failures = 0
    while True:
        vals = entire_extend(f, pts)
        if np.min(np.abs(vals)) <= floor:
            bound_failures += 1
            if bound_failures > max_bound_retries:
                raise ZeroOnContour(
                    f"contour min |F| <= {floor:.1e} after "
                    f"{max_bound_retries} refinements"
                )
            pts = _halve_all(pts)
            continue
        dphi = np.angle(vals[1:] / vals[:-1])
        bad = np.abs(dphi) >= np.pi / 2
        if not bad.any():
            return float(np.sum(dphi))
        if len(pts) >= max_points:
            raise ZeroOnContour("refinement exceeded the point budget")
        insert_at = np.nonzero(bad)[0]
        mids = (pts[insert_at] + pts[insert_at + 1]) / 2.0
        pts = np.insert(pts, insert_at + 1, mids)


def _x_periodic(f: APFunc, width: float) -> bool:
    """True when every frequency makes a whole number of turns over width,
    so F(x + width + iy) = F(x + iy) and vertical box edges cancel."""
    for w in f.frequencies:
        phase = (w * width) % (2.0 * np.pi)
        if min(phase, 2.0 * np.pi - phase) > 1e-9:
            return False
    return True


def upper_halfplane_zero_count(
    f: APFunc,
    box,
    samples: int = 64,
    floor: float = 1e-8,
    max_bound_retries: int = 3,
    max_points: int = 1 << 21,
) -> int:
    """Zeros (with multiplicity) of the entire extension inside an open box.

    box = (x0, x1, y0, y1) with y0 > 0. Phase increments along the contour
    are refined by midpoint insertion until each is below pi/2, then summed.

    When the box width is a common period of f, the two vertical edges carry
    identical values in opposite directions and are dropped; the count then
    covers the periodized strip, and a zero sitting exactly on a vertical
    edge is counted once instead of poisoning the contour.
    """
    x0, x1, y0, y1 = box
    if y0 <= 0:
        raise ValueError("box must sit inside the open upper half-plane")
    if x1 <= x0 or y1 <= y0:
        raise ValueError("box must have positive width and height")
    if _x_periodic(f, x1 - x0):
        # closed value loops: F at the chain ends coincides, so each line's
        # increments already sum to a whole number of turns
        xs = np.linspace(x0, x1, samples + 1)
        bottom = xs + 1j * y0
        top = xs[::-1] + 1j * y1
        total = sum(
            _phase_sum(f, pts, floor, max_bound_retries, max_points)
            for pts in (bottom, top)
        )
    else:
        pts = _box_contour(box, samples)
        total = _phase_sum(f, pts, floor, max_bound_retries, max_points)
    winding = total / (2.0 * np.pi)
    count = int(round(winding))
    if abs(winding - count) > 0.1:
        raise ZeroOnContour(f"winding sum {winding:.4f} is not close to an integer")
    return count


def certified_height(f: APFunc, margin: float = 2.0) -> float:
    """Height Y above which the extension provably has no zeros.

    Needs a one-sided spectrum and nonzero mean: with w_min the smallest
    positive frequency, any Y with sum_{w>0} |c(w)| e^{-w_min Y} <=
    |c(0)| / margin keeps |F| >= |c(0)| (1 - 1/margin) above Y.
    """
    if not f:
        raise ZeroFunction("zero function has no certified height")
    freqs = f.frequencies
    if freqs[0] < -MERGE_TOL:
        raise SpectrumNotOneSided("tail certificate needs a one-sided spectrum")
    c0 = abs(f.coeff(0.0))
    if c0 == 0:
        raise ZeroMeanFactor("tail certificate needs a nonzero mean")
    positive = [(w, c) for w, c in f.items() if w > MERGE_TOL]
    if not positive:
        return 0.0
    w_min = min(w for w, _ in positive)
    tail = sum(abs(c) for _, c in positive)
    return float(max(1.0, np.log(margin * tail / c0) / w_min + 0.5))


def upper_zero_count_certified(
    f: APFunc,
    half_width: float = np.pi,
    y_min: float = 1e-8,
    samples: int = 64,
    n_boxes: int = 1,
    margin: float = 2.0,
) -> int:
    """Zero count over a box family exhausting |Re z| <= half_width,
    Im z in [y_min, Y], with Y the certified zero-free height.

    The height is cut geometrically into n_boxes slabs so thin boxes near
    the real axis do not force a single huge contour."""
    top = certified_height(f, margin=margin)
    if top <= y_min:
        return 0
    cuts = np.geomspace(y_min, top, n_boxes + 1)
    total = 0
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        total += upper_halfplane_zero_count(
            f, (-half_width, half_width, float(lo), float(hi)), samples=samples
        )
    return total


def upper_zero_count_period(
    h: TrigPoly,
    y_min: float = 1e-8,
    samples: int = 64,
    n_boxes: int = 1,
    margin: float = 2.0,
) -> int:
    """Total zero count of the extension of a circle polynomial over one
    period strip, summed over boxes exhausting [-pi, pi] x [y_min, Y]."""
    return upper_zero_count_certified(
        ap_from_trig(h),
        half_width=np.pi,
        y_min=y_min,
        samples=samples,
        n_boxes=n_boxes,
        margin=margin,
    )


def outer_by_zero_count(
    h: TrigPoly, y_min: float = 1e-8, samples: int = 64, n_boxes: int = 1
) -> bool:
    """Outerness by the zero-free-extension criterion.

    A polynomial with zero mean cannot be outer (its geometric mean is
    positive while its integral vanishes), so those short-circuit to False;
    otherwise outer means no zeros in the period strip below the certified
    height.
    """
    if not h:
        raise ZeroFunction("zero polynomial has no factorization")
    if h.coeff(0) == 0:
        return False
    if h.degree == 0:
        return True
    return upper_zero_count_period(h, y_min=y_min, samples=samples, n_boxes=n_boxes) == 0
