"""Total orders on the frequency lattice of the 2-torus, and the transforms
that depend only on the induced sign of each frequency.

An irrational slope alpha sends the lattice point (m, n) to the real number
m + alpha * n. That map decides which characters count as positive, turns a
lattice polynomial into an almost periodic one on the line (lift), and fixes
the sign convention of the conjugate-function and analytic transforms on the
circle, the torus, and the line alike.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .almost_periodic import MERGE_TOL, APFunc
from .errors import FrequencyCollision, NotRealValued
from .trig import BivarPoly, TrigPoly


@dataclass(frozen=True)
class ArchOrder:
    """Order on Z^2 induced by theta_hat(m, n) = m + alpha * n.

    floor guards sign decisions: a nonzero lattice point whose theta_hat
    lands within floor of zero means alpha is effectively rational for the
    input at hand, and the computation refuses to guess.
    """

    alpha: float
    floor: float = 1e-9

    def theta_hat(self, m: int, n: int) -> float:
        return m + self.alpha * n

    def sign(self, m: int, n: int) -> int:
        if m == 0 and n == 0:
            return 0
        t = self.theta_hat(m, n)
        if abs(t) <= self.floor:
            raise FrequencyCollision(
                f"theta_hat{(m, n)} = {t:.3e} is within the collision floor"
            )
        return 1 if t > 0 else -1

    def lift(self, p: BivarPoly) -> APFunc:
        """Move the coefficient at (m, n) to the real frequency m + alpha n.

        Mean and spectrum survive the trip: the lifted mean is the (0, 0)
        coefficient, and the lifted support is theta_hat of the support.
        Raises if two support points land closer than the merge tolerance.
        """
        freqs = sorted(
            (self.theta_hat(m, n), (m, n), v) for (m, n), v in p.coeffs.items()
        )
        for (w1, k1, _), (w2, k2, _) in zip(freqs, freqs[1:]):
            if w2 - w1 <= MERGE_TOL:
                raise FrequencyCollision(
                    f"lattice points {k1} and {k2} collide at frequency {w1:.6g}"
                )
        return APFunc((w, v) for w, _, v in freqs)


def _freq_sign(omega: float) -> int:
    if abs(omega) <= MERGE_TOL:
        return 0
    return 1 if omega > 0 else -1


def _signed_coeffs(f, order):
    """Yield (key, coefficient, sign) for any of the three coefficient types."""
    if isinstance(f, TrigPoly):
        for k, v in f.coeffs.items():
            yield k, v, (0 if k == 0 else (1 if k > 0 else -1))
    elif isinstance(f, BivarPoly):
        if order is None:
            raise ValueError("bivariate transforms need an ArchOrder")
        for (m, n), v in f.coeffs.items():
            yield (m, n), v, order.sign(m, n)
    elif isinstance(f, APFunc):
        for w, v in f.items():
            yield w, v, _freq_sign(w)
    else:
        raise TypeError(f"unsupported operand type {type(f).__name__}")


def _rebuild(f, items):
    if isinstance(f, TrigPoly):
        return TrigPoly(dict(items))
    if isinstance(f, BivarPoly):
        return BivarPoly(dict(items))
    return APFunc(items)


def hilbert_transform(f, order: ArchOrder | None = None):
    """Conjugate function: coefficient at a positive frequency is multiplied
    by -i, at a negative frequency by +i, and the mean is dropped.

    Input must be real valued (conjugate symmetric coefficients); the output
    then is as well, exactly at the coefficient level.
    """
    if not f.is_real():
        raise NotRealValued("hilbert transform needs a real-valued input")
    items = [(k, -1j * s * v) for k, v, s in _signed_coeffs(f, order) if s != 0]
    return _rebuild(f, items)


def analytic_transform(f, order: ArchOrder | None = None):
    """f + i * hilbert_transform(f): doubles positive-frequency coefficients,
    keeps the mean, kills negative frequencies. Real part recovers f."""
    if not f.is_real():
        raise NotRealValued("analytic transform needs a real-valued input")
    items = []
    for k, v, s in _signed_coeffs(f, order):
        if s > 0:
            items.append((k, 2 * v))
        elif s == 0:
            items.append((k, v))
    return _rebuild(f, items)
