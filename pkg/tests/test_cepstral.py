import warnings

import numpy as np
import pytest

from specfact.cepstral import (
    LogSingularWarning,
    cepstral_factor_circle,
    cepstral_factor_ordered,
    herglotz_factor,
    ladder_stages,
    wiener_norm_check,
)
from specfact.errors import (
    FrequencyCollision,
    GridTooCoarse,
    NonpositiveStage,
    NotRealValued,
)
from specfact.fixtures import random_positive_weight, rng
from specfact.ordering import ArchOrder
from specfact.roots import fejer_riesz, mahler_quadrature
from specfact.trig import BivarPoly, TrigPoly

SEED = 90217


def test_ladder_trivial():
    assert ladder_stages() == [(None, None)]


def test_ladder_powers_of_ten():
    assert ladder_stages(1000.0) == [(10.0, None), (100.0, None), (1000.0, None)]
    assert ladder_stages(10.0) == [(10.0, None)]


def test_ladder_smoothing_only():
    assert ladder_stages(n_max=8) == [(None, 2), (None, 4), (None, 6), (None, 8)]


def test_ladder_joint_schedule():
    assert ladder_stages(100.0, 8) == [(10.0, 4), (100.0, 8)]


def test_circle_halfroot_weight():
    # w = |1 + 0.5 e^{ix}|^2, single exact stage
    w = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    trace = cepstral_factor_circle(w, grid_n=1024)
    assert trace.residual < 1e-9
    assert sorted(trace.h.coeffs) == [0, 1]
    assert abs(trace.h.coeff(0) - 1.0) < 1e-9
    assert abs(trace.h.coeff(1) - 0.5) < 1e-9


def test_circle_constant():
    trace = cepstral_factor_circle(TrigPoly({0: 9.0}))
    assert sorted(trace.h.coeffs) == [0]
    assert abs(trace.h.coeff(0) - 3.0) < 1e-12


def test_circle_mean_is_root_mahler():
    gen = rng(SEED)
    for _ in range(8):
        w = random_positive_weight(gen, int(gen.integers(1, 7)))
        trace = cepstral_factor_circle(w, grid_n=1024)
        h0 = trace.h.coeff(0)
        assert h0.imag == 0.0 and h0.real > 0.0
        mq, clipped = mahler_quadrature(w)
        assert clipped == 0
        assert abs(h0.real - np.sqrt(mq)) < 1e-6


def test_circle_one_sided_support():
    gen = rng(SEED + 1)
    for _ in range(8):
        w = random_positive_weight(gen, int(gen.integers(1, 7)))
        trace = cepstral_factor_circle(w)
        assert all(k >= 0 for k in trace.h.coeffs)
        assert all(k >= 0 for k in trace.v.coeffs)


def test_circle_agrees_with_root_factor():
    gen = rng(SEED + 2)
    for _ in range(8):
        w = random_positive_weight(gen, int(gen.integers(1, 7)))
        trace = cepstral_factor_circle(w, grid_n=4096)
        h_ref = fejer_riesz(w).h
        keys = set(trace.h.coeffs) | set(h_ref.coeffs)
        worst = max(abs(trace.h.coeff(k) - h_ref.coeff(k)) for k in keys)
        assert worst < 1e-7


def test_circle_ladder_deltas_decrease():
    w = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    trace = cepstral_factor_circle(w, grid_n=1024, ladder=(1000.0, 8))
    deltas = [s.delta for s in trace.ladder]
    assert deltas[0] is None
    tail = deltas[1:]
    assert all(b < a for a, b in zip(tail, tail[1:]))


def test_circle_stage_certificates():
    # every stage factor is bounded away from zero and has a one-sided inverse
    w = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    trace = cepstral_factor_circle(w, grid_n=1024, ladder=(100.0, 8))
    for stage in trace.ladder:
        assert stage.abs_min > 0.0
        assert stage.inv_onesided <= 1e-8


def test_circle_boundary_zero_needs_regularization():
    # grid hits the zero of |1 + e^{ix}|^2 at pi exactly
    w = TrigPoly({-1: 1.0, 0: 2.0, 1: 1.0})
    with pytest.raises(NonpositiveStage):
        cepstral_factor_circle(w, grid_n=1024)


def test_circle_boundary_zero_ladder_residual():
    # regularized stages leave a residual of about 1/m_max
    w = TrigPoly({-1: 1.0, 0: 2.0, 1: 1.0})
    trace = cepstral_factor_circle(w, grid_n=4096, ladder=(1e4, None))
    assert 0.0 < trace.residual < 2e-4
    deltas = [s.delta for s in trace.ladder[1:]]
    assert all(b < a for a, b in zip(deltas, deltas[1:]))


def test_circle_negative_weight_rejected():
    w = TrigPoly({-1: 1.0, 0: 1.5, 1: 1.0})  # dips to -0.5
    with pytest.raises(NonpositiveStage):
        cepstral_factor_circle(w)


def test_circle_complex_weight_rejected():
    with pytest.raises(NotRealValued):
        cepstral_factor_circle(TrigPoly({1: 1.0}))


def test_grid_validation():
    w = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    with pytest.raises(ValueError):
        cepstral_factor_circle(w, grid_n=100)  # not a power of two
    with pytest.raises(ValueError):
        cepstral_factor_circle(w, grid_n=8)  # below 8*(degree+1)


def test_alias_detection():
    # root close to the circle: log-weight spectrum decays like 0.9^k,
    # far too slowly for a 16-point grid
    w = TrigPoly({-1: 0.9, 0: 1.81, 1: 0.9})
    with pytest.raises(GridTooCoarse):
        cepstral_factor_circle(w, grid_n=16)
    trace = cepstral_factor_circle(w, grid_n=256)
    assert trace.residual < 1e-7


def test_ordered_constant():
    order = ArchOrder(np.sqrt(2.0))
    trace = cepstral_factor_ordered(BivarPoly({(0, 0): 9.0}), order)
    assert sorted(trace.h.coeffs) == [(0, 0)]
    assert abs(trace.h.coeff(0, 0) - 3.0) < 1e-12
    assert trace.tau == 0.0


def test_ordered_recovers_outer_generator():
    order = ArchOrder(np.sqrt(2.0))
    g = BivarPoly({(0, 0): 1.0, (1, 0): 0.5, (0, 1): 1.0 / 3.0})
    trace = cepstral_factor_ordered(g.squared_modulus(), order, grid_n=256)
    keys = set(g.coeffs) | set(trace.h.coeffs)
    worst = max(abs(trace.h.coeff(*k) - g.coeff(*k)) for k in keys)
    assert worst < 1e-6


def test_ordered_containment():
    order = ArchOrder(np.sqrt(2.0))
    g = BivarPoly({(0, 0): 1.0, (1, 0): 0.5, (0, 1): 1.0 / 3.0})
    trace = cepstral_factor_ordered(g.squared_modulus(), order, grid_n=256)
    assert trace.tau == pytest.approx(np.sqrt(2.0), abs=1e-12)
    assert trace.containment_margin <= 1e-8
    thetas = sorted(order.theta_hat(*k) for k in trace.h.coeffs)
    assert thetas == pytest.approx([0.0, 1.0, np.sqrt(2.0)], abs=1e-12)


def test_ordered_rational_slope_collides():
    order = ArchOrder(0.5)  # theta_hat(1, -2) = 0 on any usable grid
    w = BivarPoly({(0, 0): 2.0})
    with pytest.raises(FrequencyCollision):
        cepstral_factor_ordered(w, order, grid_n=64)


def test_ordered_complex_weight_rejected():
    order = ArchOrder(np.sqrt(2.0))
    with pytest.raises(NotRealValued):
        cepstral_factor_ordered(BivarPoly({(1, 0): 1.0}), order)


def test_herglotz_constant():
    assert abs(herglotz_factor(TrigPoly({0: 4.0}), 0.3, 10) - 2.0) < 1e-12


def test_herglotz_at_center():
    w = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    assert abs(herglotz_factor(w, 0.0, 1000) - 1.0) < 1e-9


def test_herglotz_interior_point():
    # outer factor is 1 + 0.5 z, evaluated at radius (1 - 1/n) * 0.3
    w = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    value = herglotz_factor(w, 0.3, 1000)
    assert abs(value - 1.14985) < 1e-6
    assert abs(value - 1.15) < 1e-3


def test_herglotz_tracks_shrinking_radius():
    w = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    for n in (10, 100):
        r = 1.0 - 1.0 / n
        expect = 1.0 + 0.5 * 0.3 * r
        assert abs(herglotz_factor(w, 0.3, n) - expect) < 1e-9


def test_herglotz_validation():
    w = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    with pytest.raises(ValueError):
        herglotz_factor(w, 0.3, 0)
    with pytest.raises(ValueError):
        herglotz_factor(w, 1.2, 10)  # (1 - 1/10) * 1.2 > 1


def test_herglotz_zero_sample_nudged():
    w = TrigPoly({-1: 1.0, 0: 2.0, 1: 1.0})
    with pytest.warns(LogSingularWarning):
        value = herglotz_factor(w, 0.0, 2)
    assert abs(value - 1.0) < 0.05


def test_wiener_norm_zero():
    assert wiener_norm_check(TrigPoly({})) == (0.0, 1.0)


def test_wiener_norm_single_harmonic():
    # exp of e^{ix} has coefficients 1/k!, absolute sum e
    norm_f, norm_exp = wiener_norm_check(TrigPoly({1: 1.0}))
    assert norm_f == 1.0
    assert abs(norm_exp - np.e) < 1e-10


def test_wiener_norm_bivar():
    norm_f, norm_exp = wiener_norm_check(BivarPoly({(1, 0): 0.5}))
    assert norm_f == 0.5
    assert abs(norm_exp - np.exp(0.5)) < 1e-9


def test_wiener_norm_random():
    gen = rng(SEED + 3)
    for _ in range(10):
        coeffs = {0: float(gen.uniform(-1, 1))}
        for k in range(1, 5):
            c = complex(gen.uniform(-0.5, 0.5), gen.uniform(-0.5, 0.5))
            coeffs[k] = c
            coeffs[-k] = c.conjugate()
        norm_f, norm_exp = wiener_norm_check(TrigPoly(coeffs))
        assert norm_exp <= np.exp(norm_f) + 1e-8
