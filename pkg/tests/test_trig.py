import numpy as np
import pytest

from specfact.errors import NotRealValued
from specfact.trig import (
    BivarPoly,
    TrigPoly,
    analyze_circle,
    analyze_torus,
    fejer_smooth,
    fejer_weight,
    min_on_grid,
    sample_circle,
    sample_torus,
)

SEED = 90217


def test_trig_eval_known_values():
    # 1 + 0.5 e^{ix} at x = 0 and x = pi
    p = TrigPoly({0: 1.0, 1: 0.5})
    assert p(0.0) == pytest.approx(1.5)
    assert p(np.pi) == pytest.approx(0.5)
    # cos(x) at the quarter points
    c = TrigPoly({1: 0.5, -1: 0.5})
    assert c(0.0) == pytest.approx(1.0)
    assert abs(c(np.pi / 2)) < 1e-15


def test_trig_mul_is_convolution():
    a = TrigPoly({0: 1.0, 1: 2.0})
    b = TrigPoly({-1: 3.0, 2: 1.0 + 1j})
    prod = a * b
    # hand convolution
    assert prod.coeffs == {
        -1: 3.0 + 0j,
        0: 6.0 + 0j,
        2: 1.0 + 1j,
        3: 2.0 + 2j,
    }


def test_scalar_mul_and_add():
    p = TrigPoly({0: 1.0, 1: 0.5})
    q = p * 2.0
    assert q.coeff(0) == 2.0 and q.coeff(1) == 1.0
    r = p + 0.25
    assert r.coeff(0) == 1.25


def test_conj_reflect():
    p = TrigPoly({0: 1.0 + 2j, 3: 1.0 - 1j})
    q = p.conj_reflect()
    assert q.coeff(0) == 1.0 - 2j
    assert q.coeff(-3) == 1.0 + 1j
    assert q.coeff(3) == 0


def test_squared_modulus_example():
    # |1 + 0.5 e^{ix}|^2 = 0.5 e^{-ix} + 1.25 + 0.5 e^{ix}
    h = TrigPoly({0: 1.0, 1: 0.5})
    w = h.squared_modulus()
    assert w.coeffs == {-1: 0.5 + 0j, 0: 1.25 + 0j, 1: 0.5 + 0j}
    assert w.is_real()


def test_squared_modulus_matches_samples():
    gen = np.random.default_rng(SEED)
    for _ in range(20):
        d = int(gen.integers(0, 9))
        c = {k: complex(gen.uniform(-1, 1), gen.uniform(-1, 1)) for k in range(d + 1)}
        h = TrigPoly(c)
        w = h.squared_modulus()
        x = gen.uniform(0.0, 2 * np.pi, size=7)
        assert np.max(np.abs(w(x) - np.abs(h(x)) ** 2)) < 1e-12


def test_real_iff_conjugate_symmetric():
    assert TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5}).is_real()
    assert TrigPoly({-2: 1 - 1j, 0: 0.25, 2: 1 + 1j}).is_real()
    assert not TrigPoly({0: 1j}).is_real()
    assert not TrigPoly({1: 1.0}).is_real()


def test_shift():
    p = TrigPoly({0: 1.0, 2: 3.0})
    q = p.shift(-1)
    assert q.coeffs == {-1: 1.0 + 0j, 1: 3.0 + 0j}


def test_sample_analyze_roundtrip_circle():
    gen = np.random.default_rng(SEED + 1)
    for _ in range(20):
        d = int(gen.integers(0, 12))
        c = {
            k: complex(gen.uniform(-1, 1), gen.uniform(-1, 1))
            for k in range(-d, d + 1)
        }
        p = TrigPoly(c)
        n = 1 << int(np.ceil(np.log2(max(2 * d + 2, 4))))
        back = analyze_circle(sample_circle(p, n))
        for k, v in c.items():
            assert abs(back.get(k, 0j) - v) < 1e-13


def test_sample_circle_matches_eval():
    p = TrigPoly({-2: 1j, 0: 0.5, 3: 2.0})
    n = 16
    vals = sample_circle(p, n)
    xs = 2 * np.pi * np.arange(n) / n
    assert np.max(np.abs(vals - p(xs))) < 1e-13


def test_sample_analyze_roundtrip_torus():
    gen = np.random.default_rng(SEED + 2)
    for _ in range(8):
        d = int(gen.integers(0, 4))
        c = {}
        for m in range(-d, d + 1):
            for n_ in range(-d, d + 1):
                c[(m, n_)] = complex(gen.uniform(-1, 1), gen.uniform(-1, 1))
        p = BivarPoly(c)
        n = 16
        back = analyze_torus(sample_torus(p, n))
        for k, v in c.items():
            assert abs(back.get(k, 0j) - v) < 1e-13


def test_bivar_eval_and_mul():
    p = BivarPoly({(1, 0): 1.0, (0, 1): 1.0})
    assert p(0.0, 0.0) == pytest.approx(2.0)
    q = p * p
    assert q.coeffs == {(2, 0): 1 + 0j, (1, 1): 2 + 0j, (0, 2): 1 + 0j}


def test_fejer_weight_values():
    assert fejer_weight(0, 4) == 1.0
    assert fejer_weight(2, 4) == pytest.approx(0.5)
    assert fejer_weight(4, 4) == 0.0
    assert fejer_weight(-3, 4) == pytest.approx(0.25)
    assert fejer_weight(7, 4) == 0.0


def test_fejer_smooth_is_nonnegative_on_nonneg_input():
    # smoothing by the Fejer kernel preserves nonnegativity
    gen = np.random.default_rng(SEED + 3)
    for _ in range(10):
        d = int(gen.integers(1, 7))
        c = {k: complex(gen.uniform(-1, 1), gen.uniform(-1, 1)) for k in range(d + 1)}
        w = TrigPoly(c).squared_modulus()
        for n in (1, 2, d, 2 * d + 3):
            sm = fejer_smooth(w, n)
            assert sm.is_real()
            assert min_on_grid(sm) >= -1e-12


def test_fejer_smooth_truncates_support():
    w = TrigPoly({-3: 1.0, 0: 5.0, 3: 1.0})
    sm = fejer_smooth(w, 2)
    # order-2 kernel keeps |k| <= 1 only
    assert set(sm.coeffs) == {0}
    assert sm.coeff(0) == 5.0


def test_fejer_smooth_bivar():
    w = BivarPoly({(0, 0): 2.0, (1, 1): 0.5, (-1, -1): 0.5})
    sm = fejer_smooth(w, 2)
    assert sm.coeff(0, 0) == 2.0
    assert sm.coeff(1, 1) == pytest.approx(0.125)  # (1/2) * (1/2) * 0.5


def test_min_on_grid_known():
    # 1 + cos x has minimum 0 at pi; grid includes pi for power-of-two sizes
    w = TrigPoly({-1: 0.5, 0: 1.0, 1: 0.5})
    assert min_on_grid(w) == pytest.approx(0.0, abs=1e-15)
    v = TrigPoly({-1: 0.5, 0: 1.25, 1: 0.5})
    assert min_on_grid(v) == pytest.approx(0.25, abs=1e-12)


def test_min_on_grid_rejects_complex():
    with pytest.raises(NotRealValued):
        min_on_grid(TrigPoly({1: 1.0}))


def test_min_on_grid_rejects_coarse_grid():
    w = TrigPoly({-4: 1.0, 0: 3.0, 4: 1.0})
    with pytest.raises(ValueError):
        min_on_grid(w, n=8)


def test_clean_drops_exact_zeros():
    p = TrigPoly({0: 1.0, 1: 0.0, 2: 0j})
    assert set(p.coeffs) == {0}
    assert TrigPoly({0: 0.0}).coeffs == {}
    assert not TrigPoly({})


def test_degree_and_support():
    p = TrigPoly({-3: 1.0, 2: 1.0})
    assert p.degree == 3
    assert p.support == (-3, 2)
