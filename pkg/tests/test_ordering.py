import numpy as np
import pytest

from specfact.almost_periodic import APFunc
from specfact.errors import FrequencyCollision, NotRealValued
from specfact.ordering import ArchOrder, analytic_transform, hilbert_transform
from specfact.trig import BivarPoly, TrigPoly

SEED = 60493
SQRT2 = float(np.sqrt(2.0))
GOLDEN = float((1.0 + np.sqrt(5.0)) / 2.0)


def test_theta_hat_values():
    order = ArchOrder(SQRT2)
    assert order.theta_hat(1, 0) == 1.0
    assert order.theta_hat(0, 1) == SQRT2
    assert order.theta_hat(2, -1) == pytest.approx(2.0 - SQRT2)
    assert order.theta_hat(0, 0) == 0.0


def test_sign_is_total_on_nonzero_lattice():
    order = ArchOrder(SQRT2)
    assert order.sign(1, 0) == 1
    assert order.sign(-1, 0) == -1
    assert order.sign(1, -1) == -1  # 1 - sqrt2 < 0
    assert order.sign(3, -2) == 1  # 3 - 2 sqrt2 > 0
    assert order.sign(0, 0) == 0


def test_rational_slope_collides():
    order = ArchOrder(0.5)
    with pytest.raises(FrequencyCollision):
        order.sign(1, -2)  # 1 - 2*(1/2) = 0 off the origin


def test_lift_orders_by_theta_hat():
    order = ArchOrder(SQRT2)
    p = BivarPoly({(0, 1): 2.0, (1, 0): 1.0, (1, 1): 3.0})
    f = order.lift(p)
    assert list(f.frequencies) == pytest.approx([1.0, SQRT2, 1.0 + SQRT2])
    assert f.coeff(SQRT2) == 2.0


def test_lift_preserves_values_along_the_winding_line():
    # lifted function is the restriction of the torus function to the
    # dense line (x, alpha x)
    gen = np.random.default_rng(SEED)
    order = ArchOrder(SQRT2)
    for _ in range(10):
        c = {
            (int(m), int(n)): complex(gen.uniform(-1, 1), gen.uniform(-1, 1))
            for m in gen.integers(-3, 4, size=6)
            for n in gen.integers(-3, 4, size=1)
        }
        p = BivarPoly(c)
        f = order.lift(p)
        xs = gen.uniform(0, 10, 8)
        assert np.max(np.abs(f(xs) - p(xs, SQRT2 * xs))) < 1e-12


def test_lift_univariate_matches_integer_grid():
    order = ArchOrder(SQRT2)
    p = BivarPoly({(2, 0): 1.5, (0, 0): 1.0})
    f = order.lift(p)
    assert list(f.frequencies) == [0.0, 2.0]


def test_lift_rejects_colliding_frequencies():
    order = ArchOrder(0.5)
    with pytest.raises(FrequencyCollision):
        order.lift(BivarPoly({(1, 0): 1.0, (0, 2): 1.0}))


def test_hilbert_of_cosine_is_sine():
    # H(cos) = sin on the circle: -i sign(k) maps (e^{ix}+e^{-ix})/2
    # to (e^{ix}-e^{-ix})/(2i)
    f = TrigPoly({1: 0.5, -1: 0.5})
    g = hilbert_transform(f)
    assert g.coeff(1) == -0.5j
    assert g.coeff(-1) == 0.5j
    xs = np.linspace(0, 2 * np.pi, 9)
    assert np.max(np.abs(g(xs) - np.sin(xs))) < 1e-15


def test_hilbert_of_ordered_cosine():
    # cos(x - y) under alpha = sqrt2 has theta_hat(1,-1) < 0
    order = ArchOrder(SQRT2)
    f = BivarPoly({(1, -1): 0.5, (-1, 1): 0.5})
    g = hilbert_transform(f, order)
    assert g.coeff(1, -1) == 0.5j
    assert g.coeff(-1, 1) == -0.5j


def test_hilbert_drops_mean():
    f = TrigPoly({0: 7.0, 2: 0.5, -2: 0.5})
    g = hilbert_transform(f)
    assert g.coeff(0) == 0


def test_hilbert_requires_real_input():
    with pytest.raises(NotRealValued):
        hilbert_transform(TrigPoly({1: 1.0}))
    with pytest.raises(NotRealValued):
        analytic_transform(APFunc([(0.0, 1j)]))


def test_hilbert_squares_to_minus_identity_minus_mean():
    gen = np.random.default_rng(SEED + 1)
    order = ArchOrder(SQRT2)
    for trial in range(25):
        if trial % 2:
            c = {0: complex(gen.uniform(-1, 1), 0)}
            for k in range(1, int(gen.integers(2, 8))):
                v = complex(gen.uniform(-1, 1), gen.uniform(-1, 1))
                c[k], c[-k] = v, np.conj(v)
            f = TrigPoly(c)
            use = None
        else:
            c = {(0, 0): complex(gen.uniform(-1, 1), 0)}
            for _ in range(int(gen.integers(2, 7))):
                m, n = int(gen.integers(-2, 3)), int(gen.integers(-2, 3))
                if (m, n) == (0, 0):
                    continue
                v = complex(gen.uniform(-1, 1), gen.uniform(-1, 1))
                c[(m, n)], c[(-m, -n)] = v, np.conj(v)
            f = BivarPoly(c)
            use = order
        hh = hilbert_transform(hilbert_transform(f, use), use)
        zero = (0, 0) if isinstance(f, BivarPoly) else 0
        expected = {k: -v for k, v in f.coeffs.items() if k != zero}
        assert hh.coeffs == expected  # exact, no tolerance


def test_analytic_transform_circle():
    f = TrigPoly({-1: 0.5, 0: 2.0, 1: 0.5})
    a = analytic_transform(f)
    assert a.coeffs == {0: 2.0 + 0j, 1: 1.0 + 0j}


def test_analytic_real_part_is_identity():
    gen = np.random.default_rng(SEED + 2)
    order = ArchOrder(GOLDEN)
    for _ in range(15):
        c = {(0, 0): complex(gen.uniform(-1, 1), 0)}
        for _ in range(5):
            m, n = int(gen.integers(-2, 3)), int(gen.integers(-2, 3))
            if (m, n) == (0, 0):
                continue
            v = complex(gen.uniform(-1, 1), gen.uniform(-1, 1))
            c[(m, n)], c[(-m, -n)] = v, np.conj(v)
        f = BivarPoly(c)
        a = analytic_transform(f, order)
        re = (a + a.conj_reflect()) * 0.5
        assert re.coeffs == f.coeffs  # exact
        # spectrum is one-sided in the order
        assert all(order.sign(m, n) >= 0 for (m, n) in a.coeffs)


def test_analytic_transform_matches_f_plus_i_hilbert():
    f = TrigPoly({-2: 1j, 0: 0.5, 2: -1j})
    a = analytic_transform(f)
    b = f + hilbert_transform(f) * 1j
    assert a.coeffs == b.coeffs


def test_lift_commutes_with_transforms():
    gen = np.random.default_rng(SEED + 3)
    order = ArchOrder(SQRT2)
    for _ in range(10):
        c = {(0, 0): complex(gen.uniform(-1, 1), 0)}
        for _ in range(4):
            m, n = int(gen.integers(-2, 3)), int(gen.integers(-2, 3))
            if (m, n) == (0, 0):
                continue
            v = complex(gen.uniform(-1, 1), gen.uniform(-1, 1))
            c[(m, n)], c[(-m, -n)] = v, np.conj(v)
        p = BivarPoly(c)
        assert order.lift(hilbert_transform(p, order)) == hilbert_transform(
            order.lift(p)
        )
        assert order.lift(analytic_transform(p, order)) == analytic_transform(
            order.lift(p)
        )


def test_ap_hilbert_uses_frequency_sign():
    f = APFunc([(-SQRT2, 0.5j), (0.0, 1.0), (SQRT2, -0.5j)])
    g = hilbert_transform(f)
    assert g.coeff(SQRT2) == -0.5
    assert g.coeff(-SQRT2) == -0.5
    assert g.coeff(0.0) == 0


def test_bivar_transform_requires_order():
    with pytest.raises(ValueError):
        hilbert_transform(BivarPoly({(1, 1): 0.5, (-1, -1): 0.5}))
