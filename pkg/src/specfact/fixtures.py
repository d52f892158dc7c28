"""Seeded random inputs shared by the tests and the verify command.

All draws go through numpy Generator objects so runs are reproducible;
the SPECFACT_SEED environment variable overrides the default seed.
"""

from __future__ import annotations

import os

import numpy as np

from .trig import BivarPoly, TrigPoly, min_on_grid

DEFAULT_SEED = 90217


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    return int(os.environ.get("SPECFACT_SEED", default))


def rng(seed: int | None = None) -> np.random.Generator:
    return np.random.default_rng(seed_from_env() if seed is None else seed)


def _unit_box(gen) -> complex:
    return complex(gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0))


def random_analytic_poly(gen, degree: int) -> TrigPoly:
    """Support [0, degree], coefficients uniform in the complex unit box."""
    return TrigPoly({k: _unit_box(gen) for k in range(degree + 1)})


def random_real_trig(gen, degree: int) -> TrigPoly:
    """Real-valued circle polynomial of the given degree."""
    c = {0: complex(gen.uniform(-1.0, 1.0), 0.0)}
    for k in range(1, degree + 1):
        v = _unit_box(gen)
        c[k] = v
        c[-k] = np.conj(v)
    return TrigPoly(c)


def random_real_bivar(gen, degree: int) -> BivarPoly:
    """Real-valued lattice polynomial with support box [-degree, degree]^2."""
    c = {(0, 0): complex(gen.uniform(-1.0, 1.0), 0.0)}
    for m in range(-degree, degree + 1):
        for n in range(-degree, degree + 1):
            if (m, n) > (0, 0) and (m, n) not in c:
                v = _unit_box(gen)
                c[(m, n)] = v
                c[(-m, -n)] = np.conj(v)
    return BivarPoly(c)


def random_complex_bivar(gen, degree: int) -> BivarPoly:
    """Unconstrained lattice polynomial with support box [-degree, degree]^2."""
    c = {}
    for m in range(-degree, degree + 1):
        for n in range(-degree, degree + 1):
            c[(m, n)] = _unit_box(gen)
    return BivarPoly(c)


def random_outer_poly(
    gen, degree: int, min_radius: float = 1.15, max_radius: float = 3.0
) -> TrigPoly:
    """Polynomial with all roots outside the closed disk and positive mean.

    Root radii are drawn log-uniformly in [min_radius, max_radius], which
    stays clear of the 1.001 floor that finite-section convergence needs.
    """
    if degree == 0:
        return TrigPoly({0: float(gen.uniform(0.5, 2.0))})
    radii = np.exp(gen.uniform(np.log(min_radius), np.log(max_radius), degree))
    angles = gen.uniform(0.0, 2.0 * np.pi, degree)
    roots = radii * np.exp(1j * angles)
    coeffs = np.poly(roots)[::-1]
    scale = float(gen.uniform(0.5, 2.0)) * np.conj(coeffs[0]) / abs(coeffs[0])
    return TrigPoly({k: scale * coeffs[k] for k in range(degree + 1)})


def random_positive_weight(
    gen, degree: int, floor: float = 0.1, min_radius: float = 1.25
) -> TrigPoly:
    """Strictly positive real weight with grid minimum at least floor."""
    h = random_outer_poly(gen, degree, min_radius=min_radius)
    w = h.squared_modulus()
    m = min_on_grid(w)
    target = float(gen.uniform(floor, max(2.0 * floor, 1.0)))
    return w * (target / m)


def random_bivar_generator(
    gen, size: int = 2, dominance: float | None = None
) -> BivarPoly:
    """Support [0, size]^2, unit-box coefficients, mean pinned real positive.

    With dominance set, the (0, 0) coefficient is boosted to dominance times
    the total mass of the others, certifying a zero-free extension on the
    closed upper half-plane by coefficient domination.
    """
    c = {
        (m, n): _unit_box(gen)
        for m in range(size + 1)
        for n in range(size + 1)
    }
    rest = sum(abs(v) for k, v in c.items() if k != (0, 0))
    if dominance is not None:
        c[(0, 0)] = complex(dominance * rest, 0.0)
    else:
        c[(0, 0)] = complex(abs(c[(0, 0)]), 0.0)
    return BivarPoly(c)


def random_onesided_ap_terms(
    gen, n_freqs: int = 16, band: float = 4.0
) -> dict:
    """Frequencies in [0, band] with 0 always present and a solid mean."""
    count = max(2, n_freqs)
    freqs = np.sort(gen.uniform(0.0, band, count - 1))
    mean = gen.uniform(0.3, 1.0) * np.exp(1j * gen.uniform(0.0, 2.0 * np.pi))
    terms = {0.0: complex(mean)}
    for w in freqs:
        terms[float(w)] = _unit_box(gen)
    return terms
