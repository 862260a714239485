import cmath
import math

import numpy as np
import pytest

from warptunnel.params import BubbleParams, derive_bubble
from warptunnel.phase import (
    phase_I,
    phase_II,
    phase_II_derivative,
    phase_II_derivative_structural,
    phase_II_quadrature,
    phase_III,
    phase_constants,
    sqrt_rho_I,
    superposed_phase_density,
    x_prime,
)


def test_constants_satisfy_root_identities(bubble):
    pc = phase_constants(bubble.alpha0, bubble.alpha1)
    assert pc.mu0 * pc.mu1 == pytest.approx(pc.beta2**2, abs=1e-12)
    assert pc.mu0 + pc.mu1 == pytest.approx(2.0 * pc.beta3, abs=1e-12)


def test_degenerate_constants_rejected():
    # (alpha1 - 1)^2 = alpha0^2 makes beta0/beta2/beta3 blow up
    with pytest.raises(ValueError):
        phase_constants(-1.0, 2.0)


def test_auxiliary_angle_range():
    assert x_prime(0.0, 0.3) == 0.0
    assert 0.0 < x_prime(1.0, 0.3) < math.pi / 2.0


def test_closed_form_matches_quadrature(bubble):
    pc = phase_constants(bubble.alpha0, bubble.alpha1)
    for r_a, r_b in [(0.0, 1.3), (-1.1, 0.7), (0.2, 2.5), (-2.0, -0.3)]:
        closed = (phase_II(r_b, 0.0, bubble, pc)
                  - phase_II(r_a, 0.0, bubble, pc))
        assert closed == pytest.approx(
            phase_II_quadrature(r_a, r_b, bubble), abs=1e-9)


def test_phase_odd_in_bubble_offset(bubble):
    for r in [0.4, 1.1, 2.7]:
        assert phase_II(r, 0.0, bubble) == pytest.approx(
            -phase_II(-r, 0.0, bubble), abs=1e-13)
    assert phase_II(0.0, 0.0, bubble) == 0.0


def test_derivative_is_even_and_matches_finite_difference(bubble):
    h = 1e-6
    for r in [0.5, -0.5, 1.4]:
        fd = (phase_II(r + h, 0.0, bubble) - phase_II(r - h, 0.0, bubble)) / (2 * h)
        assert phase_II_derivative(r, bubble) == pytest.approx(fd, abs=1e-8)
    assert phase_II_derivative(1.0, bubble) == phase_II_derivative(-1.0, bubble)


def test_structural_derivative_equals_rational_form(bubble):
    pc = phase_constants(bubble.alpha0, bubble.alpha1)
    for r in [-1.5, -0.4, 0.4, 1.0, 2.0]:
        assert phase_II_derivative_structural(r, bubble, pc) == pytest.approx(
            phase_II_derivative(r, bubble), abs=1e-12)


def test_quadrature_rejects_pole_crossing():
    # alpha overrides pushing |vs f| through 1 inside the interval
    p = BubbleParams(sigma=0.3, R=1.0, vs=1.0, alpha0=-2.5, alpha1=0.5)
    assert abs(p.vs * (-2.5) / (1.0 + 0.5 * 1.0)) > 1.0  # pole exists
    with pytest.raises(ValueError):
        phase_II_quadrature(-3.0, 3.0, p)


def test_randomized_profiles_close_the_oracle():
    rng = np.random.default_rng(42)
    for _ in range(5):
        p = derive_bubble(sigma=rng.uniform(0.05, 0.5),
                          R=rng.uniform(0.5, 2.0),
                          vs=rng.uniform(0.3, 0.95))
        pc = phase_constants(p.alpha0, p.alpha1)
        r = rng.uniform(0.2, 2.0)
        closed = phase_II(r, 0.0, p, pc) - phase_II(-r / 3.0, 0.0, p, pc)
        assert closed == pytest.approx(
            phase_II_quadrature(-r / 3.0, r, p), abs=1e-8)


def test_polar_decomposition_reproduces_superposition(barrier):
    # sqrt(rho) e^{iS} must equal A e^{i theta} + B e^{-i theta}
    for x, t in [(-1.7, 0.0), (-3.0, 2.0), (0.5, 1.0)]:
        theta = barrier.k1 * x - barrier.E1 * t
        direct = (barrier.A * cmath.exp(1j * theta)
                  + barrier.B * cmath.exp(-1j * theta))
        polar = sqrt_rho_I(x, t, barrier, 1) * cmath.exp(
            1j * phase_I(x, t, barrier, 1))
        assert polar == pytest.approx(direct, abs=1e-12)


def test_plane_wave_phase(barrier):
    assert phase_III(2.0, 1.0, barrier, 2) == pytest.approx(
        barrier.k2 * 2.0 - barrier.E2 * 1.0)


def test_superposed_density_matches_complex_modulus():
    comps = [(0.7, 1.2, 0.3), (0.5, 0.9, -1.1)]
    S, amp = superposed_phase_density(comps)
    direct = sum(c * sr * cmath.exp(1j * s) for c, sr, s in comps)
    assert amp == pytest.approx(abs(direct), abs=1e-12)
    assert cmath.exp(1j * S) == pytest.approx(direct / abs(direct), abs=1e-12)


def test_superposed_density_never_negative():
    # perfectly destructive pair: amplitude clamps to zero, not negative
    comps = [(1.0, 1.0, 0.0), (1.0, 1.0, math.pi)]
    _, amp = superposed_phase_density(comps)
    assert amp == 0.0
    # identically zero input has no phase at all
    with pytest.raises(ValueError):
        superposed_phase_density([(0.0, 1.0, 0.0)])
