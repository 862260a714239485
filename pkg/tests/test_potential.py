import math

import numpy as np
import pytest

from warptunnel.params import BubbleParams, derive_bubble
from warptunnel.metric import bubble_profile, bubble_radius
from warptunnel.potential import (
    bohm_potential_generic,
    classify_regime,
    distortion_energy,
    dQ_consistency,
    dQ_df,
    f_approximations,
    narrow_energy_closed_form,
    quantum_potential_II,
    quantum_potential_region,
    wide_energy_scale,
)


def test_barrier_potential_matches_its_differential(bubble):
    for x in [-1.5, -0.2, 0.0, 0.8, 2.0]:
        assert dQ_consistency(x, bubble) < 1e-6


def test_dq_df_pole_rejected():
    with pytest.raises(ValueError):
        dQ_df(1.0, 1.0)


def test_singular_profile_rejected():
    p = BubbleParams(sigma=0.3, R=1.0, vs=1.0, alpha0=-2.5, alpha1=0.5)
    with pytest.raises(ValueError):
        quantum_potential_II(0.0, 0.0, p)


def test_region_potential_power_law():
    assert quantum_potential_region(-1.0) == pytest.approx(1.0 / 3.0)
    assert quantum_potential_region(-4.0, sign=-1) == pytest.approx(-8.0 / 3.0)
    with pytest.raises(ValueError):
        quantum_potential_region(0.5)


def test_generic_bohm_potential_on_gaussian():
    # rho = exp(-x^2): sqrt(rho) = exp(-x^2/2), Q = (1 - x^2)/2
    x = np.linspace(-2.0, 2.0, 801)
    rho = np.exp(-x**2)
    Q = bohm_potential_generic(rho, x[1] - x[0])
    expected = (1.0 - x**2) / 2.0
    assert np.allclose(Q[1:-1], expected[1:-1], atol=1e-4)


def test_generic_bohm_potential_input_validation():
    with pytest.raises(ValueError):
        bohm_potential_generic([1.0, 2.0], 0.1)
    with pytest.raises(ValueError):
        bohm_potential_generic([1.0, -1.0, 1.0], 0.1)


def test_narrow_energy_asymptotics():
    p = derive_bubble(sigma=1e-3, R=1.0, vs=1.0)
    a = 0.5
    ratio = distortion_energy(a, p) / narrow_energy_closed_form(a, p.vs)
    assert 0.95 <= ratio <= 1.05


def test_wide_energy_scale_limit():
    # sigma -> 0: E/(vs^2/sigma) -> 1/6
    for sigma in (1e-2, 1e-3):
        p = derive_bubble(sigma=sigma, R=1.0, vs=1.0)
        ratio = distortion_energy(12.0 / sigma, p) / wide_energy_scale(sigma, p.vs)
        assert ratio == pytest.approx(1.0 / 6.0, rel=2e-2)


def test_zero_width_barrier_has_zero_energy(bubble):
    assert distortion_energy(0.0, bubble) == 0.0


def test_profile_approximations(bubble):
    inner, _, exact = f_approximations(0.05, bubble)
    assert inner == pytest.approx(exact, rel=1e-3)
    _, outer, exact_far = f_approximations(8.0, bubble)
    assert outer == pytest.approx(exact_far, rel=0.2)


def test_regime_classification(bubble):
    R = bubble_radius(bubble.sigma, bubble.alpha1)
    assert classify_regime(0.5 * R, bubble.sigma, bubble.alpha1).regime == "narrow"
    assert classify_regime(3.0 * R, bubble.sigma, bubble.alpha1).regime == "wide"
    assert classify_regime(1.5 * R, bubble.sigma, bubble.alpha1).regime == "intermediate"


def test_profile_fraction_at_effective_radius():
    # for a gentle profile (small sigma) the value at the effective radius
    # approaches the universal fraction 2/(1 + cosh(sqrt(2))) of the center
    p = derive_bubble(sigma=1e-2, R=1.0, vs=1.0)
    R_eff = bubble_radius(p.sigma, p.alpha1)
    ratio = bubble_profile(R_eff, p) / bubble_profile(0.0, p)
    assert ratio == pytest.approx(2.0 / (1.0 + math.cosh(math.sqrt(2.0))),
                                  rel=1e-3)
