import math

import pytest

from warptunnel.params import BubbleParams
from warptunnel.hartman import (
    bubble_speed_scaling,
    eulerian_diagnostics,
    eulerian_transport_speed,
    superluminal_threshold,
    sweep,
    tunneling_time,
    tunneling_time_narrow,
    tunneling_time_wide,
)


def test_transit_time_is_three_widths_per_speed():
    assert tunneling_time(3.0, 3.0) == pytest.approx(3.0)
    assert tunneling_time(1.0, 2.0) == pytest.approx(1.5)


def test_transit_time_scale_invariance():
    assert tunneling_time(2.0, 0.7) == pytest.approx(
        tunneling_time(4.0, 1.4), abs=1e-14)


def test_transit_time_invariant_slope_cancels():
    assert tunneling_time(1.5, 1.0, sigma0=-8.0) == pytest.approx(
        tunneling_time(1.5, 1.0, sigma0=0.25), abs=1e-14)


def test_transit_time_input_validation():
    with pytest.raises(ValueError):
        tunneling_time(-1.0, 1.0)
    with pytest.raises(ValueError):
        tunneling_time(1.0, 0.0)
    with pytest.raises(ValueError):
        tunneling_time(1.0, 1.0, sigma0=0.0)


def test_narrow_law_matches_direct_transit():
    a, E = 2.0, 1.0
    assert tunneling_time_narrow(a, E) == pytest.approx(3.0)
    vs = math.sqrt(8.0 * E / a)
    assert tunneling_time_narrow(a, E) == pytest.approx(
        tunneling_time(a, vs), abs=1e-14)


def test_wide_plateau_is_width_independent():
    for n0 in (1.0, 3.0):
        dt = tunneling_time_wide(n0)
        assert dt == pytest.approx(3.0 / n0)
        rows = sweep("wide", [2.0, 5.0, 50.0], [n0])
        assert all(r.dt == dt for r in rows)  # bitwise flat plateau


def test_speed_scaling_and_threshold():
    assert bubble_speed_scaling(4.0, 0.7) == pytest.approx(2.8)
    assert superluminal_threshold(0.5) == pytest.approx(2.0)
    a_star = superluminal_threshold(0.7)
    assert bubble_speed_scaling(a_star, 0.7) == pytest.approx(1.0)


def test_law_input_validation():
    with pytest.raises(ValueError):
        tunneling_time_narrow(1.0, 0.0)
    with pytest.raises(ValueError):
        tunneling_time_wide(-2.0)
    with pytest.raises(ValueError):
        superluminal_threshold(0.0)


def test_eulerian_expansion_vanishes_at_center():
    from warptunnel.params import derive_bubble
    # slow bubble keeps the comoving path timelike everywhere
    p = derive_bubble(sigma=0.3, R=1.0, vs=0.5)
    u, theta, _ = eulerian_diagnostics(0.0, p)
    assert u[0] == 1.0 and u[2] == 0.0 and u[3] == 0.0
    assert theta == pytest.approx(0.0, abs=1e-9)
    # off-center the profile has slope, so the expansion is nonzero
    _, theta_ahead, _ = eulerian_diagnostics(1.0, p)
    assert abs(theta_ahead) > 1e-3


def test_no_time_dilation_where_profile_is_unity():
    # alpha overrides chosen so f(0) = alpha0/(vs(1+alpha1)) = 1
    p = BubbleParams(sigma=0.3, R=1.0, vs=0.5, alpha0=0.75, alpha1=0.5)
    _, _, ratio = eulerian_diagnostics(0.0, p)
    assert ratio == pytest.approx(1.0, abs=1e-14)


def test_spacelike_comoving_path_rejected():
    p = BubbleParams(sigma=0.3, R=1.0, vs=3.0, alpha0=-1.0, alpha1=0.5)
    with pytest.raises(ValueError):
        eulerian_diagnostics(0.0, p)


def test_center_transport_speed_is_one_third():
    # the small-sigma substitution alpha1 = 2, alpha0 = -vs gives
    # f(0) = -1/3 exactly, so the transport speed is vs/3
    for vs in (0.8, 1.0, 2.4):
        p = BubbleParams(sigma=0.3, R=1.0, vs=vs, alpha0=-vs, alpha1=2.0)
        assert eulerian_transport_speed(p) == pytest.approx(vs / 3.0, abs=1e-15)


def test_narrow_sweep_curves_ordered_by_energy():
    rows = sweep("narrow", [0.5], [1.0, 2.0, 4.0])
    dts = [r.dt for r in rows]
    assert dts[0] > dts[1] > dts[2]
    assert dts[0] / dts[2] == pytest.approx(2.0)  # dt ~ 1/sqrt(E)


def test_sweep_rejects_bad_input():
    with pytest.raises(ValueError):
        sweep("narrow", [], [1.0])
    with pytest.raises(ValueError):
        sweep("sideways", [1.0], [1.0])
