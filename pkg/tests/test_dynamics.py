import math

import numpy as np
import pytest

from warptunnel.params import BubbleParams
from warptunnel.dynamics import (
    bubble_flow_constants,
    bubble_form_exactness,
    fig2_dataset,
    implicit_invariant,
    integrate_trajectory,
    momentum_I,
    momentum_II,
    momentum_III,
    trajectory_constants,
    TrajectoryConstants,
    wave_form_exactness,
    wave_region_constants,
)
from warptunnel.phase import phase_constants, phase_II


def _drift(result):
    inv0 = result.samples[0].invariant_value
    return max(abs(s.invariant_value - inv0) for s in result.samples)


def test_constants_reproduce_defining_formulas(traj_consts, barrier):
    c = traj_consts.regionI
    assert c.theta1 == pytest.approx(c.C1**2 + c.C2**2)
    assert c.theta2 == pytest.approx(2 * c.C1 * c.C2 / c.theta1)
    assert c.theta3 == pytest.approx(c.C1**2 * c.k1 + c.C2**2 * c.k2)
    assert c.theta4 == pytest.approx(c.C1 * c.C2 * (c.k1 + c.k2) / c.theta3)
    assert c.theta3Prime == pytest.approx(
        barrier.amp_diff / barrier.amp_sum * c.theta3)
    assert c.theta11 == pytest.approx((1 + c.theta4) / (1 - c.theta4))


def test_single_mode_degeneracies():
    c = wave_region_constants("I", 0.8, 0.0, 0.8, 1.0, 0.18, pref=0.5)
    assert c.theta2 == 0.0 and c.theta4 == 0.0
    assert c.theta11 == 1.0


def test_iota_double_prime_identity(traj_consts):
    c = traj_consts.regionII
    for j in range(1, 6):
        expected = (c.iota0 / c.vs) * c.iota[j] - c.iotaPrime[j]
        assert c.iotaDoublePrime[j] == pytest.approx(expected, abs=1e-12)
    assert c.iotaDoublePrime[6] == pytest.approx(-c.iotaPrime[6], abs=1e-12)


def test_momentum_single_mode_limits():
    c = wave_region_constants("I", 0.8, 0.0, 0.8, 1.0, 0.18, pref=0.5)
    assert momentum_I(1.3, 0.7, c) == pytest.approx(0.5 * 0.8)
    c3 = wave_region_constants("III", 0.8, 0.0, 0.8, 1.0, 0.18, pref=1.0)
    assert momentum_III(0.0, 0.0, c3) == pytest.approx(0.8)


def test_momentum_equal_wavenumbers_constant():
    c = wave_region_constants("I", 0.8, 0.35, 0.9, 0.9, 0.18, pref=0.5)
    vals = {momentum_I(x, 0.0, c) for x in (-2.0, 0.0, 1.7)}
    assert max(vals) - min(vals) < 1e-14
    assert vals.pop() == pytest.approx(0.5 * 0.9)


def test_momentum_II_even_and_decaying(bubble):
    pc = phase_constants(bubble.alpha0, bubble.alpha1)
    assert momentum_II(0.7, 0.0, bubble, pc) == pytest.approx(
        momentum_II(-0.7, 0.0, bubble, pc), abs=1e-12)
    assert abs(momentum_II(30.0, 0.0, bubble, pc)) < 1e-6


def test_momentum_II_finite_difference_oracle(bubble):
    pc = phase_constants(bubble.alpha0, bubble.alpha1)
    h = 1e-6
    for r in (0.4, 1.3):
        fd = (phase_II(r + h, 0.0, bubble, pc)
              - phase_II(r - h, 0.0, bubble, pc)) / (2 * h)
        from warptunnel.metric import bubble_profile
        beta = bubble.vs * bubble_profile(r, bubble)
        assert momentum_II(r, 0.0, bubble, pc) == pytest.approx(
            (1 - beta**2) * fd, abs=1e-5)


def test_invariants_vanish_at_reference_point(traj_consts):
    assert implicit_invariant("I", 0.0, 0.0, traj_consts) == pytest.approx(0.0)
    assert implicit_invariant("II", 0.0, 0.0, traj_consts) == pytest.approx(0.0)
    assert implicit_invariant("III", 0.0, 0.0, traj_consts) == pytest.approx(0.0)


def test_outer_region_conservation(traj_consts):
    for region, x0 in (("I", -2.0), ("III", 2.0)):
        result = integrate_trajectory(region, x0, 0.0, 1.0, traj_consts,
                                      steps=10_000)
        assert result.status == "ok"
        assert _drift(result) <= 1e-6


def test_barrier_region_conservation(traj_consts):
    reduced = integrate_trajectory("II", 0.1, 0.0, 1.0, traj_consts,
                                   steps=10_000)
    assert reduced.status == "ok"
    assert _drift(reduced) <= 1e-5
    full = integrate_trajectory("II", 0.1, 0.0, 1.0, traj_consts,
                                steps=10_000, full_ode=True)
    assert full.status == "ok"  # full RHS integrates cleanly on the fixture


def test_step_halving_is_fourth_order(traj_consts):
    coarse = _drift(integrate_trajectory("II", 0.1, 0.0, 5.0, traj_consts,
                                         steps=50))
    fine = _drift(integrate_trajectory("II", 0.1, 0.0, 5.0, traj_consts,
                                       steps=100))
    assert coarse / fine >= 10.0


def test_transmitted_single_mode_is_straight_line():
    c3 = wave_region_constants("III", 0.9, 0.0, 0.8, 1.0, 0.18, pref=1.0)
    c1 = wave_region_constants("I", 0.9, 0.1, 0.8, 1.0, 0.18, pref=0.5)
    p = BubbleParams(sigma=0.3, R=1.0, vs=1.0)
    tc = TrajectoryConstants(regionI=c1, regionII=bubble_flow_constants(p),
                             regionIII=c3)
    result = integrate_trajectory("III", 1.0, 0.0, 2.0, tc, steps=500)
    final = result.samples[-1]
    assert final.x == pytest.approx(1.0 + 0.8 * 2.0, abs=1e-10)


def test_equal_amplitudes_rejected():
    # exactly equal amplitudes give a persistent standing node (theta9 = 1)
    with pytest.raises(ValueError):
        wave_region_constants("I", 0.7, 0.7, 0.8, 1.0, 0.18, pref=0.5)


def test_node_halts_integration():
    # near-equal amplitudes: density nearly vanishes where cos Xi = -1,
    # and stepping onto that point halts with a node report
    c1 = wave_region_constants("I", 0.7, 0.7 * (1 + 3e-5), 0.8, 1.0, 0.18,
                               pref=0.5)
    assert 1.0 - abs(c1.theta2) < 1e-9
    p = BubbleParams(sigma=0.3, R=1.0, vs=1.0)
    c3 = wave_region_constants("III", 0.9, 0.1, 0.8, 1.0, 0.18, pref=1.0)
    tc = TrajectoryConstants(regionI=c1, regionII=bubble_flow_constants(p),
                             regionIII=c3)
    x_node = math.pi / c1.cx  # Xi(x_node, 0) = pi
    result = integrate_trajectory("I", x_node, 0.0, 1.0, tc, steps=100)
    assert result.status == "node"
    assert "node" in result.message


def test_wave_form_needs_integrating_factor(traj_consts):
    c = traj_consts.regionI
    assert abs(wave_form_exactness(c, 0.7)) < 1e-7
    assert abs(wave_form_exactness(c, 0.7, integrating_factor=False)) > 1e-2


def test_bubble_form_needs_integrating_factor(traj_consts):
    c = traj_consts.regionII
    assert bubble_form_exactness(c, 0.6) < 1e-7
    assert bubble_form_exactness(c, 0.6, integrating_factor=False) > 1.0


def test_degenerate_transmitted_branch(traj_consts):
    # nonrelativistic dispersion collapses the region-III integrating
    # factor to unity; the sine-form antiderivative takes over
    assert traj_consts.regionIII.degenerate
    assert traj_consts.regionIII.theta9 == pytest.approx(0.0, abs=1e-12)


def test_fig2_families():
    header, data = fig2_dataset()
    assert header[0] == "x"
    assert len(header) == 1 + 6 + 4 + 4 + 4
    xs = data[:, 0]
    cols = {name: data[:, j] for j, name in enumerate(header)}
    # tunneling family is linear and passes through its offset at x = 2
    tu = cols["tu_rho=1.75"]
    i2 = int(np.argmin(np.abs(xs - 2.0)))
    assert tu[i2] == pytest.approx(1.75, abs=1e-12)
    # reflected + incident is constant (the non-constant parts cancel)
    s = cols["in_rho=4.65"] + cols["re_rho=-1.75"]
    assert np.max(np.abs(s - (4.65 - 1.75))) < 1e-12
    # transmitted and incident differ by a constant offset
    d = cols["tr_rho=1.3"] - cols["in_rho=4.65"]
    assert np.max(np.abs(d - (1.3 - 4.65))) < 1e-12
    # at 1.21 x - 1 = 0 the incident family equals its offset
    x0 = 1.0 / 1.21
    header2, data2 = fig2_dataset(x_min=x0, x_max=x0 + 1.0, n_points=11)
    assert data2[0, header2.index("in_rho=4.65")] == pytest.approx(
        4.65, abs=1e-12)


def test_fig2_curves_are_continuous():
    _, data = fig2_dataset(n_points=2001)
    for j in range(1, data.shape[1]):
        jumps = np.abs(np.diff(data[:, j]))
        assert np.max(jumps) < 0.05
