"""
Boundary matching: continuity of the piecewise wavefunction and its spatial
derivative at x = -a/2 (time t0) and x = +a/2 (time t1).

The closed-form coefficient cascade is the primary computation; an
independent 4x4 linear solve over the same system is the oracle (see tests).

Conventions:
  * The bubble center is held static (x_s = xs0) in this module: the
    boundary-value block is evaluated at a single reference time and patched
    to the t1 boundary with explicit energy/potential phase factors, which is
    only consistent when the region-II spatial phase does not drift.
  * `right_time` selects whether the region-II/III boundary values are
    evaluated at t0 (and phase-compensated to t1) or directly at t1; both
    produce the same linear system.
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from .params import BarrierSpec, BubbleParams
from .phase import (
    PhaseConstants,
    phase_constants,
    phase_II,
    phase_II_derivative_structural,
    phase_I,
    phase_III,
    sqrt_rho_I,
)

RESONANCE_TOL = 1e-9


@dataclass(frozen=True)
class MatchZetas:
    """The twelve boundary values: zeta[l], zetaPrime[l] for l = 1..6."""

    zeta: tuple          # zeta[0] unused; indices 1..6
    zetaPrime: tuple
    right_time: str      # "t0" or "t1": evaluation time of the l+2, l+4 block


@dataclass(frozen=True)
class MatchCoefficients:
    """Solved matching data: boundary values, determinant ratios, coefficients."""

    zeta: tuple
    zetaPrime: tuple
    varpi: tuple         # varpi[0] unused; indices 1..4
    cI1: complex
    cI2: complex
    cII1: complex
    cII2: complex
    cIII1: complex
    cIII2: complex
    right_time: str


def _psi_I_mode(x: float, t: float, spec: BarrierSpec, mode: int) -> complex:
    return sqrt_rho_I(x, t, spec, mode) * cmath.exp(1j * phase_I(x, t, spec, mode))


def _dpsi_I_mode(x: float, t: float, spec: BarrierSpec, mode: int) -> complex:
    """
    Spatial derivative of the region-I mode in its polar form:
    k [(B'^2 - A'^2) sin(2 theta) + 2i A' B'] / (2 sqrt(rho)) * e^{iS}
    with A' = A + B, B' = A - B, theta = k x - E t.
    """
    k = spec.k(mode)
    theta = k * x - spec.E(mode) * t
    amp_sum, amp_diff = spec.amp_sum, spec.amp_diff
    sr = sqrt_rho_I(x, t, spec, mode)
    if sr == 0.0:
        raise ValueError("vanishing region-I amplitude at the boundary point")
    num = (amp_diff**2 - amp_sum**2) * math.sin(2.0 * theta) + 2j * amp_sum * amp_diff
    return k * num / (2.0 * sr) * cmath.exp(1j * phase_I(x, t, spec, mode))


def _zeta_II(x: float, t: float, spec: BarrierSpec, p: BubbleParams,
             pc: PhaseConstants) -> complex:
    return cmath.exp(1j * (phase_II(x, p.xs0, p, pc) - spec.V0 * t))


def _zeta_prime_II(x: float, t: float, spec: BarrierSpec, p: BubbleParams,
                   pc: PhaseConstants) -> complex:
    """
    Derivative boundary value for region II, in the sec^2/cosh structural
    form of the phase antiderivative; equals i * dS_II/dx * zeta_II.
    """
    r_s = x - p.xs0
    if abs(r_s) < 1e-12:
        raise ValueError(
            "region-II derivative boundary value is singular at r_s = 0; "
            "the bubble center coincides with the evaluation point"
        )
    dS = phase_II_derivative_structural(r_s, p, pc)
    return 1j * dS * _zeta_II(x, t, spec, p, pc)


def zeta_terms(spec: BarrierSpec, p: BubbleParams,
               right_time: str = "t0") -> MatchZetas:
    """
    The twelve complex boundary values:

      l = 1, 2   : region-I mode and derivative at (-a/2, t0)
      l + 2      : region-II phase factor at -a/2 (l=1) / +a/2 (l=2)
      l + 4      : region-III plane wave and derivative at (+a/2, t_eval)

    t_eval for the l+2 (right point only) and l+4 entries is t0 or t1 per
    `right_time`.
    """
    if right_time not in ("t0", "t1"):
        raise ValueError("right_time must be 't0' or 't1'")
    pc = phase_constants(p.alpha0, p.alpha1)
    xl, xr = -spec.a / 2.0, spec.a / 2.0
    t_left = spec.t0
    t_right = spec.t0 if right_time == "t0" else spec.t1

    zeta = [0j] * 7
    zp = [0j] * 7
    for mode in (1, 2):
        zeta[mode] = _psi_I_mode(xl, t_left, spec, mode)
        zp[mode] = _dpsi_I_mode(xl, t_left, spec, mode)
    zeta[3] = _zeta_II(xl, t_left, spec, p, pc)
    zp[3] = _zeta_prime_II(xl, t_left, spec, p, pc)
    zeta[4] = _zeta_II(xr, t_right, spec, p, pc)
    zp[4] = _zeta_prime_II(xr, t_right, spec, p, pc)
    for mode in (1, 2):
        zeta[4 + mode] = cmath.exp(1j * phase_III(xr, t_right, spec, mode))
        zp[4 + mode] = 1j * spec.k(mode) * zeta[4 + mode]
    return MatchZetas(zeta=tuple(zeta), zetaPrime=tuple(zp), right_time=right_time)


def _hatted(spec: BarrierSpec, z: MatchZetas):
    """
    Right-boundary block propagated to time t1: when the block was evaluated
    at t0, multiply by e^{-iE^l (t1-t0)} (plane waves) or e^{-iV0 (t1-t0)}
    (region-II factor); identity when already at t1.
    """
    if z.right_time == "t1":
        u1 = u2 = u4 = 1.0 + 0j
    else:
        dt = spec.t1 - spec.t0
        u1 = cmath.exp(-1j * spec.E1 * dt)
        u2 = cmath.exp(-1j * spec.E2 * dt)
        u4 = cmath.exp(-1j * spec.V0 * dt)
    zeta = list(z.zeta)
    zp = list(z.zetaPrime)
    zeta[4] *= u4
    zp[4] *= u4
    zeta[5] *= u1
    zp[5] *= u1
    zeta[6] *= u2
    zp[6] *= u2
    return zeta, zp


def varpi_ratios(z: MatchZetas) -> tuple:
    """
    The four determinant ratios over the raw boundary values:
      varpi1 = (z4' z5 - z4 z5') / (z4 z6' - z4' z6)
      varpi2 = (z5' z6 - z5 z6') / (z4 z6' - z4' z6)
      varpi3 = (z1 z3' - z1' z3) / (z1 z2' - z1' z2)
      varpi4 = (z2' z3 - z2 z3') / (z1 z2' - z1' z2)
    """
    zt, zp = z.zeta, z.zetaPrime
    d_right = zt[4] * zp[6] - zp[4] * zt[6]
    d_left = zt[1] * zp[2] - zp[1] * zt[2]
    if abs(d_right) < 1e-300 or abs(d_left) < 1e-300:
        raise ValueError("zero determinant ratio denominator in boundary values")
    varpi1 = (zp[4] * zt[5] - zt[4] * zp[5]) / d_right
    varpi2 = (zp[5] * zt[6] - zt[5] * zp[6]) / d_right
    varpi3 = (zt[1] * zp[3] - zp[1] * zt[3]) / d_left
    varpi4 = (zp[2] * zt[3] - zt[2] * zp[3]) / d_left
    return (0j, varpi1, varpi2, varpi3, varpi4)


def continuity_system(spec: BarrierSpec, z: MatchZetas, cIII1: complex = 1.0 + 0j):
    """
    The 4x4 linear system for (cI1, cI2, cII1, cIII2), given cIII1 and the
    constraint cII2 = 1 - cII1, expressing value and derivative continuity of
    the piecewise wavefunction at both boundaries.
    """
    zt, zp = list(z.zeta), list(z.zetaPrime)
    zh, zph = _hatted(spec, z)
    e10 = cmath.exp(1j * spec.E1 * spec.t0)
    e20 = cmath.exp(1j * spec.E2 * spec.t0)
    e11 = cmath.exp(1j * spec.E1 * spec.t1)
    e21 = cmath.exp(1j * spec.E2 * spec.t1)

    M = np.zeros((4, 4), dtype=complex)
    b = np.zeros(4, dtype=complex)
    # Left boundary (-a/2, t0): region I = region II.
    M[0] = [zt[1], zt[2], -zt[3] * (e10 - e20), 0.0]
    b[0] = zt[3] * e20
    M[1] = [zp[1], zp[2], -zp[3] * (e10 - e20), 0.0]
    b[1] = zp[3] * e20
    # Right boundary (+a/2, t1): region II = region III.
    M[2] = [0.0, 0.0, -zh[4] * (e11 - e21), zh[6]]
    b[2] = -zh[5] * cIII1 + zh[4] * e21
    M[3] = [0.0, 0.0, -zph[4] * (e11 - e21), zph[6]]
    b[3] = -zph[5] * cIII1 + zph[4] * e21
    return M, b


def solve_coefficients(spec: BarrierSpec, z: MatchZetas,
                       cIII1: complex = 1.0 + 0j) -> MatchCoefficients:
    """
    Closed-form coefficient cascade (cIII1 is the free normalization):

        cIII2 = varpi1^ * cIII1
        cII1  = (varpi2^ cIII1 e^{-iE1 t1} + e^{i dE t1}) / (e^{i dE t1} - 1)
        cII2  = 1 - cII1
        cI1   = varpi4 N,  cI2 = varpi3 N,
                N = cII1 e^{iE1 t0} + cII2 e^{iE2 t0}

    where varpi1^, varpi2^ are the determinant ratios over the right block
    propagated to t1 (varpi1^ = varpi1 e^{i dE (t1-t0)} for the t0 block).
    Degenerate when dE * t1 = 0 (mod 2 pi).
    """
    phase_res = cmath.exp(1j * spec.deltaE * spec.t1)
    if abs(phase_res - 1.0) <= RESONANCE_TOL:
        raise ValueError(
            f"resonant degeneracy: deltaE*t1 = {spec.deltaE * spec.t1} is a "
            f"multiple of 2*pi; the coefficient cascade is singular"
        )
    varpi = varpi_ratios(z)
    if z.right_time == "t0":
        dt = spec.t1 - spec.t0
        varpi1_hat = varpi[1] * cmath.exp(1j * spec.deltaE * dt)
        varpi2_hat = varpi[2] * cmath.exp(-1j * (spec.E1 - spec.V0) * dt)
    else:
        varpi1_hat = varpi[1]
        varpi2_hat = varpi[2]

    cIII2 = varpi1_hat * cIII1
    cII1 = (varpi2_hat * cIII1 * cmath.exp(-1j * spec.E1 * spec.t1) + phase_res) \
        / (phase_res - 1.0)
    cII2 = 1.0 - cII1
    N = cII1 * cmath.exp(1j * spec.E1 * spec.t0) + cII2 * cmath.exp(1j * spec.E2 * spec.t0)
    cI1 = varpi[4] * N
    cI2 = varpi[3] * N
    return MatchCoefficients(
        zeta=z.zeta, zetaPrime=z.zetaPrime, varpi=varpi,
        cI1=cI1, cI2=cI2, cII1=cII1, cII2=cII2,
        cIII1=cIII1, cIII2=cIII2, right_time=z.right_time,
    )


def system_residuals(spec: BarrierSpec, z: MatchZetas,
                     coeffs: MatchCoefficients) -> np.ndarray:
    """Relative residuals of the four continuity equations for solved coefficients."""
    M, b = continuity_system(spec, z, coeffs.cIII1)
    u = np.array([coeffs.cI1, coeffs.cI2, coeffs.cII1, coeffs.cIII2])
    scale = np.maximum(np.abs(b), np.max(np.abs(M), axis=1))
    scale[scale == 0.0] = 1.0
    return np.abs(M @ u - b) / scale


def transmission(cIII1: complex, varpi1: complex, deltaE: float, t1: float,
                 Xi_III: float) -> tuple:
    """
    Transmission coefficient
    T = cIII1 sqrt(1 + varpi1^2 e^{i 2 dE t1} + 2 varpi1 e^{i dE t1} cos Xi),
    principal square root. Returns (T, |T|).
    """
    ph = cmath.exp(1j * deltaE * t1)
    T = cIII1 * cmath.sqrt(1.0 + varpi1**2 * ph * ph
                           + 2.0 * varpi1 * ph * math.cos(Xi_III))
    return T, abs(T)


def wavefunction(x: float, t: float, coeffs: MatchCoefficients,
                 spec: BarrierSpec, p: BubbleParams) -> complex:
    """
    Piecewise wavefunction with solved coefficients; the region is selected
    from x against +-a/2 (region II on the open interval).
    """
    if x <= -spec.a / 2.0:
        return (coeffs.cI1 * _psi_I_mode(x, t, spec, 1)
                + coeffs.cI2 * _psi_I_mode(x, t, spec, 2))
    if x >= spec.a / 2.0:
        return (coeffs.cIII1 * cmath.exp(1j * phase_III(x, t, spec, 1))
                + coeffs.cIII2 * cmath.exp(1j * phase_III(x, t, spec, 2)))
    pc = phase_constants(p.alpha0, p.alpha1)
    mode_sum = (coeffs.cII1 * cmath.exp(1j * spec.E1 * t)
                + coeffs.cII2 * cmath.exp(1j * spec.E2 * t))
    return mode_sum * cmath.exp(1j * (phase_II(x, p.xs0, p, pc) - spec.V0 * t))
