"""
Quantum potentials per region, the generic Bohmian potential on a grid, and
the distortion-energy functional with its narrow/wide asymptotics.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.integrate import quad

from .params import BubbleParams
from .metric import bubble_profile, bubble_radius


@dataclass(frozen=True)
class EnergyRegime:
    """Barrier-width regime relative to the effective bubble radius."""

    a: float
    R: float

    @property
    def regime(self) -> str:
        if self.a <= self.R:
            return "narrow"
        if self.a > 2.0 * self.R:
            return "wide"
        return "intermediate"


def quantum_potential_II(x: float, t: float, p: BubbleParams) -> float:
    """
    Quantum potential inside the barrier:
    Q_II = ln|(1 + vs f)/sqrt(1 - vs^2 f^2)| + vs^2 f^2 / 2, with
    f evaluated at r_s = x - x_s(t). Singular at |vs f| = 1.
    """
    beta = p.vs * bubble_profile(x - p.xs(t), p)
    if abs(beta) >= 1.0:
        raise ValueError(
            f"logarithmic singularity: |vs f| = {abs(beta)} >= 1 at x={x}, t={t}"
        )
    return math.log(abs((1.0 + beta) / math.sqrt(1.0 - beta * beta))) + beta * beta / 2.0


def dQ_df(f: float, vs: float) -> float:
    """Analytic dQ_II/df = vs/(1 - vs^2 f^2) + vs^2 f."""
    denom = 1.0 - vs * vs * f * f
    if denom == 0.0:
        raise ValueError("dQ/df pole: |vs f| = 1")
    return vs / denom + vs * vs * f


def _Q_of_f(f: float, vs: float) -> float:
    beta = vs * f
    return math.log(abs((1.0 + beta) / math.sqrt(1.0 - beta * beta))) + beta * beta / 2.0


def dQ_consistency(x: float, p: BubbleParams, h: float = 1e-6) -> float:
    """
    Residual |finite-difference dQ_II/df - analytic slope| at the profile
    value f(x - xs0); checks that the closed-form Q_II integrates its
    defining differential.
    """
    f = bubble_profile(x - p.xs0, p)
    fd = (_Q_of_f(f + h, p.vs) - _Q_of_f(f - h, p.vs)) / (2.0 * h)
    return abs(fd - dQ_df(f, p.vs))


def quantum_potential_region(g00: float, sign: int = +1) -> float:
    """
    Constant quantum potential of the outer regions: sign * (-g00)^{3/2} / 3.
    The metric has g00 < 0; the (-g00) reading keeps the power real.
    """
    if g00 >= 0:
        raise ValueError(f"region quantum potential requires g00 < 0, got {g00}")
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    return sign * (-g00) ** 1.5 / 3.0


def bohm_potential_generic(rho_samples, dx: float):
    """
    Generic Bohmian potential Q = -(d^2 sqrt(rho)/dx^2) / (2 sqrt(rho)) on a
    uniform grid, by second central differences (one-sided copies at the
    endpoints). Second-order accurate in dx.
    """
    rho = np.asarray(rho_samples, dtype=float)
    if rho.size < 3:
        raise ValueError("need at least 3 grid points")
    if np.any(rho <= 0):
        raise ValueError("density must be positive on the grid")
    if dx <= 0:
        raise ValueError("grid spacing must be positive")
    amp = np.sqrt(rho)
    d2 = np.empty_like(amp)
    d2[1:-1] = (amp[2:] - 2.0 * amp[1:-1] + amp[:-2]) / (dx * dx)
    d2[0] = d2[1]
    d2[-1] = d2[-2]
    return -0.5 * d2 / amp


def distortion_energy(a: float, p: BubbleParams, x_s: float = 0.0,
                      tol: float = 1e-10) -> float:
    """
    Total distortion energy (vs^2/2) * integral of f^2 over the barrier
    [-a/2, a/2], adaptive quadrature with absolute tolerance `tol`.
    """
    if a < 0:
        raise ValueError("barrier width must be nonnegative")
    if a == 0:
        return 0.0
    val, _ = quad(lambda x: bubble_profile(x - x_s, p) ** 2,
                  -a / 2.0, a / 2.0, epsabs=tol, epsrel=0.0, limit=400)
    return p.vs**2 / 2.0 * val


def narrow_energy_closed_form(a: float, vs: float) -> float:
    """Narrow-barrier asymptotic distortion energy vs^2 a / 8."""
    return vs * vs * a / 8.0


def wide_energy_scale(sigma: float, vs: float) -> float:
    """Wide-barrier distortion-energy scale vs^2 / sigma."""
    return vs * vs / sigma


def f_approximations(r_s: float, p: BubbleParams) -> tuple:
    """
    (inner, outer, exact) bubble-profile values: the inner quadratic
    expansion around the center, the outer exponential tail, and the exact
    profile.

        inner: f(0) * {1 - alpha1 (2 sigma r_s)^2 / (2 (1 + alpha1))}
        outer: (2 alpha0 / (vs alpha1)) exp(-2 sigma |r_s|)
    """
    a0, a1, vs, s = p.alpha0, p.alpha1, p.vs, p.sigma
    f0 = a0 / (vs * (1.0 + a1))
    inner = f0 * (1.0 - a1 * (2.0 * s * r_s) ** 2 / (2.0 * (1.0 + a1)))
    outer = 2.0 * a0 / (vs * a1) * math.exp(-2.0 * s * abs(r_s))
    exact = bubble_profile(r_s, p)
    return inner, outer, exact


def classify_regime(a: float, sigma: float, alpha1: float) -> EnergyRegime:
    """Regime of barrier width a against the effective bubble radius."""
    return EnergyRegime(a=a, R=bubble_radius(sigma, alpha1))
