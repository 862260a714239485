"""
Phase functions of the three regions and their derived constants.

Region II (inside the barrier) has a closed-form phase obtained by a
Weierstrass substitution; an adaptive-quadrature oracle of the defining
differential dS = -2 vs f / (1 - vs^2 f^2) dr_s validates it.

Regions I and III carry plane-wave superpositions; the region-I phase is the
polar angle of A e^{i theta} + B e^{-i theta}.
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np
from scipy.integrate import quad

from .params import BarrierSpec, BubbleParams
from .metric import bubble_profile

IMAG_TOL = 1e-8


@dataclass(frozen=True)
class PhaseConstants:
    """
    Constants of the region-II phase integral. Complex-capable: mu0/mu1 are
    the roots of z^2 - 2 beta3 z + beta2^2, which are complex when
    beta3^2 < beta2^2.

    beta2 stores the square root of the ratio [(a1+1)^2-a0^2]/[(a1-1)^2-a0^2]
    (principal branch); the root identities mu0*mu1 = beta2^2 and
    mu0 + mu1 = 2*beta3 then hold exactly.
    """

    beta0: complex
    beta1: complex
    beta2: complex
    beta3: complex
    mu0: complex
    mu1: complex


def phase_constants(alpha0: float, alpha1: float) -> PhaseConstants:
    """Derive the six region-II phase constants from the profile parameters."""
    denom = (alpha1 - 1.0) ** 2 - alpha0**2
    if abs(denom) < 1e-9:
        raise ValueError(
            f"degenerate profile parameters: (alpha1-1)^2 = alpha0^2 "
            f"(alpha0={alpha0}, alpha1={alpha1})"
        )
    beta0 = 2.0 * (alpha1 - 1.0) / denom
    beta1 = (alpha1 + 1.0) / (alpha1 - 1.0)
    beta2 = cmath.sqrt(((alpha1 + 1.0) ** 2 - alpha0**2) / denom)
    beta3 = (alpha1**2 - 1.0 + alpha0**2) / denom
    disc = cmath.sqrt(beta3**2 - beta2**2)
    mu0 = beta3 - disc
    mu1 = beta3 + disc
    return PhaseConstants(beta0, beta1, beta2, beta3, mu0, mu1)


def x_prime(r_s: float, sigma: float) -> float:
    """Auxiliary angle arccos(sech(2 sigma r_s)), principal value in [0, pi/2]."""
    return math.acos(1.0 / math.cosh(2.0 * sigma * r_s))


def _phase_II_half(x_half: float, p: BubbleParams, pc: PhaseConstants) -> complex:
    """Closed-form antiderivative evaluated at the auxiliary angle x_half = x'/2."""
    tan_half = math.tan(x_half)
    disc = cmath.sqrt(pc.beta3**2 - pc.beta2**2)
    if abs(disc) < 1e-14:
        raise ValueError("degenerate phase constants: beta3^2 = beta2^2")
    s_mu0 = cmath.sqrt(pc.mu0)
    s_mu1 = cmath.sqrt(pc.mu1)
    pref = p.alpha0 * pc.beta0 / (2.0 * p.sigma * disc)
    term0 = (pc.beta1 - pc.mu0) / s_mu0 * _atan_c(tan_half / s_mu0)
    term1 = (pc.beta1 - pc.mu1) / s_mu1 * _atan_c(tan_half / s_mu1)
    # Overall sign chosen so the derivative matches dS/dr_s = -2 vs f/(1-vs^2 f^2).
    return -pref * (term0 - term1)


def _atan_c(z: complex) -> complex:
    """Complex arctangent (principal branch)."""
    return cmath.atan(z)


def phase_II(x: float, x_s: float, p: BubbleParams,
             pc: PhaseConstants | None = None) -> float:
    """
    Region-II phase S_II at position x for bubble center x_s.

    Evaluated in complex arithmetic (the mu roots may be complex); the
    imaginary residue must stay below 1e-8 or a branch-handling failure is
    reported. Odd in r_s = x - x_s: the defining integrand is even and
    S_II(0) = 0.
    """
    if pc is None:
        pc = phase_constants(p.alpha0, p.alpha1)
    r_s = x - x_s
    xp = x_prime(abs(r_s), p.sigma)
    val = _phase_II_half(xp / 2.0, p, pc)
    if abs(val.imag) > IMAG_TOL:
        raise ValueError(
            f"imaginary residue {val.imag:.3e} exceeds {IMAG_TOL} in phase_II "
            f"(r_s={r_s}, alpha0={p.alpha0}, alpha1={p.alpha1}); "
            f"branch handling failed for these parameters"
        )
    return math.copysign(1.0, r_s) * val.real if r_s != 0.0 else 0.0


def phase_II_derivative_structural(r_s: float, p: BubbleParams,
                                   pc: PhaseConstants | None = None) -> float:
    """
    dS_II/dr_s in the sech/sec^2 partial-fraction structure of the closed-form
    antiderivative:

        alpha0 beta0 sech(2 sigma r_s) sec^2(x'/2) / (2 sqrt(beta3^2-beta2^2))
        * [(beta1-mu1)/(mu1+tan^2(x'/2)) - (beta1-mu0)/(mu0+tan^2(x'/2))]

    Equal to the rational form -2 vs f/(1 - vs^2 f^2); even in r_s. Complex
    intermediates allowed with the same imaginary-residue guard as phase_II.
    """
    if pc is None:
        pc = phase_constants(p.alpha0, p.alpha1)
    u = 2.0 * p.sigma * r_s
    tan2 = math.tan(x_prime(abs(r_s), p.sigma) / 2.0) ** 2
    disc = cmath.sqrt(pc.beta3**2 - pc.beta2**2)
    if abs(disc) < 1e-14:
        raise ValueError("degenerate phase constants: beta3^2 = beta2^2")
    bracket = ((pc.beta1 - pc.mu1) / (pc.mu1 + tan2)
               - (pc.beta1 - pc.mu0) / (pc.mu0 + tan2))
    val = p.alpha0 * pc.beta0 * (1.0 + tan2) / (2.0 * disc * math.cosh(u)) * bracket
    if abs(val.imag) > IMAG_TOL:
        raise ValueError(
            f"imaginary residue {val.imag:.3e} exceeds {IMAG_TOL} in the "
            f"structural phase derivative at r_s={r_s}"
        )
    return val.real


def phase_II_derivative(r_s: float, p: BubbleParams) -> float:
    """Analytic dS_II/dr_s = -2 vs f / (1 - vs^2 f^2); even in r_s."""
    f = bubble_profile(r_s, p)
    beta = p.vs * f
    denom = 1.0 - beta * beta
    if abs(denom) < 1e-14:
        raise ValueError(f"phase gradient pole: |vs f| = 1 at r_s = {r_s}")
    return -2.0 * beta / denom


def phase_II_quadrature(r_a: float, r_b: float, p: BubbleParams,
                        tol: float = 1e-10) -> float:
    """
    Adaptive quadrature of dS = -2 vs f/(1 - vs^2 f^2) dr_s over [r_a, r_b];
    the real-domain oracle for the closed form. Rejects intervals containing
    an integrand pole (vs f = +-1), detected by sign change of 1 - vs^2 f^2.
    """
    n_check = 64
    grid = np.linspace(r_a, r_b, n_check) if r_a != r_b else np.array([r_a])
    pole_factor = np.array(
        [1.0 - (p.vs * bubble_profile(r, p)) ** 2 for r in grid]
    )
    if np.any(pole_factor == 0.0) or (pole_factor.min() < 0.0 < pole_factor.max()):
        raise ValueError(
            f"integrand pole (vs f = +-1) inside [{r_a}, {r_b}]"
        )
    if r_a == r_b:
        return 0.0
    val, _ = quad(lambda r: phase_II_derivative(r, p), r_a, r_b,
                  epsabs=tol, epsrel=0.0, limit=200)
    return val


def phase_I(x: float, t: float, spec: BarrierSpec, mode: int) -> float:
    """
    Region-I phase for one mode: the polar angle of the standing-wave
    combination A e^{i theta} + B e^{-i theta} with theta = k x - E t,
    i.e. atan2((A - B) sin theta, (A + B) cos theta).

    The amplitude ratio (A - B)/(A + B) is real; the polar decomposition
    sqrt(rho) e^{iS} then reproduces the superposition exactly.
    """
    if spec.amp_sum == 0:
        raise ValueError("A + B = 0: region-I phase undefined")
    theta = spec.k(mode) * x - spec.E(mode) * t
    return math.atan2(spec.amp_diff * math.sin(theta), spec.amp_sum * math.cos(theta))


def sqrt_rho_I(x: float, t: float, spec: BarrierSpec, mode: int) -> float:
    """Region-I mode amplitude sqrt(A^2 cos^2 theta + B... ) in polar form."""
    theta = spec.k(mode) * x - spec.E(mode) * t
    return math.sqrt(
        (spec.amp_sum * math.cos(theta)) ** 2 + (spec.amp_diff * math.sin(theta)) ** 2
    )


def phase_III(x: float, t: float, spec: BarrierSpec, mode: int) -> float:
    """Region-III phase: free plane wave k x - E t for the selected mode."""
    return spec.k(mode) * x - spec.E(mode) * t


def superposed_phase_density(components) -> tuple:
    """
    Combine (C, sqrt_rho, S) components into a total phase and amplitude:

        S_total   = atan2(sum C sqrt_rho sin S, sum C sqrt_rho cos S)
        rho_total = sum (C sqrt_rho)^2 + 2 C1 C2 sqrt(rho1 rho2) cos(S2 - S1)

    for one or two components (the interference term applies pairwise).
    """
    if not components:
        raise ValueError("at least one component required")
    num = sum(c * sr * math.sin(s) for c, sr, s in components)
    den = sum(c * sr * math.cos(s) for c, sr, s in components)
    rho = sum((c * sr) ** 2 for c, sr, _ in components)
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            ci, sri, si = components[i]
            cj, srj, sj = components[j]
            rho += 2.0 * ci * cj * sri * srj * math.cos(sj - si)
    if rho < 0:
        if rho > -1e-12:
            rho = 0.0
        else:
            raise ValueError(f"negative interference density {rho}")
    sqrt_rho_total = math.sqrt(rho)
    if sqrt_rho_total == 0.0 and num == 0.0 and den == 0.0:
        raise ValueError("zero total amplitude: phase undefined")
    return math.atan2(num, den), sqrt_rho_total
