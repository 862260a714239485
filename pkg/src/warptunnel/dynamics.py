"""
Bohmian momentum fields per region, trajectory integration, and the implicit
trajectory invariants.

The outer regions (I, III) carry two-mode guidance ODEs of the form
dx/dt = (theta3'/theta1) (1 + theta4 cos Xi)/(1 + theta2 cos Xi) with
Xi = c_x x - c_t t; their invariants come from an integrating factor
1/(1 + theta9 cos Xi). Inside the barrier (region II) the guidance field is a
rational function of cosh(2 sigma r_s) driven by the bubble profile; the
invariant there is the cubic small-sigma form.

Numerical integration is classical fixed-step RK4 (default 10^4 steps per
unit time); stepping across a momentum node or an ODE pole halts the
integration with the last good sample.
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from .params import BarrierSpec, BubbleParams
from .phase import IMAG_TOL, PhaseConstants, phase_constants, phase_II_derivative_structural
from .matching import MatchCoefficients
from .metric import bubble_profile

DEGENERATE_TOL = 1e-12
NODE_TOL = 1e-9
DEFAULT_STEPS_PER_UNIT_TIME = 10_000


@dataclass(frozen=True)
class WaveRegionConstants:
    """
    Constants of a two-mode guidance ODE (regions I and III).

    The theta values follow the standard naming for region I; for region III
    the same slots hold what would be written theta5..theta8 and the primed
    theta10'..theta12' (the formulas are identical with pref = 1).

    theta9_printed keeps the unscaled determinant ratio
    (theta3' theta4 - theta1 theta2)/(theta3' - theta1); theta9 is the
    scale-aware value with the (c_x, c_t) weights of the physical Xi, which
    is the one that makes the integrating factor exact in (x, t).
    """

    region: str
    C1: float
    C2: float
    k1: float
    k2: float
    pref: float
    cx: float
    ct: float
    theta1: float
    theta2: float
    theta3: float
    theta4: float
    theta3Prime: float
    theta9_printed: float
    theta9: float
    theta10: complex
    theta11: float
    theta12: complex
    sigma0: complex
    sigma1: complex
    sigma2: complex
    kappa: float
    degenerate: bool


@dataclass(frozen=True)
class BubbleFlowConstants:
    """
    Constants of the region-II guidance ODE: the iota cascade of the
    cosh-polynomial rational RHS and the Taylor coefficients sigma0/sigma1 of
    its reciprocal mu*P around the bubble center. Index 0 of the tuples is
    unused so iota[j] matches the subscript.
    """

    vs: float
    sigma: float
    alpha0: float
    alpha1: float
    iota0: complex
    iota: tuple
    iotaPrime: tuple
    iotaDoublePrime: tuple
    sigma0: float
    sigma1: float
    calD: complex


@dataclass(frozen=True)
class TrajectoryConstants:
    """Per-region constant blocks derived from solved matching coefficients."""

    regionI: WaveRegionConstants
    regionII: BubbleFlowConstants
    regionIII: WaveRegionConstants


@dataclass(frozen=True)
class TrajectorySample:
    t: float
    x: float
    region: str
    momentum: float
    invariant_value: float


@dataclass(frozen=True)
class TrajectoryResult:
    samples: list
    status: str       # "ok" | "node" | "pole"
    message: str


def wave_region_constants(region: str, C1: float, C2: float, k1: float,
                          k2: float, deltaE: float,
                          pref: float = 1.0) -> WaveRegionConstants:
    """
    Build the two-mode constants from the (real, nonnegative) effective mode
    amplitudes C1, C2 and wavenumbers. pref is the amplitude-ratio factor
    (A-B)/(A+B) for region I, 1 for region III.
    """
    if C1 == 0 and C2 == 0:
        raise ValueError("both mode amplitudes vanish; no guidance field")
    theta1 = C1 * C1 + C2 * C2
    theta2 = 2.0 * C1 * C2 / theta1
    theta3 = C1 * C1 * k1 + C2 * C2 * k2
    if theta3 == 0:
        raise ValueError("theta3 = 0: momentum-weighted amplitude vanishes")
    theta4 = C1 * C2 * (k1 + k2) / theta3
    theta3Prime = pref * theta3
    cx = pref * (k2 - k1)
    ct = deltaE
    if abs(theta3Prime - theta1) < 1e-14:
        raise ValueError(
            "theta3' = theta1: the printed integrating-factor coefficient "
            "theta9 is singular"
        )
    denom = cx * theta3Prime - ct * theta1
    if abs(denom) < 1e-14:
        raise ValueError(
            "c_x theta3' = c_t theta1: the scale-aware integrating-factor "
            "coefficient is singular"
        )
    theta9_printed = (theta3Prime * theta4 - theta1 * theta2) / (theta3Prime - theta1)
    theta9 = (cx * theta3Prime * theta4 - ct * theta1 * theta2) / denom
    kappa = denom
    degenerate = abs(theta9) < DEGENERATE_TOL
    if degenerate:
        theta10 = theta3Prime * (1.0 - theta4)
        theta12 = 1.0 + 0j
        sigma0 = sigma1 = sigma2 = 0j
    else:
        if abs(1.0 - theta9) < 1e-14:
            # equal mode amplitudes: the density has a standing node and
            # the antiderivative's denominators all collapse
            raise ValueError(
                "theta9 = 1: guidance field has a persistent density node "
                "(equal mode amplitudes); no single-valued trajectory form"
            )
        theta10 = theta3Prime * (1.0 - theta4) / (1.0 - theta9)
        theta12 = complex((1.0 + theta9) / (1.0 - theta9))
        if abs(theta12) < 1e-14 or abs(1.0 - theta12) < 1e-14:
            raise ValueError(
                f"theta12 = {theta12}: the closed-form solution's square "
                f"roots / denominators are singular"
            )
        sigma0 = theta10 * (1.0 - (1.0 + theta4) / (1.0 - theta4)) / (1.0 - theta12)
        sigma2 = 1.0 / cmath.sqrt(theta12)
        sigma1 = (2.0 * theta10 * ((1.0 + theta4) / (1.0 - theta4) - theta12)
                  / (cmath.sqrt(theta12) * (1.0 - theta12)))
    theta11 = (1.0 + theta4) / (1.0 - theta4) if theta4 != 1.0 else math.inf
    return WaveRegionConstants(
        region=region, C1=C1, C2=C2, k1=k1, k2=k2, pref=pref, cx=cx, ct=ct,
        theta1=theta1, theta2=theta2, theta3=theta3, theta4=theta4,
        theta3Prime=theta3Prime, theta9_printed=theta9_printed, theta9=theta9,
        theta10=theta10, theta11=theta11, theta12=theta12,
        sigma0=sigma0, sigma1=sigma1, sigma2=sigma2,
        kappa=kappa, degenerate=degenerate,
    )


def bubble_flow_constants(p: BubbleParams,
                          pc: PhaseConstants | None = None) -> BubbleFlowConstants:
    """
    Region-II constants: iota cascade and the center Taylor coefficients
    sigma0 = (mu P)(0), sigma1 = (mu P)''(0) of the reciprocal guidance
    profile, where P(r) = 1 + sum_j iota'_j cosh^j(r) and
    mu = 1/(sum_j iota''_j cosh^j(r) - 1).
    """
    if pc is None:
        pc = phase_constants(p.alpha0, p.alpha1)
    a0, a1, vs = p.alpha0, p.alpha1, p.vs
    disc = cmath.sqrt(pc.beta3**2 - pc.beta2**2)
    if abs(disc) < 1e-14:
        raise ValueError("degenerate phase constants: beta3^2 = beta2^2")
    iota0 = 2.0 * a0 * pc.beta0 * (pc.mu1 - pc.mu0) / disc
    musum = pc.mu0 + pc.mu1
    muprod = pc.mu0 * pc.mu1
    iota = (0j,
            complex(1.0 - a0),
            complex(2.0 * a1),
            4.0 * pc.beta1 * (1.0 - a0 * a0) + a1 * a1,
            8.0 * pc.beta1 * a1,
            4.0 * pc.beta1 * a1 * a1)
    iotaP = (0j,
             complex(2.0 * a1),
             4.0 * musum + a1 * a1,
             8.0 * a1 * musum,
             4.0 * (4.0 * muprod + a1 * a1 * musum),
             32.0 * a1 * muprod,
             16.0 * a1 * a1 * muprod)
    iotaPP = [0j] * 7
    for j in range(1, 6):
        iotaPP[j] = (iota0 / vs) * iota[j] - iotaP[j]
    iotaPP[6] = -iotaP[6]
    P0 = 1.0 + sum(iotaP[1:])
    D0 = sum(iotaPP[1:]) - 1.0
    if abs(D0) < 1e-14:
        raise ValueError("D = 0: the sigma Taylor coefficients are singular")
    P2 = sum(j * iotaP[j] for j in range(1, 7))
    D2 = sum(j * iotaPP[j] for j in range(1, 7))
    sigma0_c = P0 / D0
    sigma1_c = P2 / D0 - P0 * D2 / (D0 * D0)
    for name, val in (("sigma0", sigma0_c), ("sigma1", sigma1_c)):
        if abs(val.imag) > IMAG_TOL * max(1.0, abs(val.real)):
            raise ValueError(
                f"imaginary residue {val.imag:.3e} in region-II {name}"
            )
    return BubbleFlowConstants(
        vs=vs, sigma=p.sigma, alpha0=a0, alpha1=a1,
        iota0=iota0, iota=iota, iotaPrime=iotaP,
        iotaDoublePrime=tuple(iotaPP),
        sigma0=sigma0_c.real, sigma1=sigma1_c.real, calD=D0,
    )


def trajectory_constants(coeffs: MatchCoefficients, spec: BarrierSpec,
                         p: BubbleParams) -> TrajectoryConstants:
    """
    All per-region trajectory constants from solved matching coefficients.
    The effective mode amplitudes are the moduli of the complex coefficients.
    """
    regI = wave_region_constants(
        "I", abs(coeffs.cI1), abs(coeffs.cI2), spec.k1, spec.k2,
        spec.deltaE, pref=spec.amp_diff / spec.amp_sum,
    )
    regIII = wave_region_constants(
        "III", abs(coeffs.cIII1), abs(coeffs.cIII2), spec.k1, spec.k2,
        spec.deltaE, pref=1.0,
    )
    regII = bubble_flow_constants(p)
    return TrajectoryConstants(regionI=regI, regionII=regII, regionIII=regIII)


def momentum_I(x: float, t: float, consts: WaveRegionConstants) -> float:
    """
    Region-I Bohmian momentum
    (B/A)[C1^2 k1 + C2^2 k2 + C1 C2 (k1+k2) cos Xi] /
         [C1^2 + C2^2 + 2 C1 C2 cos Xi],  Xi = c_x x - c_t t.
    """
    Xi = consts.cx * x - consts.ct * t
    denom = consts.theta1 * (1.0 + consts.theta2 * math.cos(Xi))
    if abs(denom) < NODE_TOL:
        raise ValueError(f"momentum node at Xi = {Xi} (vanishing density)")
    return consts.theta3Prime * (1.0 + consts.theta4 * math.cos(Xi)) / denom


def momentum_III(x: float, t: float, consts: WaveRegionConstants) -> float:
    """Region-III Bohmian momentum (same rational form with pref = 1)."""
    return momentum_I(x, t, consts)


def momentum_II(x: float, t: float, p: BubbleParams,
                pc: PhaseConstants | None = None) -> float:
    """
    Region-II momentum P_II = g^11 dS_II/dr_s evaluated with the structural
    sech/cosh form of the phase derivative; equals -2 vs f(r_s) and is even
    in r_s = x - x_s(t).
    """
    if pc is None:
        pc = phase_constants(p.alpha0, p.alpha1)
    r_s = x - p.xs(t)
    beta = p.vs * bubble_profile(r_s, p)
    g11 = 1.0 - beta * beta
    return g11 * phase_II_derivative_structural(r_s, p, pc)


def _U_wave(consts: WaveRegionConstants, Xi: float) -> float:
    """
    Antiderivative U(Xi) of the factored guidance form. Nondegenerate branch:
    sigma0 Xi + sigma1 [atan(sigma2 tan(Xi/2)) + n pi], with the branch index
    n = floor((Xi + pi)/(2 pi)) keeping U continuous across tan poles.
    Degenerate branch (theta9 = 0): theta3' (Xi + theta4 sin Xi).
    """
    if consts.degenerate:
        return consts.theta3Prime * (Xi + consts.theta4 * math.sin(Xi))
    n = math.floor((Xi + math.pi) / (2.0 * math.pi))
    w = cmath.atan(consts.sigma2 * math.tan(Xi / 2.0)) + n * math.pi
    val = consts.sigma0 * Xi + consts.sigma1 * w
    if abs(val.imag) > IMAG_TOL * max(1.0, abs(val.real)):
        raise ValueError(f"imaginary residue {val.imag:.3e} in U(Xi)")
    return val.real


def implicit_invariant(region: str, x: float, t: float,
                       consts: TrajectoryConstants) -> float:
    """
    Conserved quantity along a trajectory of the given region:

        regions I, III:  U(Xi) - kappa x
        region II:       sigma0 r_s + (2 sigma^2/3) sigma1 r_s^3 - vs t

    with r_s = x - vs t (the bubble launched from the origin reference).
    """
    if region in ("I", "III"):
        c = consts.regionI if region == "I" else consts.regionIII
        Xi = c.cx * x - c.ct * t
        return _U_wave(c, Xi) - c.kappa * x
    if region == "II":
        c = consts.regionII
        r_s = x - c.vs * t
        return (c.sigma0 * r_s
                + (2.0 * c.sigma**2 / 3.0) * c.sigma1 * r_s**3
                - c.vs * t)
    raise ValueError(f"unknown region {region!r}")


def _rhs_wave(c: WaveRegionConstants, x: float, t: float) -> float:
    Xi = c.cx * x - c.ct * t
    denom = c.theta1 * (1.0 + c.theta2 * math.cos(Xi))
    if abs(denom) < NODE_TOL:
        raise ValueError(f"momentum node at Xi = {Xi}")
    return c.theta3Prime * (1.0 + c.theta4 * math.cos(Xi)) / denom


def _rhs_bubble_reduced(c: BubbleFlowConstants, x: float, t: float) -> float:
    r_s = x - c.vs * t
    g = c.sigma0 + 0.5 * c.sigma1 * (2.0 * c.sigma * r_s) ** 2
    if abs(g) < NODE_TOL:
        raise ValueError(f"guidance pole at r_s = {r_s} (reduced ODE)")
    return c.vs * (1.0 + 1.0 / g)


def _rhs_bubble_full(c: BubbleFlowConstants, x: float, t: float) -> float:
    r = 2.0 * c.sigma * (x - c.vs * t)
    ch = math.cosh(r)
    P = 1.0 + sum(c.iotaPrime[j] * ch**j for j in range(1, 7))
    if abs(P) < NODE_TOL:
        raise ValueError(f"guidance pole at r = {r} (full ODE)")
    num = c.iota0 * sum(c.iota[l] * ch**l for l in range(1, 6))
    val = num / P
    if abs(val.imag) > IMAG_TOL * max(1.0, abs(val.real)):
        raise ValueError(f"imaginary residue {val.imag:.3e} in the full RHS")
    return val.real


def integrate_trajectory(region: str, x0: float, t_start: float, t_end: float,
                         consts: TrajectoryConstants, steps: int | None = None,
                         full_ode: bool = False) -> TrajectoryResult:
    """
    Fixed-step classical RK4 integration of the region's guidance ODE.

    Each sample carries the local momentum and the implicit invariant value.
    Stepping across a momentum node or pole halts the integration with the
    samples accumulated so far (status "node"/"pole").

    Region II integrates the small-sigma reduced ODE by default; full_ode
    selects the complete cosh-polynomial RHS.
    """
    if region == "I":
        rhs = lambda x, t: _rhs_wave(consts.regionI, x, t)
        mom = lambda x, t: momentum_I(x, t, consts.regionI)
    elif region == "III":
        rhs = lambda x, t: _rhs_wave(consts.regionIII, x, t)
        mom = lambda x, t: momentum_III(x, t, consts.regionIII)
    elif region == "II":
        c = consts.regionII
        rhs = ((lambda x, t: _rhs_bubble_full(c, x, t)) if full_ode
               else (lambda x, t: _rhs_bubble_reduced(c, x, t)))
        mom = lambda x, t: -2.0 * c.vs * (
            c.alpha0 / (c.vs * (1.0 + c.alpha1 * math.cosh(
                2.0 * c.sigma * (x - c.vs * t)))))
    else:
        raise ValueError(f"unknown region {region!r}")

    if t_end <= t_start:
        raise ValueError("t_end must exceed t_start")
    if steps is None:
        steps = max(1, round(DEFAULT_STEPS_PER_UNIT_TIME * (t_end - t_start)))
    dt = (t_end - t_start) / steps

    x, t = x0, t_start
    samples = []
    try:
        samples.append(TrajectorySample(t, x, region, mom(x, t),
                                        implicit_invariant(region, x, t, consts)))
        for _ in range(steps):
            a = rhs(x, t)
            b = rhs(x + dt / 2 * a, t + dt / 2)
            cc = rhs(x + dt / 2 * b, t + dt / 2)
            d = rhs(x + dt * cc, t + dt)
            x += dt / 6 * (a + 2 * b + 2 * cc + d)
            t += dt
            samples.append(TrajectorySample(
                t, x, region, mom(x, t),
                implicit_invariant(region, x, t, consts)))
    except ValueError as exc:
        status = "node" if "node" in str(exc) else "pole"
        return TrajectoryResult(samples, status, str(exc))
    return TrajectoryResult(samples, "ok", "")


def wave_form_exactness(consts: WaveRegionConstants, Xi: float,
                        h: float = 1e-5, integrating_factor: bool = True):
    """
    Finite-difference exactness residual of the guidance one-form
    P dX + Q dT in scaled coordinates (Xi = X - T), P = theta3'(1+theta4 cos),
    Q = -theta1(1+theta2 cos): the residual is d/dXi [mu (P + Q)], which
    vanishes identically with the integrating factor
    mu = 1/(1 + theta9_printed cos Xi) and not without it.
    """
    def combo(xi):
        P = consts.theta3Prime * (1.0 + consts.theta4 * math.cos(xi))
        Q = -consts.theta1 * (1.0 + consts.theta2 * math.cos(xi))
        mu = 1.0 / (1.0 + consts.theta9_printed * math.cos(xi)) \
            if integrating_factor else 1.0
        return mu * (P + Q)

    return (combo(Xi + h) - combo(Xi - h)) / (2.0 * h)


def bubble_form_exactness(c: BubbleFlowConstants, r: float, h: float = 1e-5,
                          integrating_factor: bool = True):
    """
    Finite-difference exactness residual for the region-II one-form
    P(r) dx - iota0 [sum iota_l cosh^l] dt, r = 2 sigma (x - vs t): the
    combination d/dr [mu (vs P - iota0 sum)] vanishes identically with
    mu = 1/(sum iota''_j cosh^j - 1) and not without it.
    """
    def combo(rr):
        ch = math.cosh(rr)
        P = 1.0 + sum(c.iotaPrime[j] * ch**j for j in range(1, 7))
        num = c.iota0 * sum(c.iota[l] * ch**l for l in range(1, 6))
        mu = 1.0 / (sum(c.iotaDoublePrime[j] * ch**j for j in range(1, 7)) - 1.0) \
            if integrating_factor else 1.0
        return mu * (c.vs * P - num)

    val = (combo(r + h) - combo(r - h)) / (2.0 * h)
    return abs(val)


def _atan_tan_continuous(u: float, gain: float) -> float:
    """Continuous extension of atan(gain*tan(u)) across the tan poles."""
    n = round(u / math.pi)
    v = u - n * math.pi
    if abs(abs(v) - math.pi / 2.0) < 1e-12:
        return math.copysign(math.pi / 2.0, v) + n * math.pi
    return math.atan(gain * math.tan(v)) + n * math.pi


def fig2_dataset(x_min: float = 0.0, x_max: float = 4.0, n_points: int = 401):
    """
    Isochronous trajectory-family dataset: four closed-form families on an
    x-grid with the bubble center at x_s = 2.

        incident/transmitted: (1.21x-1)/2 + atan[10 tan(1.21x-1)]/10 + rho
        reflected:            the negative of that non-constant part + rho
        tunneling:            0.0995 (x-2) + rho

    Returns (header, rows): header is the column-name list starting with "x";
    one column per rho value, named <family>_rho=<value>.
    """
    rho_sets = (
        ("in", [4.65, 5.65, 6.65, 7.65, 8.65, 9.65]),
        ("re", [-1.75, -0.75, 0.25, 1.25]),
        ("tu", [1.75, 2.75, 3.75, 4.75]),
        ("tr", [1.3, 2.3, 3.3, 4.3]),
    )
    xs = np.linspace(x_min, x_max, n_points)
    header = ["x"]
    cols = [xs]
    for family, rhos in rho_sets:
        for rho in rhos:
            header.append(f"{family}_rho={rho:g}")
            vals = np.empty_like(xs)
            for i, x in enumerate(xs):
                if family == "tu":
                    vals[i] = 0.0995 * (x - 2.0) + rho
                else:
                    u = 1.21 * x - 1.0
                    base = u / 2.0 + _atan_tan_continuous(u, 10.0) / 10.0
                    vals[i] = (-base if family == "re" else base) + rho
            cols.append(vals)
    return header, np.column_stack(cols)
