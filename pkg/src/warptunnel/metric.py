"""
Piecewise spacetime metric: warp-bubble (inner region) and quantum-potential
(outer regions) forms, Christoffel symbols, and constraint residuals.

Index order is (t, x, y, z). The bubble moves along x with profile
f(r_s) = alpha0 / {vs [1 + alpha1 cosh(2 sigma r_s)]}.
"""

from dataclasses import dataclass
import math

import numpy as np

from .params import BubbleParams


@dataclass(frozen=True)
class MetricTensor:
    """A 4x4 symmetric metric with nonzero determinant."""

    g: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.g, dtype=float)
        if g.shape != (4, 4):
            raise ValueError(f"metric must be 4x4, got shape {g.shape}")
        if not np.allclose(g, g.T, atol=1e-14):
            raise ValueError("metric must be symmetric")
        object.__setattr__(self, "g", g)

    def inverse(self) -> np.ndarray:
        det = np.linalg.det(self.g)
        if abs(det) < 1e-300:
            raise ValueError("singular metric cannot be inverted")
        return np.linalg.inv(self.g)


@dataclass(frozen=True)
class ChristoffelSet:
    """Connection coefficients Gamma^mu_{alpha beta}, symmetric in (alpha, beta)."""

    gamma: np.ndarray

    def __post_init__(self):
        gamma = np.asarray(self.gamma, dtype=float)
        if gamma.shape != (4, 4, 4):
            raise ValueError(f"Christoffel array must be 4x4x4, got {gamma.shape}")
        object.__setattr__(self, "gamma", gamma)


def bubble_profile(r_s: float, p: BubbleParams) -> float:
    """Warp-bubble shape function f(r_s); peaks at the center, decays over R."""
    if p.vs == 0:
        raise ValueError("bubble profile is undefined for vs = 0")
    return p.alpha0 / (p.vs * (1.0 + p.alpha1 * np.cosh(2.0 * p.sigma * r_s)))


def bubble_profile_derivative(r_s: float, p: BubbleParams) -> float:
    """Analytic df/dr_s of the bubble profile."""
    if p.vs == 0:
        raise ValueError("bubble profile is undefined for vs = 0")
    c = np.cosh(2.0 * p.sigma * r_s)
    s = np.sinh(2.0 * p.sigma * r_s)
    return -2.0 * p.sigma * p.alpha0 * p.alpha1 * s / (p.vs * (1.0 + p.alpha1 * c) ** 2)


def bubble_radius(sigma: float, alpha1: float) -> float:
    """Effective bubble radius R_eff = sqrt(1 + alpha1) / (2 sigma sqrt(alpha1))."""
    if sigma <= 0 or alpha1 <= 0:
        raise ValueError("sigma and alpha1 must be positive")
    return math.sqrt(1.0 + alpha1) / (2.0 * sigma * math.sqrt(alpha1))


def warp_metric_from_beta(beta: float) -> MetricTensor:
    """Warp metric for a given shift beta: g00 = beta^2 - 1, g0x = -beta."""
    g = np.eye(4)
    g[0, 0] = beta * beta - 1.0
    g[0, 1] = g[1, 0] = -beta
    return MetricTensor(g)


def alcubierre_metric(t: float, x: float, p: BubbleParams) -> MetricTensor:
    """
    Warp metric with shift vector (beta, 0, 0), beta = vs f(x - x_s(t)):
    G00 = beta^2 - 1, G0x = Gx0 = -beta, spatial block = identity.
    """
    beta = p.vs * bubble_profile(x - p.xs(t), p)
    return warp_metric_from_beta(beta)


def alcubierre_inverse(t: float, x: float, p: BubbleParams) -> np.ndarray:
    """
    Closed-form inverse of the warp metric: G^00 = -1, G^0x = -beta,
    G^xx = 1 - beta^2, other spatial components identity.
    """
    beta = p.vs * bubble_profile(x - p.xs(t), p)
    ginv = np.eye(4)
    ginv[0, 0] = -1.0
    ginv[0, 1] = ginv[1, 0] = -beta
    ginv[1, 1] = 1.0 - beta * beta
    return ginv


def region_metric(Q: float) -> MetricTensor:
    """
    Static outer-region metric sourced by a constant quantum potential:
    g00 = -(3Q)^(2/3), spatial block identity (natural units).
    """
    if Q <= 0:
        raise ValueError(f"region metric requires Q > 0, got {Q}")
    g = np.eye(4)
    g[0, 0] = -((3.0 * Q) ** (2.0 / 3.0))
    return MetricTensor(g)


def christoffel(metric_field, t: float, x: float, h: float = 1e-5) -> ChristoffelSet:
    """
    Christoffel symbols of a metric field (t, x) -> MetricTensor by central
    finite differences of the metric components (only t and x derivatives are
    nonzero for the fields used here).
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    g0 = metric_field(t, x).g
    ginv = MetricTensor(g0).inverse()

    dg = np.zeros((4, 4, 4))  # dg[c][a][b] = d g_ab / d x^c
    dg[0] = (metric_field(t + h, x).g - metric_field(t - h, x).g) / (2.0 * h)
    dg[1] = (metric_field(t, x + h).g - metric_field(t, x - h).g) / (2.0 * h)

    gamma = np.zeros((4, 4, 4))
    for mu in range(4):
        for a in range(4):
            for b in range(4):
                acc = 0.0
                for lam in range(4):
                    acc += ginv[mu, lam] * (dg[b][lam][a] + dg[a][lam][b] - dg[lam][a][b])
                gamma[mu, a, b] = 0.5 * acc
    return ChristoffelSet(gamma)


def christoffel_warp_analytic(t: float, x: float, p: BubbleParams) -> ChristoffelSet:
    """
    Exact Christoffel symbols of the warp metric for a constant-velocity
    bubble (beta = vs f, fp = df/dr_s):

        G^t_tt = vs^3 f^2 fp        G^t_tx = -vs^2 f fp     G^t_xx = vs fp
        G^x_tt = vs^2 fp (vs^2 f^3 - f + 1)
        G^x_tx = -vs^3 f^2 fp       G^x_xx = vs^2 f fp

    All symbols vanish where fp = 0 (bubble center) or vs = 0 (boundaries).
    """
    r_s = x - p.xs(t)
    f = bubble_profile(r_s, p)
    fp = bubble_profile_derivative(r_s, p)
    vs = p.vs
    gamma = np.zeros((4, 4, 4))
    gamma[0, 0, 0] = vs**3 * f * f * fp
    gamma[0, 0, 1] = gamma[0, 1, 0] = -(vs**2) * f * fp
    gamma[0, 1, 1] = vs * fp
    gamma[1, 0, 0] = vs**2 * fp * (vs**2 * f**3 - f + 1.0)
    gamma[1, 0, 1] = gamma[1, 1, 0] = -(vs**3) * f * f * fp
    gamma[1, 1, 1] = vs**2 * f * fp
    return ChristoffelSet(gamma)


def geodesic_constraint_residual(velocity, gamma: ChristoffelSet) -> float:
    """
    Residual of the time-component geodesic constraint
    Gamma^t_{alpha beta} dx^alpha/dt dx^beta/dt with dx^0/dt = 1.
    """
    v = np.asarray(velocity, dtype=float)
    if v.shape != (4,):
        raise ValueError("velocity must be a 4-vector")
    return float(v @ gamma.gamma[0] @ v)


def eq32_residuals(metric_field, S_gradient, Q_gradient, t: float, x: float,
                   h: float = 1e-6):
    """
    Residuals of the three constraint relations that single out the admissible
    metrics (natural units, sqrt|g| = 1, flat spatial geometry, constant
    barrier potential):

        r1 = g^10 d0(g00)/2 + g^11 {2 d0(g10) - d1(g00)}/2 - g^11 d1(Q)
        r2 = g^10 d1(g00) d1(S)
        r3 = g^01 {2 d1(g01)} (g^11)^2 (d1 S)^2 / 2 - g^10 d1(g00) g^11 d1(S)

    For a static diagonal metric (constant Q) all three vanish; for the warp
    metric, r3 = 0 is equivalent to the region-II phase gradient law
    dS/dr_s = -2 beta/(1 - beta^2).
    """
    g = metric_field(t, x).g
    ginv = MetricTensor(g).inverse()
    d0g = (metric_field(t + h, x).g - metric_field(t - h, x).g) / (2.0 * h)
    d1g = (metric_field(t, x + h).g - metric_field(t, x - h).g) / (2.0 * h)
    dS = S_gradient(t, x)
    dQ = Q_gradient(t, x)

    r1 = (ginv[1, 0] * d0g[0, 0] / 2.0
          + ginv[1, 1] * (2.0 * d0g[1, 0] - d1g[0, 0]) / 2.0
          - ginv[1, 1] * dQ)
    r2 = ginv[1, 0] * d1g[0, 0] * dS
    r3 = (ginv[0, 1] * (2.0 * d1g[0, 1]) * ginv[1, 1] ** 2 * dS**2 / 2.0
          - ginv[1, 0] * d1g[0, 0] * ginv[1, 1] * dS)
    return float(r1), float(r2), float(r3)
