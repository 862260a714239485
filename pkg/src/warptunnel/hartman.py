"""
Tunneling-time laws and the Hartman-effect regime analysis.

The barrier transit is modeled as transport inside the warp bubble at the
Eulerian velocity v_s/3; evaluating the region-II linear invariant at the
entry point (-a/2, t0) and exit point (a/2, t1) and subtracting yields
dt = 3a/v_s. Scaling regimes:

  narrow (a <= R):  distortion energy E = v_s^2 a/8  =>  dt = 3 sqrt(a^3/8E)
  wide   (a >  2R): E = (n0 a)^2/sigma with v_s = n0 a  =>  dt = 3/n0,
                    independent of a (the Hartman plateau); v_s/c exceeds 1
                    exactly when a > 1/n0.
"""

from dataclasses import dataclass
import math

import numpy as np

from .params import BubbleParams
from .metric import bubble_profile


@dataclass(frozen=True)
class SweepRow:
    """One row of a regime sweep backing the tunneling-time datasets."""

    a: float
    driver: float    # energy E (narrow) or scale factor n0 (wide/speed)
    vs: float
    dt: float
    regime: str


def tunneling_time(a: float, vs: float, sigma0: float = -1.5) -> float:
    """
    Barrier transit time by the boundary-evaluation procedure: the co-moving
    invariant sigma0*(x' - (vs/3) t) takes the same value at the entry point
    (-a/2, t0) and the exit point (a/2, t1); solving the subtracted pair for
    t1 - t0 gives 3a/vs. sigma0 != 0 cancels in the subtraction; an explicit
    nonzero value is carried so the cancellation is exercised numerically.
    """
    if vs <= 0:
        raise ValueError(f"bubble speed must be positive, got vs={vs}")
    if a <= 0:
        raise ValueError(f"barrier width must be positive, got a={a}")
    if sigma0 == 0:
        raise ValueError("sigma0 = 0: the invariant is degenerate")
    t0 = 0.0
    # invariant equality: sigma0(-a/2 - (vs/3) t0) = sigma0(a/2 - (vs/3) t1)
    lhs = sigma0 * (-a / 2.0 - (vs / 3.0) * t0)
    t1 = (sigma0 * a / 2.0 - lhs) / (sigma0 * vs / 3.0)
    return t1 - t0


def tunneling_time_narrow(a: float, E: float) -> float:
    """
    Narrow-barrier transit time 3*sqrt(a^3/(8E)): eliminates vs from 3a/vs
    via the narrow-regime distortion energy E = vs^2 a/8.
    """
    if E <= 0:
        raise ValueError(f"distortion energy must be positive, got E={E}")
    if a <= 0:
        raise ValueError(f"barrier width must be positive, got a={a}")
    return 3.0 * math.sqrt(a**3 / (8.0 * E))


def tunneling_time_wide(n0: float) -> float:
    """
    Wide-barrier transit time 3/n0, independent of the barrier width: with
    E = (n0 a)^2/sigma the bubble speed scales as vs = n0 a, so
    dt = 3a/(n0 a) = 3/n0 (the Hartman plateau).
    """
    if n0 <= 0:
        raise ValueError(f"scale factor must be positive, got n0={n0}")
    return 3.0 / n0


def bubble_speed_scaling(a: float, n0: float) -> float:
    """Wide-regime bubble speed vs = n0 * a."""
    if n0 <= 0:
        raise ValueError(f"scale factor must be positive, got n0={n0}")
    return n0 * a


def superluminal_threshold(n0: float) -> float:
    """Barrier width a* = 1/n0 above which vs = n0*a exceeds c = 1."""
    if n0 <= 0:
        raise ValueError(f"scale factor must be positive, got n0={n0}")
    return 1.0 / n0


def eulerian_diagnostics(r_s: float, p: BubbleParams, h: float = 1e-6):
    """
    Eulerian-observer quantities at bubble offset r_s:

      u     4-velocity (1, -vs f, 0, 0)
      theta volume expansion -vs * df/dx by central finite differences
      proper_time_ratio  dtau/dt for a path comoving with the bubble
                         (dx = vs dt): ds^2 = -dt^2 + vs^2 (1 - f)^2 dt^2,
                         so dtau/dt = sqrt(1 - vs^2 (1 - f)^2); equals 1
                         exactly where f = 1 (no time dilation).

    Returns (u, theta, proper_time_ratio).
    """
    f = bubble_profile(r_s, p)
    u = np.array([1.0, -p.vs * f, 0.0, 0.0])
    theta = -p.vs * (bubble_profile(r_s + h, p) - bubble_profile(r_s - h, p)) / (2.0 * h)
    arg = 1.0 - p.vs**2 * (1.0 - f) ** 2
    if arg < 0:
        raise ValueError(
            f"comoving path is spacelike at r_s={r_s}: vs^2 (1-f)^2 > 1"
        )
    proper_time_ratio = math.sqrt(arg)
    return u, theta, proper_time_ratio


def eulerian_transport_speed(p: BubbleParams) -> float:
    """
    Transport velocity of a particle riding the bubble center, -vs f(0).
    Under the small-sigma substitution alpha1 = 2, alpha0 = -vs this is
    exactly vs/3.
    """
    return -p.vs * bubble_profile(0.0, p)


def sweep(regime: str, a_values, driver_values) -> list:
    """
    Cartesian-product tunneling-time table.

      narrow: driver = distortion energy E, dt = 3 sqrt(a^3/8E), vs = sqrt(8E/a)
      wide:   driver = n0, vs = n0 a, dt = 3/n0
      speed:  driver = n0, vs = n0 a, dt = 3/n0 (vs/c column of interest)
    """
    a_values = list(a_values)
    driver_values = list(driver_values)
    if not a_values or not driver_values:
        raise ValueError("sweep grids must be nonempty")
    rows = []
    for drv in driver_values:
        for a in a_values:
            if regime == "narrow":
                dt = tunneling_time_narrow(a, drv)
                vs = math.sqrt(8.0 * drv / a)
                rows.append(SweepRow(a=a, driver=drv, vs=vs, dt=dt, regime="narrow"))
            elif regime in ("wide", "speed"):
                vs = bubble_speed_scaling(a, drv)
                dt = tunneling_time_wide(drv)
                rows.append(SweepRow(a=a, driver=drv, vs=vs, dt=dt, regime="wide"))
            else:
                raise ValueError(f"unknown regime {regime!r}")
    return rows
