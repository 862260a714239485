"""
Model parameters, derived constants, and the barrier potential.

Natural units are used throughout: hbar = c = m = 1. All quantities are
dimensionless multiples of the corresponding natural unit.
"""

from dataclasses import dataclass, field
from typing import Optional
import math


@dataclass(frozen=True)
class BarrierSpec:
    """
    Rectangular-barrier scattering setup for a two-mode superposition.

    Attributes:
        a: barrier width (barrier occupies [-a/2, a/2]).
        V0: barrier height; must exceed both mode energies (tunneling regime).
        E1, E2: energies of the two superposed modes.
        k1, k2: wavenumbers of the two modes.
        A, B: real incident / reflected amplitudes on the left.
        t0, t1: times at which the particle crosses x = -a/2 and x = +a/2.
        deltaE: energy splitting E2 - E1 (derived, stored for convenience).
    """

    a: float
    V0: float
    E1: float
    E2: float
    k1: float
    k2: float
    A: float = 1.0
    B: float = 0.0
    t0: float = 0.0
    t1: float = 0.0
    deltaE: float = field(init=False)

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError(f"barrier width a must be positive, got {self.a}")
        if self.V0 <= max(self.E1, self.E2):
            raise ValueError(
                f"V0 ({self.V0}) must exceed both mode energies "
                f"({self.E1}, {self.E2}) for the tunneling regime"
            )
        object.__setattr__(self, "deltaE", self.E2 - self.E1)

    @property
    def amp_sum(self) -> float:
        """Combined amplitude A + B multiplying the cosine quadrature."""
        return self.A + self.B

    @property
    def amp_diff(self) -> float:
        """Combined amplitude A - B multiplying the sine quadrature."""
        return self.A - self.B

    def k(self, mode: int) -> float:
        if mode == 1:
            return self.k1
        if mode == 2:
            return self.k2
        raise ValueError(f"mode must be 1 or 2, got {mode}")

    def E(self, mode: int) -> float:
        if mode == 1:
            return self.E1
        if mode == 2:
            return self.E2
        raise ValueError(f"mode must be 1 or 2, got {mode}")


@dataclass(frozen=True)
class BubbleParams:
    """
    Warp-bubble profile parameters.

    The profile is f(r_s) = alpha0 / {vs [1 + alpha1 cosh(2 sigma r_s)]}
    with r_s = x - x_s(t) the position relative to the bubble center.

    alpha0 and alpha1 are normally derived from (sigma, R, vs):
        alpha1 = sech(2 sigma R)
        alpha0 = -vs tanh(2 sigma R) / (2 tanh(sigma R))
    but may be overridden to explore regimes where the derivation formulas
    are replaced by asymptotic substitutions (e.g. alpha1 = 2 with
    alpha0 = -vs in the small-sigma transport analysis).
    """

    sigma: float
    R: float
    vs: float
    xs0: float = 0.0
    alpha0: Optional[float] = None
    alpha1: Optional[float] = None

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.R <= 0:
            raise ValueError(f"R must be positive, got {self.R}")
        if self.alpha1 is None:
            object.__setattr__(
                self, "alpha1", 1.0 / math.cosh(2.0 * self.sigma * self.R)
            )
        if self.alpha0 is None:
            object.__setattr__(
                self,
                "alpha0",
                -self.vs
                * math.tanh(2.0 * self.sigma * self.R)
                / (2.0 * math.tanh(self.sigma * self.R)),
            )

    def xs(self, t: float) -> float:
        """Bubble-center position at time t for a constant-velocity bubble."""
        return self.xs0 + self.vs * t


def derive_bubble(sigma: float, R: float, vs: float, xs0: float = 0.0) -> BubbleParams:
    """
    Build BubbleParams with alpha0, alpha1 derived from (sigma, R, vs).

    Rejects parameter sets whose derived alpha1 is degenerate (0 or 1 within
    1e-9), since the region-II phase function is undefined there.
    """
    p = BubbleParams(sigma=sigma, R=R, vs=vs, xs0=xs0)
    if abs(p.alpha1) < 1e-9 or abs(p.alpha1 - 1.0) < 1e-9:
        raise ValueError(
            f"derived alpha1 = {p.alpha1} is degenerate (must differ from 0 "
            f"and 1 by more than 1e-9); choose a larger sigma*R"
        )
    return p


def potential_V(x: float, spec: BarrierSpec) -> float:
    """
    Rectangular barrier: V0 on the closed interval [-a/2, a/2], 0 outside.

    The closed-interval convention at the endpoints is a documented choice;
    the step-product definition is ambiguous exactly at x = +-a/2.
    """
    if -spec.a / 2.0 <= x <= spec.a / 2.0:
        return spec.V0
    return 0.0


def dispersion(k: float, mode: str = "nonrelativistic") -> float:
    """
    Energy of a free mode with wavenumber k.

    relativistic: E = sqrt(1 + k^2) (rest mass 1, positive branch).
    nonrelativistic: E = k^2 / 2.
    """
    if mode == "relativistic":
        return math.sqrt(1.0 + k * k)
    if mode == "nonrelativistic":
        return k * k / 2.0
    raise ValueError(f"unknown dispersion mode {mode!r}")


def load_config(path: str) -> dict:
    """
    Parse a flat key=value configuration file.

    Lines starting with '#' (after stripping) and blank lines are ignored.
    Values are parsed as floats.
    """
    values: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, val = line.partition("=")
            values[key.strip()] = float(val.strip())
    return values


def specs_from_config(cfg: dict) -> tuple:
    """Build (BarrierSpec, BubbleParams) from a parsed key=value mapping."""
    barrier = BarrierSpec(
        a=cfg["a"],
        V0=cfg["V0"],
        E1=cfg["E1"],
        E2=cfg["E2"],
        k1=cfg["k1"],
        k2=cfg["k2"],
        A=cfg.get("A", 1.0),
        B=cfg.get("B", 0.0),
        t0=cfg.get("t0", 0.0),
        t1=cfg.get("t1", 0.0),
    )
    bubble = BubbleParams(
        sigma=cfg["sigma"],
        R=cfg["R"],
        vs=cfg["vs"],
        xs0=cfg.get("xs0", 0.0),
        alpha0=cfg.get("alpha0"),
        alpha1=cfg.get("alpha1"),
    )
    return barrier, bubble


DEFAULT_CONFIG = {
    "a": 2.0,
    "V0": 5.0,
    "E1": 0.32,
    "E2": 0.5,
    "k1": 0.8,
    "k2": 1.0,
    "A": 1.0,
    "B": 0.4,
    "t0": 0.0,
    "t1": 6.0,
    "sigma": 0.3,
    "R": 1.0,
    "vs": 1.0,
    "xs0": 0.0,
}
"""Default parameter set used by the CLI when no config file is given."""
