"""
warptunnel: a geometrodynamic pilot-wave model of barrier tunneling.

A rectangular barrier is crossed by riding a warp-bubble spacetime
distortion; the package provides the piecewise metric, the closed-form phase
functions and quantum potentials, boundary matching of the wavefunction,
Bohmian trajectory integration with conserved invariants, and the
tunneling-time laws (including the barrier-width-independent plateau).
"""

from .params import (
    BarrierSpec,
    BubbleParams,
    DEFAULT_CONFIG,
    derive_bubble,
    dispersion,
    load_config,
    potential_V,
    specs_from_config,
)
from .metric import (
    ChristoffelSet,
    MetricTensor,
    alcubierre_inverse,
    alcubierre_metric,
    bubble_profile,
    bubble_profile_derivative,
    bubble_radius,
    christoffel,
    christoffel_warp_analytic,
    region_metric,
    warp_metric_from_beta,
)
from .phase import (
    PhaseConstants,
    phase_I,
    phase_II,
    phase_II_derivative,
    phase_II_quadrature,
    phase_III,
    phase_constants,
    sqrt_rho_I,
)
from .potential import (
    EnergyRegime,
    bohm_potential_generic,
    classify_regime,
    distortion_energy,
    narrow_energy_closed_form,
    quantum_potential_II,
    quantum_potential_region,
    wide_energy_scale,
)
from .matching import (
    MatchCoefficients,
    MatchZetas,
    continuity_system,
    solve_coefficients,
    system_residuals,
    transmission,
    wavefunction,
    zeta_terms,
)
from .dynamics import (
    TrajectoryConstants,
    TrajectoryResult,
    TrajectorySample,
    fig2_dataset,
    implicit_invariant,
    integrate_trajectory,
    momentum_I,
    momentum_II,
    momentum_III,
    trajectory_constants,
)
from .hartman import (
    SweepRow,
    bubble_speed_scaling,
    eulerian_diagnostics,
    eulerian_transport_speed,
    superluminal_threshold,
    sweep,
    tunneling_time,
    tunneling_time_narrow,
    tunneling_time_wide,
)
from .validation import ValidationResult, run_all

__version__ = "0.1.0"
