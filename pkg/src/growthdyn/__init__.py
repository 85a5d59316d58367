"""growthdyn: growth laws, stability analysis, competition, and field models.

The package splits into closed-form growth models (models), a small ODE
engine (ode), planar fixed-point and competition analysis (dynsys), spatial
field solvers (fields), nonlinear least-squares fitting (fitting), and
time-series I/O (dataio), with a command-line front end (cli).
"""

from .dataio import (AXES_LINEAR, AXES_LOG_LOG, AXES_LOG_X, AXES_LOG_Y,
                     FORMAT_CSV, FORMAT_JSON, KIND_ANNUAL, KIND_CUMULATIVE,
                     KIND_GENERIC, TimeSeries, cumulate, emit_plot_series,
                     read_csv)
from .dynsys import (CENTER, DEGENERATE, MARGINAL, SADDLE, SPECIES_1_SURVIVES,
                     SPECIES_2_SURVIVES, STABLE_FOCUS, STABLE_NODE,
                     UNSTABLE_FOCUS, UNSTABLE_NODE, CompetitionParams,
                     EigenClassification, ExclusionVerdict, FixedPoint2D,
                     StabilityReport, classify, competition_system,
                     coupled_logistic_demo, exclusion_verdict,
                     find_fixed_point, linearize, stability_report)
from .errors import (DataIOError, DomainError, GrowthDynError, LogAxisError,
                     NonConvergenceError, NumericalError, ParameterError,
                     RankDeficiencyError, RootNotFoundError, StiffnessError,
                     ValidationError)
from .fields import (AdvectionSetup, DiffusionParams, FieldSnapshot,
                     characteristic_energy, characteristic_particle_system,
                     diffusion_point_source, euler_characteristic_phi,
                     euler_terminal_profile, evolve_advection_fd,
                     probe_series)
from .fitting import (EXPONENTIAL, INDETERMINATE, LOGISTIC_FAMILY, LOSS_LINEAR,
                      LOSS_LOG, POWER_LAW, SATURATING_LINEAR,
                      ClassifierVerdict, FitProblem, FitResult, OnsetEstimate,
                      early_growth_classifier, fit, saturation_onset)
from .models import (UNBOUNDED, GeneralizedLogisticParams, PowerLawParams,
                     SaturatingLinearParams, Unbounded, early_time_approx,
                     eval_logistic_family, eval_power_law,
                     eval_saturating_linear, terminal_value)
from .ode import (AutonomousSystem, Trajectory, integrate_adaptive,
                  integrate_fixed, interp_states)

__version__ = "0.1.0"

__all__ = [
    "AdvectionSetup", "AutonomousSystem", "AXES_LINEAR", "AXES_LOG_LOG",
    "AXES_LOG_X", "AXES_LOG_Y", "CENTER", "ClassifierVerdict",
    "CompetitionParams", "DataIOError", "DEGENERATE", "DiffusionParams",
    "DomainError", "EigenClassification", "EXPONENTIAL", "ExclusionVerdict",
    "FieldSnapshot", "FitProblem", "FitResult", "FixedPoint2D",
    "FORMAT_CSV", "FORMAT_JSON",
    "GeneralizedLogisticParams", "GrowthDynError", "INDETERMINATE",
    "KIND_ANNUAL", "KIND_CUMULATIVE", "KIND_GENERIC", "LOGISTIC_FAMILY",
    "LogAxisError", "LOSS_LINEAR", "LOSS_LOG", "MARGINAL",
    "NonConvergenceError", "NumericalError", "OnsetEstimate", "ParameterError",
    "POWER_LAW", "PowerLawParams", "RankDeficiencyError", "RootNotFoundError",
    "SADDLE", "SATURATING_LINEAR", "SaturatingLinearParams",
    "SPECIES_1_SURVIVES", "SPECIES_2_SURVIVES", "STABLE_FOCUS", "STABLE_NODE",
    "StabilityReport", "StiffnessError", "TimeSeries", "Trajectory",
    "UNBOUNDED", "Unbounded", "UNSTABLE_FOCUS", "UNSTABLE_NODE",
    "ValidationError", "__version__", "characteristic_energy",
    "characteristic_particle_system", "classify", "competition_system",
    "coupled_logistic_demo", "cumulate", "diffusion_point_source",
    "early_growth_classifier", "early_time_approx", "emit_plot_series",
    "euler_characteristic_phi", "euler_terminal_profile",
    "eval_logistic_family", "eval_power_law", "eval_saturating_linear",
    "evolve_advection_fd", "exclusion_verdict", "find_fixed_point", "fit",
    "integrate_adaptive", "integrate_fixed", "interp_states", "linearize",
    "probe_series", "read_csv", "saturation_onset", "stability_report",
    "terminal_value",
]
