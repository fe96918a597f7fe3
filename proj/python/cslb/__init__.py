"""Colored-noise collapse rates and lower bounds on the noise frequency cutoff."""

from ._cslb import (
    BoundResult,
    CollapseParams,
    CslbError,
    CutoffKind,
    CutoffSpec,
    HeatingReport,
    McEstimate,
    MeasureKind,
    MeasurementScenario,
    collapse_time,
    cutoff_lower_bound,
    delta_gamma,
    estimate_lambda,
    fluctuation_bound,
    gamma_current,
    gamma_of_omega,
    heating_chain,
    i_norm,
    ions_displaced,
    j_norm,
    lambda_big,
    lambda_big_quadrature,
    lambda_rescale,
    presets,
    run_cli,
    sample_lorentzian,
    small_omega_cutoff_law,
    sphere_form_factor,
    white_collapse_time_analytic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
