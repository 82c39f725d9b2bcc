"""Summary-data multivariable Mendelian randomization (MV-IVW and SRIVW)."""

from ._core import (
    Dataset,
    Estimate,
    InputError,
    MvmrError,
    OutlierReport,
    SimConfig,
    StrengthReport,
    TuningResult,
    __version__,
    grid_b,
    load_dataset,
    load_sim_config,
    monte_carlo,
    mv_ivw,
    parse_sim_config,
    q_statistic,
    remove_outliers,
    select_phi,
    simulate_dataset,
    spectral_regularize,
    srivw,
    srivw_overlap,
    srivw_pleiotropy,
    strength,
    write_dataset,
)

__all__ = [
    "Dataset",
    "Estimate",
    "InputError",
    "MvmrError",
    "OutlierReport",
    "SimConfig",
    "StrengthReport",
    "TuningResult",
    "__version__",
    "grid_b",
    "load_dataset",
    "load_sim_config",
    "monte_carlo",
    "mv_ivw",
    "parse_sim_config",
    "q_statistic",
    "remove_outliers",
    "select_phi",
    "simulate_dataset",
    "spectral_regularize",
    "srivw",
    "srivw_overlap",
    "srivw_pleiotropy",
    "strength",
    "write_dataset",
]
