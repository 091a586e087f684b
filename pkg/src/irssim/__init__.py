"""Link-budget and SINR simulator for conventional and IRS-assisted small-cell downlinks."""

from irssim.errors import ConfigError, DegenerateGeometryError, InvalidInputError
from irssim.geometry import CascadeGeometry, Point3, cascade_distances, distance
from irssim.channel import (
    ChannelParams,
    FadingModel,
    IrsPanel,
    conventional_rx_power,
    db_from_ratio,
    dbm_to_watts,
    irs_rx_power,
    irs_scattering_gain,
    sample_fading,
    sample_fading_block,
    watts_to_dbm,
    wavelength,
)
from irssim.sinr import (
    InterfererSet,
    LinkBudget,
    aggregate_interference,
    sinr,
    thermal_noise_watts,
)
from irssim.sweep import (
    MonteCarloStats,
    PlacementEntry,
    PlacementReport,
    Scenario,
    SweepResult,
    SweepRow,
    SweepSpec,
    compare_placement,
    monte_carlo_stats,
    run_angle_sweep,
    run_distance_sweep,
)
from irssim.presets import PRESET_NAMES, build_preset
from irssim.config import parse_scenario
from irssim.output import emit_results

__version__ = "0.1.0"

__all__ = [
    "CascadeGeometry",
    "ChannelParams",
    "ConfigError",
    "DegenerateGeometryError",
    "FadingModel",
    "InterfererSet",
    "InvalidInputError",
    "IrsPanel",
    "LinkBudget",
    "MonteCarloStats",
    "PlacementEntry",
    "PlacementReport",
    "Point3",
    "PRESET_NAMES",
    "Scenario",
    "SweepResult",
    "SweepRow",
    "SweepSpec",
    "aggregate_interference",
    "build_preset",
    "cascade_distances",
    "compare_placement",
    "conventional_rx_power",
    "db_from_ratio",
    "dbm_to_watts",
    "distance",
    "emit_results",
    "irs_rx_power",
    "irs_scattering_gain",
    "monte_carlo_stats",
    "parse_scenario",
    "run_angle_sweep",
    "run_distance_sweep",
    "sample_fading",
    "sample_fading_block",
    "sinr",
    "thermal_noise_watts",
    "watts_to_dbm",
    "wavelength",
]
