"""Scenario definition and the sweep / Monte-Carlo engine.

A sweep evaluates the downlink at a uniform grid of distances, drawing a
configurable number of fading realizations per grid point. Every random
draw is a pure function of (seed, point_index, trial_index), so results are
identical across runs and across serial or parallel evaluation.
"""

from __future__ import annotations

import datetime
import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from irssim.channel import (
    ChannelParams,
    ConventionalModel,
    FadingModel,
    IrsPanel,
    conventional_rx_power,
    irs_rx_power,
    sample_fading_block,
    watts_to_dbm,
)
from irssim.errors import DegenerateGeometryError, InvalidInputError
from irssim.geometry import Point3, cascade_distances, distance
from irssim.sinr import InterfererSet, aggregate_interference

# interference fading draws live in their own half of the stream space so
# they can never collide with signal draws
_INTERFERENCE_STREAM_BASE = 1 << 62


class LinkMode(enum.Enum):
    CONVENTIONAL = "conventional"
    IRS_ASSISTED = "irs"


@dataclass(frozen=True)
class Scenario:
    """A fully specified downlink to sweep.

    In IRS-assisted mode the receiver is placed on a ray from the reflector
    (direction ``rx_direction``) so the swept distance is the reflector-to-
    receiver leg; in conventional mode the same ray starts at the transmitter.
    """

    channel: ChannelParams
    fading: FadingModel
    interference: InterfererSet
    mode: LinkMode
    tx: Point3
    panel: Optional[IrsPanel] = None
    irs: Optional[Point3] = None
    rx_direction: Tuple[float, float, float] = (1.0, 0.0, 0.0)
    conventional_model: ConventionalModel = ConventionalModel.PAPER
    label: str = "scenario"
    assumptions: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.mode is LinkMode.IRS_ASSISTED:
            if self.panel is None or self.irs is None:
                raise InvalidInputError(
                    "irs mode requires both a panel and an IRS position")
        else:
            if self.panel is not None or self.irs is not None:
                raise InvalidInputError(
                    "conventional mode must not carry a panel or IRS position")
        norm = math.sqrt(sum(c * c for c in self.rx_direction))
        if not (norm > 0 and math.isfinite(norm)):
            raise InvalidInputError(f"rx_direction must be nonzero, got {self.rx_direction!r}")

    def receiver_at(self, x: float) -> Point3:
        """Receiver position for swept distance x along the placement ray."""
        origin = self.irs if self.mode is LinkMode.IRS_ASSISTED else self.tx
        norm = math.sqrt(sum(c * c for c in self.rx_direction))
        ux, uy, uz = (c / norm for c in self.rx_direction)
        return Point3(origin.x + x * ux, origin.y + x * uy, origin.z + x * uz)


@dataclass(frozen=True)
class SweepSpec:
    """Uniform sweep grid plus Monte-Carlo repetition count and seed."""

    start: float
    stop: float
    steps: int
    trials: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if not (self.start < self.stop):
            raise InvalidInputError(
                f"sweep start must be < stop, got [{self.start!r}, {self.stop!r}]")
        if self.steps < 2:
            raise InvalidInputError(f"sweep steps must be >= 2, got {self.steps!r}")
        if self.trials < 1:
            raise InvalidInputError(f"trials must be >= 1, got {self.trials!r}")

    def grid(self) -> List[float]:
        step = (self.stop - self.start) / (self.steps - 1)
        return [self.start + i * step for i in range(self.steps)]


@dataclass(frozen=True)
class SweepRow:
    x: float
    rx_power_dbm: float
    sinr_db: float
    sinr_db_stddev: float


@dataclass(frozen=True)
class SweepResult:
    scenario_label: str
    variable_name: str
    rows: Tuple[SweepRow, ...]
    metadata: Dict[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class MonteCarloStats:
    mean_sinr_db: float
    stddev_sinr_db: float
    p5_sinr_db: float
    p95_sinr_db: float
    mean_rx_power_w: float
    trials: int
    seed: int


@dataclass(frozen=True)
class PlacementEntry:
    irs_position: Point3
    per_rx_sinr_db: Tuple[float, ...]
    min_sinr_db: float
    mean_sinr_db: float
    max_sinr_db: float


@dataclass(frozen=True)
class PlacementReport:
    entries: Tuple[PlacementEntry, ...]  # sorted by min SINR, best first
    metadata: Dict[str, object] = field(default_factory=dict)


def _deterministic_rx_power(scenario: Scenario, rx: Point3) -> float:
    """Unit-fading received power at rx for the scenario's link mode."""
    if scenario.mode is LinkMode.IRS_ASSISTED:
        geom = cascade_distances(scenario.tx, scenario.irs, rx)
        return irs_rx_power(scenario.channel, scenario.panel, geom)
    r = distance(scenario.tx, rx)
    return conventional_rx_power(
        scenario.channel, r, 1.0, scenario.conventional_model)


def _point_fading(scenario: Scenario, seed: int, point_index: int, trials: int) -> np.ndarray:
    model = scenario.fading
    if model.is_random:
        model = replace(model, seed=seed)
    return sample_fading_block(model, point_index * trials, trials)


def _interference_at(scenario: Scenario, rx: Point3, seed: int, point_index: int) -> float:
    fading = scenario.fading
    if fading.is_random:
        fading = replace(fading, seed=seed)
    return aggregate_interference(
        scenario.interference, rx, fading,
        stream_base=_INTERFERENCE_STREAM_BASE + point_index * (len(scenario.interference.interferers) or 1),
        model=scenario.conventional_model)


def _evaluate_point(scenario: Scenario, spec: SweepSpec, point_index: int, x: float) -> SweepRow:
    try:
        rx = scenario.receiver_at(x)
        base_power = _deterministic_rx_power(scenario, rx)
        interference = _interference_at(scenario, rx, spec.seed, point_index)
    except DegenerateGeometryError as exc:
        raise DegenerateGeometryError(f"sweep point x={x!r}: {exc}") from exc
    denominator = interference + scenario.channel.noise_power
    if not scenario.fading.is_random:
        # all trials are identical; keep the stddev an exact zero
        return SweepRow(
            x=x,
            rx_power_dbm=watts_to_dbm(base_power),
            sinr_db=10.0 * math.log10(base_power / denominator),
            sinr_db_stddev=0.0,
        )
    gains = _point_fading(scenario, spec.seed, point_index, spec.trials)
    rx_powers = base_power * gains
    sinr_db = 10.0 * np.log10(rx_powers / denominator)
    return SweepRow(
        x=x,
        rx_power_dbm=watts_to_dbm(float(rx_powers.mean())),
        sinr_db=float(sinr_db.mean()),
        sinr_db_stddev=float(sinr_db.std()) if spec.trials > 1 else 0.0,
    )


def _base_metadata(scenario: Scenario, spec: SweepSpec) -> Dict[str, object]:
    return {
        "seed": spec.seed,
        "trials": spec.trials,
        "mode": scenario.mode.value,
        "conventional_model": scenario.conventional_model.value,
        "fading": scenario.fading.mode.value,
        "interference_mode": scenario.interference.mode.value,
        "assumptions": list(scenario.assumptions),
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def run_distance_sweep(
    scenario: Scenario,
    spec: SweepSpec,
    parallel: bool = False,
) -> SweepResult:
    """Sweep the receiver distance and record mean SINR per grid point.

    The swept distance is the reflector-to-receiver leg in IRS mode and the
    transmitter-to-receiver distance otherwise; output rows are ordered by
    distance regardless of evaluation order.
    """
    grid = spec.grid()
    if grid[0] <= 0:
        raise InvalidInputError(f"sweep distances must be > 0, start={spec.start!r}")
    if parallel:
        with ThreadPoolExecutor() as pool:
            rows = list(pool.map(
                lambda ix: _evaluate_point(scenario, spec, ix[0], ix[1]),
                enumerate(grid)))
    else:
        rows = [_evaluate_point(scenario, spec, i, x) for i, x in enumerate(grid)]
    return SweepResult(
        scenario_label=scenario.label,
        variable_name="distance_m",
        rows=tuple(rows),
        metadata=_base_metadata(scenario, spec),
    )


def run_angle_sweep(
    scenario: Scenario,
    angle_pairs: Sequence[Tuple[float, float]],
    spec: SweepSpec,
    parallel: bool = False,
) -> List[SweepResult]:
    """One distance sweep per (theta_t, theta_r) pair, sharing fading draws.

    All pairs reuse the same seed and stream indices, so dB gaps between the
    returned curves reflect only the angle change (common random numbers).
    """
    if scenario.mode is not LinkMode.IRS_ASSISTED:
        raise InvalidInputError("angle sweeps require an IRS-assisted scenario")
    results = []
    for theta_t, theta_r in angle_pairs:
        if not (0 <= theta_t < 90 and 0 <= theta_r < 90):
            raise InvalidInputError(
                f"angles must lie in [0, 90), got ({theta_t!r}, {theta_r!r})")
        variant = replace(
            scenario,
            panel=scenario.panel.with_angles(theta_t, theta_r),
            label=f"{scenario.label} theta_t={theta_t:g} theta_r={theta_r:g}",
        )
        results.append(run_distance_sweep(variant, spec, parallel=parallel))
    return results


def monte_carlo_stats(
    scenario: Scenario,
    point: Point3,
    trials: int,
    seed: int,
) -> MonteCarloStats:
    """Fading statistics of the link to a fixed receiver position."""
    if trials < 1:
        raise InvalidInputError(f"trials must be >= 1, got {trials!r}")
    base_power = _deterministic_rx_power(scenario, point)
    interference = _interference_at(scenario, point, seed, 0)
    denominator = interference + scenario.channel.noise_power
    if not scenario.fading.is_random:
        value = 10.0 * math.log10(base_power / denominator)
        return MonteCarloStats(
            mean_sinr_db=value,
            stddev_sinr_db=0.0,
            p5_sinr_db=value,
            p95_sinr_db=value,
            mean_rx_power_w=base_power,
            trials=trials,
            seed=seed,
        )
    model = replace(scenario.fading, seed=seed)
    gains = sample_fading_block(model, 0, trials)
    rx_powers = base_power * gains
    sinr_db = 10.0 * np.log10(rx_powers / denominator)
    return MonteCarloStats(
        mean_sinr_db=float(sinr_db.mean()),
        stddev_sinr_db=float(sinr_db.std()),
        p5_sinr_db=float(np.percentile(sinr_db, 5)),
        p95_sinr_db=float(np.percentile(sinr_db, 95)),
        mean_rx_power_w=float(rx_powers.mean()),
        trials=trials,
        seed=seed,
    )


def compare_placement(
    scenario: Scenario,
    irs_positions: Sequence[Point3],
    rx_positions: Sequence[Point3],
    spec: SweepSpec,
) -> PlacementReport:
    """Rank candidate reflector positions by their worst-receiver SINR.

    Fading draws are indexed by receiver only, so every candidate position is
    scored against identical channel realizations.
    """
    if scenario.mode is not LinkMode.IRS_ASSISTED:
        raise InvalidInputError("placement comparison requires an IRS-assisted scenario")
    if not irs_positions or not rx_positions:
        raise InvalidInputError("placement comparison needs >= 1 IRS and >= 1 rx position")
    entries = []
    for irs in irs_positions:
        candidate = replace(scenario, irs=irs)
        per_rx = []
        for rx_index, rx in enumerate(rx_positions):
            try:
                base_power = _deterministic_rx_power(candidate, rx)
            except DegenerateGeometryError as exc:
                raise DegenerateGeometryError(
                    f"placement (irs={irs}, rx={rx}): {exc}") from exc
            interference = _interference_at(candidate, rx, spec.seed, rx_index)
            gains = _point_fading(candidate, spec.seed, rx_index, spec.trials)
            sinr_db = 10.0 * np.log10(
                base_power * gains / (interference + scenario.channel.noise_power))
            per_rx.append(float(sinr_db.mean()))
        entries.append(PlacementEntry(
            irs_position=irs,
            per_rx_sinr_db=tuple(per_rx),
            min_sinr_db=min(per_rx),
            mean_sinr_db=sum(per_rx) / len(per_rx),
            max_sinr_db=max(per_rx),
        ))
    entries.sort(key=lambda e: e.min_sinr_db, reverse=True)
    return PlacementReport(
        entries=tuple(entries),
        metadata=_base_metadata(scenario, spec),
    )
