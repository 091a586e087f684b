"""Received-power models, fading draws, wavelength, and power-unit conversions.

Two downlink models are provided: the direct small-cell link and the
cascaded link through a passive reflecting panel. Everything here computes
in SI units (watts, meters, hertz, linear gains); dB and dBm appear only in
the explicit conversion helpers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from irssim.errors import DegenerateGeometryError, InvalidInputError
from irssim.geometry import CascadeGeometry

SPEED_OF_LIGHT = 299_792_458.0  # m/s, exact


class FadingMode(enum.Enum):
    DETERMINISTIC = "deterministic"
    RAYLEIGH_EXPONENTIAL = "rayleigh"


class ConventionalModel(enum.Enum):
    """Which direct-link formula to use.

    PAPER keeps the wavelength to the first power; FRIIS uses the textbook
    lambda^2 numerator for sanity comparison. Both divide by r^alpha * 16*pi^2.
    """

    PAPER = "paper"
    FRIIS = "friis"


@dataclass(frozen=True)
class ChannelParams:
    """Carrier, transmit power, path-loss exponent, noise and interference.

    All powers in watts, frequency in hertz, path_loss_exponent dimensionless.
    """

    carrier_frequency: float
    tx_power: float
    path_loss_exponent: float
    noise_power: float
    interference_power: float = 0.0

    def __post_init__(self) -> None:
        if not (self.carrier_frequency > 0):
            raise InvalidInputError(
                f"carrier_frequency must be > 0, got {self.carrier_frequency!r}")
        if not (self.tx_power > 0):
            raise InvalidInputError(f"tx_power must be > 0, got {self.tx_power!r}")
        if not (self.path_loss_exponent >= 0):
            raise InvalidInputError(
                f"path_loss_exponent must be >= 0, got {self.path_loss_exponent!r}")
        if not (self.noise_power > 0):
            raise InvalidInputError(f"noise_power must be > 0, got {self.noise_power!r}")
        if not (self.interference_power >= 0):
            raise InvalidInputError(
                f"interference_power must be >= 0, got {self.interference_power!r}")

    @property
    def wavelength(self) -> float:
        return wavelength(self.carrier_frequency)


@dataclass(frozen=True)
class IrsPanel:
    """Reflecting-panel parameters: element geometry, counts, gains, angles.

    Gains are linear (not dB); angles are in degrees and must satisfy
    0 <= theta < 90 so both cosine factors stay strictly positive.
    """

    element_length: float
    element_width: float
    tx_side_elements: int
    rx_side_elements: int
    reflection_coefficient: float
    tx_gain: float
    rx_gain: float
    theta_t: float
    theta_r: float

    def __post_init__(self) -> None:
        if not (self.element_length > 0):
            raise InvalidInputError(
                f"element_length must be > 0, got {self.element_length!r}")
        if not (self.element_width > 0):
            raise InvalidInputError(
                f"element_width must be > 0, got {self.element_width!r}")
        for name in ("tx_side_elements", "rx_side_elements"):
            count = getattr(self, name)
            if not isinstance(count, int) or count < 1:
                raise InvalidInputError(f"{name} must be an integer >= 1, got {count!r}")
        if not (0 < self.reflection_coefficient <= 1):
            raise InvalidInputError(
                f"reflection_coefficient must lie in (0, 1], got {self.reflection_coefficient!r}")
        if not (self.tx_gain > 0):
            raise InvalidInputError(f"tx_gain must be > 0, got {self.tx_gain!r}")
        if not (self.rx_gain > 0):
            raise InvalidInputError(f"rx_gain must be > 0, got {self.rx_gain!r}")
        for name in ("theta_t", "theta_r"):
            angle = getattr(self, name)
            if not (0 <= angle < 90):
                raise InvalidInputError(f"{name} must lie in [0, 90), got {angle!r}")

    def with_angles(self, theta_t: float, theta_r: float) -> "IrsPanel":
        from dataclasses import replace

        return replace(self, theta_t=theta_t, theta_r=theta_r)


@dataclass(frozen=True)
class FadingModel:
    """Small-scale fading: a fixed unit gain or unit-mean exponential draws."""

    mode: FadingMode = FadingMode.DETERMINISTIC
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.mode is FadingMode.RAYLEIGH_EXPONENTIAL and self.seed is None:
            raise InvalidInputError("rayleigh fading requires a seed")

    @property
    def is_random(self) -> bool:
        return self.mode is FadingMode.RAYLEIGH_EXPONENTIAL


def wavelength(frequency: float) -> float:
    """Wavelength c/f in meters."""
    if not (frequency > 0):
        raise InvalidInputError(f"frequency must be > 0, got {frequency!r}")
    return SPEED_OF_LIGHT / frequency


def watts_to_dbm(watts: float) -> float:
    if not (watts > 0):
        raise InvalidInputError(f"power must be > 0 W for dBm conversion, got {watts!r}")
    return 10.0 * math.log10(watts / 1e-3)


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** (dbm / 10.0) * 1e-3


def db_from_ratio(ratio: float) -> float:
    if not (ratio > 0):
        raise InvalidInputError(f"ratio must be > 0 for dB conversion, got {ratio!r}")
    return 10.0 * math.log10(ratio)


def ratio_from_db(db: float) -> float:
    return 10.0 ** (db / 10.0)


def convert_power(value: float, src: str, dst: str) -> float:
    """Convert between 'watts', 'dbm' and 'db' (relative ratio <-> dB)."""
    units = {"watts", "dbm", "db"}
    if src not in units or dst not in units:
        raise InvalidInputError(f"units must be one of {sorted(units)}, got {src!r}->{dst!r}")
    if src == dst:
        return value
    if (src, dst) == ("watts", "dbm"):
        return watts_to_dbm(value)
    if (src, dst) == ("dbm", "watts"):
        return dbm_to_watts(value)
    if (src, dst) == ("watts", "db") or (src, dst) == ("dbm", "db"):
        raise InvalidInputError("dB is a relative unit; convert ratios, not absolute powers")
    # db -> absolute has no reference either
    raise InvalidInputError("dB is a relative unit; convert ratios, not absolute powers")


# splitmix64 finalizer; counter-based so (seed, stream_index) fully
# determines each draw, independent of evaluation order or platform.
_SM64_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_SM64_M1 = np.uint64(0xBF58476D1CE4E5B9)
_SM64_M2 = np.uint64(0x94D049BB133111EB)


def _uniform_open(seed: int, indices: np.ndarray) -> np.ndarray:
    """Deterministic uniforms on the open interval (0, 1), one per index."""
    z = (np.uint64(seed) + (indices.astype(np.uint64) + np.uint64(1)) * _SM64_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * _SM64_M1
    z = (z ^ (z >> np.uint64(27))) * _SM64_M2
    z = z ^ (z >> np.uint64(31))
    # top 53 bits, offset by half an ulp to avoid both endpoints
    return ((z >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53


def sample_fading_block(model: FadingModel, start_index: int, count: int) -> np.ndarray:
    """Fading gains for stream indices start_index .. start_index+count-1."""
    if count < 0:
        raise InvalidInputError(f"count must be >= 0, got {count!r}")
    if model.mode is FadingMode.DETERMINISTIC:
        return np.ones(count)
    indices = np.arange(start_index, start_index + count)
    return -np.log(_uniform_open(int(model.seed), indices))


def sample_fading(model: FadingModel, stream_index: int) -> float:
    """One fading gain: 1.0 when deterministic, else a unit-mean exponential draw."""
    return float(sample_fading_block(model, stream_index, 1)[0])


def conventional_rx_power(
    params: ChannelParams,
    r: float,
    fading_gain: float = 1.0,
    model: ConventionalModel = ConventionalModel.PAPER,
) -> float:
    """Direct-link received power in watts at distance r.

    PAPER form: lambda * L * P_t / (r^alpha * 16 * pi^2).
    FRIIS form: identical with lambda squared in the numerator.
    """
    if not (r > 0):
        raise DegenerateGeometryError(f"link distance must be > 0, got {r!r}")
    if not (fading_gain > 0):
        raise InvalidInputError(f"fading gain must be > 0, got {fading_gain!r}")
    lam = params.wavelength
    numerator = lam if model is ConventionalModel.PAPER else lam * lam
    return (numerator * fading_gain * params.tx_power
            / (r ** params.path_loss_exponent * 16.0 * math.pi ** 2))


def irs_scattering_gain(panel: IrsPanel, lam: float) -> float:
    """Aperture gain 4*pi*l_x*w_y / lambda^2 of one reflecting element."""
    if not (lam > 0):
        raise InvalidInputError(f"wavelength must be > 0, got {lam!r}")
    return 4.0 * math.pi * panel.element_length * panel.element_width / (lam * lam)


def irs_rx_power(
    params: ChannelParams,
    panel: IrsPanel,
    geom: CascadeGeometry,
    fading_gain: float = 1.0,
) -> float:
    """Cascaded received power in watts through the reflecting panel.

    l_x*w_y*m^2*n^2*lambda^2*G_T*G_R*G*cos(theta_t)*cos(theta_r)*A^2
    / (64*pi^3*(r1*r2)^2) * P_t, with G the element aperture gain; the
    wavelength cancels once G is substituted. The scalar fading gain is an
    optional extension (the cascaded formula itself carries no fading term).
    """
    if not (geom.r1 > 0 and geom.r2 > 0):
        raise DegenerateGeometryError(
            f"cascade legs must be > 0, got r1={geom.r1!r}, r2={geom.r2!r}")
    if not (fading_gain > 0):
        raise InvalidInputError(f"fading gain must be > 0, got {fading_gain!r}")
    lam = params.wavelength
    g = irs_scattering_gain(panel, lam)
    m = panel.tx_side_elements
    n = panel.rx_side_elements
    numerator = (panel.element_length * panel.element_width
                 * m * m * n * n * lam * lam
                 * panel.tx_gain * panel.rx_gain * g
                 * math.cos(math.radians(panel.theta_t))
                 * math.cos(math.radians(panel.theta_r))
                 * panel.reflection_coefficient ** 2)
    denominator = 64.0 * math.pi ** 3 * (geom.r1 * geom.r2) ** 2
    return numerator / denominator * params.tx_power * fading_gain
