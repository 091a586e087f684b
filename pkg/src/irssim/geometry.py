"""3D positions and the link distances consumed by the channel models."""

from __future__ import annotations

import math
from dataclasses import dataclass

from irssim.errors import DegenerateGeometryError, InvalidInputError


@dataclass(frozen=True)
class Point3:
    """A position in meters. All coordinates must be finite."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidInputError(f"coordinate {name} must be finite, got {value!r}")

    def translated(self, dx: float, dy: float, dz: float) -> "Point3":
        return Point3(self.x + dx, self.y + dy, self.z + dz)


@dataclass(frozen=True)
class CascadeGeometry:
    """Two-hop tx -> reflector -> rx geometry with both leg lengths.

    Construct via :func:`cascade_distances`; both legs must be strictly
    positive because the cascaded power model divides by (r1 * r2)^2.
    """

    tx: Point3
    irs: Point3
    rx: Point3
    r1: float
    r2: float


def distance(a: Point3, b: Point3) -> float:
    """Euclidean distance between two points, in meters."""
    return math.sqrt((a.x - b.x) ** 2 + (a.y - b.y) ** 2 + (a.z - b.z) ** 2)


def cascade_distances(tx: Point3, irs: Point3, rx: Point3) -> CascadeGeometry:
    """Build the two-hop geometry, rejecting zero-length legs."""
    r1 = distance(tx, irs)
    r2 = distance(irs, rx)
    if r1 == 0.0:
        raise DegenerateGeometryError("transmitter and reflector coincide (r1 = 0)")
    if r2 == 0.0:
        raise DegenerateGeometryError("reflector and receiver coincide (r2 = 0)")
    return CascadeGeometry(tx=tx, irs=irs, rx=rx, r1=r1, r2=r2)
