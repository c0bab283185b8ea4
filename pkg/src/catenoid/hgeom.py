"""Rotationally symmetric coordinate models of hyperbolic 3-space.

Everything lives in the generating half-plane of the ball model, i.e. the
upper half disk ``{(u, v) : u**2 + v**2 < 1, v >= 0}``.  The same half disk is
also described by hyperbolic cylindrical coordinates ``(x, y)``: ``x`` is the
signed distance along the rotation axis (the ``u``-axis) and ``y`` the distance
from it.  In those coordinates the metric is the warped product

    ds**2 = cosh(y)**2 dx**2 + dy**2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "HalfDiskPoint",
    "BallPoint",
    "CirclePairSeparation",
    "halfdisk_to_ball",
    "ball_to_halfdisk",
    "geodesic_disk_area",
    "geodesic_disk_area_cosh",
]

_SHRINK = 1.0 - 2.0**-52


@dataclass(frozen=True)
class HalfDiskPoint:
    """Point ``(x, y)`` of the warped-product half disk, ``y >= 0``."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite half-disk point ({self.x}, {self.y})")
        if self.y < 0:
            raise DomainError(f"half-disk point needs y >= 0, got y={self.y}")


@dataclass(frozen=True)
class BallPoint:
    """Point ``(u, v)`` of the ball-model generating half disk."""

    u: float
    v: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.u) and math.isfinite(self.v)):
            raise DomainError(f"non-finite ball point ({self.u}, {self.v})")
        if self.v < 0:
            raise DomainError(f"ball point needs v >= 0, got v={self.v}")
        if self.u * self.u + self.v * self.v >= 1.0:
            raise DomainError(f"ball point ({self.u}, {self.v}) is not inside the unit disk")


@dataclass(frozen=True)
class CirclePairSeparation:
    """Hyperbolic distance between the planes spanned by two disjoint coaxial circles."""

    d_L: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.d_L) and self.d_L > 0):
            raise DomainError(f"circle separation must be positive and finite, got {self.d_L}")


def _sech(z: float) -> float:
    # 1/cosh without overflow: 2 e^{-|z|} / (1 + e^{-2|z|})
    e = math.exp(-abs(z))
    return 2.0 * e / (1.0 + e * e)


def halfdisk_to_ball(p: HalfDiskPoint) -> BallPoint:
    """Map ``(x, y)`` to ball coordinates ``(u, v)``.

    Uses ``u = sinh x cosh y / (1 + cosh x cosh y)`` and
    ``v = sinh y / (1 + cosh x cosh y)`` after dividing through by
    ``cosh x cosh y``, so no intermediate overflows for ``|x|, y <= 700``.
    Points whose image rounds onto the unit circle (``y`` beyond roughly 19)
    are pulled back to the nearest representable interior point.
    """
    sx, sy = _sech(p.x), _sech(p.y)
    denom = 1.0 + sx * sy
    u = math.tanh(p.x) / denom
    v = math.tanh(p.y) * sx / denom
    while u * u + v * v >= 1.0:
        u *= _SHRINK
        v *= _SHRINK
    return BallPoint(u, v)


def ball_to_halfdisk(p: BallPoint) -> HalfDiskPoint:
    """Inverse of :func:`halfdisk_to_ball`.

    ``tanh x = 2u / (1 + r**2)`` and ``sinh y = 2v / (1 - r**2)``.  Near the
    unit circle both are ill-conditioned, so ``x`` is taken as
    ``log(|1 + w| / |1 - w|)`` with ``w = u + iv`` (no cancellation) and
    ``1 - r**2`` is formed exactly in rational arithmetic.
    """
    u, v = p.u, p.v
    q = 1 - Fraction(u) ** 2 - Fraction(v) ** 2
    if q <= 0:
        raise DomainError(f"({u}, {v}) is not inside the unit disk")
    v2 = v * v
    x = 0.5 * math.log(((1.0 + u) ** 2 + v2) / ((1.0 - u) ** 2 + v2))
    y = math.asinh(2.0 * v / float(q))
    return HalfDiskPoint(x, y)


def geodesic_disk_area(y1: float) -> float:
    """Area ``4 pi sinh(y1/2)**2`` of a totally geodesic disk of hyperbolic radius ``y1``."""
    if not y1 >= 0:
        raise DomainError(f"radius must be >= 0, got {y1}")
    try:
        return 4.0 * math.pi * math.sinh(0.5 * y1) ** 2
    except OverflowError:
        return math.inf


def geodesic_disk_area_cosh(y1: float) -> float:
    """The same area written as ``2 pi (cosh y1 - 1)``.

    Loses relative accuracy for small radii through cancellation; kept as the
    second closed form to check :func:`geodesic_disk_area` against.
    """
    if not y1 >= 0:
        raise DomainError(f"radius must be >= 0, got {y1}")
    try:
        return 2.0 * math.pi * (math.cosh(y1) - 1.0)
    except OverflowError:
        return math.inf
