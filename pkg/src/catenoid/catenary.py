"""Generating curves of spherical catenoids.

The catenary with neck ``lam`` is the graph

    x(y) = int_lam^y sinh(2 lam) / (cosh t sqrt(sinh(2t)**2 - sinh(2 lam)**2)) dt,   y >= lam,

mirrored to ``x <= 0``.  It meets the ``y``-axis orthogonally at ``(0, lam)``
and approaches the ideal boundary at ``x = +-d0(lam)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CatenoidError, DomainError, InconclusiveError
from .hgeom import BallPoint, HalfDiskPoint, halfdisk_to_ball
from .quad import QuadConfig, find_root, integrate_sqrt_singular
from .separation import d0, profile_integrand

__all__ = [
    "Catenary",
    "CurveSample",
    "IntersectionReport",
    "EnvelopeResult",
    "profile_x",
    "profile_x_many",
    "tangent_angle_sin",
    "arc_length",
    "sample_curve",
    "intersect",
    "envelope",
    "dx_dlambda",
    "DEFAULT_Y_SEARCH_MAX",
]

DEFAULT_Y_SEARCH_MAX = 40.0
_SCAN_POINTS = 256


def _check(lam: float, y: float) -> None:
    if not (math.isfinite(lam) and lam > 0):
        raise DomainError(f"neck parameter must be > 0, got {lam}")
    if not (math.isfinite(y) and y >= lam):
        raise DomainError(f"need y >= lambda, got y={y}, lambda={lam}")


def _theta(u: float, lam: float) -> float:
    # ds/dy along the curve: sinh 2y / sqrt(sinh^2 2y - sinh^2 2lam) with y = lam + u
    if u <= 0:
        return math.inf
    return math.sinh(2 * u + 2 * lam) / math.sqrt(math.sinh(2 * u) * math.sinh(2 * u + 4 * lam))


def _segment(fn, lam: float, u0: float, u1: float, cfg: QuadConfig | None) -> float:
    if u1 <= u0:
        return 0.0
    return integrate_sqrt_singular(lambda u: fn(u, lam), u0, u1, cfg).value


def profile_x(lam: float, y: float, cfg: QuadConfig | None = None) -> float:
    """Horizontal coordinate ``x(y) >= 0`` of the catenary with neck ``lam``."""
    _check(lam, y)
    return _segment(profile_integrand, lam, 0.0, y - lam, cfg)


def profile_x_many(lam: float, ys, cfg: QuadConfig | None = None) -> np.ndarray:
    """``profile_x`` at sorted heights ``ys``, accumulated segment by segment.

    Cheaper than independent calls and monotone by construction.
    """
    ys = np.asarray(ys, dtype=float)
    if ys.size and (np.any(np.diff(ys) < 0)):
        raise DomainError("heights must be sorted ascending")
    if ys.size:
        _check(lam, float(ys[0]))
    out = np.empty_like(ys)
    acc, prev = 0.0, 0.0
    for i, y in enumerate(ys):
        u = float(y) - lam
        acc += _segment(profile_integrand, lam, prev, u, cfg)
        out[i] = acc
        prev = u
    return out


def tangent_angle_sin(lam: float, y: float) -> float:
    """``sin(alpha) = sinh(2 lam) / sinh(2 y)``, alpha being the angle to ``d/dy``."""
    _check(lam, y)
    if y == lam:
        return 1.0
    return math.sinh(2 * lam) / math.sinh(2 * y)


def arc_length(lam: float, y: float, cfg: QuadConfig | None = None) -> float:
    """Hyperbolic length of the catenary from the neck up to height ``y``."""
    _check(lam, y)
    return _segment(_theta, lam, 0.0, y - lam, cfg)


@dataclass(frozen=True)
class Catenary:
    """Generating curve of the spherical catenoid with neck ``lam``."""

    lam: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise DomainError(f"neck parameter must be > 0, got {self.lam}")

    def x(self, y: float, cfg: QuadConfig | None = None) -> float:
        return profile_x(self.lam, y, cfg)

    def sin_alpha(self, y: float) -> float:
        return tangent_angle_sin(self.lam, y)

    def limit_x(self, cfg: QuadConfig | None = None) -> float:
        return d0(self.lam, cfg)

    def sample(self, y_max: float, n: int, cfg: QuadConfig | None = None) -> "CurveSample":
        return sample_curve(self.lam, y_max, n, cfg)


@dataclass(frozen=True)
class CurveSample:
    """One half of a catenary (``x >= 0``) sampled at ``n`` heights, plus its mirror.

    ``half`` runs from the neck outward; :meth:`full` returns the whole curve
    from the left end to the right end with the neck point listed once.
    """

    lam: float
    half: tuple[tuple[HalfDiskPoint, BallPoint], ...]
    arc: tuple[float, ...] = field(repr=False)

    @property
    def mirrored(self) -> tuple[tuple[HalfDiskPoint, BallPoint], ...]:
        return tuple(
            (HalfDiskPoint(-p.x, p.y), BallPoint(-b.u, b.v)) for p, b in self.half
        )

    def full(self) -> list[tuple[HalfDiskPoint, BallPoint]]:
        return list(reversed(self.mirrored[1:])) + list(self.half)

    @property
    def ys(self) -> np.ndarray:
        return np.array([p.y for p, _ in self.half])

    @property
    def xs(self) -> np.ndarray:
        return np.array([p.x for p, _ in self.half])


def sample_curve(lam: float, y_max: float, n: int, cfg: QuadConfig | None = None) -> CurveSample:
    """Sample ``n`` points of the catenary between the neck and ``y_max``.

    Samples are spaced evenly in hyperbolic arc length.  A fine table of arc
    length is built on heights ``lam + s**2`` (uniform in ``s``), inverted by
    linear interpolation in ``s``, and ``x`` is accumulated segment by segment
    at the chosen heights.
    """
    _check(lam, y_max)
    if not y_max > lam:
        raise DomainError("y_max must exceed lambda")
    if n < 2:
        raise DomainError("need at least two samples")

    s_fine = np.linspace(0.0, math.sqrt(y_max - lam), 8 * n + 1)
    u_fine = s_fine**2
    seg = [_segment(_theta, lam, float(a), float(b), cfg) for a, b in zip(u_fine[:-1], u_fine[1:])]
    arc_fine = np.concatenate([[0.0], np.cumsum(seg)])

    targets = np.linspace(0.0, arc_fine[-1], n)
    s = np.interp(targets, arc_fine, s_fine)
    s[0], s[-1] = 0.0, s_fine[-1]
    u = s**2
    ys = lam + u
    ys[-1] = y_max
    xs = profile_x_many(lam, ys, cfg)
    arcs = np.interp(s, s_fine, arc_fine)

    half = tuple(
        (hp, halfdisk_to_ball(hp))
        for hp in (HalfDiskPoint(float(x), float(y)) for x, y in zip(xs, ys))
    )
    return CurveSample(lam=lam, half=half, arc=tuple(float(a) for a in arcs))


@dataclass(frozen=True)
class IntersectionReport:
    """Crossings of two full catenaries, listed as ``(+x, y), (-x, y)`` pairs."""

    lam1: float
    lam2: float
    count: int
    points: tuple[HalfDiskPoint, ...]
    residuals: tuple[float, ...]


def _scan_heights(y0: float, y_max: float, n: int = _SCAN_POINTS) -> np.ndarray:
    span = y_max - y0
    offsets = np.geomspace(1e-7 * span, span, n - 1)
    return np.concatenate([[y0], y0 + offsets])


def intersect(
    lam1: float,
    lam2: float,
    y_search_max: float = DEFAULT_Y_SEARCH_MAX,
    cfg: QuadConfig | None = None,
    *,
    resolution: float = 1e-9,
) -> IntersectionReport:
    """Locate the crossings of the catenaries with necks ``lam1 < lam2``.

    Crossings satisfy ``x(lam1, y) = x(lam2, y)`` for some ``y >= lam2``.  The
    difference is scanned on a geometric grid of 256 heights, each sign change
    refined by :func:`find_root`.  With no sign change but a minimum
    ``|difference| < resolution``, the curves may be tangent and
    :class:`InconclusiveError` is raised.
    """
    if not (math.isfinite(lam1) and lam1 > 0):
        raise DomainError(f"lambda1 must be > 0, got {lam1}")
    if not lam2 > lam1:
        raise DomainError(f"need lambda1 < lambda2, got {lam1}, {lam2}")
    if not y_search_max > lam2:
        raise DomainError("y_search_max must exceed lambda2")

    ys = _scan_heights(lam2, y_search_max)
    diff = profile_x_many(lam1, ys, cfg) - profile_x_many(lam2, ys, cfg)

    def delta(y: float) -> float:
        return profile_x(lam1, y, cfg) - profile_x(lam2, y, cfg)

    points: list[HalfDiskPoint] = []
    residuals: list[float] = []
    for i in range(len(ys) - 1):
        if (diff[i] > 0) != (diff[i + 1] > 0):
            res = find_root(delta, float(ys[i]), float(ys[i + 1]), tol=1e-12)
            y = res.root
            x = profile_x(lam2, y, cfg)
            points += [HalfDiskPoint(x, y), HalfDiskPoint(-x, y)]
            residuals += [res.residual, res.residual]

    if not points and float(np.min(np.abs(diff))) < resolution:
        raise InconclusiveError(
            f"|x1 - x2| drops to {float(np.min(np.abs(diff))):.3g} without changing sign; "
            "possible tangency"
        )
    return IntersectionReport(lam1, lam2, len(points), tuple(points), tuple(residuals))


@dataclass(frozen=True)
class EnvelopeResult:
    """Touching points of the catenary family with its envelope.

    ``points[i]`` belongs to neck ``lambdas[i]``.  Grid necks without a sign
    change of ``dx/dlambda`` are in ``no_touch``; numerical failures are in
    ``failures`` with their messages.
    """

    lambdas: tuple[float, ...]
    points: tuple[HalfDiskPoint, ...]
    no_touch: tuple[float, ...] = ()
    failures: dict[float, str] = field(default_factory=dict)


def dx_dlambda(lam: float, y: float, step: float = 1e-4, cfg: QuadConfig | None = None) -> float:
    """Centred finite difference of ``profile_x`` in ``lam`` at fixed ``y >= lam + step``."""
    return (profile_x(lam + step, y, cfg) - profile_x(lam - step, y, cfg)) / (2 * step)


def _touching_point(
    lam: float, step: float, y_max: float, cfg: QuadConfig | None
) -> HalfDiskPoint | None:
    ys = _scan_heights(lam + 2 * step, y_max)
    d = (profile_x_many(lam + step, ys, cfg) - profile_x_many(lam - step, ys, cfg)) / (2 * step)
    for i in range(len(ys) - 1):
        if d[i] < 0 <= d[i + 1]:
            res = find_root(
                lambda y: dx_dlambda(lam, y, step, cfg), float(ys[i]), float(ys[i + 1]), tol=1e-11
            )
            return HalfDiskPoint(profile_x(lam, res.root, cfg), res.root)
    return None


def envelope(
    lam_lo: float,
    lam_hi: float,
    n_lam: int,
    cfg: QuadConfig | None = None,
    *,
    step: float = 1e-4,
    y_search_max: float = DEFAULT_Y_SEARCH_MAX,
) -> EnvelopeResult:
    """Envelope of the catenaries with necks on ``linspace(lam_lo, lam_hi, n_lam)``.

    For each neck the touching point is where ``dx/dlambda`` at fixed height
    changes sign from negative (near the neck) to positive.  Necks at or above
    Lambda_d have no such point and land in ``no_touch``.
    """
    if not (math.isfinite(lam_lo) and lam_lo > step):
        raise DomainError(f"lambda_lo must exceed the difference step, got {lam_lo}")
    if not lam_hi > lam_lo:
        raise DomainError("need lambda_lo < lambda_hi")
    if n_lam < 3:
        raise DomainError("need at least 3 grid values")

    lams, pts, none, failed = [], [], [], {}
    for lam in np.linspace(lam_lo, lam_hi, n_lam):
        lam = float(lam)
        try:
            p = _touching_point(lam, step, y_search_max, cfg)
        except (CatenoidError, ArithmeticError) as exc:  # one bad neck must not abort the sweep
            failed[lam] = f"{type(exc).__name__}: {exc}"
            continue
        if p is None:
            none.append(lam)
        else:
            lams.append(lam)
            pts.append(p)
    return EnvelopeResult(tuple(lams), tuple(pts), tuple(none), failed)
