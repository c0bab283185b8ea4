"""Area comparison between catenoid bands and geodesic caps.

A symmetric band of the catenoid with neck ``lam``, cut off where its
boundary circles have radius ``y1``, has area

    band(lam, y1) = 4 pi int_lam^y1 sinh t sinh 2t / sqrt(sinh(2t)**2 - sinh(2 lam)**2) dt,

and the two totally geodesic disks bounded by the same circles have total
area ``4 pi (cosh y1 - 1)``.  Subtracting ``4 pi sinh t`` under the integral
gives the decomposition

    band(lam, y1) = 4 pi (cosh y1 - cosh lam) + 4 pi F(lam, y1),

with ``F(lam, y1) -> f(lam)`` as ``y1 -> inf``.  The band is smaller than
the caps whenever ``F < cosh lam - 1``, which holds for every ``y1`` once
``f(lam) < g(lam) = cosh lam - 1``; this is guaranteed from
``lam >= Lambda0 = arccosh(1 / (1 - K))`` on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .hgeom import geodesic_disk_area
from .quad import QuadConfig, integrate_semi_infinite, integrate_sqrt_singular

__all__ = [
    "AreaComparison",
    "LeastAreaConstants",
    "theta",
    "theta_minus_one",
    "f_area_difference",
    "partial_f",
    "g_cap",
    "K_constant",
    "comparison_integral",
    "lambda0",
    "least_area_constants",
    "band_area",
    "band_area_identity",
    "caps_area",
    "compare",
]

_FOUR_PI = 4.0 * math.pi


def _check_lambda(lam: float) -> None:
    if not (math.isfinite(lam) and lam > 0):
        raise DomainError(f"neck parameter must be > 0, got {lam}")


def theta(u: float, lam: float) -> float:
    """``sinh(2u + 2lam) / sqrt(sinh(2u + 2lam)**2 - sinh(2lam)**2)``, i.e. ``1/cos`` of the slice angle."""
    if u <= 0:
        return math.inf
    return math.sinh(2 * u + 2 * lam) / math.sqrt(math.sinh(2 * u) * math.sinh(2 * u + 4 * lam))


def theta_minus_one(u: float, lam: float) -> float:
    """``theta(u, lam) - 1`` without cancellation.

    Uses ``sinh(2u+2lam)**2 - sinh(2u) sinh(2u+4lam) = sinh(2lam)**2``.
    """
    if u <= 0:
        return math.inf
    root = math.sqrt(math.sinh(2 * u) * math.sinh(2 * u + 4 * lam))
    return math.sinh(2 * lam) ** 2 / (root * (math.sinh(2 * u + 2 * lam) + root))


def _f_integrand(u: float, lam: float) -> float:
    return math.sinh(u + lam) * theta_minus_one(u, lam)


def f_area_difference(lam: float, cfg: QuadConfig | None = None) -> float:
    """``f(lam) = int_lam^inf sinh t (theta - 1) dt``.

    ``2 pi f`` is the excess of one half of the catenoid over the flat
    annulus it is asymptotic to.
    """
    _check_lambda(lam)
    return integrate_semi_infinite(lambda u: _f_integrand(u, lam), 0.0, cfg, decay_rate=1.0).value


def partial_f(lam: float, y1: float, cfg: QuadConfig | None = None) -> float:
    """The integral defining ``f`` truncated at ``t = y1``."""
    _check_lambda(lam)
    if not y1 >= lam:
        raise DomainError(f"need y1 >= lambda, got y1={y1}, lambda={lam}")
    if y1 == lam:
        return 0.0
    return integrate_sqrt_singular(lambda u: _f_integrand(u, lam), 0.0, y1 - lam, cfg).value


def g_cap(lam: float) -> float:
    """``g(lam) = cosh lam - 1``, evaluated as ``2 sinh(lam/2)**2``."""
    if math.isnan(lam) or lam < 0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    return 2.0 * math.sinh(0.5 * lam) ** 2


def _k_integrand(w: float) -> float:
    # (1/x^2)(1/sqrt(1-x^4) - 1) = 1 / (sqrt(1-x^4) (1 + sqrt(1-x^4))) with x = 1 - w
    if w <= 0:
        return math.inf
    x = 1.0 - w
    root = math.sqrt(w * (1.0 + x) * (1.0 + x * x))
    return x * x / (root * (1.0 + root))


def _comparison_integrand(w: float) -> float:
    # (1/x^2)(1/sqrt(1-x^2) - 1) = 1 / (sqrt(1-x^2) (1 + sqrt(1-x^2))) with x = 1 - w
    if w <= 0:
        return math.inf
    x = 1.0 - w
    root = math.sqrt(w * (1.0 + x))
    return 1.0 / (root * (1.0 + root))


def K_constant(cfg: QuadConfig | None = None) -> float:
    """``K = int_0^1 x**-2 (1/sqrt(1 - x**4) - 1) dx``.

    The singularity sits at ``x = 1``; the integrand is written in
    ``w = 1 - x`` and integrated with the square-root substitution at ``w = 0``.
    """
    return integrate_sqrt_singular(_k_integrand, 0.0, 1.0, cfg).value


def comparison_integral(cfg: QuadConfig | None = None) -> float:
    """``int_0^1 x**-2 (1/sqrt(1 - x**2) - 1) dx``, which equals 1 and dominates ``K``."""
    return integrate_sqrt_singular(_comparison_integrand, 0.0, 1.0, cfg).value


def lambda0(cfg: QuadConfig | None = None, K: float | None = None) -> float:
    """Least-area threshold ``arccosh(1 / (1 - K))``."""
    k = K_constant(cfg) if K is None else K
    return math.acosh(1.0 / (1.0 - k))


@dataclass(frozen=True)
class LeastAreaConstants:
    K: float
    Lambda0: float

    def __post_init__(self) -> None:
        if not 0 < self.K < 1:
            raise DomainError(f"K must lie in (0, 1), got {self.K}")


def least_area_constants(cfg: QuadConfig | None = None) -> LeastAreaConstants:
    k = K_constant(cfg)
    return LeastAreaConstants(K=k, Lambda0=lambda0(K=k))


def band_area(lam: float, y1: float, cfg: QuadConfig | None = None) -> float:
    """Area of the catenoid band between its neck circle ``lam`` and boundary radius ``y1``, both halves."""
    _check_lambda(lam)
    if not y1 >= lam:
        raise DomainError(f"need y1 >= lambda, got y1={y1}, lambda={lam}")
    if y1 == lam:
        return 0.0
    integral = integrate_sqrt_singular(
        lambda u: math.sinh(u + lam) * theta(u, lam), 0.0, y1 - lam, cfg
    )
    return _FOUR_PI * integral.value


def band_area_identity(lam: float, y1: float, cfg: QuadConfig | None = None) -> float:
    """``4 pi (cosh y1 - cosh lam) + 4 pi partial_f(lam, y1)``."""
    return _identity(lam, y1, partial_f(lam, y1, cfg))


def _identity(lam: float, y1: float, pf: float) -> float:
    # cosh y1 - cosh lam = 2 sinh((y1 + lam)/2) sinh((y1 - lam)/2)
    dc = 2.0 * math.sinh(0.5 * (y1 + lam)) * math.sinh(0.5 * (y1 - lam))
    return _FOUR_PI * (dc + pf)


def caps_area(y1: float) -> float:
    """Total area of the two geodesic caps of radius ``y1``."""
    return 2.0 * geodesic_disk_area(y1)


@dataclass(frozen=True)
class AreaComparison:
    """Band versus caps for one ``(lam, y1)``.

    ``margin = caps_area - band_area`` from the direct band integral;
    ``margin_identity = 4 pi (cosh lam - 1 - partial_f)`` from the
    decomposition.  Both routes are computed independently.
    """

    lam: float
    y1: float
    band_area: float
    band_area_identity: float
    caps_area: float
    margin: float
    margin_identity: float

    @property
    def identity_rel_error(self) -> float:
        return abs(self.band_area - self.band_area_identity) / abs(self.band_area)


def compare(lam: float, y1: float, cfg: QuadConfig | None = None) -> AreaComparison:
    _check_lambda(lam)
    if not y1 > lam:
        raise DomainError(f"need y1 > lambda, got y1={y1}, lambda={lam}")
    band = band_area(lam, y1, cfg)
    caps = caps_area(y1)
    pf = partial_f(lam, y1, cfg)
    return AreaComparison(
        lam=lam,
        y1=y1,
        band_area=band,
        band_area_identity=_identity(lam, y1, pf),
        caps_area=caps,
        margin=caps - band,
        margin_identity=_FOUR_PI * (g_cap(lam) - pf),
    )
