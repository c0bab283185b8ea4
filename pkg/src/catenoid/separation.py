"""Boundary separation of spherical catenoids and its critical structure.

``d0(lam)`` is half the distance between the two planes spanned by the
asymptotic boundary circles of the catenoid with neck radius ``lam``:

    d0(lam) = int_lam^inf sinh(2 lam) / (cosh t sqrt(sinh(2t)**2 - sinh(2 lam)**2)) dt.

All integrals are evaluated in the shifted variable ``u = t - lam`` and with
``sinh(a)**2 - sinh(b)**2 = sinh(a - b) sinh(a + b)``, which moves the
inverse-square-root singularity to ``u = 0`` and removes the cancellation in
the radicand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar, Iterable, Literal

from .errors import DomainError, InvalidBracketError, NoSolutionError
from .hgeom import CirclePairSeparation
from .quad import (
    QuadConfig,
    expand_bracket,
    find_root,
    integrate_semi_infinite,
    maximize_unimodal,
)

__all__ = [
    "SQRT5",
    "LAMBDA5",
    "profile_integrand",
    "d0",
    "d0_upper_bound",
    "d0_prime",
    "integrand_h",
    "phi",
    "h_of_lambda",
    "r_factor",
    "dh_dlambda_from_r",
    "w1",
    "w2",
    "RVariantCheck",
    "check_r_variant",
    "CriticalConstants",
    "critical_constants",
    "SeparationProfile",
    "separation_profile",
    "BoundarySolution",
    "solve_boundary_separation",
]

SQRT5 = math.sqrt(5.0)
_LN5 = math.log(5.0)
LAMBDA5 = 0.5 * _LN5

RVariant = Literal["sinh", "sin"]


def _check_lambda(lam: float, *, allow_zero: bool = False) -> None:
    if not math.isfinite(lam) or lam < 0 or (lam == 0 and not allow_zero):
        raise DomainError(f"neck parameter must be {'>=' if allow_zero else '>'} 0, got {lam}")


def profile_integrand(u: float, lam: float) -> float:
    """``sinh(2 lam) / (cosh(u + lam) sqrt(sinh(2u) sinh(2u + 4 lam)))``; infinite at ``u = 0``."""
    if u <= 0:
        return math.inf
    return math.sinh(2 * lam) / (
        math.cosh(u + lam) * math.sqrt(math.sinh(2 * u) * math.sinh(2 * u + 4 * lam))
    )


def d0(lam: float, cfg: QuadConfig | None = None) -> float:
    """Half the asymptotic boundary separation of the catenoid with neck ``lam``.

    ``d0(0)`` is the limit value 0 and is returned without quadrature.
    """
    _check_lambda(lam, allow_zero=True)
    if lam == 0:
        return 0.0
    res = integrate_semi_infinite(lambda u: profile_integrand(u, lam), 0.0, cfg, decay_rate=2.0)
    return res.value


def d0_upper_bound(lam: float) -> float:
    """``pi / (4 cosh lam)``, an upper bound for ``d0``."""
    if math.isnan(lam) or lam < 0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    e = math.exp(-lam)
    return 0.5 * math.pi * e / (1.0 + e * e)


def integrand_h(u: float, lam: float) -> float:
    """Integrand of ``d0'``, written in the shifted variable ``u``.

    ``sinh(u+lam) (5 cosh(u+lam)**2 - cosh(u+3lam)**2)
    / (cosh(u+lam)**2 sqrt(sinh 2u) sqrt(sinh(2u+4lam)**3))``
    """
    if u <= 0:
        return math.inf
    c1 = math.cosh(u + lam)
    c3 = math.cosh(u + 3 * lam)
    s = math.sinh(2 * u + 4 * lam)
    return (
        math.sinh(u + lam)
        * (5 * c1 * c1 - c3 * c3)
        / (c1 * c1 * math.sqrt(math.sinh(2 * u)) * s * math.sqrt(s))
    )


def d0_prime(lam: float, cfg: QuadConfig | None = None) -> float:
    """Derivative of :func:`d0`, by quadrature of :func:`integrand_h`."""
    _check_lambda(lam)
    res = integrate_semi_infinite(lambda u: integrand_h(u, lam), 0.0, cfg, decay_rate=2.0)
    return res.value


def phi(t: float, lam: float) -> float:
    """``sqrt(5) cosh(t + lam) - cosh(t + 3 lam)``; the sign of the ``d0'`` integrand."""
    return SQRT5 * math.cosh(t + lam) - math.cosh(t + 3 * lam)


def h_of_lambda(lam: float) -> float:
    """``(sqrt5 cosh lam - cosh 3lam) / (sinh 3lam - sqrt5 sinh lam)``.

    ``phi(t, lam) > 0`` exactly when ``h_of_lambda(lam) > tanh t``.  The
    denominator vanishes only at 0, where the numerator tends to
    ``sqrt5 - 1 > 0``, so ``h_of_lambda(0)`` returns ``inf``.
    """
    _check_lambda(lam, allow_zero=True)
    if lam == 0:
        return math.inf
    return (SQRT5 * math.cosh(lam) - math.cosh(3 * lam)) / (
        math.sinh(3 * lam) - SQRT5 * math.sinh(lam)
    )


def r_factor(t: float, lam: float, variant: RVariant = "sinh") -> float:
    """Numerator ``r(t, lam)`` of the lambda-derivative of :func:`integrand_h`.

    ``variant="sin"`` reproduces the printed formula literally, with ``sin``
    in the ``2t + 8 lam`` term; ``"sinh"`` is the corrected one (see
    :func:`check_r_variant`).
    """
    if variant == "sinh":
        odd = math.sinh(2 * t + 8 * lam)
    elif variant == "sin":
        odd = math.sin(2 * t + 8 * lam)
    else:
        raise DomainError(f"unknown r-factor variant {variant!r}")
    sh = math.sinh
    return (
        76 * sh(2 * lam)
        - 22 * sh(2 * t)
        + 29 * sh(2 * t + 4 * lam)
        + odd
        - 26 * sh(4 * t + 6 * lam)
        - 6 * sh(4 * t + 10 * lam)
        - 25 * sh(6 * t + 8 * lam)
        + sh(6 * t + 12 * lam)
    )


def dh_dlambda_from_r(t: float, lam: float, variant: RVariant = "sinh") -> float:
    """``r / (16 cosh(t+lam)**3 sqrt(sinh 2t) sqrt(sinh(2t+4lam)**5))``."""
    s = math.sinh(2 * t + 4 * lam)
    den = 16 * math.cosh(t + lam) ** 3 * math.sqrt(math.sinh(2 * t)) * s * s * math.sqrt(s)
    return r_factor(t, lam, variant) / den


def w1(lam: float) -> float:
    """Closed form of ``r(0, lam)``."""
    c = math.cosh
    return (
        8 * math.sinh(2 * lam) * c(lam) ** 2
        * (15 - 8 * c(2 * lam) - 8 * c(4 * lam) - 8 * c(6 * lam) + c(8 * lam))
    )


def w2(lam: float) -> float:
    """``exp(12 lam) - 25 exp(8 lam)``, the leading coefficient of ``r`` as ``t -> inf``.

    Written as ``25 exp(8 lam) expm1(4 lam - 2 ln 5)`` so it vanishes exactly
    at ``LAMBDA5``.
    """
    return 25.0 * math.exp(8 * lam) * math.expm1(4 * lam - 2 * _LN5)


@dataclass(frozen=True)
class RVariantCheck:
    variant: str
    negative_on_grid: bool
    max_r: float
    matches_derivative: bool
    max_derivative_rel_error: float
    grid_points: int


def check_r_variant(
    variant: RVariant,
    *,
    t_max: float = 10.0,
    n_t: int = 101,
    n_lam: int = 81,
    fd_step: float = 1e-5,
    fd_rel_tol: float = 1e-5,
) -> RVariantCheck:
    """Test a variant of ``r`` on ``[0, t_max] x [0, LAMBDA5)``.

    Two checks: ``r < 0`` at every grid node except the origin, where every
    term vanishes; and ``r / (16 ...)`` agrees with a centred finite difference
    of :func:`integrand_h` in ``lam`` on a coarser sub-grid with ``t > 0``.
    """
    ts = [t_max * i / (n_t - 1) for i in range(n_t)]
    lams = [LAMBDA5 * j / n_lam for j in range(n_lam)]  # excludes LAMBDA5 itself
    max_r = -math.inf
    for t in ts:
        for lam in lams:
            if t == 0 and lam == 0:
                continue
            max_r = max(max_r, r_factor(t, lam, variant))

    worst = 0.0
    for t in ts[1::10]:
        for lam in lams[1::8]:
            fd = (integrand_h(t, lam + fd_step) - integrand_h(t, lam - fd_step)) / (2 * fd_step)
            an = dh_dlambda_from_r(t, lam, variant)
            worst = max(worst, abs(an - fd) / max(abs(fd), 1e-300))
    return RVariantCheck(
        variant=variant,
        negative_on_grid=max_r < 0,
        max_r=max_r,
        matches_derivative=worst < fd_rel_tol,
        max_derivative_rel_error=worst,
        grid_points=n_t * n_lam - 1,
    )


@dataclass(frozen=True)
class CriticalConstants:
    """Located critical points of ``d0`` together with literature reference values."""

    lambda3: float
    lambda4: float
    lambda5: float
    lambda_d: float
    d0_max: float
    D0: float

    lambda1_literature: ClassVar[float] = 0.46288
    lambda_d_published: ClassVar[float] = 0.4955
    d0_max_published: ClassVar[float] = 0.501143


def critical_constants(cfg: QuadConfig | None = None, tol: float = 1e-12) -> CriticalConstants:
    """Compute Lambda_3, Lambda_4, Lambda_5 and the maximum of ``d0``.

    * Lambda_3 solves ``h_of_lambda = 1``;
    * Lambda_4 solves ``sqrt5 cosh lam = cosh 3lam``;
    * Lambda_5 = ln(5)/2 is the zero of :func:`w2`;
    * Lambda_d and ``d0_max`` come from maximizing ``d0`` on ``[0.01, 2]``.
    """
    g3 = lambda lam: h_of_lambda(lam) - 1.0
    g4 = lambda lam: phi(0.0, lam)
    lambda3 = find_root(g3, *expand_bracket(g3, 0.3, 0.5, floor=1e-6), tol=tol).root
    lambda4 = find_root(g4, *expand_bracket(g4, 0.4, 0.7, floor=1e-6), tol=tol).root
    lambda_d, d0_max = maximize_unimodal(lambda lam: d0(lam, cfg), 0.01, 2.0, tol=1e-9)
    return CriticalConstants(
        lambda3=lambda3,
        lambda4=lambda4,
        lambda5=LAMBDA5,
        lambda_d=lambda_d,
        d0_max=d0_max,
        D0=2.0 * d0_max,
    )


@dataclass(frozen=True)
class SeparationProfile:
    """Tabulated ``(lam, d0, d0')`` rows plus the located maximum."""

    grid: tuple[tuple[float, float, float], ...]
    lambda_d: float
    d0_max: float
    D0: float


def separation_profile(
    lambdas: Iterable[float],
    cfg: QuadConfig | None = None,
    constants: CriticalConstants | None = None,
) -> SeparationProfile:
    """Tabulate ``d0`` and ``d0'`` on a grid of positive ``lam``, sorted ascending."""
    consts = constants or critical_constants(cfg)
    rows = tuple((lam, d0(lam, cfg), d0_prime(lam, cfg)) for lam in sorted(lambdas))
    return SeparationProfile(rows, consts.lambda_d, consts.d0_max, consts.D0)


@dataclass(frozen=True)
class BoundarySolution:
    """Necks of the two catenoids spanning a circle pair.

    ``degenerate`` is set when ``d_L`` equals ``D0`` and both necks coincide
    at ``Lambda_d``.
    """

    d_L: float
    lambda1: float
    lambda2: float
    residual1: float
    residual2: float
    degenerate: bool = False


def solve_boundary_separation(
    d_L: float | CirclePairSeparation,
    cfg: QuadConfig | None = None,
    constants: CriticalConstants | None = None,
    *,
    tol: float = 1e-13,
    degenerate_tol: float = 1e-12,
) -> BoundarySolution:
    """Find ``lam1 < Lambda_d < lam2`` with ``d0(lam1) = d0(lam2) = d_L / 2``."""
    sep = d_L if isinstance(d_L, CirclePairSeparation) else CirclePairSeparation(float(d_L))
    consts = constants or critical_constants(cfg)
    target = 0.5 * sep.d_L
    lam_d = consts.lambda_d

    if abs(sep.d_L - consts.D0) <= degenerate_tol:
        res = abs(d0(lam_d, cfg) - target)
        return BoundarySolution(sep.d_L, lam_d, lam_d, res, res, degenerate=True)
    if sep.d_L > consts.D0:
        raise NoSolutionError(
            f"d_L={sep.d_L} exceeds D0={consts.D0:.12g}; no catenoid spans this circle pair"
        )

    g = lambda lam: d0(lam, cfg) - target
    if g(lam_d) <= 0:
        # d_L is below D0 only within quadrature noise of the maximum
        res = abs(g(lam_d))
        return BoundarySolution(sep.d_L, lam_d, lam_d, res, res, degenerate=True)

    lo = min(1e-2, 0.5 * lam_d)
    while g(lo) >= 0:
        lo *= 0.5
        if lo < 1e-300:
            raise InvalidBracketError("could not bracket the small-neck root")
    hi = 2.0 * lam_d
    while g(hi) >= 0:
        hi *= 2.0
        if hi > 300:
            raise InvalidBracketError("could not bracket the large-neck root")

    r1 = find_root(g, lo, lam_d, tol=tol)
    r2 = find_root(g, lam_d, hi, tol=tol)
    return BoundarySolution(sep.d_L, r1.root, r2.root, r1.residual, r2.residual)
