"""Quadrature and scalar solvers for the integrand families of the catenoid.

Two kinds of integrals show up everywhere:

* finite integrals whose integrand blows up like ``(t - a)**-0.5`` at the
  lower end point, handled with the substitution ``t = a + s**2``;
* integrals over ``[a, inf)`` whose integrand is dominated by ``C exp(-c t)``,
  handled by truncating where the majorant's tail drops below half the
  absolute tolerance.

The adaptive engine underneath is QUADPACK's QAGS (21-point Gauss-Kronrod
with bisection) via :func:`scipy.integrate.quad`; root finding uses Brent's
method via :func:`scipy.optimize.brentq` with an explicit bracket record.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Literal

import numpy as np
from scipy import integrate, optimize

from .errors import (
    BudgetExceededError,
    ConvergenceError,
    DomainError,
    InvalidBracketError,
    NonDecayingIntegrandError,
)

__all__ = [
    "TailPolicy",
    "QuadConfig",
    "QuadResult",
    "RootResult",
    "integrate_sqrt_singular",
    "integrate_semi_infinite",
    "find_root",
    "expand_bracket",
    "maximize_unimodal",
]

Integrand = Callable[[float], float]

_GK21_POINTS = 21


@dataclass(frozen=True)
class TailPolicy:
    """How :func:`integrate_semi_infinite` picks its cut-off.

    The majorant constant ``C`` in ``|f(t)| <= C exp(-c t)`` is estimated as
    the largest value of ``|f(t)| exp(c t)`` over ``probe_points`` samples of
    ``[a + probe_start, a + probe_start + probe_width]``.  The cut-off ``T*``
    solves ``C exp(-c T*) / c = min(budget_fraction * abs_tol, max_tail)``;
    pushing ``T*`` out costs almost nothing, so ``max_tail`` keeps the
    truncation error negligible even under loose tolerances.  The same probe is
    repeated on ``[T*, T* + probe_width]``; a sample exceeding ``slack * C``
    means the majorant does not hold.
    """

    budget_fraction: float = 0.5
    max_tail: float = 1e-14
    probe_start: float = 1.0
    probe_width: float = 4.0
    probe_points: int = 9
    slack: float = 1.5
    max_cutoff: float = 700.0

    def __post_init__(self) -> None:
        if not 0 < self.budget_fraction < 1:
            raise DomainError("budget_fraction must lie in (0, 1)")
        if not self.max_tail > 0:
            raise DomainError("max_tail must be positive")
        if self.probe_points < 2 or self.probe_width <= 0 or self.probe_start < 0:
            raise DomainError("tail probe window is degenerate")
        if self.slack < 1:
            raise DomainError("slack must be >= 1")


@dataclass(frozen=True)
class QuadConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_evaluations: int = 1_000_000
    tail_cutoff_policy: TailPolicy = field(default_factory=TailPolicy)

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("tolerances must be positive")
        if self.max_evaluations < 100:
            raise DomainError("max_evaluations must be at least 100")


DEFAULT_CONFIG = QuadConfig()


@dataclass(frozen=True)
class QuadResult:
    """Value and error estimate of a quadrature.

    ``cutoff`` and ``tail_bound`` are only set by semi-infinite integration;
    ``tail_bound`` is the analytic majorant of the discarded piece and is
    already included in ``error_estimate``.
    """

    value: float
    error_estimate: float
    evaluations: int
    cutoff: float | None = None
    tail_bound: float = 0.0


def _adaptive(g: Integrand, lo: float, hi: float, cfg: QuadConfig) -> QuadResult:
    limit = max(1, cfg.max_evaluations // _GK21_POINTS)
    out = integrate.quad(
        g, lo, hi, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=limit, full_output=1
    )
    value, err, info = out[0], out[1], out[2]
    neval = int(info["neval"])
    target = max(cfg.abs_tol, cfg.rel_tol * abs(value))
    if not math.isfinite(value):
        raise ConvergenceError(f"quadrature produced a non-finite value on [{lo}, {hi}]")
    if err > target:
        if int(info["last"]) >= limit or neval >= cfg.max_evaluations:
            raise BudgetExceededError(
                f"error estimate {err:.3g} > {target:.3g} after {neval} evaluations"
            )
        msg = out[3] if len(out) > 3 else "error estimate above tolerance"
        raise ConvergenceError(f"quadrature did not converge ({err:.3g} > {target:.3g}): {msg}")
    return QuadResult(value=float(value), error_estimate=float(err), evaluations=neval)


def integrate_sqrt_singular(
    f: Integrand,
    a: float,
    b: float,
    cfg: QuadConfig | None = None,
    *,
    endpoint: Literal["lower", "upper"] = "lower",
) -> QuadResult:
    """Integrate ``f`` over ``[a, b]`` allowing an inverse-square-root singularity.

    The singular end point is ``a`` by default (``endpoint="upper"`` puts it at
    ``b``).  With ``t = a + s**2`` the integrand becomes ``2 s f(a + s**2)``,
    which is bounded whenever ``f(t) sqrt(t - a)`` is; ``f`` is never evaluated
    at the end points themselves.

    Callers that need full relative accuracy right next to the singularity
    should write ``f`` in the shifted variable and pass ``a = 0``, so that the
    offset ``s**2`` is not rounded against ``a``.
    """
    cfg = cfg or DEFAULT_CONFIG
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration limits must be finite")
    if not b > a:
        raise DomainError(f"need a < b, got a={a}, b={b}")
    if endpoint == "lower":
        def g(s: float) -> float:
            return 2.0 * s * f(a + s * s)
    elif endpoint == "upper":
        def g(s: float) -> float:
            return 2.0 * s * f(b - s * s)
    else:
        raise DomainError(f"unknown endpoint {endpoint!r}")
    return _adaptive(g, 0.0, math.sqrt(b - a), cfg)


def _log_envelope(f: Integrand, t: float, rate: float) -> float:
    try:
        v = abs(f(t))
    except (OverflowError, ZeroDivisionError) as exc:
        raise NonDecayingIntegrandError(f"integrand failed at t={t}: {exc}") from exc
    if math.isnan(v) or math.isinf(v):
        raise NonDecayingIntegrandError(f"integrand is not finite at t={t}")
    return -math.inf if v == 0 else math.log(v) + rate * t


def integrate_semi_infinite(
    f: Integrand,
    a: float,
    cfg: QuadConfig | None = None,
    *,
    decay_rate: float = 1.0,
) -> QuadResult:
    """Integrate ``f`` over ``[a, inf)`` given ``|f(t)| <= C exp(-decay_rate t)``.

    The caller supplies the decay rate; the constant ``C`` and the validity of
    the majorant are checked empirically (see :class:`TailPolicy`).  The finite
    part ``[a, T*]`` goes through :func:`integrate_sqrt_singular`, so an
    inverse-square-root singularity at ``a`` is allowed.
    """
    cfg = cfg or DEFAULT_CONFIG
    pol = cfg.tail_cutoff_policy
    if not decay_rate > 0:
        raise DomainError("decay_rate must be positive")
    if not math.isfinite(a):
        raise DomainError("lower limit must be finite")

    t0 = a + pol.probe_start
    probes = np.linspace(t0, t0 + pol.probe_width, pol.probe_points)
    log_c = max(_log_envelope(f, float(t), decay_rate) for t in probes)
    budget = min(pol.budget_fraction * cfg.abs_tol, pol.max_tail)

    if log_c == -math.inf:
        cutoff = t0
        tail = 0.0
    else:
        cutoff = max(t0, (log_c - math.log(decay_rate * budget)) / decay_rate)
        if cutoff - a > pol.max_cutoff:
            raise NonDecayingIntegrandError(
                f"cut-off {cutoff:.4g} exceeds max_cutoff; integrand decays too slowly"
            )
        check = np.linspace(cutoff, cutoff + pol.probe_width, pol.probe_points)
        log_check = max(_log_envelope(f, float(t), decay_rate) for t in check)
        if log_check > log_c + math.log(pol.slack):
            raise NonDecayingIntegrandError(
                f"|f| exp({decay_rate} t) grew from {math.exp(log_c):.4g} to "
                f"{math.exp(log_check):.4g} beyond the cut-off {cutoff:.4g}"
            )
        tail = math.exp(log_c - decay_rate * cutoff) / decay_rate

    inner = replace(cfg, abs_tol=(1.0 - pol.budget_fraction) * cfg.abs_tol)
    finite = integrate_sqrt_singular(f, a, cutoff, inner)
    return QuadResult(
        value=finite.value,
        error_estimate=finite.error_estimate + tail,
        evaluations=finite.evaluations + 2 * pol.probe_points,
        cutoff=cutoff,
        tail_bound=tail,
    )


@dataclass(frozen=True)
class RootResult:
    """Outcome of :func:`find_root`.

    ``bracket_widths`` lists the width of the tightest sign-change bracket
    known after each function evaluation.
    """

    root: float
    residual: float
    bracket: tuple[float, float]
    bracket_widths: tuple[float, ...]
    evaluations: int

    def __float__(self) -> float:
        return self.root


def find_root(g: Integrand, lo: float, hi: float, tol: float = 1e-12) -> RootResult:
    """Bracketed root of ``g`` on ``[lo, hi]`` with final bracket width ``<= tol``."""
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise DomainError("tol must be positive")
    glo, ghi = g(lo), g(hi)
    if glo == 0:
        return RootResult(lo, 0.0, (lo, lo), (0.0,), 2)
    if ghi == 0:
        return RootResult(hi, 0.0, (hi, hi), (0.0,), 2)
    if not (math.isfinite(glo) and math.isfinite(ghi)) or (glo > 0) == (ghi > 0):
        raise InvalidBracketError(f"g({lo})={glo} and g({hi})={ghi} do not straddle zero")

    state = {"lo": lo, "hi": hi, "n": 2}
    seen: dict[float, float] = {lo: glo, hi: ghi}
    widths = [hi - lo]
    lo_positive = glo > 0

    def record(x: float) -> float:
        gx = g(x)
        seen[x] = gx
        state["n"] += 1
        if gx == 0:
            state["lo"] = state["hi"] = x
        elif state["lo"] < x < state["hi"]:
            if (gx > 0) == lo_positive:
                state["lo"] = x
            else:
                state["hi"] = x
        widths.append(state["hi"] - state["lo"])
        return gx

    try:
        root = optimize.brentq(record, lo, hi, xtol=0.5 * tol, maxiter=500)
    except RuntimeError as exc:
        raise ConvergenceError(str(exc)) from exc

    # safeguard: finish by bisection if the recorded bracket is still too wide
    while state["hi"] - state["lo"] > tol:
        record(0.5 * (state["lo"] + state["hi"]))
    if not state["lo"] <= root <= state["hi"]:
        root = 0.5 * (state["lo"] + state["hi"])
    residual = abs(seen[root]) if root in seen else abs(g(root))
    return RootResult(
        root=float(root),
        residual=float(residual),
        bracket=(state["lo"], state["hi"]),
        bracket_widths=tuple(widths),
        evaluations=state["n"],
    )


def expand_bracket(
    g: Integrand,
    lo: float,
    hi: float,
    *,
    factor: float = 1.6,
    floor: float = -math.inf,
    max_steps: int = 40,
) -> tuple[float, float]:
    """Widen ``[lo, hi]`` geometrically about its centre until ``g`` changes sign.

    The lower end never goes below ``floor``.
    """
    a, b = lo, hi
    for _ in range(max_steps + 1):
        ga, gb = g(a), g(b)
        if math.isfinite(ga) and math.isfinite(gb) and (ga > 0) != (gb > 0):
            return a, b
        mid, half = 0.5 * (a + b), 0.5 * (b - a) * factor
        a, b = max(floor, mid - half), mid + half
    raise InvalidBracketError(f"no sign change found around [{lo}, {hi}]")


def maximize_unimodal(
    g: Integrand, lo: float, hi: float, tol: float = 1e-8
) -> tuple[float, float]:
    """Return ``(argmax, max)`` of a unimodal ``g`` on ``[lo, hi]``.

    Brent's golden-section/parabolic search on ``-g``.  Unimodality is the
    caller's promise; it is not checked.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    res = optimize.minimize_scalar(
        lambda x: -g(x), bounds=(lo, hi), method="bounded", options={"xatol": tol}
    )
    if not res.success:
        raise ConvergenceError(f"maximization failed: {res.message}")
    return float(res.x), float(-res.fun)
