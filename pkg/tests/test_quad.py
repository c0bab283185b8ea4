import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catenoid.errors import (
    BudgetExceededError,
    DomainError,
    InvalidBracketError,
    NonDecayingIntegrandError,
)
from catenoid.quad import (
    QuadConfig,
    TailPolicy,
    expand_bracket,
    find_root,
    integrate_semi_infinite,
    integrate_sqrt_singular,
    maximize_unimodal,
)

import oracle

SQRT_SINGULAR_EXAMPLE = 1.22694287070228845061910442814
EXP_COSH_TAIL = 0.0361232756702449455102146264023

# integrals of the two families with known closed forms: (f, a, b, value)
CLOSED_FORM_FINITE = [
    (lambda t: t ** -0.5, 0.0, 1.0, 2.0),
    (lambda t: 1 / math.sqrt(1 - t * t), 0.0, 1.0, math.pi / 2),
    (lambda t: 1 / math.sqrt(t * (1 - t)), 0.0, 0.5, math.pi / 2),
    (lambda t: math.cos(t) / math.sqrt(t), 0.0, 1.0, 1.8090484758005438),
    (lambda t: math.log(1 + t) / math.sqrt(t), 0.0, 1.0, 2 * math.log(2) - 4 + math.pi),
    (lambda t: math.sqrt(t), 0.0, 4.0, 16.0 / 3.0),
    (lambda t: 1 / math.sqrt(t - 1), 1.0, 5.0, 4.0),
    (lambda t: math.exp(-t) / math.sqrt(t), 0.0, 1.0, math.sqrt(math.pi) * math.erf(1.0)),
]
CLOSED_FORM_TAIL = [
    (lambda t: math.exp(-t), 0.0, 1.0, 1.0),
    (lambda t: math.exp(-2 * t) / math.sqrt(-math.expm1(-4 * t)), 0.0, 2.0, math.pi / 4),
    (lambda t: math.exp(-3 * t) * math.cosh(t), 1.0, 2.0, EXP_COSH_TAIL),
    (lambda t: math.exp(-t) / math.sqrt(t), 0.0, 1.0, math.sqrt(math.pi)),
    (lambda t: t * math.exp(-t), 0.0, 0.5, 1.0),
    (lambda t: 1 / math.cosh(t) ** 2, 0.0, 2.0, 1.0),
    (lambda t: 1 / math.cosh(t), 0.0, 1.0, math.pi / 2),
]


@pytest.mark.parametrize("f, a, b, value", CLOSED_FORM_FINITE)
def test_sqrt_singular_closed_forms(f, a, b, value):
    assert integrate_sqrt_singular(f, a, b).value == pytest.approx(value, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("f, a, rate, value", CLOSED_FORM_TAIL)
def test_semi_infinite_closed_forms(f, a, rate, value):
    res = integrate_semi_infinite(f, a, decay_rate=rate)
    assert res.value == pytest.approx(value, rel=1e-10, abs=1e-12)
    assert res.cutoff is not None and res.tail_bound < 0.5e-12


def test_upper_endpoint_singularity():
    res = integrate_sqrt_singular(lambda t: 1 / math.sqrt(1 - t), 0.0, 1.0, endpoint="upper")
    assert res.value == pytest.approx(2.0, rel=1e-12)


def test_frozen_oracle_values():
    assert SQRT_SINGULAR_EXAMPLE == pytest.approx(float(oracle.sqrt_singular_example()), rel=1e-15)
    assert EXP_COSH_TAIL == pytest.approx(float(oracle.exp_cosh_tail()), rel=1e-15)


def test_sqrt_singular_example():
    def f(t):
        d = math.sinh(2 * t - 1) * math.sinh(2 * t + 1)
        return math.sinh(2 * t) / (math.sqrt(d) * math.cosh(t)) if d > 0 else math.inf

    assert integrate_sqrt_singular(f, 0.5, 3.0).value == pytest.approx(SQRT_SINGULAR_EXAMPLE, rel=1e-10)


def test_result_fields():
    res = integrate_sqrt_singular(lambda t: t ** -0.5, 0.0, 1.0)
    assert res.error_estimate >= 0 and res.evaluations > 0


def test_tightening_does_not_hurt():
    f = lambda t: math.exp(-2 * t) / math.sqrt(-math.expm1(-4 * t))
    prev = math.inf
    for k in range(4, 13, 2):
        cfg = QuadConfig(abs_tol=10.0 ** -k, rel_tol=10.0 ** -k)
        err = abs(integrate_semi_infinite(f, 0.0, cfg, decay_rate=2.0).value - math.pi / 4)
        # allow for roundoff once both are at the floor
        assert err <= max(prev, 1e-15)
        prev = err


def test_domain_errors():
    with pytest.raises(DomainError):
        integrate_sqrt_singular(math.sqrt, 1.0, 1.0)
    with pytest.raises(DomainError):
        integrate_sqrt_singular(math.sqrt, 0.0, math.inf)
    with pytest.raises(DomainError):
        QuadConfig(abs_tol=0.0)
    with pytest.raises(DomainError):
        QuadConfig(max_evaluations=10)
    with pytest.raises(DomainError):
        TailPolicy(budget_fraction=1.5)


def test_budget_exceeded():
    cfg = QuadConfig(abs_tol=1e-15, rel_tol=1e-15, max_evaluations=100)
    with pytest.raises(BudgetExceededError):
        integrate_sqrt_singular(lambda t: math.sin(1 / (t + 1e-3)), 0.0, 1.0, cfg)


def test_non_decaying_detected():
    with pytest.raises(NonDecayingIntegrandError):
        integrate_semi_infinite(lambda t: 1 / (1 + t), 0.0)
    with pytest.raises(NonDecayingIntegrandError):
        integrate_semi_infinite(lambda t: math.exp(-0.5 * t), 0.0, decay_rate=1.0)


def test_find_root_sqrt2():
    res = find_root(lambda x: x * x - 2, 1.0, 2.0, tol=1e-12)
    assert abs(res.root - math.sqrt(2)) < 1e-12
    assert res.bracket[1] - res.bracket[0] <= 1e-12 or res.residual == 0


@given(st.floats(-10, 10), st.floats(0.1, 5))
def test_bracket_shrinks_monotonically(c, w):
    res = find_root(lambda x: math.tanh(x - c), c - w, c + 1.3 * w, tol=1e-10)
    widths = res.bracket_widths
    assert all(b <= a for a, b in zip(widths, widths[1:]))
    assert abs(res.root - c) < 1e-9


def test_find_root_invalid_bracket():
    with pytest.raises(InvalidBracketError):
        find_root(lambda x: x * x + 1, -1.0, 1.0)
    with pytest.raises(DomainError):
        find_root(lambda x: x, 1.0, -1.0)


def test_expand_bracket():
    a, b = expand_bracket(lambda x: x - 10.0, 0.0, 1.0, floor=0.0)
    assert a >= 0 and a < 10 < b
    with pytest.raises(InvalidBracketError):
        expand_bracket(lambda x: 1.0, 0.0, 1.0, max_steps=5)


def test_maximize_unimodal():
    x, v = maximize_unimodal(lambda x: -(x - 0.3) ** 2 + 2, 0.0, 1.0, tol=1e-10)
    assert x == pytest.approx(0.3, abs=1e-8)
    assert v == pytest.approx(2.0, abs=1e-14)
