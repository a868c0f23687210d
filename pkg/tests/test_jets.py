import math
import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from lcmgamma.errors import DomainError
from lcmgamma.jets import (
    MAX_ORDER,
    Jet,
    jet_atan,
    jet_const,
    jet_div,
    jet_exp,
    jet_lngamma1p,
    jet_ln,
    jet_mul,
    jet_pow,
    jet_sqrt,
    jet_var,
)
from lcmgamma.specfun import EULER_GAMMA, digamma, polygamma, zeta_int


def J(*coeffs, center=0.0):
    return Jet(center, coeffs)


def close(a, b, rel=1e-13, abs_=1e-15):
    return all(math.isclose(u, v, rel_tol=rel, abs_tol=abs_) for u, v in zip(a, b)) and len(a) == len(b)


# -- construction -----------------------------------------------------------


def test_jet_var_examples():
    assert jet_var(3, 2).coeffs == (3.0, 1.0, 0.0)
    assert jet_var(0, 0).coeffs == (0.0,)
    assert jet_var(-0.5, 4).coeffs == (-0.5, 1.0, 0.0, 0.0, 0.0)


def test_order_limits():
    jet_var(1.0, MAX_ORDER)
    with pytest.raises(DomainError):
        jet_var(1.0, MAX_ORDER + 1)
    with pytest.raises(DomainError):
        jet_var(1.0, -1)
    with pytest.raises(DomainError):
        J(1.0, math.nan)


def test_derivative_extraction():
    a = J(1.0, 2.0, 3.0, 4.0)
    assert a.derivatives() == [1.0, 2.0, 6.0, 24.0]
    assert a.derivative(3) == 24.0


# -- arithmetic -------------------------------------------------------------


def test_mul_examples():
    assert jet_mul(J(1, 1), J(1, 1)).coeffs == (1.0, 2.0)
    assert jet_mul(J(0, 1, 0), J(0, 1, 0)).coeffs == (0.0, 0.0, 1.0)
    a = J(0.3, -1.2, 4.5)
    assert jet_mul(J(2, 0, 0), a).coeffs == tuple(2 * c for c in a.coeffs)


def test_div_examples():
    assert jet_div(J(1, 0, 0), J(1, 1, 0)).coeffs == (1.0, -1.0, 1.0)
    a = J(0.7, 2.0, -3.0, 0.5)
    assert close(jet_div(a, a).coeffs, (1.0, 0.0, 0.0, 0.0), abs_=1e-15)
    assert jet_div(J(0, 1), J(1, 0)).coeffs == (0.0, 1.0)


def test_div_by_zero_constant():
    with pytest.raises(DomainError):
        jet_div(J(1, 0), J(0.0, 1))
    with pytest.raises(DomainError):
        jet_div(J(1, 0), J(1e-301, 1))


def test_mismatched_operands():
    with pytest.raises(DomainError):
        jet_mul(J(1, 1), J(1, 1, 0))
    with pytest.raises(DomainError):
        jet_mul(J(1, 1), J(1, 1, center=1.0))


def test_operators_with_scalars():
    x = jet_var(2.0, 3)
    y = 3 * x + 1 - x / 2
    assert y.coeffs == (6.0, 2.5, 0.0, 0.0)
    assert (1 / x).coeffs == pytest.approx((0.5, -0.25, 0.125, -0.0625))
    assert (1 - x).coeffs == (-1.0, -1.0, 0.0, 0.0)
    assert (x ** 2).coeffs == (4.0, 4.0, 1.0, 0.0)


# -- elementary functions ---------------------------------------------------


def test_elementary_examples():
    assert close(jet_ln(J(1, 1, 0, 0)).coeffs, (0.0, 1.0, -0.5, 1 / 3))
    assert close(jet_exp(J(0, 1, 0)).coeffs, (1.0, 1.0, 0.5))
    assert close(jet_pow(J(1, 1), -1).coeffs, jet_div(J(1, 0), J(1, 1)).coeffs)


def test_elementary_domains():
    with pytest.raises(DomainError):
        jet_ln(J(0.0, 1))
    with pytest.raises(DomainError):
        jet_sqrt(J(-1.0, 1))
    with pytest.raises(DomainError):
        jet_pow(J(-1.0, 1), 0.5)
    # integer powers are fine for negative constant terms
    assert jet_pow(J(-2.0, 1.0), 3).coeffs == (-8.0, 12.0)


t = sp.Symbol("t")
SYMPY_CASES = [
    (lambda a: jet_ln(a), sp.log),
    (lambda a: jet_exp(a), sp.exp),
    (lambda a: jet_sqrt(a), sp.sqrt),
    (lambda a: jet_atan(a), sp.atan),
    (lambda a: jet_pow(a, 2.5), lambda e: e ** sp.Rational(5, 2)),
    (lambda a: jet_pow(a, -3), lambda e: e ** -3),
]


@pytest.mark.parametrize("case", range(len(SYMPY_CASES)))
def test_elementary_against_sympy(case):
    fn, sym = SYMPY_CASES[case]
    # inner expression with all derivatives nonzero
    inner = 1 + t / 2 + t ** 2 / 3 - t ** 3 / 5 + t ** 5 / 7
    order = 7
    a = Jet(0.0, tuple(float(inner.diff(t, k).subs(t, 0) / sp.factorial(k)) for k in range(order + 1)))
    series = sp.series(sym(inner), t, 0, order + 1).removeO()
    expected = [float(series.coeff(t, k)) for k in range(order + 1)]
    assert close(fn(a).coeffs, expected, rel=1e-12, abs_=1e-14)


def _random_jet(rng, order):
    # higher coefficients scaled by c0 so that ln a has modest coefficients;
    # otherwise the round trip measures conditioning rather than arithmetic
    c0 = rng.uniform(0.1, 10)
    return Jet(0.0, (c0,) + tuple(c0 * rng.uniform(-1, 1) for _ in range(order)))


def test_exp_ln_round_trip():
    rng = random.Random(3)
    for _ in range(200):
        a = _random_jet(rng, rng.randint(0, 10))
        back = jet_exp(jet_ln(a))
        assert close(back.coeffs, a.coeffs, rel=1e-12, abs_=1e-12 * max(map(abs, a.coeffs)))


def test_sqrt_squares_back():
    rng = random.Random(4)
    for _ in range(100):
        a = _random_jet(rng, 8)
        r = jet_sqrt(a)
        assert close(jet_mul(r, r).coeffs, a.coeffs, rel=1e-12, abs_=1e-11)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.floats(-5, 5), min_size=6, max_size=6),
    st.lists(st.floats(-5, 5), min_size=6, max_size=6),
)
def test_leibniz(ca, cb):
    a, b = J(*ca), J(*cb)
    da, db = a.derivatives(), b.derivatives()
    prod = jet_mul(a, b).derivatives()
    for k in range(6):
        leib = math.fsum(math.comb(k, j) * da[j] * db[k - j] for j in range(k + 1))
        assert math.isclose(prod[k], leib, rel_tol=1e-12, abs_tol=1e-9)


def test_composite_derivative_formula_equivalence():
    # nth derivative of f(h(x)) by the Bell-polynomial chain rule versus jets
    x0 = 0.4
    order = 6
    h_expr = sp.log(1 + t)
    f_expr = sp.exp(-t)
    hx = float(h_expr.subs(t, x0))
    h_derivs = [float(h_expr.diff(t, k).subs(t, x0)) for k in range(order + 1)]
    f_derivs = [float(f_expr.diff(t, k).subs(t, hx)) for k in range(order + 1)]
    expected = [f_derivs[0]]
    for n in range(1, order + 1):
        total = 0.0
        for k in range(1, n + 1):
            bell = sp.bell(n, k, [sp.Float(h_derivs[j]) for j in range(1, n - k + 2)])
            total += f_derivs[k] * float(bell)
        expected.append(total)
    h = jet_var(x0, order)
    composed = jet_exp(-jet_ln(h + 1.0))
    assert close(composed.derivatives(), expected, rel=1e-12)


# -- ln Gamma(1+x) ----------------------------------------------------------


def test_lngamma1p_examples():
    j = jet_lngamma1p(0.0, 3)
    assert close(j.coeffs, (0.0, -EULER_GAMMA, zeta_int(2) / 2, -zeta_int(3) / 3), rel=1e-14)
    assert close(jet_lngamma1p(1.0, 1).coeffs, (0.0, 1 - EULER_GAMMA), rel=1e-14)
    assert jet_lngamma1p(5.0, 2).coeffs[1] == digamma(6.0)


def test_lngamma1p_matches_polygamma():
    rng = random.Random(5)
    for _ in range(50):
        x = rng.uniform(0.01, 100)
        d = jet_lngamma1p(x, 12).derivatives()
        for k in range(2, 13):
            assert math.isclose(d[k], polygamma(k - 1, x + 1), rel_tol=1e-13)


def test_lngamma1p_negative_side():
    j = jet_lngamma1p(-0.5, 2)
    assert j.coeffs[0] == pytest.approx(0.5723649429247001, rel=1e-14)
    assert j.coeffs[1] == pytest.approx(-EULER_GAMMA - 2 * math.log(2), rel=1e-14)


def test_lngamma1p_domain():
    with pytest.raises(DomainError):
        jet_lngamma1p(-1.0, 2)
    with pytest.raises(DomainError):
        jet_lngamma1p(0.5, 21)


def test_jet_derivatives_match_finite_differences():
    # composite expression, independent scalar evaluation
    def scalar(x):
        return math.atan(math.sqrt(x)) * math.exp(-x) / (1 + x * x)

    def jet(x, order):
        v = jet_var(x, order)
        return jet_atan(jet_sqrt(v)) * jet_exp(-v) / (v * v + 1.0)

    for x in (1.0, 2.5, 4.0):
        d = jet(x, 4).derivatives()
        for k in range(1, 5):
            h = 0.02 * 2 ** (k // 2)
            ests = []
            for step in (h, h / 2, h / 4):
                ests.append(_central(scalar, x, k, step))
            r = [(16 * ests[i + 1] - ests[i]) / 15 for i in range(2)]
            fd = (64 * r[1] - r[0]) / 63
            assert math.isclose(d[k], fd, rel_tol=1e-6, abs_tol=1e-8), (x, k, d[k], fd)


_W = {
    1: ((-2, 1 / 12), (-1, -2 / 3), (1, 2 / 3), (2, -1 / 12)),
    2: ((-2, -1 / 12), (-1, 4 / 3), (0, -5 / 2), (1, 4 / 3), (2, -1 / 12)),
    3: ((-3, 1 / 8), (-2, -1.0), (-1, 13 / 8), (1, -13 / 8), (2, 1.0), (3, -1 / 8)),
    4: ((-3, -1 / 6), (-2, 2.0), (-1, -13 / 2), (0, 28 / 3), (1, -13 / 2), (2, 2.0), (3, -1 / 6)),
}


def _central(f, x, k, h):
    return math.fsum(w * f(x + o * h) for o, w in _W[k]) / h ** k


def test_jet_const():
    c = jet_const(2.0, 1.0, 3)
    assert c.coeffs == (2.0, 0.0, 0.0, 0.0) and c.center == 1.0
