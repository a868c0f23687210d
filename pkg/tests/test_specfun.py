import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from lcmgamma.errors import DomainError
from lcmgamma.specfun import (
    BERNOULLI,
    EULER_GAMMA,
    AsymptoticKind,
    AsymptoticSeries,
    asym_eval,
    digamma,
    ln_gamma,
    polygamma,
    zeta_int,
)

mp.mp.dps = 40

ZETA3 = 1.2020569031595942


def rel(a, b):
    return abs(a - b) / abs(b)


def _sample_points(seed, count=300):
    rng = random.Random(seed)
    pts = [10 ** rng.uniform(-3, 6) for _ in range(count)]
    # neighbourhoods of the zeros of ln Gamma and of digamma
    pts += [1 + 1e-9, 1 - 1e-9, 2 + 1e-9, 2 - 1e-7, 1.4616321449683622, 1.46163214497, 0.5, 12.0, 11.999]
    pts += [rng.uniform(0.9, 2.6) for _ in range(100)]
    return pts


# -- ln_gamma ---------------------------------------------------------------


def test_ln_gamma_exact_points():
    assert ln_gamma(1.0) == 0.0
    assert ln_gamma(2.0) == 0.0
    assert ln_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-14)


def test_ln_gamma_against_mpmath():
    worst = max(rel(ln_gamma(x), float(mp.loggamma(mp.mpf(x)))) for x in _sample_points(1))
    assert worst <= 1e-12


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, math.inf, math.nan])
def test_ln_gamma_domain(bad):
    with pytest.raises(DomainError):
        ln_gamma(bad)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.1, 1e4))
def test_ln_gamma_recurrence(x):
    lhs = ln_gamma(x + 1) - ln_gamma(x) - math.log(x)
    assert abs(lhs) <= 1e-12 * (1 + abs(ln_gamma(x)))


# -- digamma ----------------------------------------------------------------


def test_digamma_examples():
    assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-15)
    assert digamma(2.0) == pytest.approx(1 - EULER_GAMMA, rel=1e-14)
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2 * math.log(2), rel=1e-14)
    assert digamma(0.5) == pytest.approx(-1.9635100260214235, rel=1e-14)


def test_digamma_against_mpmath():
    worst = max(rel(digamma(x), float(mp.digamma(mp.mpf(x)))) for x in _sample_points(2))
    assert worst <= 1e-12


@settings(max_examples=300, deadline=None)
@given(st.floats(0.1, 1e4))
def test_digamma_recurrence(x):
    expected = digamma(x) + 1 / x
    assert abs(digamma(x + 1) - expected) <= 1e-12 * abs(expected) + 1e-15


def test_digamma_domain():
    with pytest.raises(DomainError):
        digamma(0.0)


# -- polygamma --------------------------------------------------------------


def test_polygamma_examples():
    assert polygamma(1, 1.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-14)
    assert polygamma(2, 1.0) == pytest.approx(-2 * ZETA3, rel=1e-14)
    assert polygamma(1, 2.0) == pytest.approx(math.pi ** 2 / 6 - 1, rel=1e-14)


@pytest.mark.parametrize("n", range(1, 21))
def test_polygamma_against_mpmath(n):
    rng = random.Random(100 + n)
    xs = [10 ** rng.uniform(-2, 4) for _ in range(40)] + [0.01, 1.0, 11.5, 12 + n, 1e4]
    tol = 1e-11 if n <= 12 else 1e-10
    for x in xs:
        exact = float(mp.polygamma(n, mp.mpf(x)))
        assert rel(polygamma(n, x), exact) <= tol, (n, x)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 12), st.floats(1e-3, 1e4))
def test_polygamma_sign(n, x):
    assert (-1) ** (n + 1) * polygamma(n, x) > 0


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.floats(0.1, 1e4))
def test_polygamma_recurrence(n, x):
    # psi^(n)(x+1) = psi^(n)(x) + (-1)^n n! / x^(n+1)
    expected = polygamma(n, x) + (-1) ** n * math.factorial(n) / x ** (n + 1)
    assert abs(polygamma(n, x + 1) - expected) <= 1e-12 * abs(polygamma(n, x))


def _series_bounds(n, x, terms):
    # n! * sum_{i<K} (x+i)^-(n+1) plus integral bounds on the remainder
    head = math.fsum((x + i) ** -(n + 1) for i in range(terms))
    lo = (x + terms) ** -n / n
    hi = (x + terms - 1) ** -n / n
    f = math.factorial(n)
    return f * (head + lo), f * (head + hi)


def test_polygamma_within_series_tail_bounds():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 12)
        x = 10 ** rng.uniform(-1, 2)
        lo, hi = _series_bounds(n, x, 2000)
        v = abs(polygamma(n, x))
        slack = 1e-13 * v
        assert lo - slack <= v <= hi + slack, (n, x, lo, v, hi)


def test_polygamma_domain_and_order():
    with pytest.raises(DomainError):
        polygamma(0, 1.0)
    with pytest.raises(DomainError):
        polygamma(21, 1.0)
    with pytest.raises(DomainError):
        polygamma(1, -1.0)
    with pytest.raises(DomainError):
        polygamma(1.5, 1.0)


# -- zeta -------------------------------------------------------------------


def test_zeta_examples():
    assert zeta_int(2) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)
    assert zeta_int(4) == pytest.approx(math.pi ** 4 / 90, rel=1e-15)
    assert zeta_int(40) == pytest.approx(1 + 2.0 ** -40 + 3.0 ** -40, rel=1e-15)


@pytest.mark.parametrize("k", range(2, 65))
def test_zeta_against_mpmath(k):
    assert rel(zeta_int(k), float(mp.zeta(k))) <= 1e-14


@pytest.mark.parametrize("bad", [1, 0, 65, 2.5])
def test_zeta_domain(bad):
    with pytest.raises(DomainError):
        zeta_int(bad)


# -- asymptotic expansions --------------------------------------------------


def test_asym_examples():
    ln1 = AsymptoticSeries(AsymptoticKind.LNGAMMA, 1)
    dg1 = AsymptoticSeries(AsymptoticKind.DIGAMMA, 1)
    assert abs(asym_eval(ln1, 10) - ln_gamma(10)) < 1e-4
    assert abs(asym_eval(dg1, 10) - digamma(10)) < 1e-4
    assert asym_eval(AsymptoticSeries(AsymptoticKind.LNGAMMA, 0), 1) == pytest.approx(
        -1 + math.log(2 * math.pi) / 2, rel=1e-15
    )
    x = 7.0
    assert asym_eval(ln1, x) == pytest.approx(
        (x - 0.5) * math.log(x) - x + math.log(2 * math.pi) / 2 + 1 / (12 * x), rel=1e-15
    )
    assert asym_eval(dg1, x) == pytest.approx(math.log(x) - 1 / (2 * x) - 1 / (12 * x * x), rel=1e-15)


def test_asym_error_decays_like_inverse_cube():
    s = AsymptoticSeries(AsymptoticKind.LNGAMMA, 1)
    for x in (10, 20, 40, 80, 160):
        e1 = abs(asym_eval(s, x) - ln_gamma(x))
        e2 = abs(asym_eval(s, 2 * x) - ln_gamma(2 * x))
        assert e2 <= 0.2 * e1


def test_asym_more_terms_is_better():
    for kind in AsymptoticKind:
        errs = []
        exact = ln_gamma if kind is AsymptoticKind.LNGAMMA else digamma
        for terms in range(0, 5):
            errs.append(abs(asym_eval(AsymptoticSeries(kind, terms), 10.0) - exact(10.0)))
        assert errs == sorted(errs, reverse=True)


def test_asym_series_validation():
    with pytest.raises(DomainError):
        AsymptoticSeries(AsymptoticKind.LNGAMMA, len(BERNOULLI) + 1)
    with pytest.raises(DomainError):
        asym_eval(AsymptoticSeries(AsymptoticKind.DIGAMMA), 0.5)
    assert AsymptoticSeries("digamma").kind is AsymptoticKind.DIGAMMA
