"""Gamma-function families and the closure combinators, as log-derivative providers.

Everything here is built on

    g(x) = ln Gamma(x + 1) / x,    g(0) = -gamma,

on ``(-1, inf)``.  Its derivatives are ``h_n(x) / x^(n+1)`` away from the
origin, where

    h_n(x) = sum_{k=0}^{n} (-1)^(n-k) n! x^k psi^(k-1)(x+1) / k!

with ``psi^(-1) = ln Gamma`` and ``psi^(0) = psi``.  Near the origin the
quotient cancels badly, so on ``(-0.5, 0.6)`` the zeta series of ``g`` is
differentiated term by term instead.  For negative x that series has terms
of one sign and stays accurate; for positive x it loses digits as x grows,
which is where the Leibniz sum takes over.

A provider answers "what is the n-th derivative of ln f at x".  Each one
carries two independent routes: ``eval``/``eval_all`` use the closed forms
above, ``jet_all`` pushes Taylor jets of ``ln Gamma(1+x)`` through the same
expression.  Tests compare the two.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from scipy import integrate

from . import jets as J
from .errors import DomainError, QuadratureError, UnsupportedInnerFunction
from .specfun import EULER_GAMMA, _zeta_any, digamma, ln_gamma, polygamma

__all__ = [
    "FamilyKind",
    "FamilySpec",
    "LogDerivProvider",
    "FamilyProvider",
    "ExponentialProvider",
    "ShiftRatio",
    "PowerProduct",
    "Composite",
    "InnerFunction",
    "INNER_CATALOG",
    "h_n",
    "g_derivs",
    "g_all",
    "g_quadrature",
    "mu_alpha_n",
    "make_provider",
    "shift_ratio",
    "power_product",
    "compose",
    "factorial_root_ratio",
]

MAX_FAMILY_ORDER = 20
SERIES_INTERVAL = (-0.5, 0.6)
DEFAULT_MARGIN = 1e-2
INF = math.inf


# ---------------------------------------------------------------------------
# g(x) = ln Gamma(x+1)/x and friends
# ---------------------------------------------------------------------------


def _check_order(n: int, lo: int = 0, hi: int = MAX_FAMILY_ORDER) -> int:
    if isinstance(n, bool) or int(n) != n or not lo <= n <= hi:
        raise DomainError(f"order must be an integer in [{lo}, {hi}], got {n!r}")
    return int(n)


def _check_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= -1.0:
        raise DomainError(f"x must be finite and > -1, got {x}")
    return x


def _psi_table(x: float, n_max: int) -> list[float]:
    """``[ln Gamma(x+1), psi(x+1), psi'(x+1), ..., psi^(n_max-1)(x+1)]``."""
    y = x + 1.0
    table = [ln_gamma(y)]
    if n_max >= 1:
        table.append(digamma(y))
    for k in range(2, n_max + 1):
        table.append(polygamma(k - 1, y))
    return table


def _h_all(x: float, n_max: int) -> list[float]:
    psi = _psi_table(x, n_max)
    out = []
    for n in range(n_max + 1):
        terms = []
        xk = 1.0
        inv_fact = 1.0
        for k in range(n + 1):
            term = xk * psi[k] * inv_fact
            terms.append(term if (n - k) % 2 == 0 else -term)
            xk *= x
            inv_fact /= k + 1
        out.append(math.factorial(n) * math.fsum(terms))
    return out


def h_n(n: int, x: float) -> float:
    """The Leibniz sum ``h_n(x)``; ``g^(n)(x) = h_n(x) / x^(n+1)`` for x != 0."""
    n = _check_order(n, 1)
    return _h_all(_check_x(x), n)[n]


def _g_series_all(x: float, n_max: int) -> list[float]:
    # g(x) = sum_j c_j x^j with c_0 = -gamma, c_j = (-1)^(j+1) zeta(j+1)/(j+1)
    top = n_max + 10
    if x != 0.0:
        log_x = math.log(abs(x))
        while math.lgamma(top + 1) - math.lgamma(top - n_max + 1) + (top - n_max) * log_x > -42.0:
            top += 10
    c = [-EULER_GAMMA] + [(-1) ** (j + 1) * _zeta_any(j + 1) / (j + 1) for j in range(1, top + 1)]
    out = []
    for n in range(n_max + 1):
        acc = 0.0
        for j in range(top, n - 1, -1):
            acc = acc * x + c[j] * math.perm(j, n)
        out.append(acc)
    return out


def g_all(x: float, n_max: int) -> list[float]:
    """``[g(x), g'(x), ..., g^(n_max)(x)]`` by the closed-form route."""
    x = _check_x(x)
    n_max = _check_order(n_max)
    if SERIES_INTERVAL[0] < x < SERIES_INTERVAL[1]:
        return _g_series_all(x, n_max)
    h = _h_all(x, n_max)
    return [h[n] / x ** (n + 1) for n in range(n_max + 1)]


def g_derivs(n: int, x: float) -> float:
    """n-th derivative of ``g(x) = ln Gamma(x+1)/x`` (``-gamma`` at 0)."""
    n = _check_order(n)
    return g_all(x, n)[n]


def g_quadrature(n: int, x: float) -> float:
    """``g^(n)(x)`` as the integral of ``s^n psi^(n)(x s + 1)`` over ``[0, 1]``."""
    n = _check_order(n, 0, 12)
    x = _check_x(x)
    if n == 0:
        integrand = lambda s: digamma(x * s + 1.0)
    else:
        integrand = lambda s: s ** n * polygamma(n, x * s + 1.0)
    value, abserr, info, *rest = integrate.quad(
        integrand, 0.0, 1.0, epsabs=1e-10, epsrel=1e-13, limit=200, full_output=1
    )
    tol = max(1e-10, 1e-11 * abs(value))
    if rest and abserr > tol:
        raise QuadratureError(f"quadrature for n={n}, x={x} did not converge: {rest[0]}")
    return value


def mu_alpha_n(alpha: float, n: int, x: float) -> float:
    """``h_n(x) + (-1)^n (n-1)! alpha x^(n+1) / (x+1)^n``."""
    n = _check_order(n, 1)
    x = _check_x(x)
    extra = math.factorial(n - 1) * alpha * x ** (n + 1) / (x + 1.0) ** n
    return h_n(n, x) + (extra if n % 2 == 0 else -extra)


def _log_derivs(y: float, n_max: int) -> list[float]:
    """Derivatives of ``ln|y|`` in ``y``: ``(-1)^(n-1) (n-1)! / y^n``."""
    out = [math.log(abs(y))]
    for n in range(1, n_max + 1):
        v = math.factorial(n - 1) / y ** n
        out.append(v if n % 2 else -v)
    return out


def _g_jet(y: float, order: int, center: float) -> J.Jet:
    """Jet of ``t -> g(t + y - center)`` at ``t = center``."""
    if y == 0.0:
        raise DomainError("jet route for g is undefined at the removable singularity")
    lg = J.jet_lngamma1p(y, order)
    var = J.jet_var(y, order)
    return J.Jet(center, J.jet_div(lg, var).coeffs)


def _log_jet(y: float, order: int, center: float) -> J.Jet:
    """Jet of ``t -> ln|t + y - center|`` at ``t = center``."""
    var = J.jet_var(y, order)
    lj = J.jet_ln(var) if y > 0 else J.jet_ln(-var)
    return J.Jet(center, lj.coeffs)


# ---------------------------------------------------------------------------
# providers
# ---------------------------------------------------------------------------


class LogDerivProvider:
    """Derivatives of ``ln f`` on an open interval.

    Subclasses implement ``_derivs`` (closed form) and ``_jet_derivs`` (jet
    arithmetic).  ``eval`` rejects points closer than ``margin`` to a finite
    end of ``domain``.
    """

    domain: tuple[float, float]
    max_order: int
    margin: float
    description: str

    def contains(self, x: float) -> bool:
        lo, hi = self.domain
        slack = 1e-12 * (1.0 + abs(x))
        if math.isfinite(lo) and x < lo + self.margin - slack:
            return False
        if math.isfinite(hi) and x > hi - self.margin + slack:
            return False
        return math.isfinite(x)

    def _prepare(self, x: float, n_max: int) -> tuple[float, int]:
        x = float(x)
        if not self.contains(x):
            raise DomainError(
                f"x={x} outside {self.description} domain {self.domain} (margin {self.margin})"
            )
        n_max = _check_order(n_max, 0, self.max_order)
        return x, n_max

    def eval_all(self, x: float, n_max: int) -> list[float]:
        x, n_max = self._prepare(x, n_max)
        return self._derivs(x, n_max)

    def eval(self, x: float, n: int) -> float:
        return self.eval_all(x, n)[n]

    def jet_all(self, x: float, n_max: int) -> list[float]:
        x, n_max = self._prepare(x, n_max)
        return self._jet_derivs(x, n_max)

    def _derivs(self, x: float, n_max: int) -> list[float]:
        raise NotImplementedError

    def _jet_derivs(self, x: float, n_max: int) -> list[float]:
        raise NotImplementedError


class FamilyKind(enum.Enum):
    RECIP_GAMMA_ROOT = "recip-gamma-root"
    NU_ALPHA = "nu"
    X_ALPHA_RATIO = "x-alpha"
    Q_AB = "q"


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of one family.

    ``reciprocal`` flips ``f`` to ``1/f``: the base functions are
    ``1/Gamma(x+1)^(1/x)``, ``nu_alpha``, ``Gamma(x+1)^(1/x) / x^alpha`` and
    ``[Q_ab]^c``.  ``side`` selects ``(0, inf)`` or ``(-1, 0)`` for
    ``X_ALPHA_RATIO`` and is ignored elsewhere.
    """

    kind: FamilyKind
    alpha: float = 0.0
    a: float = 0.0
    b: float = 0.0
    c_power: float = 1.0
    reciprocal: bool = False
    side: str = "positive"

    def __post_init__(self):
        if not isinstance(self.kind, FamilyKind):
            object.__setattr__(self, "kind", FamilyKind(self.kind))
        for name in ("alpha", "a", "b", "c_power"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v}")
            object.__setattr__(self, name, v)
        if self.side not in ("positive", "negative"):
            raise DomainError(f"side must be 'positive' or 'negative', got {self.side!r}")
        if self.kind is FamilyKind.Q_AB and not self.c_power > 0:
            raise DomainError(f"c_power must be positive, got {self.c_power}")
        if self.kind is FamilyKind.X_ALPHA_RATIO and self.side == "negative":
            if not self.alpha.is_integer():
                raise DomainError("on (-1, 0) alpha must be an integer so that x^alpha is real")
            if int(self.alpha) % 2:
                raise DomainError("odd alpha makes x^alpha negative on (-1, 0)")

    @property
    def domain(self) -> tuple[float, float]:
        if self.kind is FamilyKind.X_ALPHA_RATIO:
            return (0.0, INF) if self.side == "positive" else (-1.0, 0.0)
        if self.kind is FamilyKind.Q_AB:
            return (-(1.0 + min(self.a, self.b)), INF)
        return (-1.0, INF)

    def describe(self) -> str:
        k = self.kind
        if k is FamilyKind.RECIP_GAMMA_ROOT:
            text = "1/Gamma(x+1)^(1/x)"
            return "Gamma(x+1)^(1/x)" if self.reciprocal else text
        if k is FamilyKind.NU_ALPHA:
            text = f"Gamma(x+1)^(1/x)/(x+1)^{self.alpha:g}"
            return f"(x+1)^{self.alpha:g}/Gamma(x+1)^(1/x)" if self.reciprocal else text
        if k is FamilyKind.X_ALPHA_RATIO:
            xs = "x" if self.side == "positive" else "|x|"
            text = f"Gamma(x+1)^(1/x)/{xs}^{self.alpha:g}"
            return f"{xs}^{self.alpha:g}/Gamma(x+1)^(1/x)" if self.reciprocal else text
        text = f"Q_{{{self.a:g},{self.b:g}}}(x)^{self.c_power:g}"
        return f"1/{text}" if self.reciprocal else text


@dataclass(frozen=True)
class FamilyProvider(LogDerivProvider):
    spec: FamilySpec
    max_order: int = 8
    margin: float = DEFAULT_MARGIN

    def __post_init__(self):
        _check_order(self.max_order)

    @property
    def domain(self) -> tuple[float, float]:
        return self.spec.domain

    @property
    def description(self) -> str:
        return self.spec.describe()

    def _sign(self) -> float:
        base = -1.0 if self.spec.kind is FamilyKind.RECIP_GAMMA_ROOT else 1.0
        return -base if self.spec.reciprocal else base

    def _derivs(self, x, n_max):
        s = self.spec
        if s.kind is FamilyKind.Q_AB:
            ga = g_all(x + s.a, n_max)
            gb = g_all(x + s.b, n_max)
            vals = [s.c_power * (u - v) for u, v in zip(ga, gb)]
        else:
            vals = g_all(x, n_max)
            if s.kind is FamilyKind.NU_ALPHA and s.alpha:
                logs = _log_derivs(x + 1.0, n_max)
                vals = [u - s.alpha * v for u, v in zip(vals, logs)]
            elif s.kind is FamilyKind.X_ALPHA_RATIO and s.alpha:
                logs = _log_derivs(x, n_max)
                vals = [u - s.alpha * v for u, v in zip(vals, logs)]
        sign = self._sign()
        return [sign * v for v in vals]

    def _jet_derivs(self, x, n_max):
        s = self.spec
        if s.kind is FamilyKind.Q_AB:
            jet = (_g_jet(x + s.a, n_max, x) - _g_jet(x + s.b, n_max, x)) * s.c_power
        else:
            jet = _g_jet(x, n_max, x)
            if s.kind is FamilyKind.NU_ALPHA and s.alpha:
                jet = jet - _log_jet(x + 1.0, n_max, x) * s.alpha
            elif s.kind is FamilyKind.X_ALPHA_RATIO and s.alpha:
                jet = jet - _log_jet(x, n_max, x) * s.alpha
        return [self._sign() * d for d in jet.derivatives()]


def make_provider(spec: FamilySpec, max_order: int = 8, margin: float = DEFAULT_MARGIN) -> FamilyProvider:
    return FamilyProvider(spec, max_order, margin)


@dataclass(frozen=True)
class ExponentialProvider(LogDerivProvider):
    """``f(x) = exp(-rate * x)`` on the whole line; ln f is linear."""

    rate: float = 1.0
    max_order: int = MAX_FAMILY_ORDER
    margin: float = 0.0
    domain: tuple[float, float] = (-INF, INF)

    @property
    def description(self) -> str:
        return f"exp(-{self.rate:g} x)"

    def _derivs(self, x, n_max):
        out = [-self.rate * x, -self.rate] + [0.0] * (n_max - 1)
        return out[: n_max + 1]

    def _jet_derivs(self, x, n_max):
        return (J.jet_var(x, n_max) * -self.rate).derivatives()


@dataclass(frozen=True)
class ShiftRatio(LogDerivProvider):
    """``f(x) / f(x + alpha)`` on ``J = I intersect (I - alpha)``."""

    base: LogDerivProvider
    alpha: float

    def __post_init__(self):
        if self.alpha == 0 or not math.isfinite(self.alpha):
            raise DomainError(f"shift must be finite and nonzero, got {self.alpha}")
        lo, hi = self.domain
        if not lo < hi:
            raise DomainError(f"shifted domain is empty for alpha={self.alpha}")

    @property
    def domain(self):
        lo, hi = self.base.domain
        return (max(lo, lo - self.alpha), min(hi, hi - self.alpha))

    @property
    def max_order(self):
        return self.base.max_order

    @property
    def margin(self):
        return self.base.margin

    @property
    def description(self):
        return f"F(x)/F(x{self.alpha:+g}), F = {self.base.description}"

    def _derivs(self, x, n_max):
        u = self.base.eval_all(x, n_max)
        v = self.base.eval_all(x + self.alpha, n_max)
        return [p - q for p, q in zip(u, v)]

    def _jet_derivs(self, x, n_max):
        u = self.base.jet_all(x, n_max)
        v = self.base.jet_all(x + self.alpha, n_max)
        return [p - q for p, q in zip(u, v)]


@dataclass(frozen=True)
class PowerProduct(LogDerivProvider):
    """``prod_i f_i^(w_i)`` with nonnegative weights."""

    items: tuple[tuple[LogDerivProvider, float], ...]

    def __post_init__(self):
        items = tuple((p, float(w)) for p, w in self.items)
        object.__setattr__(self, "items", items)
        for _, w in items:
            if not w >= 0 or not math.isfinite(w):
                raise DomainError(f"weights must be finite and nonnegative, got {w}")
        lo, hi = self.domain
        if not lo < hi:
            raise DomainError("factors have no common domain")

    @property
    def domain(self):
        lo, hi = -INF, INF
        for p, _ in self.items:
            lo, hi = max(lo, p.domain[0]), min(hi, p.domain[1])
        return (lo, hi)

    @property
    def max_order(self):
        return min((p.max_order for p, _ in self.items), default=MAX_FAMILY_ORDER)

    @property
    def margin(self):
        return max((p.margin for p, _ in self.items), default=0.0)

    @property
    def description(self):
        if not self.items:
            return "1"
        return " * ".join(f"[{p.description}]^{w:g}" for p, w in self.items)

    def _combine(self, x, n_max, getter):
        total = [0.0] * (n_max + 1)
        for p, w in self.items:
            if w == 0:
                continue
            for n, v in enumerate(getter(p)(x, n_max)):
                total[n] += w * v
        return total

    def _derivs(self, x, n_max):
        return self._combine(x, n_max, lambda p: p.eval_all)

    def _jet_derivs(self, x, n_max):
        return self._combine(x, n_max, lambda p: p.jet_all)


# ---------------------------------------------------------------------------
# composition with inner functions whose derivative is completely monotonic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InnerFunction:
    """One entry of the closed catalog of increasing inner functions ``h``.

    ``power``: ``a x^alpha + b`` with ``a >= 0``, ``0 <= alpha <= 1``;
    ``log1p``: ``a + b ln(1+x)`` with ``b >= 0``; ``one-minus-exp``:
    ``1 - e^(-x)``; ``arctan-sqrt``: ``arctan(sqrt(x))``.
    """

    name: str
    a: float = 1.0
    b: float = 0.0
    alpha: float = 1.0

    def __post_init__(self):
        if self.name not in INNER_CATALOG:
            raise UnsupportedInnerFunction(
                f"unsupported inner function {self.name!r}; h' must be completely "
                f"monotonic, supported: {', '.join(INNER_CATALOG)}"
            )
        if self.name == "power":
            if not (self.a >= 0 and 0 <= self.alpha <= 1):
                raise UnsupportedInnerFunction("power needs a >= 0 and 0 <= alpha <= 1")
        if self.name == "log1p" and not self.b >= 0:
            raise UnsupportedInnerFunction("log1p needs b >= 0")

    @property
    def is_constant(self) -> bool:
        if self.name == "power":
            return self.a == 0 or self.alpha == 0
        if self.name == "log1p":
            return self.b == 0
        return False

    @property
    def domain(self) -> tuple[float, float]:
        if self.name == "power":
            return (-INF, INF) if self.alpha in (0.0, 1.0) else (0.0, INF)
        if self.name == "log1p":
            return (-1.0, INF)
        if self.name == "one-minus-exp":
            return (-INF, INF)
        return (0.0, INF)

    def value(self, x: float) -> float:
        if self.name == "power":
            if self.alpha == 0:
                return self.a + self.b
            return self.a * x ** self.alpha + self.b
        if self.name == "log1p":
            return self.a + self.b * math.log1p(x)
        if self.name == "one-minus-exp":
            return -math.expm1(-x)
        return math.atan(math.sqrt(x))

    def _limit(self, x: float) -> float:
        if math.isinf(x):
            if self.name == "one-minus-exp":
                return 1.0 if x > 0 else -INF
            if self.name == "arctan-sqrt":
                return math.pi / 2
            if self.is_constant:
                return self.value(0.0 if self.name == "power" else 1.0)
            return math.copysign(INF, x)
        if self.name == "log1p" and x == -1.0:
            return -INF if self.b > 0 else self.a
        return self.value(x)

    @property
    def range(self) -> tuple[float, float]:
        lo, hi = self.domain
        return (self._limit(lo), self._limit(hi))

    def inverse(self, y: float) -> float:
        if self.name == "power":
            return ((y - self.b) / self.a) ** (1.0 / self.alpha)
        if self.name == "log1p":
            return math.expm1((y - self.a) / self.b)
        if self.name == "one-minus-exp":
            return -math.log1p(-y)
        return math.tan(y) ** 2

    def preimage(self, lo: float, hi: float) -> tuple[float, float]:
        """Largest subinterval of the domain that ``h`` maps into ``(lo, hi)``."""
        dlo, dhi = self.domain
        if self.is_constant:
            c = self.range[0]
            return (dlo, dhi) if lo < c < hi else (0.0, 0.0)
        rlo, rhi = self.range
        xlo = dlo if lo <= rlo else (self.inverse(lo) if lo < rhi else dhi)
        xhi = dhi if hi >= rhi else (self.inverse(hi) if hi > rlo else dlo)
        return (max(dlo, xlo), min(dhi, xhi))

    def jet(self, x: float, order: int) -> J.Jet:
        var = J.jet_var(x, order)
        if self.name == "power":
            if self.alpha == 0:
                return J.jet_const(self.a + self.b, x, order)
            return J.jet_pow(var, self.alpha) * self.a + self.b
        if self.name == "log1p":
            return J.jet_ln(var + 1.0) * self.b + self.a
        if self.name == "one-minus-exp":
            return 1.0 - J.jet_exp(-var)
        return J.jet_atan(J.jet_sqrt(var))

    def describe(self, arg: str = "x") -> str:
        if self.name == "power":
            return f"{self.a:g}*{arg}^{self.alpha:g}+{self.b:g}"
        if self.name == "log1p":
            return f"{self.a:g}+{self.b:g}*ln(1+{arg})"
        if self.name == "one-minus-exp":
            return f"1-exp(-{arg})"
        return f"arctan(sqrt({arg}))"


INNER_CATALOG = ("power", "log1p", "one-minus-exp", "arctan-sqrt")


def _compose_series(outer: Sequence[float], inner: J.Jet) -> list[float]:
    """Derivatives of ``F(h(x))`` given ``F^(k)(h(x))`` and the jet of ``h``."""
    n = inner.order
    w = inner - inner.coeffs[0]
    acc = J.jet_const(outer[n] / math.factorial(n), inner.center, n)
    for k in range(n - 1, -1, -1):
        acc = J.jet_mul(acc, w) + outer[k] / math.factorial(k)
    return acc.derivatives()


@dataclass(frozen=True)
class Composite(LogDerivProvider):
    """``f(h(x))`` for ``h`` from the catalog."""

    base: LogDerivProvider
    inner: InnerFunction
    interval: tuple[float, float] | None = None

    def __post_init__(self):
        pre = self.inner.preimage(*self.base.domain)
        if self.interval is None:
            object.__setattr__(self, "interval", pre)
        else:
            lo, hi = (float(v) for v in self.interval)
            if lo < pre[0] or hi > pre[1]:
                raise DomainError(
                    f"h maps ({lo}, {hi}) outside the domain {self.base.domain} of the outer function"
                )
            object.__setattr__(self, "interval", (lo, hi))
        if not self.interval[0] < self.interval[1]:
            raise DomainError("composition has an empty domain")

    @property
    def domain(self):
        return self.interval

    @property
    def max_order(self):
        return self.base.max_order

    @property
    def margin(self):
        return self.base.margin

    @property
    def description(self):
        return f"F({self.inner.describe()}), F = {self.base.description}"

    def _derivs(self, x, n_max):
        hj = self.inner.jet(x, n_max)
        return _compose_series(self.base.eval_all(hj.coeffs[0], n_max), hj)

    def _jet_derivs(self, x, n_max):
        hj = self.inner.jet(x, n_max)
        return _compose_series(self.base.jet_all(hj.coeffs[0], n_max), hj)


def shift_ratio(p: LogDerivProvider, alpha: float) -> ShiftRatio:
    return ShiftRatio(p, float(alpha))


def power_product(items: Sequence[tuple[LogDerivProvider, float]]) -> PowerProduct:
    return PowerProduct(tuple(items))


def compose(p: LogDerivProvider, h: InnerFunction | str, interval=None, **params) -> Composite:
    """Compose ``p`` with a catalog inner function (object or name plus params)."""
    if isinstance(h, str):
        h = InnerFunction(h, **params)
    return Composite(p, h, None if interval is None else tuple(interval))


# ---------------------------------------------------------------------------
# factorial-root sequences
# ---------------------------------------------------------------------------


def _g_int(k: int) -> float:
    return ln_gamma(k + 1.0) / k


def factorial_root_ratio(k: int, m: int, n: int = 0) -> float:
    """``(k!)^(1/k) / ((m+k)!)^(1/(m+k))``, or the four-factor variant when n > 0."""
    for name, v, lo in (("k", k, 1), ("m", m, 1), ("n", n, 0)):
        if isinstance(v, bool) or int(v) != v or v < lo:
            raise DomainError(f"{name} must be an integer >= {lo}, got {v!r}")
    k, m, n = int(k), int(m), int(n)
    if k + m + n > 10_000:
        raise DomainError(f"k + m + n must not exceed 10000, got {k + m + n}")
    if n == 0:
        return math.exp(_g_int(k) - _g_int(k + m))
    return math.exp(_g_int(k) + _g_int(k + m + n) - _g_int(k + m) - _g_int(k + n))
