"""Truncated Taylor series ("jets") in one variable.

A :class:`Jet` stores ``c_k = f^(k)(center) / k!`` for ``k = 0..order``.
Arithmetic and the elementary functions below propagate these coefficients
exactly up to truncation, so derivatives of composite expressions come out
without finite differencing::

    >>> x = jet_var(0.0, 3)
    >>> jet_exp(x).coeffs
    (1.0, 1.0, 0.5, 0.16666666666666666)
    >>> jet_exp(x).derivative(3)
    1.0

Binary operations demand identical centers and orders; nothing is
re-expanded behind the caller's back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real

from .errors import DomainError
from .specfun import ln_gamma, digamma, polygamma

__all__ = [
    "MAX_ORDER",
    "Jet",
    "jet_var",
    "jet_const",
    "jet_mul",
    "jet_div",
    "jet_ln",
    "jet_exp",
    "jet_pow",
    "jet_atan",
    "jet_sqrt",
    "jet_lngamma1p",
]

MAX_ORDER = 24
MAX_LNGAMMA_ORDER = 20
_TINY = 1e-300


@dataclass(frozen=True)
class Jet:
    center: float
    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise DomainError("a jet needs at least one coefficient")
        if len(coeffs) - 1 > MAX_ORDER:
            raise DomainError(f"jet order {len(coeffs) - 1} exceeds {MAX_ORDER}")
        if not all(math.isfinite(c) for c in coeffs):
            raise DomainError(f"jet coefficients must be finite: {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "center", float(self.center))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self, k: int) -> float:
        """k-th derivative of the represented function at ``center``."""
        return math.factorial(k) * self.coeffs[k]

    def derivatives(self) -> list[float]:
        return [math.factorial(k) * c for k, c in enumerate(self.coeffs)]

    def _like(self, coeffs) -> "Jet":
        return Jet(self.center, tuple(coeffs))

    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            _check_compatible(self, other)
            return other
        if isinstance(other, Real):
            return jet_const(float(other), self.center, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._like(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._like(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Real):
            return self._like(a * other for a in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return jet_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Real):
            return self._like(a / other for a in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return jet_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return jet_div(other, self)

    def __pow__(self, p):
        return jet_pow(self, p)


def _check_compatible(a: Jet, b: Jet) -> None:
    if a.center != b.center:
        raise DomainError(f"jet centers differ: {a.center} vs {b.center}")
    if a.order != b.order:
        raise DomainError(f"jet orders differ: {a.order} vs {b.order}")


def _check_order(order: int) -> int:
    if isinstance(order, bool) or int(order) != order or not 0 <= order <= MAX_ORDER:
        raise DomainError(f"jet order must be an integer in [0, {MAX_ORDER}], got {order!r}")
    return int(order)


def jet_var(x: float, order: int) -> Jet:
    """Jet of the identity function at ``x``."""
    order = _check_order(order)
    coeffs = [0.0] * (order + 1)
    coeffs[0] = float(x)
    if order >= 1:
        coeffs[1] = 1.0
    return Jet(x, tuple(coeffs))


def jet_const(value: float, center: float, order: int) -> Jet:
    order = _check_order(order)
    return Jet(center, (float(value),) + (0.0,) * order)


def jet_mul(a: Jet, b: Jet) -> Jet:
    _check_compatible(a, b)
    ca, cb = a.coeffs, b.coeffs
    out = [math.fsum(ca[j] * cb[k - j] for j in range(k + 1)) for k in range(len(ca))]
    return a._like(out)


def jet_div(a: Jet, b: Jet) -> Jet:
    _check_compatible(a, b)
    ca, cb = a.coeffs, b.coeffs
    if abs(cb[0]) <= _TINY:
        raise DomainError("division by a jet with zero constant term")
    q = []
    for k in range(len(ca)):
        s = ca[k] - math.fsum(q[j] * cb[k - j] for j in range(k))
        q.append(s / cb[0])
    return a._like(q)


def jet_ln(a: Jet) -> Jet:
    ca = a.coeffs
    if not ca[0] > 0.0:
        raise DomainError(f"jet_ln needs a positive constant term, got {ca[0]}")
    g = [math.log(ca[0])]
    for k in range(1, len(ca)):
        s = math.fsum(j * g[j] * ca[k - j] for j in range(1, k))
        g.append((ca[k] - s / k) / ca[0])
    return a._like(g)


def jet_exp(a: Jet) -> Jet:
    ca = a.coeffs
    g = [math.exp(ca[0])]
    for k in range(1, len(ca)):
        g.append(math.fsum(j * ca[j] * g[k - j] for j in range(1, k + 1)) / k)
    return a._like(g)


def _int_pow(a: Jet, p: int) -> Jet:
    if p < 0:
        return jet_div(jet_const(1.0, a.center, a.order), _int_pow(a, -p))
    result = jet_const(1.0, a.center, a.order)
    base = a
    while p:
        if p & 1:
            result = jet_mul(result, base)
        p >>= 1
        if p:
            base = jet_mul(base, base)
    return result


def jet_pow(a: Jet, p: float) -> Jet:
    """``a**p``; integer ``p`` by repeated products, otherwise ``exp(p ln a)``."""
    if float(p).is_integer() and abs(p) <= 64:
        return _int_pow(a, int(p))
    if not a.coeffs[0] > 0.0:
        raise DomainError(f"non-integer power needs a positive constant term, got {a.coeffs[0]}")
    return jet_exp(jet_ln(a) * float(p))


def jet_sqrt(a: Jet) -> Jet:
    ca = a.coeffs
    if not ca[0] > 0.0:
        raise DomainError(f"jet_sqrt needs a positive constant term, got {ca[0]}")
    g = [math.sqrt(ca[0])]
    for k in range(1, len(ca)):
        s = math.fsum(g[j] * g[k - j] for j in range(1, k))
        g.append((ca[k] - s) / (2.0 * g[0]))
    return a._like(g)


def _integrate(c0: float, d: list[float]) -> list[float]:
    return [c0] + [d[k] / (k + 1) for k in range(len(d))]


def _differentiate(c: tuple[float, ...]) -> list[float]:
    return [(k + 1) * c[k + 1] for k in range(len(c) - 1)]


def jet_atan(a: Jet) -> Jet:
    n = a.order
    if n == 0:
        return a._like([math.atan(a.coeffs[0])])
    # atan(a)' = a' / (1 + a^2), one order lower
    low = Jet(a.center, a.coeffs[:n])
    denom = jet_mul(low, low) + 1.0
    da = Jet(a.center, _differentiate(a.coeffs))
    q = jet_div(da, denom)
    return a._like(_integrate(math.atan(a.coeffs[0]), list(q.coeffs)))


def jet_lngamma1p(x: float, order: int) -> Jet:
    """Jet of ``ln Gamma(1 + t)`` at ``t = x`` for ``x > -1``.

    ``c_0 = ln Gamma(x+1)``, ``c_1 = psi(x+1)`` and
    ``c_k = psi^(k-1)(x+1) / k!`` for ``k >= 2``.
    """
    order = _check_order(order)
    if order > MAX_LNGAMMA_ORDER:
        raise DomainError(f"jet_lngamma1p order must be <= {MAX_LNGAMMA_ORDER}, got {order}")
    x = float(x)
    if not x > -1.0:
        raise DomainError(f"jet_lngamma1p requires x > -1, got {x}")
    y = x + 1.0
    if y < 1.0:
        c0 = ln_gamma(y + 1.0) - math.log1p(x)
    else:
        c0 = ln_gamma(y)
    coeffs = [c0]
    if order >= 1:
        coeffs.append(digamma(y))
    fact = 1.0
    for k in range(2, order + 1):
        fact *= k
        coeffs.append(polygamma(k - 1, y) / fact)
    return Jet(x, tuple(coeffs))
