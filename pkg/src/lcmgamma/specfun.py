"""Double-precision log-gamma, digamma, polygamma and integer zeta values.

Every function shifts its argument upward with the standard recurrences until
the Stirling-type asymptotic series converges to full precision, then sums a
fixed number of Bernoulli-number corrections.  The Taylor series of
``ln Gamma(1 + z)`` handles the neighbourhoods of the zeros of ``ln Gamma``
so that relative accuracy survives there too.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "EULER_GAMMA",
    "BERNOULLI",
    "AsymptoticKind",
    "AsymptoticSeries",
    "ln_gamma",
    "digamma",
    "polygamma",
    "zeta_int",
    "asym_eval",
]

EULER_GAMMA = 0.5772156649015329
HALF_LN_2PI = 0.5 * math.log(2.0 * math.pi)

# B_2, B_4, ..., B_20
BERNOULLI = tuple(
    float(b)
    for b in (
        Fraction(1, 6),
        Fraction(-1, 30),
        Fraction(1, 42),
        Fraction(-1, 30),
        Fraction(5, 66),
        Fraction(-691, 2730),
        Fraction(7, 6),
        Fraction(-3617, 510),
        Fraction(43867, 798),
        Fraction(-174611, 330),
    )
)

SHIFT_THRESHOLD = 12.0
MAX_POLYGAMMA_ORDER = 20
MAX_ZETA_ARG = 64

# positive zero of digamma, split into a double and its residual
_DIGAMMA_ROOT_HI = 1.4616321449683622
_DIGAMMA_ROOT_LO = 9.549995429965697e-17


def _check_real(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


class AsymptoticKind(enum.Enum):
    LNGAMMA = "lngamma"
    DIGAMMA = "digamma"


@dataclass(frozen=True)
class AsymptoticSeries:
    """Truncated large-argument expansion of ``ln Gamma`` or ``psi``.

    ``terms`` counts the Bernoulli corrections kept after the leading part:
    ``terms=1`` gives the familiar ``1/(12x)`` (resp. ``-1/(12x^2)``).
    """

    kind: AsymptoticKind
    terms: int = 1

    def __post_init__(self):
        if not isinstance(self.kind, AsymptoticKind):
            object.__setattr__(self, "kind", AsymptoticKind(self.kind))
        if not 0 <= self.terms <= len(BERNOULLI):
            raise DomainError(f"terms must lie in [0, {len(BERNOULLI)}], got {self.terms}")


def _stirling_lngamma(x: float, terms: int) -> float:
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    power = inv
    for k in range(1, terms + 1):
        corr += BERNOULLI[k - 1] / (2 * k * (2 * k - 1)) * power
        power *= inv2
    return (x - 0.5) * math.log(x) - x + HALF_LN_2PI + corr


def _stirling_digamma(x: float, terms: int) -> float:
    inv2 = 1.0 / (x * x)
    corr = 0.0
    power = inv2
    for k in range(1, terms + 1):
        corr += BERNOULLI[k - 1] / (2 * k) * power
        power *= inv2
    return math.log(x) - 0.5 / x - corr


def asym_eval(series: AsymptoticSeries, x: float) -> float:
    """Value of the truncated expansion ``series`` at ``x >= 1``."""
    x = _check_real(x)
    if x < 1.0:
        raise DomainError(f"asymptotic expansion requires x >= 1, got {x}")
    if series.kind is AsymptoticKind.LNGAMMA:
        return _stirling_lngamma(x, series.terms)
    return _stirling_digamma(x, series.terms)


def _zeta_any(k: int) -> float:
    # direct sum to N-1, then Euler-Maclaurin tail at N
    if k > 60:
        return 1.0 + 2.0 ** -k + 3.0 ** -k
    n = 10
    total = 0.0
    for j in range(n - 1, 0, -1):
        total += float(j) ** -k
    tail = n ** (1 - k) / (k - 1) + 0.5 * n ** -k
    rising = float(k)
    power = float(n) ** (-k - 1)
    fact = 2.0
    for i, b in enumerate(BERNOULLI, start=1):
        term = b / fact * rising * power
        tail += term
        if abs(term) < 1e-18 * tail:
            break
        rising *= (k + 2 * i - 1) * (k + 2 * i)
        power /= n * n
        fact *= (2 * i + 1) * (2 * i + 2)
    return total + tail


@functools.lru_cache(maxsize=None)
def zeta_int(k: int) -> float:
    """Riemann zeta at an integer ``2 <= k <= 64``."""
    if isinstance(k, bool) or int(k) != k:
        raise DomainError(f"zeta_int needs an integer argument, got {k!r}")
    k = int(k)
    if not 2 <= k <= MAX_ZETA_ARG:
        raise DomainError(f"zeta_int defined for 2 <= k <= {MAX_ZETA_ARG}, got {k}")
    return _zeta_any(k)


_ZETA = (math.nan, math.nan) + tuple(_zeta_any(k) for k in range(2, 121))
# ln Gamma(1+z) = -gamma z + sum_{k>=2} LNGAMMA1P_COEFFS[k] z^k
_LNGAMMA1P_COEFFS = (0.0, -EULER_GAMMA) + tuple(
    (-1) ** k * _ZETA[k] / k for k in range(2, 121)
)


def _lngamma1p_series(z: float) -> float:
    # |z| <= 1/2; 0.5^k k^-1 < 1e-18 by k = 55
    top = 60 if abs(z) > 0.25 else 32
    acc = 0.0
    for k in range(top, 0, -1):
        acc = (acc + _LNGAMMA1P_COEFFS[k]) * z
    return acc


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for real ``x > 0``."""
    x = _check_real(x)
    if x <= 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    if x == 1.0 or x == 2.0:
        return 0.0
    if x < 0.5:
        return _lngamma1p_series(x) - math.log(x)
    if x <= 1.5:
        return _lngamma1p_series(x - 1.0)
    if x <= 2.5:
        z = x - 2.0
        return math.log1p(z) + _lngamma1p_series(z)
    if x < SHIFT_THRESHOLD:
        # downward recurrence onto (1.5, 2.5]
        prod = 1.0
        while x > 2.5:
            x -= 1.0
            prod *= x
        return math.log(prod) + ln_gamma(x)
    return _stirling_lngamma(x, len(BERNOULLI))


@functools.lru_cache(maxsize=1)
def _digamma_root_coeffs() -> tuple[float, ...]:
    coeffs = []
    fact = 1.0
    for k in range(1, 19):
        fact *= k
        coeffs.append(polygamma(k, _DIGAMMA_ROOT_HI) / fact)
    return tuple(coeffs)


def digamma(x: float) -> float:
    """The digamma function psi(x) = Gamma'(x)/Gamma(x) for ``x > 0``."""
    x = _check_real(x)
    if x <= 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    dx = x - _DIGAMMA_ROOT_HI
    if abs(dx) < 0.1:
        dx -= _DIGAMMA_ROOT_LO
        total = 0.0
        for c in reversed(_digamma_root_coeffs()):
            total = (total + c) * dx
        return total
    acc = 0.0
    while x < SHIFT_THRESHOLD:
        acc += 1.0 / x
        x += 1.0
    return _stirling_digamma(x, len(BERNOULLI)) - acc


def _polygamma_asymptotic(n: int, x: float) -> float:
    # (n-1)!/x^n + n!/(2x^{n+1}) + sum_k B_2k (2k+n-1)!/((2k)! x^{2k+n})
    inv = 1.0 / x
    inv2 = inv * inv
    fact_nm1 = math.factorial(n - 1)
    base = inv ** n
    total = fact_nm1 * base * (1.0 + 0.5 * n * inv)
    ratio = float(fact_nm1)  # (2k+n-1)!/(2k)! at k=0
    power = base * inv2
    for k, b in enumerate(BERNOULLI, start=1):
        ratio *= (2 * k + n - 2) * (2 * k + n - 1) / ((2 * k - 1) * (2 * k))
        total += b * ratio * power
        power *= inv2
    return total


def polygamma(n: int, x: float) -> float:
    """The n-th derivative of digamma, ``1 <= n <= 20``, ``x > 0``."""
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"polygamma order must be an integer, got {n!r}")
    n = int(n)
    if not 1 <= n <= MAX_POLYGAMMA_ORDER:
        raise DomainError(f"polygamma order must lie in [1, {MAX_POLYGAMMA_ORDER}], got {n}")
    x = _check_real(x)
    if x <= 0.0:
        raise DomainError(f"polygamma requires x > 0, got {x}")
    threshold = SHIFT_THRESHOLD + n
    m = max(0, math.ceil(threshold - x))
    shifted = 0.0
    # smallest terms first
    for k in range(m - 1, -1, -1):
        try:
            shifted += (x + k) ** -(n + 1)
        except OverflowError:
            return math.copysign(math.inf, (-1) ** (n + 1))
    total = _polygamma_asymptotic(n, x + m) + math.factorial(n) * shifted
    if not math.isfinite(total):
        return math.copysign(math.inf, (-1) ** (n + 1))
    return total if n % 2 else -total
