"""The bound function

    tau(s, t) = (1/s) [t - (t + s + 1) (t / (t + 1))^(s + 1)],   s, t > 0,

its maximum over ``t`` and the constants derived from it.

With ``c = s + 1`` the bracket factors as ``t [1 - exp(phi)]`` where
``phi = ln(1 + c/t) - c ln(1 + 1/t)``.  Evaluating ``phi`` with ``log1p``
(or its series when ``c/t`` is small) and finishing with ``expm1`` keeps
full relative accuracy even where the two terms of the bracket cancel.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

from scipy import optimize

from .errors import DomainError, SolverError
from .families import g_derivs
from .specfun import EULER_GAMMA

__all__ = [
    "tau",
    "tau_dt",
    "TauResult",
    "tau_max",
    "tau_ray_bound",
    "Tau0Estimate",
    "tau0_estimate",
    "tau0_lower_bound",
    "hirsch_constant",
    "hirsch_tail_bound",
    "HIRSCH_CONSTANT",
    "HIRSCH_CONSTANT_ERROR",
]

MAX_S = 1e4
PRESCAN_POINTS = 1000
GOLDEN_TOL = 1e-10
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

# -gamma + sum_{k>=1} (1/k - atan(1/k)), summed to 40 digits offline
HIRSCH_CONSTANT = -0.30164032046753319788753
HIRSCH_CONSTANT_ERROR = 1e-20


def _check_pos(v: float, name: str) -> float:
    v = float(v)
    if not (v > 0.0 and math.isfinite(v)):
        raise DomainError(f"{name} must be positive and finite, got {v}")
    return v


def _phi(s: float, t: float) -> float:
    # ln(1 + c u) - c ln(1 + u) with c = s + 1, u = 1/t; the linear terms
    # cancel exactly, so small c u goes through the series
    u = 1.0 / t
    c = s + 1.0
    if c * u < 1e-2:
        ls = math.log1p(s)
        total = 0.0
        power = -u
        for k in range(2, 14):
            power *= -u
            # c^k - c without cancellation when s is small
            total += c * math.expm1((k - 1) * ls) * power / k
        return -total
    return math.log1p(s * u / (1.0 + u)) - s * math.log1p(u)


def tau(s: float, t: float) -> float:
    s = _check_pos(s, "s")
    t = _check_pos(t, "t")
    return t / s * -math.expm1(_phi(s, t))


def tau_dt(s: float, t: float) -> float:
    """Partial derivative of tau in ``t``."""
    s = _check_pos(s, "s")
    t = _check_pos(t, "t")
    c = s + 1.0
    phi = _phi(s, t)
    return -math.expm1(phi) / s - math.exp(phi) * c / ((t + 1.0) * (t + c))


@dataclass(frozen=True)
class TauResult:
    s: float
    t_star: float
    tau_max: float
    bracket: tuple[float, float]
    evaluations: int

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "TauResult":
        return cls(
            s=float(d["s"]),
            t_star=float(d["t_star"]),
            tau_max=float(d["tau_max"]),
            bracket=tuple(float(v) for v in d["bracket"]),
            evaluations=int(d["evaluations"]),
        )


def _prescan(s: float):
    # log-spaced t from 1e-4 * (s+1) to 1e4 * (s+1)
    lo, hi = math.log(1e-4 * (s + 1.0)), math.log(1e4 * (s + 1.0))
    ts = [math.exp(lo + (hi - lo) * i / (PRESCAN_POINTS - 1)) for i in range(PRESCAN_POINTS)]
    vs = [tau(s, t) for t in ts]
    peaks = [
        i for i in range(1, PRESCAN_POINTS - 1) if vs[i] >= vs[i - 1] and vs[i] >= vs[i + 1]
    ]
    # neighbouring indices of a flat top count as one peak
    separated = [i for j, i in enumerate(peaks) if j == 0 or i - peaks[j - 1] > 1]
    if len(separated) > 1:
        raise SolverError(f"tau({s}, .) has several local maxima near t = {[ts[i] for i in separated]}")
    if not separated:
        raise SolverError(f"no interior maximum of tau({s}, .) found in [{ts[0]:.3g}, {ts[-1]:.3g}]")
    return ts, vs, separated[0]


def tau_max(s: float) -> TauResult:
    """Maximize ``tau(s, .)`` over ``(0, inf)``.

    A log-spaced pre-scan checks that there is a single local maximum and
    seeds the bracket, which is widened until it encloses the peak.
    Golden-section search narrows it to ``1e-10`` in ``t``; a final root
    solve of ``d tau / dt = 0`` inside the last bracket removes the
    ``sqrt(eps)`` floor that limits any comparison-only search.
    """
    s = _check_pos(s, "s")
    if s > MAX_S:
        raise DomainError(f"s must not exceed {MAX_S:g}, got {s}")
    ts, vs, i = _prescan(s)
    evals = len(ts)
    f = lambda t: tau(s, t)
    a, m, b = ts[i - 1], ts[i], ts[i + 1]
    fm = vs[i]
    for _ in range(60):
        fa, fb = f(a), f(b)
        evals += 2
        if fa <= fm and fb <= fm:
            break
        a, b = a / 2.0, b * 2.0
    else:
        raise SolverError(f"could not bracket the maximum of tau({s}, .)")
    bracket = (a, b)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    evals += 2
    while b - a > GOLDEN_TOL * max(1.0, m):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
        evals += 1
    t_star = 0.5 * (a + b)
    # tau is flat to rounding within ~1e-8 relative of the peak, so the
    # comparison-only bracket may miss it; the derivative changes sign cleanly
    lo, hi = t_star * (1.0 - 1e-5), t_star * (1.0 + 1e-5)
    if tau_dt(s, lo) > 0 > tau_dt(s, hi):
        t_star = optimize.brentq(lambda t: tau_dt(s, t), lo, hi, xtol=1e-15, rtol=1e-15)
        evals += 10
    value = f(t_star)
    if not 0.0 < value < 1.0:
        raise SolverError(f"tau_max({s}) = {value} is outside (0, 1)")
    return TauResult(s, t_star, value, bracket, evals)


def tau_ray_bound(mu: float, t: float) -> tuple[float, float]:
    """``(tau(mu t, t), (1 - exp(-mu)) / mu)``; the first is below the second."""
    mu = _check_pos(mu, "mu")
    t = _check_pos(t, "t")
    return tau(mu * t, t), -math.expm1(-mu) / mu


class Tau0Estimate(NamedTuple):
    tau0: float
    s_at: int
    alpha_threshold: float
    at_boundary: bool


def tau0_estimate(s_max: int) -> Tau0Estimate:
    """Largest ``tau_max(s)`` over integers ``1 <= s <= s_max``.

    ``at_boundary`` is set when the maximum sits at ``s_max`` itself, i.e.
    the profile is still rising and a larger ``s_max`` may give more.
    """
    if isinstance(s_max, bool) or int(s_max) != s_max or s_max < 3:
        raise DomainError(f"s_max must be an integer >= 3, got {s_max!r}")
    s_max = int(s_max)
    if s_max > MAX_S:
        raise DomainError(f"s_max must not exceed {MAX_S:g}, got {s_max}")
    best = max(((tau_max(s).tau_max, s) for s in range(1, s_max + 1)))
    tau0, s_at = best
    return Tau0Estimate(tau0, s_at, 1.0 / (1.0 + tau0), s_at == s_max)


def tau0_lower_bound(x: float) -> float:
    """``x^2 / ((x+1)(x psi(x+1) - ln Gamma(x+1))) - 1`` for ``x > -1``.

    Every admissible tau_0 is at least this value at every x.  The
    denominator equals ``(x+1) x^2 g'(x)``, which is how it is evaluated, so
    the removable singularity at 0 is harmless.
    """
    x = float(x)
    if not x > -1.0 or not math.isfinite(x):
        raise DomainError(f"tau0_lower_bound needs x > -1, got {x}")
    return 1.0 / ((x + 1.0) * g_derivs(1, x)) - 1.0


def _hirsch_term(k: int) -> float:
    u = 1.0 / k
    if k < 20:
        return u - math.atan(u)
    # u^3/3 - u^5/5 + u^7/7 - ...
    u2 = u * u
    total = 0.0
    power = u * u2
    for j in range(1, 8):
        total += (-1) ** (j + 1) * power / (2 * j + 1)
        power *= u2
    return total


def hirsch_tail_bound(k_max: int) -> float:
    """Upper bound ``1/(6 k_max^2)`` on the neglected terms ``k > k_max``."""
    return 1.0 / (6.0 * k_max * k_max)


def hirsch_constant(k_max: int = 1000) -> float:
    """``-gamma + sum_{k>=1} (1/k - atan(1/k))``.

    The first ``k_max`` terms are summed exactly; the rest is replaced by
    the Euler-Maclaurin estimate of ``sum_{k>k_max} (1/(3k^3) - 1/(5k^5))``.
    The remaining error is far below :func:`hirsch_tail_bound`.
    """
    if isinstance(k_max, bool) or int(k_max) != k_max or k_max < 10:
        raise DomainError(f"k_max must be an integer >= 10, got {k_max!r}")
    k_max = int(k_max)
    head = math.fsum(_hirsch_term(k) for k in range(1, k_max + 1))
    n = float(k_max)
    # sum_{k>n} k^-3 ~ 1/(2n^2) - 1/(2n^3) + 1/(4n^4);  sum_{k>n} k^-5 ~ 1/(4n^4)
    tail = (1.0 / (2 * n * n) - 1.0 / (2 * n ** 3) + 1.0 / (4 * n ** 4)) / 3.0 - 1.0 / (20 * n ** 4)
    return -EULER_GAMMA + head + tail
