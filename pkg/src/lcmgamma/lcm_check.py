"""Grid scans of the signed log-derivatives ``s_n(x) = (-1)^n [ln f]^(n)(x)``.

A function is logarithmically completely monotonic when every ``s_n`` with
``n >= 1`` is nonnegative.  :func:`check_lcm` samples the first ``N`` of them
on a grid and reports the smallest value per order.  PASS only means that no
counterexample was found; FAIL comes with the grid point that witnesses it.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import DomainError, NonFiniteEvaluation
from .families import LogDerivProvider

__all__ = [
    "Interval",
    "Verdict",
    "OrderRecord",
    "CheckReport",
    "grid_points",
    "check_lcm",
    "min_signed_derivative",
    "fd_oracle",
    "DEFAULT_TOLERANCE",
]

DEFAULT_TOLERANCE = 1e-9
MIN_GRID = 16
CLUSTER = 2.0


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    lo_margin: float = 0.0
    hi_margin: float = 0.0

    def __post_init__(self):
        for name in ("lo", "hi", "lo_margin", "hi_margin"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if math.isnan(self.lo) or math.isnan(self.hi) or math.isinf(self.lo):
            raise DomainError(f"interval needs a finite lower end, got ({self.lo}, {self.hi})")
        if self.lo_margin < 0 or self.hi_margin < 0:
            raise DomainError("interval margins must be nonnegative")
        lo, hi = self.effective
        if not lo < hi:
            raise DomainError(f"empty interval after margins: [{lo}, {hi}]")

    @property
    def effective(self) -> tuple[float, float]:
        hi = self.hi if math.isinf(self.hi) else self.hi - self.hi_margin
        return (self.lo + self.lo_margin, hi)

    @classmethod
    def parse(cls, text: str, margin: float = 0.0) -> "Interval":
        """Parse ``"lo:hi"``; ``hi`` may be ``inf``."""
        try:
            lo, hi = text.split(":")
            return cls(float(lo), float(hi), margin, margin)
        except ValueError as exc:
            raise DomainError(f"malformed interval {text!r}, expected LO:HI") from exc


class Verdict(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class OrderRecord:
    order: int
    min_signed_value: float
    argmin: float


@dataclass(frozen=True)
class CheckReport:
    description: str
    interval: Interval
    max_order: int
    grid_size: int
    records: tuple[OrderRecord, ...]
    verdict: Verdict
    first_fail_order: int | None
    tolerance: float
    points: int = field(default=0)

    @property
    def witness(self) -> OrderRecord | None:
        """Record of the first failing order, if any."""
        if self.first_fail_order is None:
            return None
        return self.records[self.first_fail_order - 1]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(
            description=d["description"],
            interval=Interval(**d["interval"]),
            max_order=int(d["max_order"]),
            grid_size=int(d["grid_size"]),
            records=tuple(OrderRecord(**r) for r in d["records"]),
            verdict=Verdict(d["verdict"]),
            first_fail_order=d["first_fail_order"],
            tolerance=float(d["tolerance"]),
            points=int(d.get("points", 0)),
        )


def _cluster(u: float) -> float:
    # maps [0, 1] onto itself, dense near both ends
    return 0.5 * (1.0 + math.tanh(CLUSTER * (2.0 * u - 1.0)) / math.tanh(CLUSTER))


def grid_points(iv: Interval, grid: int) -> list[float]:
    """Grid over the margined interval, clustered toward both ends.

    ``grid`` is the number of subintervals of the underlying uniform grid, so
    doubling it keeps every old point.  An infinite upper end is reached
    through ``x = lo + v / (1 - v)``, omitting ``v = 1``.
    """
    if isinstance(grid, bool) or int(grid) != grid or grid < MIN_GRID:
        raise DomainError(f"grid must be an integer >= {MIN_GRID}, got {grid!r}")
    lo, hi = iv.effective
    if math.isinf(hi):
        pts = []
        for i in range(grid):
            v = _cluster(i / grid)
            pts.append(lo + v / (1.0 - v))
        return pts
    width = hi - lo
    pts = [lo + width * _cluster(i / grid) for i in range(grid + 1)]
    pts[0], pts[-1] = lo, hi
    return pts


def _signed(p: LogDerivProvider, x: float, max_order: int) -> list[float]:
    vals = p.eval_all(x, max_order)
    out = []
    for n in range(1, max_order + 1):
        v = vals[n]
        if not math.isfinite(v):
            raise NonFiniteEvaluation(x, n, v)
        out.append(v if n % 2 == 0 else -v)
    return out


def _scan_chunk(args):
    p, xs, max_order = args
    return [_signed(p, x, max_order) for x in xs]


def _scan(p: LogDerivProvider, xs: list[float], max_order: int, workers: int) -> list[list[float]]:
    if workers <= 1 or len(xs) < 2 * workers:
        return _scan_chunk((p, xs, max_order))
    size = math.ceil(len(xs) / workers)
    chunks = [(p, xs[i : i + size], max_order) for i in range(0, len(xs), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_scan_chunk, chunks))
    return [row for part in parts for row in part]


def _check_coverage(p: LogDerivProvider, iv: Interval) -> None:
    lo, hi = iv.effective
    if not p.contains(lo) or (math.isinf(hi) and not math.isinf(p.domain[1])) or (
        math.isfinite(hi) and not p.contains(hi)
    ):
        raise DomainError(
            f"interval [{lo}, {hi}] is not inside the domain {p.domain} of {p.description} "
            f"(endpoint margin {p.margin})"
        )


def check_lcm(
    p: LogDerivProvider,
    iv: Interval,
    max_order: int = 8,
    grid: int = 400,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
    refine: bool = False,
) -> CheckReport:
    """Scan orders ``1..max_order`` of ``p`` over ``iv``.

    The verdict is PASS when every order's minimum is at least
    ``-tolerance``.  With ``refine`` the grid is doubled once and the finer
    scan is reported.
    """
    if isinstance(max_order, bool) or int(max_order) != max_order or not 1 <= max_order <= p.max_order:
        raise DomainError(f"max_order must lie in [1, {p.max_order}], got {max_order!r}")
    if not tolerance >= 0:
        raise DomainError(f"tolerance must be nonnegative, got {tolerance}")
    _check_coverage(p, iv)
    if refine:
        grid = 2 * grid
    xs = grid_points(iv, grid)
    rows = _scan(p, xs, int(max_order), workers)
    records = []
    first_fail = None
    for n in range(1, int(max_order) + 1):
        i_min = min(range(len(xs)), key=lambda i: rows[i][n - 1])
        value = rows[i_min][n - 1]
        records.append(OrderRecord(n, value, xs[i_min]))
        if first_fail is None and value < -tolerance:
            first_fail = n
    return CheckReport(
        description=p.description,
        interval=iv,
        max_order=int(max_order),
        grid_size=grid,
        records=tuple(records),
        verdict=Verdict.PASS if first_fail is None else Verdict.FAIL,
        first_fail_order=first_fail,
        tolerance=float(tolerance),
        points=len(xs),
    )


def min_signed_derivative(p: LogDerivProvider, order: int, iv: Interval, grid: int = 400) -> tuple[float, float]:
    """``(min, argmin)`` of ``(-1)^order [ln f]^(order)`` over the grid."""
    if isinstance(order, bool) or int(order) != order or not 0 <= order <= p.max_order:
        raise DomainError(f"order must lie in [0, {p.max_order}], got {order!r}")
    _check_coverage(p, iv)
    best = (math.inf, math.nan)
    sign = -1.0 if order % 2 else 1.0
    for x in grid_points(iv, grid):
        v = p.eval_all(x, order)[order]
        if not math.isfinite(v):
            raise NonFiniteEvaluation(x, order, v)
        if sign * v < best[0]:
            best = (sign * v, x)
    return best


# fourth-order accurate central stencils: (offset, weight)
_STENCILS = {
    1: ((-2, 1 / 12), (-1, -2 / 3), (1, 2 / 3), (2, -1 / 12)),
    2: ((-2, -1 / 12), (-1, 4 / 3), (0, -5 / 2), (1, 4 / 3), (2, -1 / 12)),
    3: ((-3, 1 / 8), (-2, -1.0), (-1, 13 / 8), (1, -13 / 8), (2, 1.0), (3, -1 / 8)),
    4: ((-3, -1 / 6), (-2, 2.0), (-1, -13 / 2), (0, 28 / 3), (1, -13 / 2), (2, 2.0), (3, -1 / 6)),
}
FD_LADDER = (1e-2, 5e-3, 2.5e-3)
# higher orders divide by h^k; wider steps keep roundoff below truncation
_LADDER_SCALE = {1: 1.0, 2: 1.0, 3: 4.0, 4: 8.0}


def fd_oracle(p: LogDerivProvider, order: int, x: float) -> float:
    """Richardson-extrapolated central difference of ``ln f`` at ``x``.

    Uses only ``p.eval(., 0)``, so it is independent of the provider's
    derivative machinery.
    """
    if order not in _STENCILS:
        raise DomainError(f"fd_oracle supports orders 1..4, got {order!r}")
    scale = _LADDER_SCALE[order]
    steps = [h * scale for h in FD_LADDER]
    reach = 10 * steps[0]
    if not (p.contains(x - reach) and p.contains(x + reach)):
        raise DomainError(f"finite-difference ladder around x={x} leaves the domain {p.domain}")
    stencil = _STENCILS[order]
    cache = {}

    def f(t):
        if t not in cache:
            cache[t] = p.eval(t, 0)
        return cache[t]

    d = [math.fsum(w * f(x + o * h) for o, w in stencil) / h ** order for h in steps]
    # error expansion in h^4, h^6, ...
    r = [(16 * d[i + 1] - d[i]) / 15 for i in range(2)]
    return (64 * r[1] - r[0]) / 63
