"""Command-line interface: ``lcmgamma check|tau|table|asym|seq``.

Exit status is 0 when a check passes, 2 when it finds a violation and 1 for
usage or domain errors.  Every command writes either CSV (header row, floats
with 17 significant digits) or JSON to standard output or ``--out``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Callable

import click

from . import families as F
from . import specfun as S
from . import tau_lab as T
from .errors import LcmGammaError
from .lcm_check import DEFAULT_TOLERANCE, Interval, Verdict, check_lcm

EXIT_PASS, EXIT_ERROR, EXIT_FAIL = 0, 1, 2
WORKERS_ENV = "LCMGAMMA_WORKERS"


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def render_csv(columns: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _note(msg: str) -> None:
    click.echo(msg, err=True)


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Preset:
    build: Callable[[int], F.LogDerivProvider]
    interval: str
    margin: float
    orders: int
    grid: int
    summary: str


def _fam(kind, **kw):
    return lambda order: F.make_provider(F.FamilySpec(F.FamilyKind(kind), **kw), max_order=order)


def _recip(order):
    return _fam("recip-gamma-root")(order)


def _theorem4(order):
    alpha = T.tau0_estimate(100).alpha_threshold
    return _fam("nu", alpha=alpha, reciprocal=True)(order)


PRESETS: dict[str, Preset] = {
    "theorem1": Preset(_recip, "-0.99:50", 0.0, 8, 400, "1/Gamma(x+1)^(1/x) on (-1, inf)"),
    "theorem2": Preset(_fam("nu", alpha=1.0), "-0.99:50", 0.0, 8, 400, "nu_1, sufficiency"),
    "theorem2-necessity": Preset(
        _fam("nu", alpha=0.9), "1:10000", 0.0, 2, 400, "nu_0.9, expected to fail"
    ),
    "theorem3": Preset(
        _fam("x-alpha", alpha=1.0), "0:inf", 0.01, 6, 400, "Gamma(x+1)^(1/x)/x on (0, inf)"
    ),
    "theorem3-reciprocal": Preset(
        _fam("x-alpha", alpha=-1.0, reciprocal=True), "0:inf", 0.01, 6, 400,
        "x^-1/Gamma(x+1)^(1/x) on (0, inf)",
    ),
    "theorem3-necessity": Preset(
        _fam("x-alpha", alpha=0.1, reciprocal=True), "0:inf", 0.01, 6, 400,
        "x^0.1/Gamma(x+1)^(1/x), expected to fail near 0",
    ),
    "theorem4": Preset(
        _theorem4, "-0.99:50", 0.0, 6, 400, "(x+1)^a/Gamma(x+1)^(1/x), a = 1/(1+tau0(100))"
    ),
    "theorem5": Preset(
        _fam("x-alpha", alpha=-2.0, side="negative"), "-0.99:-0.01", 0.0, 6, 400,
        "Gamma(x+1)^(1/x)/|x|^-2 on (-1, 0)",
    ),
    "theorem5-reciprocal": Preset(
        _fam("x-alpha", alpha=2.0, side="negative", reciprocal=True), "-0.99:-0.01", 0.0, 6, 400,
        "|x|^2/Gamma(x+1)^(1/x) on (-1, 0)",
    ),
    "theorem6": Preset(
        lambda o: F.shift_ratio(_recip(o), 1.0), "-0.99:50", 0.0, 6, 200, "F(x)/F(x+1)"
    ),
    "theorem6-necessity": Preset(
        lambda o: F.shift_ratio(_recip(o), -1.0), "0:50", 0.01, 6, 200, "F(x)/F(x-1), expected to fail"
    ),
    "theorem7": Preset(
        lambda o: F.power_product([(_recip(o), 2.0), (_fam("nu", alpha=1.0)(o), 0.5)]),
        "-0.99:50", 0.0, 6, 200, "F^2 * nu_1^0.5",
    ),
    "theorem8": Preset(
        lambda o: F.compose(_recip(o), "one-minus-exp"), "0:50", 0.0, 6, 200, "F(1 - exp(-x))"
    ),
    "q-ab": Preset(_fam("q", a=1.0, b=0.0), "1:100", 0.0, 4, 400, "Q_{1,0}"),
    "q-ab-necessity": Preset(_fam("q", a=0.0, b=1.0), "1:100", 0.0, 4, 400, "Q_{0,1}, expected to fail"),
}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _workers(requested: int) -> int:
    cap = os.environ.get(WORKERS_ENV)
    if cap:
        try:
            requested = min(requested, max(1, int(cap)))
        except ValueError:
            raise click.UsageError(f"{WORKERS_ENV} must be an integer, got {cap!r}")
    return max(1, requested)


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(v) for v in text.split(":"))
    except ValueError:
        raise click.UsageError(f"expected an integer range A:B, got {text!r}")
    if lo > hi:
        raise click.UsageError(f"empty range {text!r}")
    return lo, hi


format_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True
)
out_option = click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)


@click.group()
def cli():
    """Numerical checks of logarithmic complete monotonicity for Gamma-function families."""


@cli.command()
@click.option("--preset", type=click.Choice(sorted(PRESETS)), default=None)
@click.option("--family", type=click.Choice([k.value for k in F.FamilyKind]), default=None)
@click.option("--alpha", type=float, default=0.0)
@click.option("--a", "a", type=float, default=0.0)
@click.option("--b", "b", type=float, default=0.0)
@click.option("--c", "c_power", type=float, default=1.0, help="exponent of Q_{a,b}")
@click.option("--reciprocal", is_flag=True, help="check 1/f instead of f")
@click.option("--side", type=click.Choice(["positive", "negative"]), default="positive")
@click.option("--shift", type=float, default=None, help="check f(x)/f(x+SHIFT)")
@click.option("--compose", "inner", type=click.Choice(F.INNER_CATALOG), default=None)
@click.option("--interval", default=None, help="LO:HI, HI may be inf")
@click.option("--margin", type=float, default=None, help="offset from both interval ends")
@click.option("--orders", type=click.IntRange(1, F.MAX_FAMILY_ORDER), default=None)
@click.option("--grid", type=click.IntRange(16), default=None)
@click.option("--tolerance", type=click.FloatRange(0), default=DEFAULT_TOLERANCE, show_default=True)
@click.option("--refine", is_flag=True, help="double the grid once")
@click.option("--workers", type=click.IntRange(1), default=1, show_default=True)
@format_option
@out_option
def check(preset, family, alpha, a, b, c_power, reciprocal, side, shift, inner, interval, margin,
          orders, grid, tolerance, refine, workers, fmt, out):
    """Scan (-1)^n [ln f]^(n) for n = 1..ORDERS over an interval."""
    if (preset is None) == (family is None):
        raise click.UsageError("give exactly one of --preset or --family")
    if preset:
        ps = PRESETS[preset]
        orders = orders or ps.orders
        provider = ps.build(orders)
        interval = interval or ps.interval
        margin = ps.margin if margin is None else margin
        grid = grid or ps.grid
    else:
        if interval is None:
            raise click.UsageError("--interval is required with --family")
        orders = orders or 8
        grid = grid or 400
        margin = margin or 0.0
        spec = F.FamilySpec(F.FamilyKind(family), alpha, a, b, c_power, reciprocal, side)
        provider = F.make_provider(spec, max_order=orders)
        if shift is not None:
            provider = F.shift_ratio(provider, shift)
        if inner is not None:
            provider = F.compose(provider, inner)
    iv = Interval.parse(interval, margin)
    report = check_lcm(provider, iv, orders, grid, tolerance, _workers(workers), refine)
    if fmt == "json":
        _emit(render_json(report.to_dict()), out)
    else:
        rows = [
            {
                "order": r.order,
                "min_signed_value": r.min_signed_value,
                "argmin": r.argmin,
                "passed": r.min_signed_value >= -report.tolerance,
            }
            for r in report.records
        ]
        _emit(render_csv(["order", "min_signed_value", "argmin", "passed"], rows), out)
    w = report.witness
    if w is None:
        _note(f"{report.verdict.value}: {report.description}, orders 1..{orders}, {report.points} points")
    else:
        _note(
            f"{report.verdict.value}: {report.description}, order {w.order} "
            f"reaches {w.min_signed_value:.6g} at x = {w.argmin!r}"
        )
    return EXIT_PASS if report.verdict is Verdict.PASS else EXIT_FAIL


def _tau_row(r: T.TauResult) -> dict:
    return {
        "s": r.s,
        "t_star": r.t_star,
        "tau_max": r.tau_max,
        "bracket_lo": r.bracket[0],
        "bracket_hi": r.bracket[1],
    }


@cli.command()
@click.option("--s", "s", type=float, default=None)
@click.option("--scan", default=None, help="integer range A:B")
@format_option
@out_option
def tau(s, scan, fmt, out):
    """Maximize tau(s, t) over t for one s or a range of integers."""
    if (s is None) == (scan is None):
        raise click.UsageError("give exactly one of --s or --scan")
    if scan:
        lo, hi = _range(scan)
        results = [T.tau_max(k) for k in range(lo, hi + 1)]
    else:
        results = [T.tau_max(s)]
    if fmt == "json":
        _emit(render_json([r.to_dict() for r in results]), out)
    else:
        cols = ["s", "t_star", "tau_max", "bracket_lo", "bracket_hi"]
        _emit(render_csv(cols, [_tau_row(r) for r in results]), out)
    return EXIT_PASS


NBX_LIMIT = -math.pi ** 2 / 12


def _nbx_probe(x: float) -> float:
    return -F.g_derivs(1, x)


def table_remark_tau():
    rows = []
    for s in (2, 3):
        r = T.tau_max(s)
        rows.append({"s": s, "t_star": r.t_star, "tau_max": r.tau_max})
    return ["s", "t_star", "tau_max"], rows


def table_thresholds():
    rows = []
    for s in (2, 3):
        v = T.tau_max(s).tau_max
        rows.append({"source": f"tau_max({s})", "tau": v, "alpha_threshold": 1.0 / (1.0 + v), "s_at": s})
    est = T.tau0_estimate(100)
    rows.append(
        {"source": "tau0(s<=100)", "tau": est.tau0, "alpha_threshold": est.alpha_threshold,
         "s_at": est.s_at, "at_boundary": est.at_boundary}
    )
    return ["source", "tau", "alpha_threshold", "s_at", "at_boundary"], rows


def table_nbx_limit():
    """[ln Gamma(1+x) - x psi(1+x)] / x^2 at x = 10^-k against its limit."""
    rows = []
    for k in range(2, 6):
        x = 10.0 ** -k
        probe = _nbx_probe(x)
        naive = (S.ln_gamma(1.0 + x) - x * S.digamma(1.0 + x)) / (x * x)
        # the probe is analytic with a linear leading error, so one
        # Richardson step against x/10 removes it
        extrapolated = (10.0 * _nbx_probe(x / 10.0) - probe) / 9.0
        rows.append({
            "x": x, "probe": probe, "naive": naive, "extrapolated": extrapolated,
            "limit": NBX_LIMIT, "abs_error": abs(probe - NBX_LIMIT),
        })
    return ["x", "probe", "naive", "extrapolated", "limit", "abs_error"], rows


def table_hirsch():
    rows = []
    for k in (10, 100, 1000, 10000):
        v = T.hirsch_constant(k)
        rows.append({"k_max": k, "value": v, "tail_bound": T.hirsch_tail_bound(k),
                     "abs_error": abs(v - T.HIRSCH_CONSTANT)})
    return ["k_max", "value", "tail_bound", "abs_error"], rows


TABLES = {
    "remark-tau": table_remark_tau,
    "thresholds": table_thresholds,
    "nbx-limit": table_nbx_limit,
    "hirsch": table_hirsch,
}


@cli.command()
@click.option("--name", type=click.Choice(sorted(TABLES)), required=True)
@format_option
@out_option
def table(name, fmt, out):
    """Reproduce one of the numeric reference tables."""
    cols, rows = TABLES[name]()
    _emit(render_json(rows) if fmt == "json" else render_csv(cols, rows), out)
    return EXIT_PASS


DEFAULT_ASYM_X = "1,2,5,10,20,50,100,1000"


@cli.command()
@click.option("--kind", type=click.Choice([k.value for k in S.AsymptoticKind]), default="lngamma")
@click.option("--terms", type=click.IntRange(0, len(S.BERNOULLI)), default=1, show_default=True)
@click.option("--x", "xs", default=DEFAULT_ASYM_X, show_default=True, help="comma-separated points >= 1")
@format_option
@out_option
def asym(kind, terms, xs, fmt, out):
    """Compare ln Gamma or psi with their truncated large-x expansions."""
    try:
        points = [float(v) for v in xs.split(",")]
    except ValueError:
        raise click.UsageError(f"malformed --x list {xs!r}")
    series = S.AsymptoticSeries(S.AsymptoticKind(kind), terms)
    exact_fn = S.ln_gamma if series.kind is S.AsymptoticKind.LNGAMMA else S.digamma
    rows = []
    for x in points:
        approx = S.asym_eval(series, x)
        exact = exact_fn(x)
        rows.append({"x": x, "exact": exact, "expansion": approx, "abs_error": abs(approx - exact)})
    cols = ["x", "exact", "expansion", "abs_error"]
    _emit(render_json(rows) if fmt == "json" else render_csv(cols, rows), out)
    return EXIT_PASS


SEQ_TOLERANCE = 1e-12


@cli.command()
@click.option("--m", "m", type=click.IntRange(1), default=1, show_default=True)
@click.option("--n", "n", type=click.IntRange(0), default=0, show_default=True)
@click.option("--kmax", type=click.IntRange(2), default=300, show_default=True)
@format_option
@out_option
def seq(m, n, kmax, fmt, out):
    """Tabulate factorial-root ratios for k = 1..KMAX and test monotonicity."""
    rows = []
    prev = None
    for k in range(1, kmax + 1):
        v = F.factorial_root_ratio(k, m, n)
        rows.append({"k": k, "value": v, "delta": None if prev is None else v - prev})
        prev = v
    deltas = [r["delta"] for r in rows[1:]]
    worst = min(deltas)
    ok = worst >= -SEQ_TOLERANCE
    summary = {"nondecreasing": ok, "min_delta": worst, "kmax": kmax, "m": m, "n": n}
    if fmt == "json":
        _emit(render_json({"rows": rows, "summary": summary}), out)
    else:
        _emit(render_csv(["k", "value", "delta"], rows), out)
        _note(f"{'nondecreasing' if ok else 'NOT nondecreasing'}: min delta {worst:.6g} over k <= {kmax}")
    return EXIT_PASS if ok else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="lcmgamma", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_ERROR
    except click.exceptions.Abort:
        return EXIT_ERROR
    except LcmGammaError as exc:
        _note(f"error: {exc}")
        return EXIT_ERROR
    return rv if isinstance(rv, int) else EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
