"""Exact lattice point enumeration under Q <= x and error-term statistics.

A(x) counts all integer pairs with Q(m, n) <= x (origin included), B(x)
only those with gcd(|m|, |n|) = 1. Their deviations from the area terms,

    P(x) = A(x) - (2 pi / sqrt(D)) x,
    R(x) = B(x) - (12 / (pi sqrt(D))) x,

are the quantities of interest; the integral of |R| over [1, Y] is
computed exactly from the piecewise linear structure of R.
"""

from __future__ import annotations

import datetime
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetError, DomainError
from .forms import QuadraticForm, lambda1

__all__ = [
    "ValueList",
    "CountResult",
    "DEFAULT_POINT_BUDGET",
    "enumerate_points",
    "count",
    "count_many",
    "mobius_sieve",
    "count_primitive_moebius",
    "mean_abs_r",
    "mean_abs_r_from",
    "write_sweep_csv",
    "write_mean_curve_csv",
]

DEFAULT_POINT_BUDGET = 50_000_000


@dataclass(frozen=True)
class ValueList:
    """Sorted multiset of nonzero form values Q(m, n) <= cap.

    values is strictly increasing; total_mult[i] counts all lattice pairs
    attaining values[i], prim_mult[i] only the primitive ones. The origin
    is excluded, so total_mult.sum() = A(cap) - 1.
    """

    form: QuadraticForm
    values: np.ndarray
    total_mult: np.ndarray
    prim_mult: np.ndarray
    cap: float
    _cum_total: np.ndarray = field(init=False, repr=False)
    _cum_prim: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        for arr in (self.values, self.total_mult, self.prim_mult):
            arr.setflags(write=False)
        object.__setattr__(self, "_cum_total", np.cumsum(self.total_mult))
        object.__setattr__(self, "_cum_prim", np.cumsum(self.prim_mult))

    def __len__(self):
        return len(self.values)

    def total_points(self) -> int:
        """Number of nonzero lattice points with Q <= cap."""
        return int(self._cum_total[-1]) if len(self.values) else 0

    def count_all(self, x: float) -> int:
        """Nonzero lattice points with Q <= x (requires x <= cap)."""
        i = int(np.searchsorted(self.values, x, side="right"))
        return int(self._cum_total[i - 1]) if i > 0 else 0

    def count_prim(self, x: float) -> int:
        """Primitive lattice points with Q <= x (requires x <= cap)."""
        i = int(np.searchsorted(self.values, x, side="right"))
        return int(self._cum_prim[i - 1]) if i > 0 else 0


@dataclass(frozen=True)
class CountResult:
    """Counts at threshold x and their deviations from the area terms.

    a = A(x) includes the origin; b = B(x) counts primitive pairs only;
    p = a - (2 pi / sqrt(D)) x and r = b - (12 / (pi sqrt(D))) x hold by
    construction.
    """

    x: float
    a: int
    b: int
    p: float
    r: float


def _chunk_points(form: QuadraticForm, x: float, ns: np.ndarray):
    """All lattice pairs (m, n) with n in ns and Q(m, n) <= x.

    The m-window per n comes from solving a m^2 + b n m + (c n^2 - x) <= 0
    and is widened by one on each side; membership is then decided by the
    binary64 value of Q itself, so the result is independent of how the
    window was rounded.
    """
    a, b = form.a, form.b
    nf = ns.astype(np.float64)
    disc = 4.0 * a * x - form.disc * nf * nf
    keep = disc >= 0.0
    ns = ns[keep]
    nf = nf[keep]
    sq = np.sqrt(disc[keep])
    m_lo = np.ceil((-b * nf - sq) / (2.0 * a)).astype(np.int64) - 1
    m_hi = np.floor((-b * nf + sq) / (2.0 * a)).astype(np.int64) + 1
    counts = m_hi - m_lo + 1
    total = int(counts.sum())
    n_all = np.repeat(ns, counts)
    starts = np.repeat(m_lo, counts)
    offsets = np.arange(total, dtype=np.int64) - np.repeat(
        np.cumsum(counts) - counts, counts
    )
    m_all = starts + offsets
    vals = form.evaluate(m_all.astype(np.float64), n_all.astype(np.float64))
    inside = (vals <= x) & ((m_all != 0) | (n_all != 0))
    return m_all[inside], n_all[inside], vals[inside]


def _predicted_points(form: QuadraticForm, x: float) -> float:
    return 2.0 * math.pi / math.sqrt(form.disc) * x


def enumerate_points(
    form: QuadraticForm,
    x: float,
    *,
    workers: int = 1,
    budget: int = DEFAULT_POINT_BUDGET,
) -> ValueList:
    """Group every nonzero lattice pair with Q(m, n) <= x by form value.

    n ranges over |n| <= sqrt(4 a x / D) (Q >= (D / 4a) n^2); for each n
    the admissible m fill a real interval. The n-range may be split
    across workers; chunks are merged in a fixed order, so the result is
    bit-identical for every worker count.
    """
    if not (x >= 0.0 and math.isfinite(x)):
        raise DomainError(f"enumeration threshold must be finite and >= 0, got {x}")
    predicted = _predicted_points(form, x)
    if predicted > budget:
        raise BudgetError(
            f"predicted point count {predicted:.3g} exceeds budget {budget:.3g}"
        )
    n_max = int(math.sqrt(4.0 * form.a * x / form.disc)) + 1
    if 2 * n_max + 1 > budget:
        raise BudgetError(f"n-range {2 * n_max + 1} exceeds budget {budget:.3g}")
    ns = np.arange(-n_max, n_max + 1, dtype=np.int64)

    workers = max(1, int(workers))
    if workers == 1 or len(ns) < 2 * workers:
        chunks = [_chunk_points(form, x, ns)]
    else:
        parts = np.array_split(ns, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_chunk_points, form, x, part) for part in parts]
            chunks = [f.result() for f in futures]

    m_all = np.concatenate([ch[0] for ch in chunks])
    n_all = np.concatenate([ch[1] for ch in chunks])
    vals = np.concatenate([ch[2] for ch in chunks])
    prim = np.gcd(np.abs(m_all), np.abs(n_all)) == 1

    uniq, inverse = np.unique(vals, return_inverse=True)
    total_mult = np.bincount(inverse, minlength=len(uniq)).astype(np.int64)
    prim_mult = np.bincount(
        inverse, weights=prim.astype(np.float64), minlength=len(uniq)
    ).astype(np.int64)
    return ValueList(
        form=form,
        values=uniq,
        total_mult=total_mult,
        prim_mult=prim_mult,
        cap=float(x),
    )


def _result_from(vlist: ValueList, form: QuadraticForm, x: float) -> CountResult:
    a = 1 + vlist.count_all(x)
    b = vlist.count_prim(x)
    root_d = math.sqrt(form.disc)
    return CountResult(
        x=float(x),
        a=a,
        b=b,
        p=a - (2.0 * math.pi / root_d) * x,
        r=b - (12.0 / (math.pi * root_d)) * x,
    )


def count(
    form: QuadraticForm,
    x: float,
    *,
    workers: int = 1,
    budget: int = DEFAULT_POINT_BUDGET,
) -> CountResult:
    """A(x), B(x) and the deviations P(x), R(x) at a single threshold."""
    vlist = enumerate_points(form, x, workers=workers, budget=budget)
    return _result_from(vlist, form, x)


def count_many(
    form: QuadraticForm,
    xs,
    *,
    workers: int = 1,
    budget: int = DEFAULT_POINT_BUDGET,
) -> list[CountResult]:
    """Counts at several thresholds from one enumeration at max(xs)."""
    xs = [float(x) for x in xs]
    if not xs:
        return []
    vlist = enumerate_points(form, max(xs), workers=workers, budget=budget)
    return [_result_from(vlist, form, x) for x in xs]


def mobius_sieve(limit: int) -> np.ndarray:
    """mu(0..limit) by sieving; mu[0] is set to 0."""
    mu = np.ones(limit + 1, dtype=np.int64)
    if limit >= 0:
        mu[0] = 0
    is_comp = np.zeros(limit + 1, dtype=bool)
    for p in range(2, limit + 1):
        if not is_comp[p]:
            is_comp[p * p :: p] = True
            mu[p::p] *= -1
            mu[p * p :: p * p] = 0
    return mu


def count_primitive_moebius(
    form: QuadraticForm,
    x: float,
    *,
    workers: int = 1,
    budget: int = DEFAULT_POINT_BUDGET,
) -> int:
    """B(x) by Moebius inversion: sum_k mu(k) (A(x / k^2) - 1).

    The sum runs over k <= sqrt(x / lambda1); a single enumeration at x
    supplies every A(x / k^2) - 1, which matches fresh smaller
    enumerations bit for bit because membership is decided by the same
    binary64 form values either way.
    """
    if not x >= 0.0:
        raise DomainError(f"threshold must be >= 0, got {x}")
    lam = lambda1(form)
    if x < lam:
        return 0
    k_max = int(math.sqrt(x / lam)) + 1
    while k_max > 1 and x / (k_max * k_max) < lam:
        k_max -= 1
    mu = mobius_sieve(k_max)
    vlist = enumerate_points(form, x, workers=workers, budget=budget)
    total = 0
    for k in range(1, k_max + 1):
        if mu[k]:
            total += int(mu[k]) * vlist.count_all(x / (k * k))
    return total


def mean_abs_r_from(vlist: ValueList, y: float) -> float:
    """Integral of |R(x)| over [1, y] from an existing enumeration.

    Between consecutive primitive jump values, R(x) is linear with slope
    -12/(pi sqrt(D)), so every segment integrates in closed form. On a
    segment [L, U] with left count B the integrand is f(x) = B - c x; if
    f changes sign inside, the integral splits into the two triangle
    areas f(L)^2/(2c) and f(U)^2/(2c). Requires vlist.cap >= y.
    """
    if not y >= 1.0:
        raise DomainError(f"upper limit must be >= 1, got {y}")
    if y > vlist.cap:
        raise DomainError(f"upper limit {y} exceeds enumeration cap {vlist.cap}")
    c = 12.0 / (math.pi * math.sqrt(vlist.form.disc))

    mask = vlist.prim_mult > 0
    pv = vlist.values[mask]
    pm = vlist.prim_mult[mask]
    stop = int(np.searchsorted(pv, y, side="right"))
    pv = pv[:stop]
    pm = pm[:stop]

    first = int(np.searchsorted(pv, 1.0, side="right"))
    b_at_1 = int(pm[:first].sum())
    jumps = pv[first:]
    weights = pm[first:]

    left = np.concatenate(([1.0], jumps))
    right = np.concatenate((jumps, [y]))
    b_left = b_at_1 + np.concatenate(([0], np.cumsum(weights)))
    b_left = b_left.astype(np.float64)

    f_left = b_left - c * left
    f_right = b_left - c * right
    signed = (right - left) * (b_left - 0.5 * c * (right + left))
    split = (f_left * f_left + f_right * f_right) / (2.0 * c)
    segments = np.where(f_right >= 0.0, signed, np.where(f_left <= 0.0, -signed, split))
    return float(segments.sum())


def mean_abs_r(
    form: QuadraticForm,
    y: float,
    *,
    workers: int = 1,
    budget: int = DEFAULT_POINT_BUDGET,
) -> float:
    """Integral of |R(x)| over [1, y] (exact up to binary64 rounding)."""
    if not y >= 1.0:
        raise DomainError(f"upper limit must be >= 1, got {y}")
    vlist = enumerate_points(form, y, workers=workers, budget=budget)
    return mean_abs_r_from(vlist, y)


def _open_csv(path, timestamp: bool):
    fh = open(path, "w", encoding="ascii", newline="\n")
    if timestamp:
        now = datetime.datetime.now(datetime.timezone.utc)
        fh.write(f"# generated {now.strftime('%Y-%m-%dT%H:%M:%SZ')}\n")
    return fh


def write_sweep_csv(
    form: QuadraticForm,
    xs,
    path,
    *,
    timestamp: bool = True,
    workers: int = 1,
    budget: int = DEFAULT_POINT_BUDGET,
) -> None:
    """Emit one (x, A, B, P, R) row per threshold; header fixed."""
    results = count_many(form, xs, workers=workers, budget=budget)
    with _open_csv(path, timestamp) as fh:
        fh.write("x,A,B,P,R\n")
        for res in results:
            fh.write(f"{res.x!r},{res.a},{res.b},{res.p!r},{res.r!r}\n")


def write_mean_curve_csv(
    form: QuadraticForm,
    ys,
    path,
    *,
    timestamp: bool = True,
    workers: int = 1,
    budget: int = DEFAULT_POINT_BUDGET,
) -> None:
    """Emit the scaled mean-error curve (Y, M) with M = Y^(-5/4) int_1^Y |R|."""
    ys = [float(y) for y in ys]
    if not ys:
        raise DomainError("mean curve requires at least one Y")
    vlist = enumerate_points(form, max(ys), workers=workers, budget=budget)
    with _open_csv(path, timestamp) as fh:
        fh.write("Y,M\n")
        for y in ys:
            m = mean_abs_r_from(vlist, y) * y**-1.25
            fh.write(f"{y!r},{m!r}\n")
