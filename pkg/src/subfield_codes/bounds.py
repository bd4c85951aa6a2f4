"""Upper and lower bounds on the size A(n, d) of lambda-subfield codes.

All bounds are computed exactly with big integers and Fractions; logarithms
are only taken when a table is formatted for output.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy
from scipy.stats import binomtest

from .codes import DEFAULT_CAP, br_distribution, random_linear_code
from .errors import ConditionViolated, SizeTooSmall, TooLarge
from .gf import FieldSpec, build_field
from .metric import as_lambda
from .volume import ball_size, ball_size_strict


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


def sphere_packing_bound(n: int, d, lam, q: int, m: int) -> int:
    """q^(mn) over the size of the ball of all weights strictly below d/2."""
    d = Fraction(d)
    if d < 1:
        raise ValueError("d must be at least 1")
    return q ** (m * n) // ball_size_strict(n, d / 2, lam, q, m)


def gilbert_varshamov_bound(n: int, d, lam, q: int, m: int) -> int:
    d = Fraction(d)
    vol = ball_size(n, d - 1, lam, q, m)
    return -(-q ** (m * n) // vol)


def singleton_bound_size(n: int, d, lam, q: int, m: int) -> int:
    """(q^m)^(n - floor((d-1)/lam)); needs lam >= 1."""
    lam = as_lambda(lam, Fraction(1))
    expo = n - _floor((Fraction(d) - 1) / lam)
    return q ** (m * max(expo, 0))


def average_weight_D(lam, q: int, m: int) -> Fraction:
    """Mean lambda-weight of a uniformly random element of F_{q^m}."""
    lam = as_lambda(lam)
    return (q - 1 + lam * (q**m - q)) / Fraction(q**m)


def average_weight_D_closed(lam, q: int, m: int) -> Fraction:
    lam = as_lambda(lam)
    return lam - (lam - 1) * Fraction(q) ** (1 - m) - Fraction(q) ** (-m)


def nonlinear_weight_D(lam, q: int, m: int) -> Fraction:
    lam = as_lambda(lam)
    return lam - (lam - 1) * Fraction(q) ** (1 - m) - Fraction(q) ** (1 - 2 * m)


def plotkin_distance_bound(n: int, size: int, lam, q: int, m: int) -> Fraction:
    """Upper bound on d_lambda of a linear code with ``size`` words."""
    if size < 2:
        raise SizeTooSmall("the distance bound needs at least two codewords")
    return Fraction(size, size - 1) * n * average_weight_D(lam, q, m)


def plotkin_size_bound(n: int, d, lam, q: int, m: int) -> int | None:
    """floor(d / (d - nD)) when d > nD, else None (not applicable)."""
    d = Fraction(d)
    gap = d - n * average_weight_D(lam, q, m)
    if gap <= 0:
        return None
    return _floor(d / gap)


def plotkin_long_length(d, lam, q: int, m: int) -> int:
    """n' = floor(q^m d / (lam q^m - (lam-1) q - 1)) - 1."""
    lam = as_lambda(lam)
    big = q**m
    return _floor(big * Fraction(d) / (lam * big - (lam - 1) * q - 1)) - 1


def plotkin_long_bound(n: int, d, lam, q: int, m: int) -> int:
    """Plotkin bound for long codes obtained by shortening to length n'."""
    lam = as_lambda(lam)
    d = Fraction(d)
    n1 = plotkin_long_length(d, lam, q, m)
    if d / lam > n1:
        raise ConditionViolated(f"d/lambda = {d / lam} exceeds n' = {n1}")
    if n <= n1:
        raise ConditionViolated(f"n = {n} does not exceed n' = {n1}")
    gap = d - n1 * average_weight_D(lam, q, m)
    return _floor(d * q ** (m * (n - n1)) / gap)


def plotkin_nonlinear_bound(n: int, d, lam, q: int, m: int) -> int | None:
    d = Fraction(d)
    gap = d - n * nonlinear_weight_D(lam, q, m)
    if gap <= 0:
        return None
    return _floor(d / gap)


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class BoundReport:
    q: int
    m: int
    lam: Fraction
    n: int
    d: Fraction
    sphere_packing: int
    gilbert_varshamov: int
    singleton: int | None
    plotkin_size: int | None
    plotkin_long: int | None
    plotkin_nonlinear: int | None

    @property
    def uppers(self) -> dict[str, int]:
        vals = {"packing": self.sphere_packing, "singleton": self.singleton,
                "plotkin_size": self.plotkin_size, "plotkin_long": self.plotkin_long,
                "plotkin_nonlinear": self.plotkin_nonlinear}
        return {k: v for k, v in vals.items() if v is not None}

    @property
    def best_upper(self) -> int:
        return min(self.uppers.values())

    def log(self, value: int | None) -> float | None:
        if value is None:
            return None
        return math.log(value) / math.log(self.q**self.m)


def bound_report(n: int, d, lam, q: int, m: int) -> BoundReport:
    lam = as_lambda(lam)
    d = Fraction(d)
    try:
        long = plotkin_long_bound(n, d, lam, q, m)
    except ConditionViolated:
        long = None
    return BoundReport(
        q, m, lam, n, d,
        sphere_packing=sphere_packing_bound(n, d, lam, q, m),
        gilbert_varshamov=gilbert_varshamov_bound(n, d, lam, q, m),
        singleton=singleton_bound_size(n, d, lam, q, m) if lam >= 1 else None,
        plotkin_size=plotkin_size_bound(n, d, lam, q, m),
        plotkin_long=long,
        plotkin_nonlinear=plotkin_nonlinear_bound(n, d, lam, q, m),
    )


def bounds_table(q: int, m: int, lam, d, n_from: int, n_to: int) -> list[BoundReport]:
    return [bound_report(n, d, lam, q, m) for n in range(n_from, n_to + 1)]


CSV_COLUMNS = ["n", "gv", "packing", "singleton", "plotkin_size", "plotkin_long",
               "plotkin_nonlinear", "best_upper"]


def bounds_csv(reports: list[BoundReport], digits: int = 6) -> str:
    """log_{q^m} of every bound, one row per n; NA where a bound does not apply."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)

    def fmt(r, v):
        lg = r.log(v)
        return "NA" if lg is None else f"{lg:.{digits}f}"

    for r in reports:
        w.writerow([r.n, fmt(r, r.gilbert_varshamov), fmt(r, r.sphere_packing), fmt(r, r.singleton),
                    fmt(r, r.plotkin_size), fmt(r, r.plotkin_long), fmt(r, r.plotkin_nonlinear),
                    fmt(r, r.best_upper)])
    return buf.getvalue()


@dataclass(frozen=True)
class SweepConfig:
    q: int
    m: int
    lam: Fraction
    d: int
    n_from: int
    n_to: int

    @property
    def label(self) -> str:
        return f"q{self.q}_m{self.m}_lam{self.lam}_d{self.d}".replace("/", "-")


FIGURE_SWEEPS = (
    SweepConfig(4, 2, Fraction(4), 7, 2, 40),
    SweepConfig(4, 8, Fraction(5), 10, 2, 40),
    SweepConfig(521, 4, Fraction(3), 10, 2, 40),
    SweepConfig(5, 12, Fraction(3), 5, 2, 40),
)


# ---------------------------------------------------------------------------
# random codes against the GV guarantee


def field_for(q: int, m: int) -> FieldSpec:
    """Default F_{q^m} with q a prime power."""
    fac = sympy.factorint(q)
    if len(fac) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    (p, e), = fac.items()
    return build_field(int(p), int(e), m)


@dataclass(frozen=True)
class GVExperiment:
    q: int
    m: int
    lam: Fraction
    n: int
    d: Fraction
    eps: float
    k: int
    trials: int
    hits: int
    lower_bound: float
    ci_low: float = field(default=0.0)
    ci_high: float = field(default=1.0)

    @property
    def observed_fraction(self) -> float:
        return self.hits / self.trials if self.trials else 0.0


def gv_dimension(n: int, d, lam, q: int, m: int, eps: float) -> int:
    """k = ceil((1 - g(d)/n - eps) n) with g(d) = log_{q^m} |B_d|."""
    g = math.log(ball_size(n, d, lam, q, m)) / math.log(q**m)
    return math.ceil((1 - g / n - eps) * n - 1e-12)


def gv_random_experiment(q: int, m: int, lam, n: int, d, eps: float, trials: int, seed: int,
                         confidence: float = 0.99, cap: int = DEFAULT_CAP) -> GVExperiment:
    """Fraction of random [n, k] codes with d_lambda >= d; trial i uses seed + i."""
    lam = as_lambda(lam)
    d = Fraction(d)
    spec = field_for(q, m)
    k = gv_dimension(n, d, lam, q, m, eps)
    if k < 1:
        raise ValueError(f"eps = {eps} leaves dimension {k} < 1")
    if spec.order**k > cap:
        raise TooLarge(f"(q^m)^k = {spec.order**k} codewords per trial exceed the cap")
    hits = 0
    for i in range(trials):
        code = random_linear_code(spec, n, k, np.random.default_rng(seed + i))
        if br_distribution(code, cap).min_lambda(lam) >= d:
            hits += 1
    bound = min(max(1.0 - float(q**m) ** (1 - eps * n), 0.0), 1.0)
    ci = binomtest(hits, trials).proportion_ci(confidence, method="wilson") if trials else None
    return GVExperiment(q, m, lam, n, d, eps, k, trials, hits, bound,
                        float(ci.low) if ci else 0.0, float(ci.high) if ci else 1.0)
