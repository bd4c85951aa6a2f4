"""Sphere and ball sizes in the lambda-subfield metric, exact and asymptotic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from .errors import NoConvergence, RadiusOutOfRange
from .metric import as_lambda


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def sphere_terms(n: int, w, lam, q: int, m: int) -> dict[tuple[int, int], int]:
    """{(s, t): number of vectors with s base and t roof entries}, s + lam*t = w."""
    lam = as_lambda(lam)
    w = Fraction(w)
    big = q**m
    out = {}
    t = 0
    while lam * t <= w and t <= n:
        s = w - lam * t
        if s.denominator == 1 and s <= n - t:
            s = int(s)
            out[s, t] = math.comb(n, t) * (big - q) ** t * math.comb(n - t, s) * (q - 1) ** s
        t += 1
    return out


def sphere_size(n: int, w, lam, q: int, m: int) -> int:
    return sum(sphere_terms(n, w, lam, q, m).values())


def _partial_binomial_sum(size: int, upto: int, base: int) -> int:
    """sum_{s=0}^{upto} C(size, s) * base^s."""
    if upto >= size:
        return (base + 1) ** size
    total, term = 0, 1
    for s in range(upto + 1):
        total += term
        term = term * (size - s) * base // (s + 1)
    return total


def ball_size(n: int, r, lam, q: int, m: int) -> int:
    """Number of vectors in F_{q^m}^n of lambda-weight at most r."""
    lam = as_lambda(lam)
    r = Fraction(r)
    big = q**m
    if r < 0:
        return 0
    if r >= lam * n and r >= n:
        return big**n
    total = 0
    t = 0
    roof_factor = 1  # C(n, t) * (q^m - q)^t
    while t <= n and lam * t <= r:
        smax = min(n - t, _floor(r - lam * t))
        total += roof_factor * _partial_binomial_sum(n - t, smax, q - 1)
        roof_factor = roof_factor * (n - t) * (big - q) // (t + 1)
        t += 1
    return total


def ball_size_strict(n: int, bound, lam, q: int, m: int) -> int:
    """Number of vectors of lambda-weight strictly below ``bound``."""
    lam = as_lambda(lam)
    bound = Fraction(bound)
    big = q**m
    total = 0
    for t in range(n + 1):
        rest = bound - lam * t
        if rest <= 0:
            break
        smax = min(n - t, -(-rest.numerator // rest.denominator) - 1)
        total += math.comb(n, t) * (big - q) ** t * _partial_binomial_sum(n - t, smax, q - 1)
    return total


def ball_size_double_sum(n: int, r: int, lam: int, q: int, m: int) -> int:
    """The closed double sum over weights j <= r and roof counts i <= j/lam (integer lam)."""
    return sum(ball_double_sum_terms(n, r, lam, q, m).values())


def ball_double_sum_terms(n: int, r: int, lam: int, q: int, m: int) -> dict[tuple[int, int], int]:
    """{(j, i): (q^m-q)^i C(n,i) (q-1)^(j-lam*i) C(n-i, j-lam*i)} for integer lam."""
    if int(lam) != lam:
        raise ValueError("the double-sum formula needs an integer lambda")
    lam = int(lam)
    big = q**m
    out = {}
    for j in range(int(r) + 1):
        for i in range(j // lam + 1):
            s = j - lam * i
            out[j, i] = ((big - q) ** i * math.comb(n, i) * (q - 1) ** s
                         * (math.comb(n - i, s) if s <= n - i else 0))
    return out


# ---------------------------------------------------------------------------
# saddle point asymptotics


@dataclass(frozen=True)
class AsymptoticSpec:
    """Saddle point data for f(x) = 1 + (q-1) x + (q^m - q) x^lam."""

    U: float
    lam: Fraction
    q: int
    m: int
    rho: float
    exponent: float

    @property
    def f_coefficients(self) -> tuple[int, int, int]:
        return 1, self.q - 1, self.q**self.m - self.q


def f_poly(x: float, lam, q: int, m: int) -> float:
    return 1.0 + (q - 1) * x + (q**m - q) * x ** float(lam)


def delta(x: float, lam, q: int, m: int) -> float:
    """x f'(x) / f(x)."""
    lam = float(lam)
    xl = x**lam
    num = (q - 1) * x + lam * (q**m - q) * xl
    return num / (1.0 + (q - 1) * x + (q**m - q) * xl)


def max_relative_radius(lam, q: int, m: int) -> float:
    return float(lam) if q**m > q else 1.0


def saddle_rho(U: float, lam, q: int, m: int, tol: float = 1e-12) -> float:
    """Positive root of delta(x) = U."""
    lam = as_lambda(lam)
    U = float(U)
    if not 0 < U < max_relative_radius(lam, q, m):
        raise RadiusOutOfRange(f"U = {U} outside (0, {max_relative_radius(lam, q, m)})")

    def g(y):
        return delta(math.exp(y), lam, q, m) - U

    lo, hi = -1.0, 1.0
    while g(lo) > 0:
        lo *= 2
        if lo < -1e4:
            raise NoConvergence("lower bracket not found")
    while g(hi) < 0:
        hi *= 2
        if hi > 1e4:
            raise NoConvergence("upper bracket not found")
    grid = np.linspace(lo, hi, 65)
    vals = [g(y) for y in grid]
    if any(b < a for a, b in zip(vals, vals[1:])):
        raise NoConvergence("delta is not increasing on the bracket")
    y = brentq(g, lo, hi, xtol=1e-15, rtol=1e-15, maxiter=500)
    rho = math.exp(y)
    if abs(delta(rho, lam, q, m) - U) > tol:
        raise NoConvergence(f"residual {abs(delta(rho, lam, q, m) - U)} above {tol}")
    return rho


def rho_polynomial_residual(U: float, rho: float, lam, q: int, m: int) -> float:
    """(q^m-q)(lam-U) rho^lam + (q-1)(1-U) rho - U, zero at the saddle point."""
    lam = float(lam)
    return (q**m - q) * (lam - U) * rho**lam + (q - 1) * (1 - U) * rho - U


def f_rho_reformulated(U: float, rho: float, lam, q: int, m: int) -> float:
    """Alternative closed form for f(rho); kept only as a cross-check."""
    lam = float(lam)
    return (lam - U**2) - (lam - U) * rho**lam * (q**m - q) - rho * (q - 1) * (1 - U) ** 2


def asymptotic_sphere_exponent(U: float, lam, q: int, m: int) -> AsymptoticSpec:
    """log_{q^m} f(rho) - U log_{q^m} rho."""
    rho = saddle_rho(U, lam, q, m)
    base = math.log(q**m)
    expo = math.log(f_poly(rho, lam, q, m)) / base - U * math.log(rho) / base
    return AsymptoticSpec(float(U), as_lambda(lam), q, m, rho, expo)


def mean_weight(lam, q: int, m: int) -> Fraction:
    lam = as_lambda(lam)
    return (q - 1 + lam * (q**m - q)) / Fraction(q**m)


def asymptotic_ball_exponent(U: float, lam, q: int, m: int) -> float:
    """lim (1/n) log_{q^m} |B_{Un}|; equals 1 once U reaches the mean weight."""
    if U >= mean_weight(lam, q, m):
        return 1.0
    return asymptotic_sphere_exponent(U, lam, q, m).exponent


def entropy(x: float, alphabet: int) -> float:
    """alphabet-ary entropy function."""
    if x == 0:
        return 0.0
    lg = math.log(alphabet)
    return (x * math.log(alphabet - 1) - x * math.log(x) - (1 - x) * math.log(1 - x)) / lg


def exact_ball_exponent(n: int, U, lam, q: int, m: int) -> float:
    """(1/n) log_{q^m} |B_{floor(U n)}|, from the exact big-integer ball size."""
    r = math.floor(Fraction(U) * n) if not isinstance(U, float) else math.floor(U * n)
    return math.log(ball_size(n, r, lam, q, m)) / (n * math.log(q**m))
