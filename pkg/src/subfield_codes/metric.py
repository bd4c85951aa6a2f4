"""Hamming, rank, base/roof and lambda-subfield weights and distances."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import EmptySet, LambdaTooSmall, LengthMismatch
from .gf import FieldSpec, as_codes, spec_of
from .linalg import rank

HALF = Fraction(1, 2)


def as_lambda(lam, minimum: Fraction = HALF) -> Fraction:
    """Parse lambda (int, Fraction or "num/den" text) as an exact rational."""
    if isinstance(lam, str):
        lam = Fraction(lam.strip())
    elif isinstance(lam, float):
        raise TypeError("lambda must be exact; pass a Fraction or 'num/den' text")
    lam = Fraction(lam)
    if lam < minimum:
        raise LambdaTooSmall(f"lambda = {lam} is below {minimum}")
    return lam


class BRWeight(NamedTuple):
    """(number of nonzero base-field entries, number of entries outside F_q)."""

    base: int
    roof: int

    def value(self, lam) -> Fraction:
        return self.base + Fraction(lam) * self.roof

    def __str__(self):
        return f"({self.base},{self.roof})"


def _codes(v, spec: FieldSpec | None):
    if spec is None:
        spec = spec_of(v)
    return spec, as_codes(v, spec)


def br_weight(v: Sequence, spec: FieldSpec | None = None) -> BRWeight:
    spec, c = _codes(v, spec)
    cls = spec.vclass(c)
    return BRWeight(int((cls == 1).sum()), int((cls == 2).sum()))


def br_weights(spec: FieldSpec, words) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised BR weights of the rows of ``words``."""
    cls = spec.vclass(words)
    return (cls == 1).sum(axis=-1), (cls == 2).sum(axis=-1)


def lambda_weight(v: Sequence, lam, spec: FieldSpec | None = None) -> Fraction:
    lam = as_lambda(lam)
    return br_weight(v, spec).value(lam)


def hamming_weight(v: Sequence, spec: FieldSpec | None = None) -> int:
    spec, c = _codes(v, spec)
    return int(np.count_nonzero(c))


def rank_weight(v: Sequence, spec: FieldSpec | None = None) -> int:
    """Dimension over F_q of the span of the entries of v."""
    spec, c = _codes(v, spec)
    if c.size == 0:
        return 0
    coords = spec.coordinate_table[c]  # n x m over F_q
    return rank(spec, coords.T)


def _difference(x, y, spec):
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)} differ")
    if spec is None:
        spec = spec_of(list(x) + list(y))
    return spec, spec.vsub(as_codes(x, spec), as_codes(y, spec))


def br_distance(x, y, spec: FieldSpec | None = None) -> BRWeight:
    spec, d = _difference(x, y, spec)
    return br_weight(d, spec)


def lambda_distance(x, y, lam, spec: FieldSpec | None = None) -> Fraction:
    lam = as_lambda(lam)
    return br_distance(x, y, spec).value(lam)


def base_distance(x, y, spec: FieldSpec | None = None) -> int:
    return br_distance(x, y, spec).base


def roof_distance(x, y, spec: FieldSpec | None = None) -> int:
    return br_distance(x, y, spec).roof


def hamming_distance(x, y, spec: FieldSpec | None = None) -> int:
    spec, d = _difference(x, y, spec)
    return int(np.count_nonzero(d))


def rank_distance(x, y, spec: FieldSpec | None = None) -> int:
    spec, d = _difference(x, y, spec)
    return rank_weight(d, spec)


def dominates(a: BRWeight, b: BRWeight) -> bool:
    """a <= b componentwise and a != b."""
    return a[0] <= b[0] and a[1] <= b[1] and tuple(a) != tuple(b)


def pareto_minima(points: Iterable) -> frozenset[BRWeight]:
    """Componentwise-minimal elements of a set of (base, roof) pairs."""
    pts = sorted({BRWeight(int(s), int(t)) for s, t in points})
    if not pts:
        raise EmptySet("pareto_minima of an empty set")
    out = []
    best_roof = None
    # sorted by base then roof: a point is minimal iff its roof beats every earlier roof
    for s, t in pts:
        if best_roof is None or t < best_roof:
            out.append(BRWeight(s, t))
            best_roof = t
    return frozenset(out)


def sorted_pairs(points: Iterable) -> list[BRWeight]:
    """Minima listed by increasing base count (the order used in printouts)."""
    return sorted(points, key=lambda w: (w.base, w.roof))


def min_lambda_value(points: Iterable, lam) -> Fraction:
    lam = as_lambda(lam)
    return min(BRWeight(*w).value(lam) for w in points)


def largest_weight_below(bound, lam, n: int) -> Fraction | None:
    """Largest achievable s + lam*t (s + t <= n) strictly below ``bound``."""
    lam = as_lambda(lam)
    bound = Fraction(bound)
    best = None
    for t in range(n + 1):
        rest = bound - lam * t
        if rest <= 0:
            break
        s = min(n - t, -(-rest.numerator // rest.denominator) - 1)
        if s >= 0:
            val = s + lam * t
            if best is None or val > best:
                best = val
    return best
