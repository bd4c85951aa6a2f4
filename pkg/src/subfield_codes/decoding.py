"""Nearest-codeword decoding in the lambda-subfield metric and an asymmetric channel."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.stats import binomtest

from .codes import DEFAULT_CAP, BRDistanceSet, LinearCode, all_codewords, br_distribution
from .errors import TooLarge
from .gf import FieldSpec, as_codes
from .linalg import matmul
from .metric import as_lambda, largest_weight_below, pareto_minima
from .volume import ball_size

SYNDROME_TABLE_LIMIT = 1 << 22


def _scaled(lam: Fraction) -> tuple[int, int]:
    """Integer weights (base, roof) proportional to (1, lam)."""
    return lam.denominator, lam.numerator


def scaled_weights(spec: FieldSpec, words: np.ndarray, lam: Fraction) -> np.ndarray:
    wb, wr = _scaled(lam)
    cls = spec.class_table[words]
    return (wb * (cls == 1) + wr * (cls == 2)).sum(axis=-1)


@dataclass(frozen=True)
class DecodeResult:
    codeword: np.ndarray
    distance: Fraction
    ties: int

    @property
    def unique(self) -> bool:
        return self.ties == 1


def _nearest_batch(spec: FieldSpec, codewords: np.ndarray, words: np.ndarray, lam: Fraction,
                   budget: int = 1 << 22) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Index of the first nearest codeword, its scaled distance and the tie count, per word."""
    n = codewords.shape[1]
    rows = max(1, budget // max(codewords.shape[0] * n, 1))
    idx, dist, ties = [], [], []
    for lo in range(0, words.shape[0], rows):
        chunk = words[lo: lo + rows]
        diff = spec.vsub(chunk[:, None, :], codewords[None, :, :])
        w = scaled_weights(spec, diff, lam)
        best = w.min(axis=1)
        idx.append(w.argmin(axis=1))
        dist.append(best)
        ties.append((w == best[:, None]).sum(axis=1))
    return np.concatenate(idx), np.concatenate(dist), np.concatenate(ties)


def decode_nearest(code, word, lam, codewords: np.ndarray | None = None,
                   cap: int = DEFAULT_CAP) -> DecodeResult:
    """Exhaustive minimum lambda-distance decoding; ties are counted, first in index order wins."""
    lam = as_lambda(lam)
    spec = code.spec
    if codewords is None:
        codewords = all_codewords(code, cap)
    w = as_codes(word, spec)[None, :]
    i, d, t = _nearest_batch(spec, codewords, w, lam)
    return DecodeResult(codewords[i[0]].copy(), Fraction(int(d[0]), lam.denominator), int(t[0]))


# ---------------------------------------------------------------------------
# guarantees


def _d_and_n(code_or_d, lam, n):
    if isinstance(code_or_d, (int, Fraction)):
        d = Fraction(code_or_d)
        return d, n if n is not None else int(d) + 1
    ds = code_or_d if isinstance(code_or_d, BRDistanceSet) else br_distribution(code_or_d)
    return ds.min_lambda(lam), n if n is not None else code_or_d.n


def guaranteed_radius(code_or_d, lam, n: int | None = None) -> Fraction:
    """Largest achievable weight strictly below d_lambda / 2."""
    lam = as_lambda(lam)
    d, n = _d_and_n(code_or_d, lam, n)
    r = largest_weight_below(d / 2, lam, n)
    return Fraction(0) if r is None else r


def correctable_br_profiles(code_or_d, lam, n: int | None = None) -> list[tuple[int, int]]:
    """Maximal (b, r) with b + lam*r < d_lambda/2 and b + r <= n, by increasing r."""
    lam = as_lambda(lam)
    d, n = _d_and_n(code_or_d, lam, n)
    half = d / 2
    cand = []
    for r in range(n + 1):
        rest = half - lam * r
        if rest <= 0:
            break
        b = min(n - r, -(-rest.numerator // rest.denominator) - 1)
        if b >= 0:
            cand.append((b, r))
    # maximal elements: negate and take Pareto minima
    maxima = pareto_minima((-b, -r) for b, r in cand) if cand else frozenset()
    return sorted(((-b, -r) for b, r in maxima), key=lambda x: x[1])


def error_vectors(spec: FieldSpec, n: int, radius, lam, cap: int = SYNDROME_TABLE_LIMIT):
    """All vectors of lambda-weight <= radius, in increasing (weight, roof count) order."""
    lam = as_lambda(lam)
    radius = Fraction(radius)
    total = ball_size(n, radius, lam, spec.q, spec.m)
    if total > cap:
        raise TooLarge(f"{total} error vectors exceed the cap {cap}")
    for t, s in sorted(((t, s) for t in range(n + 1) for s in range(n + 1 - t)
                        if s + lam * t <= radius), key=lambda ts: (ts[1] + lam * ts[0], ts[0])):
        yield from _pattern_vectors(spec, n, s, t)


def _pattern_vectors(spec: FieldSpec, n: int, s: int, t: int):
    base = [int(x) for x in np.nonzero(spec.class_table == 1)[0]]
    roof = [int(x) for x in np.nonzero(spec.class_table == 2)[0]]
    for roof_pos in itertools.combinations(range(n), t):
        others = [i for i in range(n) if i not in roof_pos]
        for base_pos in itertools.combinations(others, s):
            for rv in itertools.product(roof, repeat=t):
                for bv in itertools.product(base, repeat=s):
                    e = np.zeros(n, dtype=np.int64)
                    e[list(roof_pos)] = rv
                    e[list(base_pos)] = bv
                    yield e


def verify_unique_decoding(code, lam, cap: int = SYNDROME_TABLE_LIMIT) -> bool:
    """Every error inside the guaranteed radius decodes uniquely back to zero."""
    lam = as_lambda(lam)
    spec = code.spec
    words = all_codewords(code)
    radius = guaranteed_radius(br_distribution(code), lam, code.n)
    errs = np.array(list(error_vectors(spec, code.n, radius, lam, cap)), dtype=np.int64)
    idx, _, ties = _nearest_batch(spec, words, errs, lam)
    return bool((ties == 1).all() and not words[idx].any())


# ---------------------------------------------------------------------------
# syndrome decoding


class SyndromeDecoder:
    """Coset-leader table keyed by the syndrome w H^T (built only for small redundancy)."""

    def __init__(self, code: LinearCode, lam, limit: int = SYNDROME_TABLE_LIMIT):
        self.code = code
        self.lam = as_lambda(lam)
        spec = code.spec
        r = code.n - code.k
        self.cosets = spec.order**r
        if self.cosets > limit:
            raise TooLarge(f"{self.cosets} cosets exceed the table limit {limit}")
        self.h = code.parity_check
        self._radix = spec.order ** np.arange(r, dtype=np.int64)
        self.leaders = np.full((self.cosets, code.n), -1, dtype=np.int64)
        self.weights = np.full(self.cosets, -1, dtype=np.int64)
        self.ties = np.zeros(self.cosets, dtype=np.int64)
        self._build()

    def syndrome_index(self, words: np.ndarray) -> np.ndarray:
        words = np.atleast_2d(words)
        if self.h.size == 0:
            return np.zeros(words.shape[0], dtype=np.int64)
        return matmul(self.code.spec, words, self.h.T) @ self._radix

    def _build(self):
        spec, n, lam = self.code.spec, self.code.n, self.lam
        wb, wr = _scaled(lam)
        levels = sorted({wb * s + wr * t for t in range(n + 1) for s in range(n + 1 - t)})
        filled = 0
        for level in levels:
            pats = [(s, t) for t in range(n + 1) for s in range(n + 1 - t) if wb * s + wr * t == level]
            for s, t in sorted(pats, key=lambda st: st[1]):
                vecs = np.array(list(_pattern_vectors(spec, n, s, t)), dtype=np.int64).reshape(-1, n)
                syn = self.syndrome_index(vecs)
                for e, sy in zip(vecs, syn):
                    if self.weights[sy] < 0:
                        self.weights[sy] = level
                        self.leaders[sy] = e
                        filled += 1
                    if self.weights[sy] == level:
                        self.ties[sy] += 1
            if filled == self.cosets:
                break

    def decode(self, word) -> DecodeResult:
        spec = self.code.spec
        w = as_codes(word, spec)
        sy = int(self.syndrome_index(w[None, :])[0])
        e = self.leaders[sy]
        return DecodeResult(spec.vsub(w, e), Fraction(int(self.weights[sy]), self.lam.denominator),
                            int(self.ties[sy]))


# ---------------------------------------------------------------------------
# asymmetric channel


@dataclass(frozen=True)
class ChannelSpec:
    """Independent per-position errors: uniform base with p_base, uniform roof with p_roof."""

    p_base: float
    p_roof: float
    seed: int

    def __post_init__(self):
        if self.p_base < 0 or self.p_roof < 0 or self.p_base + self.p_roof > 1:
            raise ValueError("need p_base, p_roof >= 0 and p_base + p_roof <= 1")


@dataclass(frozen=True)
class SimulationResult:
    trials: int
    failures: int
    ci_low: float
    ci_high: float
    mean_base_errors: float
    mean_roof_errors: float
    ties: int

    @property
    def word_error_rate(self) -> float:
        return self.failures / self.trials if self.trials else 0.0


def sample_errors(spec: FieldSpec, n: int, channel: ChannelSpec, trials: int,
                  rng: np.random.Generator) -> np.ndarray:
    base = np.nonzero(spec.class_table == 1)[0]
    roof = np.nonzero(spec.class_table == 2)[0]
    u = rng.random((trials, n))
    bpick = base[rng.integers(0, len(base), size=(trials, n))]
    rpick = roof[rng.integers(0, max(len(roof), 1), size=(trials, n))] if len(roof) else bpick
    e = np.zeros((trials, n), dtype=np.int64)
    is_base = u < channel.p_base
    is_roof = (~is_base) & (u < channel.p_base + channel.p_roof)
    e[is_base] = bpick[is_base]
    e[is_roof] = rpick[is_roof]
    return e


def simulate_channel(code, lam, channel: ChannelSpec, trials: int, confidence: float = 0.95,
                     cap: int = DEFAULT_CAP) -> SimulationResult:
    """Send random codewords, decode to the nearest codeword; ties count as failures."""
    lam = as_lambda(lam)
    spec = code.spec
    words = all_codewords(code, cap)
    rng = np.random.default_rng(channel.seed)
    sent = rng.integers(0, words.shape[0], size=trials)
    errs = sample_errors(spec, code.n, channel, trials, rng)
    received = spec.vadd(words[sent], errs)
    idx, _, ties = _nearest_batch(spec, words, received, lam)
    fail = (idx != sent) | (ties > 1)
    failures = int(fail.sum())
    cls = spec.class_table[errs]
    if trials:
        ci = binomtest(failures, trials).proportion_ci(confidence, method="wilson")
        lo, hi = float(ci.low), float(ci.high)
    else:
        lo, hi = 0.0, 1.0
    return SimulationResult(trials, failures, lo, hi,
                            float((cls == 1).sum(axis=1).mean()) if trials else 0.0,
                            float((cls == 2).sum(axis=1).mean()) if trials else 0.0,
                            int((ties > 1).sum()))
