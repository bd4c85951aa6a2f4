"""Linear and additive codes over F_{q^m}: constructions and exhaustive analysis."""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DependentPoints,
    LengthExceedsDegree,
    NotADivisor,
    RankDeficientWarning,
    SpecMismatch,
    TooLarge,
    WrongExtensionDegree,
)
from .gf import FieldElement, FieldSpec, parse_element
from .linalg import matmul, nullspace, prime_field, rank, rref, vsum
from .metric import BRWeight, as_lambda, pareto_minima, rank_weight

DEFAULT_CAP = 1 << 26
BLOCK_ROWS = 1 << 16


def _to_codes(spec: FieldSpec, rows) -> np.ndarray:
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, FieldElement):
                spec.check(x)
                r.append(x.value)
            elif isinstance(x, str):
                r.append(parse_element(x, spec).value)
            else:
                r.append(int(x))
        out.append(r)
    arr = np.array(out, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= spec.order):
        raise SpecMismatch("entries outside the field")
    return arr


@dataclass(frozen=True, eq=False)
class LinearCode:
    """F_{q^m}-linear code given by a row-reduced generator matrix."""

    spec: FieldSpec
    gen: np.ndarray
    n: int
    name: str = ""
    pivots: tuple[int, ...] = ()

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def size(self) -> int:
        return self.spec.order**self.k

    @property
    def scalars(self) -> np.ndarray:
        return np.arange(self.spec.order, dtype=np.int64)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}] over F_{self.spec.order}>"

    @property
    def parity_check(self) -> np.ndarray:
        """(n-k) x n matrix H with G H^T = 0."""
        spec = self.spec
        free = [c for c in range(self.n) if c not in set(self.pivots)]
        h = np.zeros((len(free), self.n), dtype=np.int64)
        for j, f in enumerate(free):
            h[j, f] = 1
            for i, pc in enumerate(self.pivots):
                h[j, pc] = spec.neg(int(self.gen[i, f]))
        return h

    def encode(self, info) -> np.ndarray:
        info = _to_codes(self.spec, [info])
        return matmul(self.spec, info, self.gen)[0]

    def contains(self, word) -> bool:
        w = _to_codes(self.spec, [word])
        h = self.parity_check
        if h.size == 0:
            return True
        return not matmul(self.spec, w, h.T).any()


@dataclass(frozen=True, eq=False)
class AdditiveCode:
    """F_p-linear code: the F_p-span of the rows of ``gen``."""

    spec: FieldSpec
    gen: np.ndarray
    n: int
    name: str = ""

    @property
    def k(self) -> int:
        # number of F_p-generators
        return self.gen.shape[0]

    @property
    def size(self) -> int:
        return self.spec.p**self.k

    @property
    def scalars(self) -> np.ndarray:
        return np.arange(self.spec.p, dtype=np.int64)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<AdditiveCode{label} n={self.n} |C|={self.spec.p}^{self.k} over F_{self.spec.order}>"

    def contains(self, word) -> bool:
        w = _to_codes(self.spec, [word])[0]
        return _fp_rank(self.spec, np.vstack([self.gen, w[None, :]])) == self.k


def _fp_expand(spec: FieldSpec, words: np.ndarray) -> np.ndarray:
    """Rows of F_{q^m} codes -> rows of F_p digits (n * degree columns)."""
    digits = [words // spec.p**i % spec.p for i in range(spec.degree)]
    return np.stack(digits, axis=-1).reshape(words.shape[0], -1)


def _fp_collapse(spec: FieldSpec, digits: np.ndarray, n: int) -> np.ndarray:
    d = digits.reshape(digits.shape[0], n, spec.degree)
    weights = np.array([spec.p**i for i in range(spec.degree)], dtype=np.int64)
    return d @ weights


def _fp_rank(spec: FieldSpec, words) -> int:
    return rank(prime_field(spec.p), _fp_expand(spec, np.asarray(words, dtype=np.int64)))


def from_generator(spec: FieldSpec, rows, name: str = "") -> LinearCode:
    """Row-reduce ``rows``; dependent rows are dropped with a warning."""
    g = _to_codes(spec, rows)
    if g.ndim != 2:
        raise ValueError("generator must be a matrix")
    n = g.shape[1]
    red, pivots = rref(spec, g)
    if red.shape[0] < g.shape[0]:
        warnings.warn(f"generator has rank {red.shape[0]} < {g.shape[0]} rows; "
                      "dimension reduced", RankDeficientWarning, stacklevel=2)
    return LinearCode(spec, red, n, name, tuple(pivots))


def additive_code(spec: FieldSpec, rows, name: str = "") -> AdditiveCode:
    g = _to_codes(spec, rows)
    n = g.shape[1]
    red, _ = rref(prime_field(spec.p), _fp_expand(spec, g))
    return AdditiveCode(spec, _fp_collapse(spec, red, n), n, name)


def _poly_divmod(spec: FieldSpec, num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    inv_lead = spec.inv(den[-1])
    for shift in range(len(num) - len(den), -1, -1):
        c = spec.mul(num[shift + len(den) - 1], inv_lead)
        q[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] = spec.sub(num[shift + i], spec.mul(c, d))
    rem = num[: len(den) - 1]
    return q, rem


def cyclic_code(spec: FieldSpec, n: int, g: Sequence, name: str = "") -> LinearCode:
    """Cyclic code of length n with generator polynomial g (coefficients low to high)."""
    coeffs = list(_to_codes(spec, [g])[0])
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs[-1] != 1:
        raise NotADivisor("generator polynomial must be monic")
    deg = len(coeffs) - 1
    if deg > n:
        raise NotADivisor("generator degree exceeds the length")
    xn1 = [spec.neg(1)] + [0] * (n - 1) + [1]
    _, rem = _poly_divmod(spec, xn1, coeffs)
    if any(rem):
        raise NotADivisor("g does not divide x^n - 1")
    k = n - deg
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i: i + deg + 1] = coeffs
    return from_generator(spec, rows, name)


def gabidulin_code(spec: FieldSpec, n: int, k: int, points: Sequence, name: str = "") -> LinearCode:
    """Gabidulin code: rows (g_1^(q^i), ..., g_n^(q^i)) for i < k."""
    if n > spec.m:
        raise LengthExceedsDegree(f"n = {n} exceeds the extension degree m = {spec.m}")
    pts = _to_codes(spec, [points])[0]
    if len(pts) != n:
        raise ValueError("need exactly n evaluation points")
    if rank_weight(pts, spec) != n:
        raise DependentPoints("evaluation points are linearly dependent over F_q")
    rows = [[spec.pow(int(g), spec.q**i) for g in pts] for i in range(k)]
    return from_generator(spec, rows, name)


# ---------------------------------------------------------------------------
# enumeration


def _check_cap(size: int, cap: int):
    if size > cap:
        raise TooLarge(f"{size} codewords exceed the enumeration cap {cap}")


def codeword_blocks(code, start: int = 0, stop: int | None = None,
                    cap: int = DEFAULT_CAP, block_rows: int = BLOCK_ROWS) -> Iterator[np.ndarray]:
    """Yield codewords in consecutive blocks.

    Codeword number ``i`` is sum(s[u_j] * g_j) where u_0..u_{k-1} are the
    base-S digits of i, most significant first, and s are the code's scalars.
    """
    spec = code.spec
    size = code.size
    _check_cap(size, cap)
    stop = size if stop is None else min(stop, size)
    if start >= stop:
        return
    k, n = code.gen.shape[0], code.n
    if k == 0:
        yield np.zeros((1, n), dtype=np.int64)
        return
    scalars = code.scalars
    s = len(scalars)
    mults = [spec.vmul(scalars[:, None], code.gen[i][None, :]) for i in range(k)]
    low = 1
    while low < k and s ** (low + 1) <= block_rows:
        low += 1
    block = np.zeros((1, n), dtype=np.int64)
    for i in range(k - low, k):
        block = spec.vadd(block[:, None, :], mults[i][None, :, :]).reshape(-1, n)
    bsize = block.shape[0]
    high = k - low
    for h in range(start // bsize, (stop - 1) // bsize + 1):
        prefix = np.zeros(n, dtype=np.int64)
        rest = h
        for i in range(high - 1, -1, -1):
            rest, u = divmod(rest, s)
            if u:
                prefix = spec.vadd(prefix, mults[i][u])
        words = spec.vadd(block, prefix[None, :]) if prefix.any() else block
        lo = max(start - h * bsize, 0)
        hi = min(stop - h * bsize, bsize)
        yield words[lo:hi]


def enumerate_codewords(code, start: int = 0, stop: int | None = None,
                        cap: int = DEFAULT_CAP) -> Iterator[np.ndarray]:
    """Stream individual codewords (int64 code vectors) in index order."""
    for block in codeword_blocks(code, start, stop, cap):
        yield from block


def all_codewords(code, cap: int = DEFAULT_CAP) -> np.ndarray:
    return np.vstack(list(codeword_blocks(code, cap=cap)))


def _chunks(size: int, parts: int) -> list[tuple[int, int]]:
    step = -(-size // parts)
    return [(a, min(a + step, size)) for a in range(0, size, step)]


# ---------------------------------------------------------------------------
# BR distributions


@dataclass(frozen=True)
class BRDistanceSet:
    minima: frozenset
    distribution: dict | None = field(default=None, compare=False)

    def min_lambda(self, lam) -> Fraction:
        lam = as_lambda(lam)
        return min(w.value(lam) for w in self.minima)

    @property
    def total(self) -> int:
        return sum(self.distribution.values()) if self.distribution else 0


def _histogram(spec: FieldSpec, words: np.ndarray, n: int) -> np.ndarray:
    cls = spec.vclass(words)
    base = (cls == 1).sum(axis=1)
    roof = (cls == 2).sum(axis=1)
    return np.bincount(base * (n + 1) + roof, minlength=(n + 1) ** 2)


def br_histogram(code, cap: int = DEFAULT_CAP, threads: int = 1) -> np.ndarray:
    """(n+1) x (n+1) integer array: counts[base, roof] over all codewords."""
    n = code.n
    _check_cap(code.size, cap)

    def work(rng):
        acc = np.zeros((n + 1) ** 2, dtype=np.int64)
        for block in codeword_blocks(code, rng[0], rng[1], cap):
            acc += _histogram(code.spec, block, n)
        return acc

    chunks = _chunks(code.size, max(threads, 1))
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(threads) as ex:
            parts = list(ex.map(work, chunks))
    else:
        parts = [work(c) for c in chunks]
    return np.sum(parts, axis=0).reshape(n + 1, n + 1)


def _distance_set(hist: np.ndarray) -> BRDistanceSet:
    dist = {BRWeight(int(s), int(t)): int(hist[s, t]) for s, t in zip(*np.nonzero(hist))}
    support = [w for w in dist if w != (0, 0)]
    minima = pareto_minima(support) if support else frozenset()
    return BRDistanceSet(minima, dist)


def br_distribution(code, cap: int = DEFAULT_CAP, threads: int = 1) -> BRDistanceSet:
    """Exact BR weight distribution; for (F_p-)linear codes this is the distance set."""
    return _distance_set(br_histogram(code, cap, threads))


def br_distance_set_pairwise(spec: FieldSpec, words) -> BRDistanceSet:
    """BR-minimal distances of an arbitrary set of words (O(|C|^2))."""
    words = np.asarray(words, dtype=np.int64)
    n = words.shape[1]
    hist = np.zeros((n + 1) ** 2, dtype=np.int64)
    for i in range(len(words) - 1):
        diff = spec.vsub(words[i + 1:], words[i][None, :])
        hist += _histogram(spec, diff, n)
    return _distance_set(hist.reshape(n + 1, n + 1))


def min_lambda_distance(code_or_set, lam, cap: int = DEFAULT_CAP) -> Fraction:
    ds = code_or_set if isinstance(code_or_set, BRDistanceSet) else br_distribution(code_or_set, cap)
    return ds.min_lambda(lam)


def min_hamming_distance(code_or_set, cap: int = DEFAULT_CAP) -> int:
    return int(min_lambda_distance(code_or_set, 1, cap))


# ---------------------------------------------------------------------------
# subfield restriction


@dataclass(frozen=True, eq=False)
class SubfieldRestriction:
    spec: FieldSpec
    basis: np.ndarray  # rows over F_q, embedded as codes of F_{q^m}
    n: int
    min_hamming: int | None

    @property
    def dimension(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.spec.q**self.dimension

    @property
    def scalars(self) -> np.ndarray:
        return np.array(self.spec.subfield_elements(), dtype=np.int64)

    @property
    def gen(self) -> np.ndarray:
        return self.basis


def restriction_to_subfield(code: LinearCode, cap: int = DEFAULT_CAP) -> SubfieldRestriction:
    """C intersected with F_q^n, solved over F_p from the parity-check equations."""
    spec = code.spec
    n, e = code.n, spec.e
    w = spec.subfield_generator
    wpow = [spec.pow(w, j) for j in range(e)]
    h = code.parity_check
    if h.size:
        # unknowns a_ij (coordinate i, F_p-component j): x_i = sum_j a_ij w^j
        coeff = np.stack([spec.vmul(h, wj) for wj in wpow], axis=-1)  # (n-k, n, e)
        digits = np.stack([coeff // spec.p**d % spec.p for d in range(spec.degree)], axis=1)
        eqs = digits.reshape(h.shape[0] * spec.degree, n * e)
        sol = nullspace(prime_field(spec.p), eqs)
    else:
        sol = np.eye(n * e, dtype=np.int64)
    if sol.shape[0] == 0:
        basis = np.zeros((0, n), dtype=np.int64)
    else:
        a = sol.reshape(-1, n, e)
        vecs = vsum(spec, spec.vmul(a, np.array(wpow)[None, None, :]), axis=2)
        basis, _ = rref(spec, vecs)
    res = SubfieldRestriction(spec, basis, n, None)
    dmin = None
    if 0 < res.dimension and res.size <= cap:
        dmin = min_hamming_distance(br_distribution(res, cap))
    return SubfieldRestriction(spec, basis, n, dmin)


# ---------------------------------------------------------------------------
# trace-symplectic duality (m = 2)


def fp_generators(code) -> np.ndarray:
    """Generators of the code as an F_p-module."""
    if isinstance(code, AdditiveCode):
        return code.gen
    spec = code.spec
    units = [spec.p**i for i in range(spec.degree)]
    rows = [spec.vmul(u, g) for g in code.gen for u in units]
    return np.array(rows, dtype=np.int64).reshape(-1, code.n)


def symplectic_form(spec: FieldSpec, x, y, gamma: int | None = None) -> int:
    """sum_i tr(a_i b'_i - a'_i b_i) for x_i = a_i*gamma + b_i, y_i = a'_i*gamma + b'_i."""
    gamma = spec.default_gamma() if gamma is None else int(gamma)
    a_tab, b_tab = spec.pair_tables(gamma)
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    t = spec.subfield_trace_table
    plus = t[spec.vmul(a_tab[x], b_tab[y])]
    minus = t[spec.vmul(a_tab[y], b_tab[x])]
    return int((plus.sum(axis=-1) - minus.sum(axis=-1)) % spec.p) if x.ndim == 1 else \
        (plus.sum(axis=-1) - minus.sum(axis=-1)) % spec.p


def trace_symplectic_dual(code, gamma: int | FieldElement | None = None, name: str = "") -> AdditiveCode:
    """Dual of ``code`` under the trace-symplectic form, as an additive code."""
    spec = code.spec
    if spec.m != 2:
        raise WrongExtensionDegree("trace-symplectic duality needs m = 2")
    gamma = spec.default_gamma() if gamma is None else int(gamma)
    spec.check_gamma(gamma)
    n, e, p = code.n, spec.e, spec.p
    a_tab, b_tab = spec.pair_tables(gamma)
    tr = spec.subfield_trace_table
    gens = fp_generators(code)
    ag, bg = a_tab[gens], b_tab[gens]
    w = spec.subfield_generator
    wpow = np.array([spec.pow(w, j) for j in range(e)], dtype=np.int64)
    # columns: for coordinate i, first e unknowns of a'_i then e unknowns of b'_i
    coef_a = (-tr[spec.vmul(bg[:, :, None], wpow[None, None, :])]) % p
    coef_b = tr[spec.vmul(ag[:, :, None], wpow[None, None, :])] % p
    mat = np.concatenate([coef_a, coef_b], axis=2).reshape(gens.shape[0], n * 2 * e)
    sol = nullspace(prime_field(p), mat, ncols=n * 2 * e)
    if sol.shape[0] == 0:
        return AdditiveCode(spec, np.zeros((0, n), dtype=np.int64), n, name)
    sol = sol.reshape(-1, n, 2, e)
    a_new = vsum(spec, spec.vmul(sol[:, :, 0, :], wpow[None, None, :]), axis=2)
    b_new = vsum(spec, spec.vmul(sol[:, :, 1, :], wpow[None, None, :]), axis=2)
    words = spec.vadd(spec.vmul(a_new, gamma), b_new)
    return additive_code(spec, words, name)


# ---------------------------------------------------------------------------
# optimality


@dataclass(frozen=True)
class MLDVerdict:
    is_optimal: bool
    d_lambda: Fraction
    singleton_rhs: int
    lhs: int


def is_mlambda_d(code: LinearCode, lam, distances: BRDistanceSet | None = None,
                 cap: int = DEFAULT_CAP) -> MLDVerdict:
    """Does the code meet floor((d_lambda - 1)/lambda) = n - k?"""
    lam = as_lambda(lam, Fraction(1))
    ds = distances if distances is not None else br_distribution(code, cap)
    if not ds.minima:
        raise ValueError("the zero code has no minimum distance")
    d = ds.min_lambda(lam)
    lhs = int((d - 1) // lam)
    return MLDVerdict(lhs == code.n - code.k, d, code.n - code.k, lhs)


def random_linear_code(spec: FieldSpec, n: int, k: int, rng: np.random.Generator) -> LinearCode:
    """Uniform k x n generator over F_{q^m}, resampled until it has full rank."""
    while True:
        g = rng.integers(0, spec.order, size=(k, n), dtype=np.int64)
        if rank(spec, g) == k:
            return from_generator(spec, g)


@dataclass(frozen=True)
class DensityResult:
    trials: int
    hits: int

    @property
    def fraction(self) -> float:
        return self.hits / self.trials if self.trials else 0.0


def mrd_density_experiment(spec: FieldSpec, n: int, k: int, lam, trials: int, seed: int,
                           cap: int = DEFAULT_CAP) -> DensityResult:
    """Fraction of random [n,k] codes that are MlambdaD (PCG64 stream seeded by ``seed``)."""
    lam = as_lambda(lam, Fraction(1))
    _check_cap(spec.order**k, cap)
    rng = np.random.default_rng(seed)
    hits = 0
    for _ in range(trials):
        code = random_linear_code(spec, n, k, rng)
        if k == n or is_mlambda_d(code, lam, cap=cap).is_optimal:
            hits += 1
    return DensityResult(trials, hits)
