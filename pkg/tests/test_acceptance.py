"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line (with its wall time) that is printed in
the pytest terminal summary; the time limits are asserted as well.
"""

import itertools
import math
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest
import sympy

from golden import (
    GF2_17_DUAL,
    GF2_17_MINIMA,
    GF2_17_PRIMAL,
    GF2_17_PRIMAL_MAX_WEIGHT,
    MDS16_DUAL,
    MDS16_MINIMA,
    MDS16_PRIMAL,
    MDS16_PRIMAL_MAX_WEIGHT,
    truncated,
)
from oracles import achievable_weights, field_of_order, weight_table
from subfield_codes.bounds import FIGURE_SWEEPS, bounds_csv, bounds_table, gv_random_experiment
from subfield_codes.codes import (
    br_distribution,
    from_generator,
    gabidulin_code,
    restriction_to_subfield,
    trace_symplectic_dual,
)
from subfield_codes.decoding import correctable_br_profiles, decode_nearest
from subfield_codes.enumerator import (
    KrawtchoukMatrix,
    character_sum_bruteforce,
    enumerator_from_code,
    macwilliams_transform,
)
from subfield_codes.gf import build_field, parse_vector
from subfield_codes.metric import rank_weight
from subfield_codes.volume import (
    asymptotic_ball_exponent,
    ball_double_sum_terms,
    ball_size_double_sum,
    ball_size,
    entropy,
    exact_ball_exponent,
    sphere_terms,
)

RESULTS: dict[int, tuple[str, str, float]] = {}


@contextmanager
def criterion(number: int, title: str, limit: float):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        status = "PASS"
    finally:
        RESULTS[number] = (status, title, time.perf_counter() - start)


def test_01_example1(example1):
    with criterion(1, "example1: BR minima, d_lambda and correctable profiles", 1.0):
        ds = br_distribution(example1)
        assert ds.minima == {(3, 3), (0, 6)}
        assert ds.min_lambda(2) == 9
        assert correctable_br_profiles(ds, 2, example1.n) == [(4, 0), (2, 1), (0, 2)]


def test_02_example2(example2, f4):
    with criterion(2, "example2: BR minima and decoding of (0,1,1)", 1.0):
        assert br_distribution(example2).minima == {(3, 0), (1, 1), (0, 2)}
        word = parse_vector("0 1 1", f4)
        r2 = decode_nearest(example2, word, 2)
        assert list(r2.codeword) == [1, 1, 1] and r2.unique
        r1 = decode_nearest(example2, word, 1)
        assert r1.ties == 3 and r1.distance == 1


def test_03_gf2_17(gf2_17):
    with criterion(3, "cyclic [17,9] over F_4: distances, minima, restriction", 60.0):
        assert (gf2_17.n, gf2_17.k) == (17, 9)
        ds = br_distribution(gf2_17, threads=1)
        assert ds.total == 4**9
        assert ds.min_lambda(1) == 7
        assert ds.minima == GF2_17_MINIMA
        assert ds.min_lambda(2) == 9 and ds.min_lambda(3) == 11
        r = restriction_to_subfield(gf2_17)
        assert r.dimension == 1 and r.min_hamming == 17


def test_04_gf2_17_macwilliams(gf2_17):
    with criterion(4, "cyclic [17,9] dual enumerator and MacWilliams both ways", 60.0):
        dual = trace_symplectic_dual(gf2_17)
        assert dual.size == 2**16
        wd = enumerator_from_code(dual)
        assert wd.coeffs == GF2_17_DUAL
        w = enumerator_from_code(gf2_17)
        assert truncated(w.coeffs, GF2_17_PRIMAL_MAX_WEIGHT) == GF2_17_PRIMAL
        assert macwilliams_transform(w, gf2_17.size, 2).coeffs == wd.coeffs
        assert macwilliams_transform(wd, dual.size, 2).coeffs == w.coeffs


def test_05_mds16_dual_route(mds16):
    with criterion(5, "[17,13] over F_16 via the dual: enumerators and minima", 120.0):
        dual = trace_symplectic_dual(mds16)
        assert dual.size == 2**16
        wd = enumerator_from_code(dual)
        assert wd.coeffs == MDS16_DUAL
        w = macwilliams_transform(wd, dual.size, 4)
        assert truncated(w.coeffs, MDS16_PRIMAL_MAX_WEIGHT) == MDS16_PRIMAL
        assert w.minimal_br() == MDS16_MINIMA
        assert min(i + j for (i, j) in w.coeffs if (i, j) != (0, 0)) == 5


def test_06_mrd_is_mld():
    with criterion(6, "Gabidulin codes are MlambdaD with (1, n-k) minimal", 10.0):
        f = build_field(2, 1, 4)
        for k in (1, 2, 3):
            code = gabidulin_code(f, 4, k, [1, 2, 4, 8])
            ds = br_distribution(code)
            for lam in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5)):
                assert ds.min_lambda(lam) == lam * (4 - k) + 1
            assert (1, 4 - k) in ds.minima


def test_07_ball_oracle():
    with criterion(7, "ball sizes against exhaustive counts and the double sum", 30.0):
        for order in (4, 8, 9, 16):
            spec = field_of_order(order)
            for lam in (Fraction(1), Fraction(3, 2), Fraction(2)):
                wt = np.array([float(x) for x in weight_table(spec, lam)])
                for n in (1, 2, 3):
                    allv = np.array(list(itertools.product(range(order), repeat=n)), dtype=np.int64)
                    weights = wt[allv].sum(axis=1)
                    for r in achievable_weights(n, lam):
                        brute = int((weights <= float(r) + 1e-9).sum())
                        assert ball_size(n, r, lam, spec.q, spec.m) == brute
                        if lam.denominator == 1:
                            assert ball_size_double_sum(n, int(r), int(lam), spec.q, spec.m) == brute
                            for (j, i), val in ball_double_sum_terms(n, int(r), int(lam), spec.q,
                                                                     spec.m).items():
                                s = j - int(lam) * i
                                assert sphere_terms(n, j, lam, spec.q, spec.m).get((s, i), 0) == val


def test_08_asymptotics():
    with criterion(8, "ball exponent at n = 2000 within 0.01 of the limit", 60.0):
        for lam in (2, 1):
            for frac in (0.25, 0.5, 1.0):
                U = frac * lam / 2
                lim = asymptotic_ball_exponent(U, lam, 2, 2)
                exact = exact_ball_exponent(2000, U, lam, 2, 2)
                assert abs(exact - lim) <= 0.01
                if lam == 1:
                    assert lim == pytest.approx(entropy(U, 4), abs=1e-9)


def test_09_bounds_suite():
    with criterion(9, "bound sweeps: GV below every upper bound, qualitative orderings", 120.0):
        tables = {}
        for s in FIGURE_SWEEPS:
            rows = bounds_table(s.q, s.m, s.lam, s.d, s.n_from, s.n_to)
            bounds_csv(rows)
            for r in rows:
                assert all(r.gilbert_varshamov <= v for v in r.uppers.values())
            tables[(s.q, s.m)] = rows
        assert any(r.singleton < r.sphere_packing for r in tables[521, 4] if r.n <= 12)
        assert any(r.sphere_packing < r.singleton for r in tables[4, 2] if r.n >= 20)


def test_10_krawtchouk():
    with criterion(10, "character sums equal Krawtchouk entries; K^2 = q^2 I", 10.0):
        for pem in ((2, 1, 2), (3, 1, 2), (2, 2, 2), (5, 1, 2)):
            spec = build_field(*pem)
            k = KrawtchoukMatrix(spec.q)
            for i, j in itertools.product(range(3), repeat=2):
                assert character_sum_bruteforce(spec, i, j, tol=1e-9) == k[i, j]
        q = sympy.Symbol("q")
        kk = sympy.Matrix([[1, 1, 1], [q - 1, q - 1, -1], [q**2 - q, -q, 0]])
        assert sympy.simplify(kk * kk - q**2 * sympy.eye(3)) == sympy.zeros(3, 3)
        for qq in range(2, 1025):
            if sympy.perfect_power(qq) or sympy.isprime(qq):
                KrawtchoukMatrix(qq)  # verifies K^2 = q^2 I on construction


def _rank_le_one_m2(spec, v):
    """Vectorised rank <= 1 test for m = 2: all nonzero entries are F_q-multiples of one entry."""
    first = np.argmax(v != 0, axis=1)
    pivot = v[np.arange(len(v)), first]
    inv = np.array([0] + [spec.inv(int(x)) for x in range(1, spec.order)], dtype=np.int64)
    ratios = spec.vmul(v, inv[pivot][:, None])
    return (spec.base_mask[ratios] | (v == 0)).all(axis=1)


def test_11_metric_properties():
    with criterion(11, "triangle inequality, base-distance counterexample, rank inequality", 30.0):
        spec = build_field(2, 2, 2, [1, 1, 0, 0, 1])
        rng = np.random.default_rng(2024)
        n, trials = 6, 10**5
        cls = spec.class_table
        for lam in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5)):
            wb, wr = lam.denominator, lam.numerator
            x, y, z = (rng.integers(0, spec.order, size=(trials, n)) for _ in range(3))

            def dist(a, b):
                c = cls[spec.vsub(a, b)]
                return (wb * (c == 1) + wr * (c == 2)).sum(axis=1)

            assert (dist(x, z) <= dist(x, y) + dist(y, z)).all()
        f4 = build_field(2, 1, 2, [1, 1, 1])
        base = lambda a, b: int(f4.class_table[f4.sub(a, b)] == 1)
        a, a1, zero = 2, 3, 0
        assert base(a, a1) == 1 and base(a, zero) + base(zero, a1) == 0
        v = rng.integers(0, spec.order, size=(trials, n))
        v = v[(v != 0).any(axis=1)]
        rank = np.where(_rank_le_one_m2(spec, v), 1, 2)
        for row, r in zip(v[:500], rank[:500]):
            assert rank_weight(row, spec) == r
        c = cls[v]
        for lam in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5)):
            wt = (lam.denominator * (c == 1) + lam.numerator * (c == 2)).sum(axis=1)
            assert (wt >= lam.numerator * (rank - 1) + lam.denominator).all()


def test_12_gv_monte_carlo():
    with criterion(12, "random k = 1 codes meet the GV probability bound", 60.0):
        res = gv_random_experiment(2, 2, 2, 6, 3, eps=0.35, trials=2000, seed=20240601,
                                   confidence=0.99)
        assert res.k == 1
        assert res.ci_high >= res.lower_bound
