import csv
import io
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_ball, field_of_order
from subfield_codes.bounds import (
    FIGURE_SWEEPS,
    average_weight_D,
    average_weight_D_closed,
    bound_report,
    bounds_csv,
    bounds_table,
    gilbert_varshamov_bound,
    gv_dimension,
    gv_random_experiment,
    nonlinear_weight_D,
    plotkin_distance_bound,
    plotkin_long_bound,
    plotkin_long_length,
    plotkin_nonlinear_bound,
    plotkin_size_bound,
    singleton_bound_size,
    sphere_packing_bound,
)
from subfield_codes.codes import br_distribution
from subfield_codes.errors import ConditionViolated, LambdaTooSmall, SizeTooSmall


def test_sphere_packing_examples():
    assert sphere_packing_bound(5, 1, 2, 2, 2) == 4**5
    f4 = field_of_order(4)
    assert brute_ball(f4, 3, 1, 2) == 4
    assert sphere_packing_bound(3, 3, 2, 2, 2) == 16


def test_gv_examples():
    f4 = field_of_order(4)
    vol = brute_ball(f4, 3, 2, 2)
    assert vol == 13
    assert gilbert_varshamov_bound(3, 3, 2, 2, 2) == -(-64 // vol) == 5
    assert gilbert_varshamov_bound(4, 1, 2, 2, 2) == 4**4
    assert gilbert_varshamov_bound(3, 7, 2, 2, 2) == 1


def test_singleton_examples():
    assert singleton_bound_size(6, 9, 2, 2, 2) == 16
    assert singleton_bound_size(6, 4, 1, 2, 2) == 4**3
    n, k, lam = 7, 3, Fraction(5, 2)
    assert singleton_bound_size(n, lam * (n - k) + 1, lam, 2, 2) == 4**k
    with pytest.raises(LambdaTooSmall):
        singleton_bound_size(6, 3, Fraction(3, 4), 2, 2)


def test_average_weight():
    assert average_weight_D(2, 2, 2) == Fraction(5, 4)
    assert average_weight_D(1, 3, 2) == Fraction(8, 9)
    rnd = random.Random(4)
    for _ in range(50):
        lam = Fraction(rnd.randint(1, 20), rnd.randint(1, 6))
        lam = max(lam, Fraction(1, 2))
        q, m = rnd.choice([2, 3, 4, 5, 7, 9]), rnd.randint(1, 6)
        assert average_weight_D(lam, q, m) == average_weight_D_closed(lam, q, m)
        if m > 1:
            assert nonlinear_weight_D(lam, q, m) > average_weight_D(lam, q, m)


@pytest.mark.parametrize("order", [4, 9, 16])
@pytest.mark.parametrize("lam", [Fraction(1), Fraction(3, 2), Fraction(5)])
def test_brute_force_mean_weight(order, lam):
    from oracles import weight_table

    spec = field_of_order(order)
    mean = sum(weight_table(spec, lam), Fraction(0)) / spec.order
    assert mean == average_weight_D(lam, spec.q, spec.m)


def test_plotkin_distance(example1):
    assert plotkin_distance_bound(6, 4, 2, 2, 2) == 10
    with pytest.raises(SizeTooSmall):
        plotkin_distance_bound(6, 1, 2, 2, 2)
    big = plotkin_distance_bound(6, 10**30, 2, 2, 2)
    assert big - 6 * Fraction(5, 4) < Fraction(1, 10**20)
    assert plotkin_distance_bound(5, 4, 1, 2, 2) == Fraction(4, 3) * 5 * Fraction(3, 4)


@pytest.mark.parametrize("name", ["example1", "example2", "gf2_17"])
def test_codes_satisfy_bounds(name, request):
    code = request.getfixturevalue(name)
    ds = br_distribution(code)
    q, m = code.spec.q, code.spec.m
    for lam in [Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]:
        d = ds.min_lambda(lam)
        assert d <= plotkin_distance_bound(code.n, code.size, lam, q, m)
        rep = bound_report(code.n, d, lam, q, m)
        assert code.size <= rep.best_upper
        for name_, val in rep.uppers.items():
            assert code.size <= val, name_


def test_plotkin_size_examples():
    assert plotkin_size_bound(2, 3, 2, 2, 2) == 6
    assert plotkin_size_bound(4, 5, 2, 2, 2) is None
    for n in range(1, 8):
        assert plotkin_size_bound(n, 2 * n, 2, 2, 2) is not None


def test_plotkin_nonlinear_examples():
    assert nonlinear_weight_D(2, 2, 2) == Fraction(11, 8)
    assert plotkin_nonlinear_bound(2, 3, 2, 2, 2) == 12
    assert plotkin_nonlinear_bound(3, 4, 2, 2, 2) is None


def test_plotkin_long():
    # at the figure parameters the corollary never applies: n' = 1 < d/lambda
    assert plotkin_long_length(7, 4, 4, 2) == 1
    with pytest.raises(ConditionViolated, match="exceeds"):
        plotkin_long_bound(9, 7, 4, 4, 2)
    # a larger distance makes it applicable
    n1 = plotkin_long_length(20, 4, 4, 2)
    assert n1 == 5
    with pytest.raises(ConditionViolated, match="does not exceed"):
        plotkin_long_bound(n1, 20, 4, 4, 2)
    val = plotkin_long_bound(n1 + 1, 20, 4, 4, 2)
    D = average_weight_D(4, 4, 2)
    assert val == (20 * 16 ** 1 * Fraction(1) / (20 - n1 * D)).__floor__()
    # consistency with the short Plotkin bound at length n'
    short = plotkin_size_bound(n1, 20, 4, 4, 2)
    assert short * 16 <= val <= (short + 1) * 16


def test_bounds_table_csv():
    rows = bounds_table(4, 2, 4, 7, 2, 12)
    text = bounds_csv(rows)
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert list(parsed[0].keys()) == ["n", "gv", "packing", "singleton", "plotkin_size", "plotkin_long",
                                      "plotkin_nonlinear", "best_upper"]
    assert parsed[1]["plotkin_size"] == "NA" and parsed[0]["plotkin_long"] == "NA"
    for r in rows:
        assert 1 <= r.gilbert_varshamov <= r.best_upper


@pytest.mark.parametrize("sweep", FIGURE_SWEEPS, ids=lambda s: s.label)
def test_figure_sweeps(sweep):
    rows = bounds_table(sweep.q, sweep.m, sweep.lam, sweep.d, sweep.n_from, sweep.n_to)
    prev = None
    for r in rows:
        assert r.gilbert_varshamov <= min(r.uppers.values())
        if prev is not None:
            assert r.gilbert_varshamov >= prev.gilbert_varshamov
            assert r.sphere_packing >= prev.sphere_packing
            assert r.singleton >= prev.singleton
        prev = r


def test_qualitative_orderings():
    big_q = bounds_table(521, 4, 3, 10, 2, 12)
    assert any(r.singleton < r.sphere_packing for r in big_q)
    small_q = bounds_table(4, 2, 4, 7, 20, 40)
    assert any(r.sphere_packing < r.singleton for r in small_q)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 30), st.integers(1, 40), st.sampled_from(["1", "3/2", "2", "4"]),
       st.sampled_from([(2, 2), (3, 2), (4, 2), (2, 3)]))
def test_sandwich_property(n, d, lam, qm):
    rep = bound_report(n, d, Fraction(lam), *qm)
    assert 1 <= rep.gilbert_varshamov <= rep.best_upper


def test_gv_experiment():
    n, d, lam = 6, 3, 2
    eps = 0.35
    assert gv_dimension(n, d, lam, 2, 2, eps) == 1
    a = gv_random_experiment(2, 2, lam, n, d, eps, 300, seed=9)
    b = gv_random_experiment(2, 2, lam, n, d, eps, 300, seed=9)
    assert a == b
    assert 0 <= a.lower_bound <= 1
    assert a.ci_high >= a.lower_bound
    small_eps = gv_random_experiment(2, 2, lam, n, d, 0.1, 5, seed=1)
    assert small_eps.k == 2
    assert small_eps.lower_bound == 0.0  # 1 - 4^(0.4) is negative and gets clipped
