import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import (
    GF2_17_DUAL,
    GF2_17_PRIMAL,
    GF2_17_PRIMAL_MAX_WEIGHT,
    MDS16_DUAL,
    MDS16_MINIMA,
    MDS16_PRIMAL,
    MDS16_PRIMAL_MAX_WEIGHT,
    truncated,
)
from subfield_codes.codes import all_codewords, from_generator, trace_symplectic_dual
from subfield_codes.enumerator import (
    KrawtchoukMatrix,
    SubfieldEnumerator,
    element_class,
    enumerator_from_code,
    krawtchouk_bruteforce,
    macwilliams_transform,
    pair_class,
    symbolic_krawtchouk_square,
)
from subfield_codes.errors import NegativeCoefficient, NonIntegerCoefficient
from subfield_codes.gf import build_field


@pytest.fixture(scope="module")
def gf2_17_dual(gf2_17):
    return trace_symplectic_dual(gf2_17)


@pytest.fixture(scope="module")
def mds16_dual(mds16):
    return trace_symplectic_dual(mds16)


def test_classes(f16):
    g = f16(f16.default_gamma())
    assert pair_class(0, 0) == 0 and pair_class(0, 1) == 1 and pair_class(2, 0) == 2
    for x in f16.elements():
        expected = 0 if x.value == 0 else (1 if f16.is_base(x.value) else 2)
        assert element_class(x, g) == expected


def test_example_enumerators(example1, example2):
    w1 = enumerator_from_code(example1)
    assert w1.coeffs == {(0, 0): 1, (3, 3): 2, (0, 6): 1}
    assert w1.total == 4
    assert w1.minimal_br() == {(3, 3), (0, 6)}
    assert enumerator_from_code(example2).minimal_br() == {(3, 0), (1, 1), (0, 2)}


def test_text_and_csv(example1):
    w = enumerator_from_code(example1)
    assert w.to_text() == "Y0^6 + 2*Y1^3*Y2^3 + Y2^6"
    assert w.to_csv().splitlines() == ["i,j,A", "0,0,1", "3,3,2", "0,6,1"]
    assert w.evaluate(1, 1, 1) == 4


def test_gf2_17_dual_enumerator(gf2_17_dual, gf2_17):
    w = enumerator_from_code(gf2_17_dual)
    assert w.coeffs == GF2_17_DUAL
    primal = macwilliams_transform(w, gf2_17_dual.size, 2)
    assert truncated(primal.coeffs, GF2_17_PRIMAL_MAX_WEIGHT) == GF2_17_PRIMAL
    assert primal.coeffs == enumerator_from_code(gf2_17).coeffs
    back = macwilliams_transform(enumerator_from_code(gf2_17), gf2_17.size, 2)
    assert back.coeffs == GF2_17_DUAL


def test_mds16_dual_route(mds16_dual, mds16):
    assert mds16_dual.size == 2**16
    w = enumerator_from_code(mds16_dual)
    assert w.coeffs == MDS16_DUAL
    primal = macwilliams_transform(w, mds16_dual.size, 4)
    assert primal.total == 16**13
    assert truncated(primal.coeffs, MDS16_PRIMAL_MAX_WEIGHT) == MDS16_PRIMAL
    assert primal.minimal_br() == MDS16_MINIMA
    assert min(i + j for (i, j) in primal.coeffs if (i, j) != (0, 0)) == 5
    assert macwilliams_transform(primal, mds16.size, 4).coeffs == MDS16_DUAL


def test_gamma_independence(mds16):
    spec = mds16.spec
    gammas = [g for g in range(spec.order) if not spec.is_base(g)][:3]
    results = {tuple(sorted(enumerator_from_code(trace_symplectic_dual(mds16, g)).coeffs.items()))
               for g in gammas}
    assert len(results) == 1


def test_transform_self_inverse_small():
    f9 = build_field(3, 1, 2)
    code = from_generator(f9, [[1, 2, 5, 0], [0, 1, 3, 7]])
    w = enumerator_from_code(code)
    dual = trace_symplectic_dual(code)
    wd = enumerator_from_code(dual)
    assert macwilliams_transform(w, code.size, 3).coeffs == wd.coeffs
    assert macwilliams_transform(wd, dual.size, 3).coeffs == w.coeffs


def test_transform_errors():
    with pytest.raises(NonIntegerCoefficient):
        macwilliams_transform(SubfieldEnumerator(2, {(0, 0): 1, (1, 0): 1}), 3, 2)
    with pytest.raises(NegativeCoefficient):
        # Y0 + 3 Y2 is not the enumerator of any code: it maps to (4 Y0 - 2 Y1 + 2 Y2) / 2
        macwilliams_transform(SubfieldEnumerator(1, {(0, 0): 1, (0, 1): 3}), 2, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 16, 1024])
def test_krawtchouk_square(q):
    k = np.array(KrawtchoukMatrix(q).matrix, dtype=object)
    assert (k.dot(k) == q * q * np.eye(3, dtype=object)).all()


def test_symbolic_square():
    assert symbolic_krawtchouk_square() == sympy.zeros(3, 3)


@pytest.mark.parametrize("pem", [(2, 1, 2), (3, 1, 2), (2, 2, 2), (5, 1, 2)])
def test_character_sums(pem):
    spec = build_field(*pem)
    assert krawtchouk_bruteforce(spec) == [list(r) for r in KrawtchoukMatrix(spec.q).matrix]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(0, 3), min_size=4, max_size=4), min_size=1, max_size=3))
def test_macwilliams_random_codes(rows):
    f4 = build_field(2, 1, 2, [1, 1, 1])
    if not np.any(rows):
        return
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        code = from_generator(f4, rows)
    w = enumerator_from_code(code)
    wd = enumerator_from_code(trace_symplectic_dual(code))
    assert macwilliams_transform(w, code.size, 2).coeffs == wd.coeffs
