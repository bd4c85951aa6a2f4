"""Subfield weight enumerators over F_{q^2} and their MacWilliams transform.

A coordinate (a, b) in F_q x F_q (equivalently eps = a*gamma + b) falls in
class 0 if it is (0, 0), class 1 if a = 0 != b (eps in F_q minus zero) and
class 2 if a != 0 (eps outside F_q).  The enumerator of a code is
sum A[i, j] Y0^(n-i-j) Y1^i Y2^j with A[i, j] the number of words having
i coordinates of class 1 and j of class 2.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
import sympy

from .codes import DEFAULT_CAP, br_histogram
from .errors import NegativeCoefficient, NonIntegerCoefficient, NotConstantOnClass, RoundingTooLarge
from .gf import FieldElement, FieldSpec, decompose_pair
from .metric import BRWeight, pareto_minima


@dataclass(frozen=True)
class SubfieldEnumerator:
    n: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0 or i + j > self.n:
                raise ValueError(f"monomial ({i},{j}) outside length {self.n}")

    def __getitem__(self, key) -> int:
        return self.coeffs.get(tuple(key), 0)

    @property
    def total(self) -> int:
        return sum(self.coeffs.values())

    def evaluate(self, y0, y1, y2):
        return sum(c * y0 ** (self.n - i - j) * y1**i * y2**j for (i, j), c in self.coeffs.items())

    def terms(self) -> list[tuple[int, int, int]]:
        """(i, j, A_ij) by descending Y0 degree, then descending Y1 degree."""
        keys = sorted(self.coeffs, key=lambda ij: (ij[0] + ij[1], -ij[0]))
        return [(i, j, self.coeffs[i, j]) for i, j in keys if self.coeffs[i, j]]

    def to_text(self) -> str:
        parts = []
        for i, j, c in self.terms():
            mono = []
            for var, power in (("Y0", self.n - i - j), ("Y1", i), ("Y2", j)):
                if power == 1:
                    mono.append(var)
                elif power > 1:
                    mono.append(f"{var}^{power}")
            body = "*".join(mono) if mono else "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts) if parts else "0"

    def to_csv(self) -> str:
        lines = ["i,j,A"] + [f"{i},{j},{c}" for i, j, c in self.terms()]
        return "\n".join(lines) + "\n"

    def minimal_br(self) -> frozenset:
        return minimal_br_from_enumerator(self)


def pair_class(a: int, b: int) -> int:
    """Class of (a, b) in F_q x F_q: 0 for (0,0), 1 for (0, b != 0), 2 for a != 0."""
    if a == 0:
        return 0 if b == 0 else 1
    return 2


def element_class(eps: FieldElement, gamma: FieldElement) -> int:
    a, b = decompose_pair(eps, gamma)
    return pair_class(a.value, b.value)


def enumerator_from_code(code, cap: int = DEFAULT_CAP, threads: int = 1) -> SubfieldEnumerator:
    hist = br_histogram(code, cap, threads)
    coeffs = {(int(i), int(j)): int(hist[i, j]) for i, j in zip(*np.nonzero(hist))}
    return SubfieldEnumerator(code.n, coeffs)


def minimal_br_from_enumerator(w: SubfieldEnumerator) -> frozenset:
    support = [BRWeight(i, j) for (i, j), c in w.coeffs.items() if c and (i, j) != (0, 0)]
    return pareto_minima(support) if support else frozenset()


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KrawtchoukMatrix:
    q: int
    matrix: tuple = field(init=False)

    def __post_init__(self):
        q = self.q
        k = ((1, 1, 1), (q - 1, q - 1, -1), (q * q - q, -q, 0))
        object.__setattr__(self, "matrix", k)
        sq = [[sum(k[i][t] * k[t][j] for t in range(3)) for j in range(3)] for i in range(3)]
        if sq != [[q * q if i == j else 0 for j in range(3)] for i in range(3)]:
            raise ArithmeticError(f"K^2 != q^2 I for q = {q}")

    def __getitem__(self, ij) -> int:
        return self.matrix[ij[0]][ij[1]]

    def column_forms(self) -> list[tuple[int, int, int]]:
        """Y_j* = sum_i Y_i K[i, j], as coefficient triples over (Y0, Y1, Y2)."""
        return [tuple(self.matrix[i][j] for i in range(3)) for j in range(3)]


def symbolic_krawtchouk_square() -> sympy.Matrix:
    """K^2 - q^2 I with q symbolic (the zero matrix)."""
    q = sympy.Symbol("q")
    k = sympy.Matrix([[1, 1, 1], [q - 1, q - 1, -1], [q**2 - q, -q, 0]])
    return sympy.simplify(k * k - q**2 * sympy.eye(3))


def _form_powers(form, n: int) -> list[np.ndarray]:
    """Powers 0..n of c0*Y0 + c1*Y1 + c2*Y2 as arrays indexed [Y1 exp, Y2 exp]."""
    c0, c1, c2 = form
    out = [np.array([[1]], dtype=object)]
    for d in range(1, n + 1):
        prev = out[-1]
        cur = np.zeros((d + 1, d + 1), dtype=object)
        cur[:d, :d] += c0 * prev
        cur[1:, :d] += c1 * prev
        cur[:d, 1:] += c2 * prev
        out.append(cur)
    return out


def _mul2d(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1), dtype=object)
    rb, cb = b.shape
    for i, j in zip(*np.nonzero(a)):
        out[i:i + rb, j:j + cb] += a[i, j] * b
    return out


def macwilliams_transform(w: SubfieldEnumerator, code_size: int, q: int) -> SubfieldEnumerator:
    """Enumerator of the trace-symplectic dual: W(Y K) / |C|, exactly."""
    n = w.n
    forms = KrawtchoukMatrix(q).column_forms()
    powers = [_form_powers(f, n) for f in forms]
    acc = np.zeros((n + 1, n + 1), dtype=object)
    for (i, j), c in w.coeffs.items():
        if not c:
            continue
        term = _mul2d(_mul2d(powers[2][j], powers[1][i]), powers[0][n - i - j])
        acc += c * term
    coeffs = {}
    for i in range(n + 1):
        for j in range(n + 1 - i):
            v = int(acc[i, j])
            if v == 0:
                continue
            quot, rem = divmod(v, code_size)
            if rem:
                raise NonIntegerCoefficient(f"coefficient ({i},{j}) = {v} not divisible by {code_size}")
            if quot < 0:
                raise NegativeCoefficient(f"coefficient ({i},{j}) is negative: {quot}")
            coeffs[i, j] = quot
    return SubfieldEnumerator(n, coeffs)


# ---------------------------------------------------------------------------


def _class_members(qspec: FieldSpec, cls: int) -> list[tuple[int, int]]:
    els = qspec.subfield_elements()
    return [(a, b) for a in els for b in els if pair_class(a, b) == cls]


def character_sum_bruteforce(qspec: FieldSpec, i: int, j: int, tol: float = 1e-9) -> int:
    """sum over x in P_i of omega^(y*x), checked to be the same integer for every y in P_j."""
    p = qspec.p
    tr = qspec.subfield_trace
    values = set()
    for a, b in _class_members(qspec, j):
        total = 0j
        for a2, b2 in _class_members(qspec, i):
            k = (tr(qspec.mul(a, b2)) - tr(qspec.mul(a2, b))) % p
            total += cmath.exp(2j * cmath.pi * k / p)
        r = round(total.real)
        if abs(total.imag) > tol or abs(total.real - r) > tol:
            raise RoundingTooLarge(f"character sum {total} is not an integer within {tol}")
        values.add(r)
    if len(values) != 1:
        raise NotConstantOnClass(f"sum over P_{i} varies across P_{j}: {sorted(values)}")
    return values.pop()


def krawtchouk_bruteforce(qspec: FieldSpec) -> list[list[int]]:
    return [[character_sum_bruteforce(qspec, i, j) for j in range(3)] for i in range(3)]


def enumerator_from_terms(n: int, terms: Iterable[tuple[int, int, int]]) -> SubfieldEnumerator:
    """Build from (i, j, A_ij) triples."""
    return SubfieldEnumerator(n, {(i, j): c for i, j, c in terms})
