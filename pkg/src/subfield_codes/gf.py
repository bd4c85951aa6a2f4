"""Finite fields F_{q^m} with a distinguished subfield F_q, q = p^e.

The field is realised as F_p[x]/(modulus) with deg(modulus) = e*m; the subfield
F_q is the set of fixed points of x -> x^q.  Elements are stored as integer
codes ``v = sum(c_i * p**i)`` where ``c`` is the coefficient vector over F_p
(low degree first).  Fields with at most ``TABLE_LIMIT`` elements get
exp/log tables and vectorised numpy arithmetic; larger fields support scalar
arithmetic only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

from .errors import (
    DivisionByZero,
    ExponentOutOfRange,
    GammaInBaseField,
    NonPrime,
    ParseError,
    ReduciblePolynomial,
    SpecMismatch,
    TooLarge,
    WrongExtensionDegree,
)

TABLE_LIMIT = 1 << 20
ADD_TABLE_LIMIT = 1 << 10

# ---------------------------------------------------------------------------
# polynomials over F_p as coefficient lists, low degree first


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_mulmod(a, b, f, p) -> list[int]:
    return poly_mod(poly_mul(a, b, p), f, p)


def poly_powmod(a, k: int, f, p) -> list[int]:
    result = [1]
    base = poly_mod(a, f, p)
    while k:
        if k & 1:
            result = poly_mulmod(result, base, f, p)
        base = poly_mulmod(base, base, f, p)
        k >>= 1
    return poly_mod(result, f, p)


def poly_sub(a, b, p) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def poly_gcd(a, b, p) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test: x^(p^N) = x mod f and gcd(x^(p^(N/r)) - x, f) = 1."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]

    def frob_power(k):
        h = x
        for _ in range(k):
            h = poly_powmod(h, p, f, p)
        return h

    if poly_sub(frob_power(n), x, p) != []:
        return False
    for r in factorint(n):
        g = poly_gcd(poly_sub(frob_power(n // r), x, p), f, p)
        if len(g) != 1:
            return False
    return True


def smallest_irreducible(p: int, degree: int) -> list[int]:
    """Monic irreducible of the given degree with the smallest integer code."""
    for code in range(p**degree, 2 * p**degree):
        f = _int_to_digits(code, p, degree + 1)
        if is_irreducible(f, p):
            return f
    raise ReduciblePolynomial(f"no irreducible polynomial of degree {degree} over F_{p}")


def _int_to_digits(v: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _digits_to_int(d: Iterable[int], p: int) -> int:
    v = 0
    for c in reversed(list(d)):
        v = v * p + c
    return v


def _inverse_mod_p(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] % p), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, p)
        a[col] = [v * inv % p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [(v - c * w) % p for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The field F_{p^(e*m)} together with its subfield F_q, q = p^e."""

    p: int
    e: int
    m: int
    modulus: tuple[int, ...]
    primitive_element: int
    _t: dict = field(default_factory=dict, repr=False)

    # -- basic numbers --------------------------------------------------
    @property
    def degree(self) -> int:
        return self.e * self.m

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def has_tables(self) -> bool:
        return self.order <= TABLE_LIMIT

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.e, self.m, self.modulus, self.primitive_element) == (
            other.p, other.e, other.m, other.modulus, other.primitive_element)

    def __hash__(self):
        return hash((self.p, self.e, self.m, self.modulus, self.primitive_element))

    def __repr__(self):
        return (f"FieldSpec(p={self.p}, e={self.e}, m={self.m}, "
                f"modulus={list(self.modulus)})")

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            self.check(value)
            return value
        if isinstance(value, str):
            return parse_element(value, self)
        v = int(value)
        if not 0 <= v < self.order:
            raise ValueError(f"integer code {v} outside [0, {self.order})")
        return FieldElement(self, v)

    def check(self, x: "FieldElement"):
        if x.spec != self:
            raise SpecMismatch("operands belong to different fields")

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        return FieldElement(self, self.primitive_element)

    def elements(self) -> list["FieldElement"]:
        self._require_tables()
        return [FieldElement(self, v) for v in range(self.order)]

    # -- digits -----------------------------------------------------------
    def digits(self, v: int) -> list[int]:
        return _int_to_digits(v, self.p, self.degree)

    def from_digits(self, d: Iterable[int]) -> int:
        return _digits_to_int([c % self.p for c in d], self.p)

    def _require_tables(self):
        if not self.has_tables:
            raise TooLarge(f"field of order {self.order} exceeds table limit {TABLE_LIMIT}")

    # -- tables -----------------------------------------------------------
    @property
    def exp(self) -> np.ndarray:
        self._require_tables()
        return self._t["exp"]

    @property
    def log(self) -> np.ndarray:
        self._require_tables()
        return self._t["log"]

    def _table(self, name, builder):
        if name not in self._t:
            self._require_tables()
            self._t[name] = builder()
        return self._t[name]

    # -- scalar arithmetic on codes --------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.order - 1)])
        return self.from_digits(poly_mulmod(self.digits(a), self.digits(b), self.modulus, self.p)
                                + [0] * self.degree)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, -1)

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if k == 0 else 0
        k %= self.order - 1
        if self.has_tables:
            return int(self.exp[int(self.log[a]) * k % (self.order - 1)])
        d = poly_powmod(self.digits(a), k, self.modulus, self.p)
        return self.from_digits(d + [0] * self.degree)

    def scalar(self, n: int) -> int:
        """Code of the element n*1 of the prime subfield."""
        return n % self.p

    def frobenius(self, a: int, k: int = 1) -> int:
        return self.pow(a, self.p**k)

    # -- subfield structure ----------------------------------------------
    def is_base(self, a: int) -> bool:
        return self.pow(a, self.q) == a

    def absolute_trace(self, a: int) -> int:
        s, y = 0, a
        for _ in range(self.degree):
            s = self.add(s, y)
            y = self.pow(y, self.p)
        if s >= self.p:
            raise ArithmeticError("trace left the prime field")
        return s

    def subfield_trace(self, a: int) -> int:
        """Trace from F_q down to F_p of an element of F_q."""
        if not self.is_base(a):
            raise ValueError("subfield trace needs an element of F_q")
        s, y = 0, a
        for _ in range(self.e):
            s = self.add(s, y)
            y = self.pow(y, self.p)
        return s

    @property
    def subfield_generator(self) -> int:
        """Primitive element of F_q (a power of the primitive element)."""
        return self.pow(self.primitive_element, (self.order - 1) // (self.q - 1))

    def subfield_elements(self) -> list[int]:
        w = self.subfield_generator
        return [0] + [self.pow(w, j) for j in range(self.q - 1)]

    def default_gamma(self) -> int:
        g = self.primitive_element
        if not self.is_base(g):
            return g
        return self.add(g, 1)

    # -- vectorised arithmetic (numpy int64 arrays of codes) --------------
    @property
    def base_mask(self) -> np.ndarray:
        def build():
            lg = self._t["log"]
            step = (self.order - 1) // (self.q - 1)
            mask = (lg % step) == 0
            mask[0] = True
            return mask
        return self._table("base_mask", build)

    @property
    def class_table(self) -> np.ndarray:
        """0 for zero, 1 for F_q minus zero, 2 for elements outside F_q."""
        def build():
            cls = np.where(self.base_mask, 1, 2).astype(np.int8)
            cls[0] = 0
            return cls
        return self._table("class_table", build)

    @property
    def neg_table(self) -> np.ndarray:
        def build():
            return np.array([self.neg(v) for v in range(self.order)], dtype=np.int64)
        return self._table("neg_table", build)

    @property
    def add_table(self) -> np.ndarray | None:
        if self.order > ADD_TABLE_LIMIT:
            return None

        def build():
            v = np.arange(self.order, dtype=np.int64)
            return self._digit_add(v[:, None], v[None, :])
        return self._table("add_table", build)

    def _digit_add(self, a, b):
        res = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.degree):
            res += ((a // pw % self.p + b // pw % self.p) % self.p) * pw
            pw *= self.p
        return res

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        table = self.add_table
        if table is not None:
            return table[a, b]
        return self._digit_add(a, b)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return self.neg_table[a]

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        lg, ex = self.log, self.exp
        out = ex[(lg[a] + lg[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vclass(self, a) -> np.ndarray:
        return self.class_table[np.asarray(a, dtype=np.int64)]

    # -- coordinates over F_q ---------------------------------------------
    @property
    def subfield_basis(self) -> list[int]:
        """Power basis 1, g, ..., g^(m-1) of F_{q^m} over F_q (g primitive)."""
        return [self.pow(self.primitive_element, i) for i in range(self.m)]

    def _coord_matrix(self):
        if "coord" not in self._t:
            w = self.subfield_generator
            rows = []
            for b in self.subfield_basis:
                for j in range(self.e):
                    rows.append(self.digits(self.mul(b, self.pow(w, j))))
            self._t["coord"] = _inverse_mod_p(rows, self.p)
        return self._t["coord"]

    def subfield_coordinates(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` over F_q in the basis ``subfield_basis``."""
        inv = self._coord_matrix()
        d = self.digits(a)
        n = self.degree
        c = [sum(d[r] * inv[r][s] for r in range(n)) % self.p for s in range(n)]
        w = self.subfield_generator
        out = []
        for i in range(self.m):
            x = 0
            for j in range(self.e):
                x = self.add(x, self.mul(c[i * self.e + j], self.pow(w, j)))
            out.append(x)
        return tuple(out)

    @property
    def coordinate_table(self) -> np.ndarray:
        """Array of shape (order, m): F_q-coordinates of every element."""
        def build():
            inv = np.array(self._coord_matrix(), dtype=np.int64)
            v = np.arange(self.order, dtype=np.int64)
            dig = np.stack([v // self.p**i % self.p for i in range(self.degree)], axis=1)
            c = (dig @ inv) % self.p
            w = self.subfield_generator
            out = np.zeros((self.order, self.m), dtype=np.int64)
            for i in range(self.m):
                acc = np.zeros(self.order, dtype=np.int64)
                for j in range(self.e):
                    acc = self.vadd(acc, self.vmul(c[:, i * self.e + j], self.pow(w, j)))
                out[:, i] = acc
            return out
        return self._table("coordinate_table", build)

    # -- pair identification (m = 2) -------------------------------------
    def check_gamma(self, gamma: int):
        if self.m != 2:
            raise WrongExtensionDegree(f"pair identification needs m = 2, got m = {self.m}")
        if self.is_base(gamma):
            raise GammaInBaseField("gamma must lie outside the subfield")

    def decompose(self, eps: int, gamma: int) -> tuple[int, int]:
        self.check_gamma(gamma)
        num = self.sub(eps, self.pow(eps, self.q))
        den = self.sub(gamma, self.pow(gamma, self.q))
        a = self.mul(num, self.inv(den))
        b = self.sub(eps, self.mul(a, gamma))
        return a, b

    def compose(self, a: int, b: int, gamma: int) -> int:
        return self.add(self.mul(a, gamma), b)

    def pair_tables(self, gamma: int) -> tuple[np.ndarray, np.ndarray]:
        """Arrays A, B with eps = A[eps]*gamma + B[eps] for every code eps."""
        self.check_gamma(gamma)
        key = ("pairs", gamma)
        if key not in self._t:
            v = np.arange(self.order, dtype=np.int64)
            frob = self.exp[(self.log[v] * self.q) % (self.order - 1)]
            frob[0] = 0
            den_inv = self.inv(self.sub(gamma, self.pow(gamma, self.q)))
            a = self.vmul(self.vsub(v, frob), den_inv)
            b = self.vsub(v, self.vmul(a, gamma))
            self._t[key] = (a, b)
        return self._t[key]

    @property
    def subfield_trace_table(self) -> np.ndarray:
        """tr_{F_q/F_p} on F_q; entries outside F_q are -1."""
        def build():
            out = np.full(self.order, -1, dtype=np.int64)
            for v in self.subfield_elements():
                out[v] = self.subfield_trace(v)
            return out
        return self._table("subfield_trace_table", build)


def build_field(p: int, e: int, m: int, modulus: Sequence[int] | None = None,
                primitive: int | None = None) -> FieldSpec:
    """Construct F_{p^(e*m)} with subfield F_{p^e}.

    Without ``modulus`` the monic irreducible of degree e*m with the smallest
    integer code is used; without ``primitive`` the generator with the
    smallest integer code is used.
    """
    if not isinstance(p, int) or not isprime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1 or m < 1:
        raise ValueError("e and m must be positive")
    n = e * m
    if modulus is None:
        f = smallest_irreducible(p, n)
    else:
        f = [int(c) % p for c in modulus]
        if len(_trim(list(f))) != n + 1:
            raise ReduciblePolynomial(f"modulus must have degree {n}")
        if f[-1] != 1:
            raise ReduciblePolynomial("modulus must be monic")
        if not is_irreducible(f, p):
            raise ReduciblePolynomial(f"{f} is reducible over F_{p}")
    order = p**n
    spec = FieldSpec(p, e, m, tuple(f), 0)
    factors = list(factorint(order - 1)) if order > 2 else []

    def is_primitive(g):
        if g == 0:
            return False
        d = _int_to_digits(g, p, n)
        return all(poly_powmod(d, (order - 1) // r, f, p) != [1] for r in factors)

    if primitive is None:
        primitive = next(g for g in range(1, order) if is_primitive(g)) if order > 2 else 1
    elif not is_primitive(primitive) and order > 2:
        raise ValueError(f"{primitive} is not a primitive element")
    spec = FieldSpec(p, e, m, tuple(f), int(primitive))
    if spec.has_tables:
        _build_tables(spec)
    return spec


def _build_tables(spec: FieldSpec):
    p, n, order = spec.p, spec.degree, spec.order
    f = list(spec.modulus)
    weights = np.array([p**i for i in range(n)], dtype=np.int64)

    def mult_matrix(h):
        rows = []
        for i in range(n):
            xi = [0] * i + [1]
            rows.append(_int_to_digits(spec.from_digits(poly_mulmod(xi, h, f, p) + [0] * n), p, n))
        return np.array(rows, dtype=np.int64)

    g = _int_to_digits(spec.primitive_element, p, n)
    powers = np.zeros((1, n), dtype=np.int64)
    powers[0, 0] = 1
    size = 1
    while size < order - 1:
        h = poly_powmod(g, size, f, p)
        powers = np.vstack([powers, powers @ mult_matrix(h) % p])
        size *= 2
    powers = powers[: order - 1]
    exp = powers @ weights
    log = np.full(order, -1, dtype=np.int64)
    log[exp] = np.arange(order - 1, dtype=np.int64)
    if order > 1 and (log[1:] < 0).any():
        raise ValueError("primitive element does not generate the multiplicative group")
    spec._t["exp"] = exp
    spec._t["log"] = log


# ---------------------------------------------------------------------------


class FieldElement:
    """Value type wrapping an integer code and its field."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        self.spec = spec
        self.value = int(value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.spec.digits(self.value))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            self.spec.check(other)
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.spec.scalar(int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(o, self.spec.inv(self.value)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.spec, self.spec.pow(self.value, int(k)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.spec.scalar(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        try:
            return f"<{format_element(self)}>"
        except TooLarge:
            return f"<#{self.value}>"

    def __str__(self):
        return format_element(self)


# ---------------------------------------------------------------------------


def is_base_element(x: FieldElement) -> bool:
    """True iff x lies in the subfield F_q, i.e. x^q = x."""
    return x.spec.is_base(x.value)


def absolute_trace(x: FieldElement) -> int:
    """Trace from F_{q^m} down to F_p, as a residue mod p."""
    return x.spec.absolute_trace(x.value)


def subfield_trace(x: FieldElement) -> int:
    """Trace from F_q down to F_p of an element of F_q."""
    return x.spec.subfield_trace(x.value)


def decompose_pair(eps: FieldElement, gamma: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Write eps = a*gamma + b with a, b in F_q (quadratic extensions only)."""
    spec = eps.spec
    spec.check(gamma)
    a, b = spec.decompose(eps.value, gamma.value)
    return FieldElement(spec, a), FieldElement(spec, b)


def compose_pair(a: FieldElement, b: FieldElement, gamma: FieldElement) -> FieldElement:
    return a * gamma + b


_POWER_RE = re.compile(r"^a(?:\^(-?\d+))?$")


def parse_element(text: str, spec: FieldSpec) -> FieldElement:
    """Parse power notation ("0", "1", "a", "a^12") or an integer code ("11")."""
    s = str(text).strip().replace("α", "a")
    mt = _POWER_RE.match(s)
    if mt:
        k = int(mt.group(1)) if mt.group(1) is not None else 1
        if not 0 <= k < spec.order - 1:
            raise ExponentOutOfRange(f"exponent {k} outside [0, {spec.order - 1})")
        return FieldElement(spec, spec.pow(spec.primitive_element, k))
    if re.fullmatch(r"\d+", s):
        v = int(s)
        if v >= spec.order:
            raise ParseError(f"integer code {v} outside [0, {spec.order})")
        return FieldElement(spec, v)
    raise ParseError(f"cannot parse field element {text!r}")


def format_element(x: FieldElement, style: str = "power") -> str:
    if style == "int":
        return str(x.value)
    if x.value == 0:
        return "0"
    if x.value == 1:
        return "1"
    spec = x.spec
    if spec.has_tables:
        k = int(spec.log[x.value])
    else:
        raise TooLarge("discrete logarithm unavailable for fields beyond the table limit")
    return "a" if k == 1 else f"a^{k}"


def parse_vector(text: str, spec: FieldSpec) -> list[FieldElement]:
    """Whitespace- or comma-separated elements."""
    parts = [t for t in re.split(r"[\s,]+", text.strip().strip("()[]")) if t]
    return [parse_element(t, spec) for t in parts]


def format_vector(v: Iterable, spec: FieldSpec | None = None, style: str = "power") -> str:
    out = []
    for x in v:
        if not isinstance(x, FieldElement):
            x = FieldElement(spec, int(x))
        out.append(format_element(x, style))
    return "(" + ",".join(out) + ")"


def as_codes(v: Iterable, spec: FieldSpec | None = None) -> np.ndarray:
    """Convert a sequence of FieldElements (or codes) to an int64 array."""
    out = []
    for x in v:
        if isinstance(x, FieldElement):
            if spec is not None:
                spec.check(x)
            out.append(x.value)
        else:
            out.append(int(x))
    return np.array(out, dtype=np.int64)


def spec_of(v: Sequence) -> FieldSpec:
    for x in v:
        if isinstance(x, FieldElement):
            return x.spec
    raise TypeError("cannot infer the field from a vector without FieldElements")
