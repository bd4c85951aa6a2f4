"""Plain-text code descriptions.

A code file is a list of ``key=value`` lines; ``#`` starts a comment::

    p=2
    e=1
    m=2
    modulus=1,1,1          # coefficients low to high: 1 + x + x^2
    gamma=a                # optional, used by the trace-symplectic dual
    name=example           # optional
    generator=1 1 1 a a a  # one line per generator row

The code block is one of ``generator=`` rows, ``additive=`` rows (F_p-span),
``cyclic n=<len> g=<comma list, low to high>`` or
``gabidulin n=<len> k=<dim> points=<comma list>``.  Elements are written in
power notation (0, 1, a, a^k) or as integer codes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .codes import additive_code, cyclic_code, from_generator, gabidulin_code
from .errors import ParseError
from .gf import FieldElement, FieldSpec, build_field, format_element, parse_element

FIELD_KEYS = ("p", "e", "m", "modulus")
CODE_KINDS = ("generator", "additive", "cyclic", "gabidulin")


@dataclass(frozen=True)
class CodeFile:
    p: int
    e: int
    m: int
    modulus: tuple[int, ...] | None = None
    gamma: int | None = None
    name: str = ""
    kind: str | None = None
    rows: tuple[tuple[int, ...], ...] = ()
    n: int | None = None
    k: int | None = None
    poly: tuple[int, ...] = ()
    spec: FieldSpec = field(default=None, compare=False, repr=False)

    # -- parsing -----------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "CodeFile":
        vals: dict[str, str] = {}
        code_lines: list[tuple[str, str]] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head = re.match(r"^([a-z]+)\s*(=)?\s*(.*)$", line)
            if not head:
                raise ParseError(f"line {lineno}: cannot parse {raw!r}")
            key, eq, rest = head.groups()
            if key in ("cyclic", "gabidulin") and not eq:
                code_lines.append((key, rest))
            elif not eq:
                raise ParseError(f"line {lineno}: expected key=value, got {raw!r}")
            elif key in ("generator", "additive"):
                code_lines.append((key, rest))
            elif key in FIELD_KEYS + ("gamma", "name"):
                if key in vals:
                    raise ParseError(f"line {lineno}: duplicate key {key!r}")
                vals[key] = rest
            else:
                raise ParseError(f"line {lineno}: unknown key {key!r}")
        for key in ("p", "e", "m"):
            if key not in vals:
                raise ParseError(f"missing field key {key!r}")
        try:
            p, e, m = (int(vals[k]) for k in ("p", "e", "m"))
            modulus = tuple(int(c) for c in vals["modulus"].split(",")) if "modulus" in vals else None
        except ValueError as exc:
            raise ParseError(f"bad field parameter: {exc}") from None
        spec = build_field(p, e, m, list(modulus) if modulus else None)
        kinds = {k for k, _ in code_lines}
        if len(kinds) > 1:
            raise ParseError(f"mixed code blocks: {sorted(kinds)}")
        kind = kinds.pop() if kinds else None
        gamma = parse_element(vals["gamma"], spec).value if "gamma" in vals else None
        if gamma is not None:
            spec.check_gamma(gamma)
        out = dict(p=p, e=e, m=m, modulus=tuple(spec.modulus), gamma=gamma,
                   name=vals.get("name", ""), kind=kind, spec=spec)
        if kind in ("generator", "additive"):
            rows = tuple(tuple(_elements(rest, spec, r"[\s,]+")) for _, rest in code_lines)
            if len({len(r) for r in rows}) != 1:
                raise ParseError("generator rows have different lengths")
            out["rows"] = rows
        elif kind is not None:
            if len(code_lines) != 1:
                raise ParseError(f"exactly one {kind} line expected")
            params = _params(code_lines[0][1])
            if kind == "cyclic":
                _expect(params, {"n", "g"}, kind)
                out.update(n=_int(params["n"]), poly=tuple(_elements(params["g"], spec, ",")))
            else:
                _expect(params, {"n", "k", "points"}, kind)
                out.update(n=_int(params["n"]), k=_int(params["k"]),
                           poly=tuple(_elements(params["points"], spec, ",")))
        return cls(**out)

    @classmethod
    def read(cls, path) -> "CodeFile":
        with open(path) as fh:
            return cls.parse(fh.read())

    # -- printing ----------------------------------------------------------

    def _fmt(self, v: int) -> str:
        spec = self.field()
        return format_element(FieldElement(spec, v), "power" if spec.has_tables else "int")

    def to_text(self) -> str:
        lines = [f"p={self.p}", f"e={self.e}", f"m={self.m}",
                 "modulus=" + ",".join(str(c) for c in self.field().modulus)]
        if self.gamma is not None:
            lines.append(f"gamma={self._fmt(self.gamma)}")
        if self.name:
            lines.append(f"name={self.name}")
        if self.kind in ("generator", "additive"):
            lines += [f"{self.kind}=" + " ".join(self._fmt(v) for v in r) for r in self.rows]
        elif self.kind == "cyclic":
            lines.append(f"cyclic n={self.n} g=" + ",".join(self._fmt(v) for v in self.poly))
        elif self.kind == "gabidulin":
            lines.append(f"gabidulin n={self.n} k={self.k} points="
                         + ",".join(self._fmt(v) for v in self.poly))
        return "\n".join(lines) + "\n"

    # -- objects -----------------------------------------------------------

    def field(self) -> FieldSpec:
        if self.spec is not None:
            return self.spec
        return build_field(self.p, self.e, self.m, list(self.modulus) if self.modulus else None)

    def code(self):
        spec = self.field()
        name = self.name
        if self.kind == "generator":
            return from_generator(spec, [list(r) for r in self.rows], name)
        if self.kind == "additive":
            return additive_code(spec, [list(r) for r in self.rows], name)
        if self.kind == "cyclic":
            return cyclic_code(spec, self.n, list(self.poly), name)
        if self.kind == "gabidulin":
            return gabidulin_code(spec, self.n, self.k, list(self.poly), name)
        raise ParseError("the file has no code block")

    @classmethod
    def from_code(cls, code, gamma: int | None = None, name: str = "") -> "CodeFile":
        from .codes import AdditiveCode

        spec = code.spec
        kind = "additive" if isinstance(code, AdditiveCode) else "generator"
        rows = tuple(tuple(int(x) for x in r) for r in code.gen)
        return cls(spec.p, spec.e, spec.m, tuple(spec.modulus), gamma, name or code.name,
                   kind, rows, spec=spec)


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}") from None


def _elements(text: str, spec: FieldSpec, sep: str) -> list[int]:
    parts = [t for t in re.split(sep, text.strip()) if t.strip()]
    if not parts:
        raise ParseError("empty element list")
    return [parse_element(t.strip(), spec).value for t in parts]


def _params(text: str) -> dict[str, str]:
    out = {}
    for tok in text.split():
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        if k in out:
            raise ParseError(f"duplicate parameter {k!r}")
        out[k] = v
    return out


def _expect(params: dict, keys: set, kind: str):
    if set(params) != keys:
        extra = set(params) - keys
        missing = keys - set(params)
        raise ParseError(f"{kind}: unknown {sorted(extra)} / missing {sorted(missing)} parameters")
