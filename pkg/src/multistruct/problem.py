"""Problem files: a field, variables and the generators of J.

::

    # comments start with '#'
    field 32003            # or: field Q
    vars x, y
    ideal x^3; x*y; y^4
    mode intrinsic         # optional, or: embedded

Polynomials use ``+ - * ^`` and parentheses, with integer or ``a/b``
coefficients.  Multiplication must be written out.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field, replace

from .errors import DivisionByZero, InvalidField, ParseError, UnknownVariable
from .poly import MAX_EXPONENT, Polynomial, PolyRing, VarSet
from .scalars import Field, field_from_spec

MODES = ("intrinsic", "embedded")

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")
_IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_KEYWORDS = ("field", "vars", "ideal", "mode")


class _PolyParser:
    def __init__(self, text: str, ring: PolyRing, line: int, col0: int):
        self.ring = ring
        self.line = line
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                break
            num, ident, op = m.groups()
            col = col0 + m.start(m.lastindex) + 1
            if num is not None:
                self.tokens.append(("num", num, col))
            elif ident is not None:
                self.tokens.append(("ident", ident, col))
            else:
                if op not in "+-*^/()":
                    raise ParseError(f"unexpected character {op!r}", line, col)
                self.tokens.append(("op", op, col))
            pos = m.end()
        self.end_col = col0 + len(text) + 1
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", self.end_col)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty polynomial")
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "ident") or tok[1] == "(":
                raise self.error("implicit multiplication is not allowed; write '*'", tok)
            raise self.error(f"unexpected {tok[1]!r}", tok)
        return f

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            f = f * self.factor()
        return f

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be a non-negative integer", tok)
            e = int(tok[1])
            if e > MAX_EXPONENT:
                raise self.error("exponent too large", tok)
            base = base ** e
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, col = tok
        field = self.ring.field
        if kind == "num":
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    raise self.error("expected an integer denominator", den)
                if int(den[1]) == 0:
                    raise self.error("zero denominator", den)
                try:
                    c = field.div(field.coerce(int(val)), field.coerce(int(den[1])))
                except DivisionByZero:
                    raise self.error(f"denominator {den[1]} is zero in this field", den)
                return self.ring.const(c)
            return self.ring.const(int(val))
        if kind == "ident":
            if val not in self.ring.vars.names:
                raise UnknownVariable(f"unknown variable {val!r}", self.line, col)
            return self.ring.gen(val)
        if kind == "op" and val == "(":
            f = self.expr()
            close = self.take()
            if close[1] != ")":
                raise self.error("expected ')'", close)
            return f
        if kind == "end":
            raise self.error("unexpected end of polynomial", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_polynomial(text: str, ring: PolyRing, line: int = 1, col0: int = 0) -> Polynomial:
    return _PolyParser(text, ring, line, col0).parse()


@dataclass(frozen=True)
class ProblemFile:
    field: Field
    vars: VarSet
    generators: tuple
    mode: str = "intrinsic"
    name: str = dc_field(default="", compare=False)

    @property
    def ring(self) -> PolyRing:
        return PolyRing(self.field, self.vars)

    def over(self, field) -> "ProblemFile":
        """The same problem text read over another field."""
        text = format_problem(replace(self, name=""))
        lines = [ln for ln in text.splitlines() if not ln.startswith("field ")]
        return parse_problem(f"field {field_from_spec(field).spec_string()}\n" + "\n".join(lines), name=self.name)


def parse_problem(text: str, name: str = "") -> ProblemFile:
    field = None
    varset = None
    gens = []
    gen_lines = []
    mode = "intrinsic"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        keyword, _, rest = stripped.partition(" ")
        keyword = keyword.strip()
        rest_col = indent + len(keyword) + 1
        if keyword not in _KEYWORDS:
            raise ParseError(f"unknown directive {keyword!r}", lineno, indent + 1)
        if keyword == "field":
            if field is not None:
                raise ParseError("field declared twice", lineno, indent + 1)
            if not rest.strip():
                raise InvalidField("missing field after 'field'", lineno, rest_col)
            try:
                field = field_from_spec(rest.strip())
            except InvalidField as exc:
                raise InvalidField(str(exc), lineno, rest_col + 1) from None
        elif keyword == "vars":
            if varset is not None:
                raise ParseError("vars declared twice", lineno, indent + 1)
            names = [v.strip() for v in rest.split(",")]
            for v in names:
                if not _IDENT_RE.match(v) or v in _KEYWORDS:
                    raise ParseError(f"invalid variable name {v!r}", lineno, rest_col + 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable names", lineno, rest_col + 1)
            varset = VarSet(tuple(names))
        elif keyword == "mode":
            mode = rest.strip()
            if mode not in MODES:
                raise ParseError(f"mode must be one of {MODES}", lineno, rest_col + 1)
        else:
            gen_lines.append((lineno, rest, rest_col))
    if field is None:
        raise ParseError("missing 'field' line", 1, 1)
    if varset is None:
        raise ParseError("missing 'vars' line", 1, 1)
    if not gen_lines:
        raise ParseError("missing 'ideal' line", 1, 1)
    ring = PolyRing(field, varset)
    for lineno, rest, col in gen_lines:
        offset = col
        for part in rest.split(";"):
            if part.strip():
                gens.append(parse_polynomial(part, ring, lineno, offset))
            offset += len(part) + 1
    if not gens:
        raise ParseError("the ideal needs at least one generator", gen_lines[0][0], gen_lines[0][2])
    return ProblemFile(field, varset, tuple(gens), mode, name)


def format_problem(p: ProblemFile) -> str:
    lines = []
    if p.name:
        lines.append(f"# {p.name}")
    lines.append(f"field {p.field.spec_string()}")
    lines.append("vars " + ", ".join(p.vars.names))
    lines.append("ideal " + "; ".join(str(g) for g in p.generators))
    if p.mode != "intrinsic":
        lines.append(f"mode {p.mode}")
    return "\n".join(lines) + "\n"
