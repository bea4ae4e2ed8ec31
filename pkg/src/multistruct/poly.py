"""Sparse multivariate polynomials under degree-reverse-lexicographic order.

Monomials are plain exponent tuples.  A :class:`Polynomial` keeps a dict
``{exponents: coefficient}`` with raw field values and no zero entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FieldMismatch, VarSetMismatch, ZeroPolynomial
from .scalars import Field, Scalar

Monomial = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**31 - 1


def degree(mono: Monomial) -> int:
    return sum(mono)


def monomial_key(mono: Monomial):
    """Sort key realising degrevlex: larger key means larger monomial."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def monomial_cmp(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    if len(a) != len(b):
        raise VarSetMismatch("monomials over different variable sets")
    ka, kb = monomial_key(a), monomial_key(b)
    return (ka > kb) - (ka < kb)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class VarSet:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("at least one variable is required")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


def format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class PolyRing:
    """k[x_1, ..., x_n] with a fixed variable order."""

    def __init__(self, field: Field, varset):
        if not isinstance(varset, VarSet):
            varset = VarSet(tuple(varset))
        self.field = field
        self.vars = varset
        self.nvars = len(varset)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.field == other.field and self.vars == other.vars

    def __hash__(self):
        return hash((self.field, self.vars))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {self.vars.names})"

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        return Polynomial(self, {self.one_monomial: c} if c != 0 else {})

    def gen(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.vars.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(tuple(e))

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, mono: Monomial, coeff=1) -> "Polynomial":
        return self.from_terms({tuple(mono): coeff})

    def from_terms(self, terms) -> "Polynomial":
        f = self.field
        if isinstance(terms, dict):
            terms = terms.items()
        out: dict = {}
        for mono, c in terms:
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.nvars:
                raise VarSetMismatch(f"monomial {mono} has wrong length for {self.vars.names}")
            if any(e < 0 or e > MAX_EXPONENT for e in mono):
                raise OverflowError(f"exponent out of range in {mono}")
            c = f.coerce(c)
            if mono in out:
                c = f.add(out[mono], c)
            if c == 0:
                out.pop(mono, None)
            else:
                out[mono] = c
        return Polynomial(self, out)


class Polynomial:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs

    # -- structure ------------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.ring.field

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def terms(self) -> list:
        """(monomial, raw coefficient) pairs, strictly descending."""
        return sorted(self.coeffs.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def monomials(self) -> list:
        return [m for m, _ in self.terms]

    def leading_term(self) -> tuple:
        if not self.coeffs:
            raise ZeroPolynomial("leading term of the zero polynomial")
        mono = max(self.coeffs, key=monomial_key)
        return mono, Scalar(self.coeffs[mono], self.field)

    def leading_monomial(self) -> Monomial:
        if not self.coeffs:
            raise ZeroPolynomial("leading monomial of the zero polynomial")
        return max(self.coeffs, key=monomial_key)

    def leading_coefficient(self):
        return self.coeffs[self.leading_monomial()]

    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(m) for m in self.coeffs)

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        if lc == self.field.one:
            return self
        return self.scale(self.field.inv(lc))

    # -- arithmetic ----------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring.field != other.ring.field:
            raise FieldMismatch(f"{self.ring.field!r} vs {other.ring.field!r}")
        if self.ring.vars != other.ring.vars:
            raise VarSetMismatch(f"{self.ring.vars.names} vs {other.ring.vars.names}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, Scalar) or isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        f = self.field
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            if m in out:
                s = f.add(out[m], c)
                if s == 0:
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        f = self.field
        c = f.coerce(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self.coeffs.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        """self * c * x^mono for a raw coefficient c != 0."""
        f = self.field
        return Polynomial(
            self.ring,
            {monomial_mul(m, mono): f.mul(v, c) for m, v in self.coeffs.items()},
        )

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return self.ring.zero()
        if self.total_degree() + other.total_degree() > MAX_EXPONENT:
            raise OverflowError("total degree overflow")
        f = self.field
        out: dict = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = monomial_mul(m1, m2)
                v = f.mul(c1, c2)
                if m in out:
                    v = f.add(out[m], v)
                    if v == 0:
                        del out[m]
                        continue
                out[m] = v
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / display ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        f = self.field
        names = self.ring.vars.names
        out = []
        for mono, c in self.terms:
            cs = f.format(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            ms = format_monomial(mono, names)
            if ms == "1":
                body = cs
            elif cs == "1":
                body = ms
            else:
                body = f"{cs}*{ms}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    f._check(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def leading_term(f: Polynomial) -> tuple:
    return f.leading_term()


def monomials_of_degree(n: int, d: int) -> Iterable[Monomial]:
    """All exponent vectors of length n and total degree d."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest
