"""Exact scalar fields: prime fields F_p and the rationals Q.

Field objects do the arithmetic on raw values (``int`` in ``[0, p)`` for
F_p, :class:`fractions.Fraction` for Q); polynomials and matrices store raw
values for speed.  :class:`Scalar` wraps a raw value together with its field
for the user-facing API.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DivisionByZero, FieldMismatch, InvalidField

DEFAULT_PRIME = 32003
MAX_PRIME_BITS = 63

# Above this modulus numpy int64 arithmetic could overflow in dot products.
NATIVE_LIMIT = 1 << 24

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


_INT_RE = re.compile(r"^[+-]?\d+$")
_FRAC_RE = re.compile(r"^([+-]?\d+)\s*/\s*([+-]?\d+)$")


class Field:
    """Base class; concrete fields are :class:`PrimeField` and :class:`RationalField`."""

    characteristic: int
    dtype: object

    zero: object
    one: object

    def __call__(self, value) -> "Scalar":
        return Scalar(self.coerce(value), self)

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text: str):
        """Parse an integer or ``a/b`` literal into a raw field value."""
        text = text.strip()
        if _INT_RE.match(text):
            return self.coerce(int(text))
        m = _FRAC_RE.match(text)
        if m:
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return self.div(self.coerce(num), self.coerce(den))
        raise ValueError(f"not a scalar literal: {text!r}")

    def format(self, a) -> str:
        raise NotImplementedError

    # -- numpy support, used by linalg ---------------------------------------

    def array(self, rows, shape=None) -> np.ndarray:
        if shape is not None:
            out = np.empty(shape, dtype=self.dtype)
            out[...] = self.zero
            return out
        arr = np.array(rows, dtype=self.dtype)
        if self.dtype is object:
            flat = arr.reshape(-1)
            for i, v in enumerate(flat):
                flat[i] = self.coerce(v)
            return arr
        return self.reduce(arr)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def identity(self, n: int) -> np.ndarray:
        out = self.array(None, (n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(a @ b)

    def spec_string(self) -> str:
        raise NotImplementedError


class PrimeField(Field):
    """The field F_p for a prime p below 2**63."""

    def __init__(self, p: int):
        p = int(p)
        if p.bit_length() > MAX_PRIME_BITS:
            raise InvalidField(f"modulus {p} exceeds {MAX_PRIME_BITS} bits")
        if not is_prime(p):
            raise InvalidField(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.dtype = np.int64 if p < NATIVE_LIMIT else object
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} value used in {self!r}")
            return value.value
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        _, s, _ = xgcd(a, self.p)
        return s % self.p

    def format(self, a) -> str:
        # symmetric representative reads better and parses back to the same value
        return str(a - self.p) if self.p > 2 and a > self.p // 2 else str(a)

    def reduce(self, arr):
        return arr % self.p

    def spec_string(self) -> str:
        return str(self.p)


class RationalField(Field):
    """The rationals, with values kept as reduced fractions."""

    characteristic = 0
    dtype = object

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} value used in {self!r}")
            return value.value
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def format(self, a) -> str:
        return str(a)

    def spec_string(self) -> str:
        return "Q"


QQ = RationalField()


def field_from_spec(text) -> Field:
    """``"Q"`` (or ``"QQ"``) gives the rationals, an integer string gives F_p."""
    if isinstance(text, Field):
        return text
    s = str(text).strip()
    if s.upper() in ("Q", "QQ"):
        return QQ
    if s.upper().startswith("F_"):
        s = s[2:]
    if not s.isdigit():
        raise InvalidField(f"unknown field {text!r}; expected a prime or Q")
    return PrimeField(int(s))


@dataclass(frozen=True)
class Scalar:
    """A field element with its field attached."""

    value: object
    field: Field

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return Scalar(self.field.add(self.value, b), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return Scalar(self.field.sub(self.value, b), self.field)

    def __rsub__(self, other):
        b = self._other(other)
        return Scalar(self.field.sub(b, self.value), self.field)

    def __mul__(self, other):
        b = self._other(other)
        return Scalar(self.field.mul(self.value, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return Scalar(self.field.div(self.value, b), self.field)

    def __rtruediv__(self, other):
        b = self._other(other)
        return Scalar(self.field.div(b, self.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inverse(self) -> "Scalar":
        return Scalar(self.field.inv(self.value), self.field)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return self.field.format(self.value)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    f = a.field
    ops = {"add": f.add, "sub": f.sub, "mul": f.mul, "div": f.div}
    ops.update({"+": f.add, "-": f.sub, "*": f.mul, "/": f.div})
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    fn = ops[op]
    return Scalar(fn(a.value, b.value), f)


def scalar_inverse(a: Scalar) -> Scalar:
    return a.inverse()
