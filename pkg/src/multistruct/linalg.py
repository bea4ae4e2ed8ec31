"""Dense exact linear algebra over a :class:`~multistruct.scalars.Field`.

Matrices are numpy arrays (``int64`` for small primes, ``object`` otherwise).
Vectors are rows; a linear map ``f`` acts on column vectors, ``f @ v``.
Subspaces are stored by their reduced row-echelon basis, which is canonical,
so equality of subspaces is equality of arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

import numpy as np

from .errors import AmbientMismatch, NotWellDefined
from .scalars import Field, RationalField


def _rref_modp(field, a: np.ndarray):
    p = field.p
    a = np.array(a, dtype=field.dtype) % p
    rows, cols = a.shape
    pivots = []
    r = c = 0
    while r < rows and c < cols:
        # jump straight to the next column with a nonzero entry below row r
        live = a[r:, c:].any(axis=0).nonzero()[0]
        if live.size == 0:
            break
        c += int(live[0])
        i = r + int(a[r:, c].nonzero()[0][0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = a[r] * field.inv(piv) % p
        col = a[:, c].copy()
        col[r] = 0
        others = col.nonzero()[0]
        if others.size:
            a[others] = (a[others] - np.outer(col[others], a[r])) % p
        pivots.append(c)
        r += 1
        c += 1
    return a, pivots


def _content_normalise(row: list) -> list:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def _rref_rational(a: np.ndarray):
    """Fraction-free elimination on integer rows, normalised at the end."""
    rows, cols = a.shape
    work = []
    for i in range(rows):
        row = [Fraction(v) for v in a[i]]
        den = 1
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
        work.append(_content_normalise([int(v * den) for v in row]))
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        i = next((k for k in range(r, rows) if work[k][c] != 0), None)
        if i is None:
            continue
        work[r], work[i] = work[i], work[r]
        prow = work[r]
        pv = prow[c]
        for k in range(rows):
            if k == r or work[k][c] == 0:
                continue
            b = work[k][c]
            work[k] = _content_normalise([pv * x - b * y for x, y in zip(work[k], prow)])
        pivots.append(c)
        r += 1
    out = np.empty((rows, cols), dtype=object)
    for k in range(rows):
        if k < len(pivots):
            pv = work[k][pivots[k]]
            out[k] = [Fraction(v, pv) for v in work[k]]
        else:
            out[k] = [Fraction(0)] * cols
    return out, pivots


def rref_pivots(field: Field, a) -> tuple[np.ndarray, list]:
    """Reduced row-echelon form and pivot columns."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if a.shape[0] == 0 or a.shape[1] == 0:
        return field.array(None, a.shape), []
    if isinstance(field, RationalField):
        return _rref_rational(a)
    return _rref_modp(field, a)


def rref(field: Field, a) -> tuple[np.ndarray, int]:
    r, pivots = rref_pivots(field, a)
    return r, len(pivots)


def rank(field: Field, a) -> int:
    return rref(field, a)[1]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of k^n given by its RREF basis (one row per basis vector)."""

    field: Field
    ambient_dim: int
    basis: np.ndarray
    pivots: tuple

    @classmethod
    def span(cls, field: Field, n: int, vectors) -> "Subspace":
        vecs = np.asarray(vectors, dtype=field.dtype)
        if vecs.size == 0:
            return cls.zero(field, n)
        vecs = vecs.reshape(-1, n)
        r, pivots = rref_pivots(field, vecs)
        return cls(field, n, r[: len(pivots)], tuple(pivots))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, field.array(None, (0, n)), ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, field.identity(n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self):
        return self.dim

    def _same(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise AmbientMismatch(f"ambient k^{self.ambient_dim} vs k^{other.ambient_dim}")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        self._same(other)
        return self.pivots == other.pivots and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots, tuple(map(tuple, self.basis.tolist()))))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    # -- reduction -------------------------------------------------------------

    def reduce(self, vectors) -> np.ndarray:
        """Reduce rows modulo this subspace (zero exactly on members)."""
        v = np.asarray(vectors, dtype=self.field.dtype)
        if self.dim == 0:
            return v.copy()
        single = v.ndim == 1
        m = v.reshape(1, -1) if single else v
        out = self.field.reduce(m - m[:, list(self.pivots)] @ self.basis)
        return out[0] if single else out

    def __contains__(self, vector) -> bool:
        return not np.any(self.reduce(vector))

    def contains(self, other: "Subspace") -> bool:
        self._same(other)
        if other.dim == 0:
            return True
        return not np.any(self.reduce(other.basis))

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    # -- lattice operations ---------------------------------------------------------

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace.span(self.field, self.ambient_dim, np.vstack([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: RREF of [[A, A], [B, 0]]; rows with zero left half span A ∩ B."""
        self._same(other)
        n = self.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, n)
        top = np.hstack([self.basis, self.basis])
        bottom = np.hstack([other.basis, self.field.array(None, other.basis.shape)])
        r, pivots = rref_pivots(self.field, np.vstack([top, bottom]))
        rows = [r[i, n:] for i, c in enumerate(pivots) if c >= n]
        return Subspace.span(self.field, n, rows)

    __and__ = intersect

    def quotient_reps(self, sub: "Subspace") -> np.ndarray:
        """Canonical rows of ``self`` completing a basis of ``sub`` (RREF of self mod sub)."""
        self._same(sub)
        if not self.contains(sub):
            raise NotWellDefined("denominator is not contained in numerator")
        reduced = sub.reduce(self.basis) if self.dim else self.basis
        r, pivots = rref_pivots(self.field, reduced) if self.dim else (reduced, [])
        return r[: len(pivots)]


def subspace_ops(a: Subspace, b: Subspace, op: str):
    if op == "sum":
        return a + b
    if op == "intersect":
        return a.intersect(b)
    if op == "equals":
        return a == b
    if op == "contains":
        return a.contains(b)
    raise ValueError(f"unknown op {op!r}")


def kernel(field: Field, a) -> Subspace:
    """Null space of ``a`` acting on column vectors."""
    a = np.asarray(a)
    rows, cols = a.shape
    if rows == 0:
        return Subspace.full(field, cols)
    r, pivots = rref_pivots(field, a)
    free = [c for c in range(cols) if c not in set(pivots)]
    vecs = field.array(None, (len(free), cols))
    for k, fcol in enumerate(free):
        vecs[k, fcol] = field.one
        for i, pc in enumerate(pivots):
            vecs[k, pc] = field.neg(r[i, fcol]) if r[i, fcol] != 0 else field.zero
    return Subspace.span(field, cols, vecs)


def image(field: Field, f, sub: Subspace) -> Subspace:
    """f(sub) for a map given as a (cod_dim x dom_dim) matrix."""
    f = np.asarray(f)
    if sub.dim == 0:
        return Subspace.zero(field, f.shape[0])
    return Subspace.span(field, f.shape[0], field.matmul(sub.basis, f.T))


@dataclass(frozen=True)
class InducedMap:
    rank: int
    source_dim: int
    target_dim: int

    @property
    def is_injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def is_surjective(self) -> bool:
        return self.rank == self.target_dim

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective


def induced_map_rank(
    field: Field,
    f,
    dom_sub: Subspace,
    dom_mod: Subspace,
    cod_sub: Subspace,
    cod_mod: Subspace,
) -> InducedMap:
    """Rank of the map dom_sub/dom_mod -> cod_sub/cod_mod induced by ``f``."""
    if not dom_sub.contains(dom_mod):
        raise NotWellDefined("domain denominator not contained in domain numerator")
    if not cod_sub.contains(cod_mod):
        raise NotWellDefined("codomain denominator not contained in codomain numerator")
    img = image(field, f, dom_sub)
    if not cod_sub.contains(img):
        raise NotWellDefined("f(dom_sub) is not contained in cod_sub")
    if not cod_mod.contains(image(field, f, dom_mod)):
        raise NotWellDefined("f(dom_mod) is not contained in cod_mod")
    r = (img + cod_mod).dim - cod_mod.dim
    return InducedMap(r, dom_sub.dim - dom_mod.dim, cod_sub.dim - cod_mod.dim)


def stack_spaces(spaces: Iterable[Subspace]) -> Subspace:
    """Direct sum of subspaces inside the direct sum of their ambients."""
    spaces = list(spaces)
    field = spaces[0].field
    total = sum(s.ambient_dim for s in spaces)
    rows = []
    offset = 0
    for s in spaces:
        for row in s.basis:
            v = field.array(None, (total,))
            v[offset: offset + s.ambient_dim] = row
            rows.append(v)
        offset += s.ambient_dim
    return Subspace.span(field, total, rows) if rows else Subspace.zero(field, total)
