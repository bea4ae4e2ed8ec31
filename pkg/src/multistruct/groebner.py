"""Buchberger's algorithm, normal forms and the finite presentation of S/J."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import FieldMismatch, NotZeroDimensional, VarSetMismatch
from .poly import (
    Monomial,
    Polynomial,
    PolyRing,
    monomial_div,
    monomial_divides,
    monomial_key,
    monomial_lcm,
    monomial_mul,
)


def _divisor_index(lms: Sequence[Monomial], mono: Monomial):
    for i, lm in enumerate(lms):
        if monomial_divides(lm, mono):
            return i
    return None


def reduce_full(f: Polynomial, basis: Sequence[Polynomial], lms: Sequence[Monomial]) -> Polynomial:
    """Fully reduce ``f`` by monic polynomials ``basis`` with leading monomials ``lms``."""
    field = f.field
    p = dict(f.coeffs)
    rem: dict = {}
    while p:
        lt = max(p, key=monomial_key)
        c = p[lt]
        i = _divisor_index(lms, lt)
        if i is None:
            rem[lt] = c
            del p[lt]
            continue
        q = monomial_div(lt, lms[i])
        for m, v in basis[i].coeffs.items():
            mm = monomial_mul(m, q)
            w = field.sub(p.get(mm, 0), field.mul(c, v))
            if w == 0:
                p.pop(mm, None)
            else:
                p[mm] = w
    return Polynomial(f.ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = monomial_lcm(lf, lg)
    field = f.field
    a = f.mul_term(monomial_div(lcm, lf), field.inv(f.leading_coefficient()))
    b = g.mul_term(monomial_div(lcm, lg), field.inv(g.leading_coefficient()))
    return a - b


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """A reduced Groebner basis under degrevlex, generators sorted by leading monomial."""

    ring: PolyRing
    generators: tuple
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> str:
        return "degrevlex"

    @cached_property
    def leading_monomials(self) -> tuple:
        return tuple(g.leading_monomial() for g in self.generators)

    def is_unit(self) -> bool:
        return any(sum(lm) == 0 for lm in self.leading_monomials)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        return hash((self.ring, self.generators))


def _check_common(gens: Sequence[Polynomial]) -> PolyRing:
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring.field != ring.field:
            raise FieldMismatch("generators over different fields")
        if g.ring.vars != ring.vars:
            raise VarSetMismatch("generators over different variable sets")
    return ring


def _interreduce(polys: list) -> list:
    """Minimalise and interreduce a Groebner basis; result is sorted and monic."""
    polys = [p.monic() for p in polys if p]
    # drop generators whose leading monomial is a multiple of another's
    polys.sort(key=lambda p: monomial_key(p.leading_monomial()))
    minimal: list = []
    for p in polys:
        lm = p.leading_monomial()
        if not any(monomial_divides(q.leading_monomial(), lm) for q in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lms = [q.leading_monomial() for q in others]
        out.append(reduce_full(p, others, lms).monic())
    return out


def buchberger(generators: Sequence[Polynomial]) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed with the normal strategy (smallest lcm degree, ties
    by creation order); pairs with coprime leading monomials are skipped.
    """
    if not generators:
        raise ValueError("need at least one generator")
    ring = _check_common(list(generators))
    basis = [g.monic() for g in generators if g]
    if not basis:
        return GroebnerBasis(ring, ())
    lms = [g.leading_monomial() for g in basis]
    if any(sum(lm) == 0 for lm in lms):
        return GroebnerBasis(ring, (ring.one(),))

    heap: list = []
    counter = 0

    def push_pairs(j):
        nonlocal counter
        for i in range(j):
            lcm = monomial_lcm(lms[i], lms[j])
            if lcm == monomial_mul(lms[i], lms[j]):
                continue  # coprime leading monomials
            heapq.heappush(heap, (sum(lcm), counter, i, j))
            counter += 1

    for j in range(1, len(basis)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        h = reduce_full(s_polynomial(basis[i], basis[j]), basis, lms)
        if not h:
            continue
        h = h.monic()
        basis.append(h)
        lms.append(h.leading_monomial())
        if sum(lms[-1]) == 0:
            return GroebnerBasis(ring, (ring.one(),))
        push_pairs(len(basis) - 1)

    return GroebnerBasis(ring, tuple(_interreduce(basis)))


def _monomial_normal_forms(gb: GroebnerBasis) -> dict:
    return gb._cache.setdefault("nf", {})


def normal_form_monomial(mono: Monomial, gb: GroebnerBasis) -> dict:
    """Normal form of a single monomial as ``{standard monomial: coeff}``, memoised on ``gb``."""
    cache = _monomial_normal_forms(gb)
    if mono in cache:
        return cache[mono]
    field = gb.ring.field
    lms = gb.leading_monomials
    stack = [mono]
    while stack:
        u = stack[-1]
        if u in cache:
            stack.pop()
            continue
        i = _divisor_index(lms, u)
        if i is None:
            cache[u] = {u: field.one}
            stack.pop()
            continue
        q = monomial_div(u, lms[i])
        tail = [(monomial_mul(m, q), c) for m, c in gb.generators[i].coeffs.items() if m != lms[i]]
        pending = [t for t, _ in tail if t not in cache]
        if pending:
            stack.extend(pending)
            continue
        acc: dict = {}
        for t, c in tail:
            for s, v in cache[t].items():
                w = field.sub(acc.get(s, 0), field.mul(c, v))
                if w == 0:
                    acc.pop(s, None)
                else:
                    acc[s] = w
        cache[u] = acc
        stack.pop()
    return cache[mono]


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``f`` modulo the ideal with reduced basis ``gb``."""
    if f.ring != gb.ring:
        f._check(gb.ring.zero())
    if not gb.generators:
        return f
    field = f.field
    acc: dict = {}
    for m, c in f.coeffs.items():
        for s, v in normal_form_monomial(m, gb).items():
            w = field.add(acc.get(s, 0), field.mul(c, v))
            if w == 0:
                acc.pop(s, None)
            else:
                acc[s] = w
    return Polynomial(f.ring, acc)


@dataclass(eq=False)
class AlgebraPresentation:
    """B = S/J as a k-vector space on standard monomials with multiplication matrices.

    ``mult_matrices[i]`` is the matrix of multiplication by the i-th variable;
    column j holds the coordinates of ``x_i * standard_monomials[j]``.
    """

    gb: GroebnerBasis
    standard_monomials: list
    mult_matrices: list

    @property
    def ring(self) -> PolyRing:
        return self.gb.ring

    @property
    def field(self):
        return self.gb.ring.field

    @property
    def dim(self) -> int:
        return len(self.standard_monomials)

    @property
    def is_zero_ring(self) -> bool:
        return self.dim == 0

    @cached_property
    def index(self) -> dict:
        return {m: i for i, m in enumerate(self.standard_monomials)}

    @cached_property
    def monomial_matrices(self) -> np.ndarray:
        """Stack T with T[k] the matrix of multiplication by the k-th standard monomial."""
        field = self.field
        n = self.dim
        out = field.array(None, (n, n, n))
        if n == 0:
            return out
        out[0] = field.identity(n)
        for k in range(1, n):
            mono = self.standard_monomials[k]
            v = next(i for i, e in enumerate(mono) if e)
            prev = list(mono)
            prev[v] -= 1
            out[k] = field.matmul(self.mult_matrices[v], out[self.index[tuple(prev)]])
        return out

    def coords(self, f: Polynomial) -> np.ndarray:
        """Coordinate vector of the class of ``f`` in B."""
        field = self.field
        vec = field.array(None, (self.dim,))
        nf = normal_form(f, self.gb)
        for m, c in nf.coeffs.items():
            vec[self.index[m]] = c
        return vec

    def to_polynomial(self, vec) -> Polynomial:
        return self.ring.from_terms(
            (self.standard_monomials[i], _raw(c)) for i, c in enumerate(vec) if c != 0
        )

    def mult_matrix(self, vec) -> np.ndarray:
        """Matrix of multiplication by the element with coordinates ``vec``."""
        field = self.field
        vec = np.asarray(vec, dtype=field.dtype)
        return field.reduce(np.tensordot(vec, self.monomial_matrices, axes=1))

    def multiply(self, u, v) -> np.ndarray:
        return self.field.matmul(self.mult_matrix(u), np.asarray(v, dtype=self.field.dtype))


def _raw(c):
    return int(c) if isinstance(c, np.integer) else c


def standard_monomials(gb: GroebnerBasis) -> list:
    """Monomials outside the leading-term ideal, in increasing degrevlex order."""
    ring = gb.ring
    if gb.is_unit():
        return []
    lms = gb.leading_monomials
    n = ring.nvars
    for v in range(n):
        if not any(lm[v] > 0 and sum(lm) == lm[v] for lm in lms):
            raise NotZeroDimensional(
                f"no pure power of {ring.vars.names[v]} among the leading monomials; "
                "the quotient is infinite-dimensional"
            )
    seen = {ring.one_monomial}
    frontier = [ring.one_monomial]
    while frontier:
        nxt = []
        for u in frontier:
            for v in range(n):
                w = u[:v] + (u[v] + 1,) + u[v + 1:]
                if w in seen or _divisor_index(lms, w) is not None:
                    continue
                seen.add(w)
                nxt.append(w)
        frontier = nxt
    return sorted(seen, key=monomial_key)


def present_algebra(gb: GroebnerBasis) -> AlgebraPresentation:
    """Standard monomial basis and multiplication matrices of S/J.

    The unit ideal gives the zero ring (dim 0); callers check
    :attr:`AlgebraPresentation.is_zero_ring`.
    """
    basis = standard_monomials(gb)
    field = gb.ring.field
    n = len(basis)
    index = {m: i for i, m in enumerate(basis)}
    mats = []
    for v in range(gb.ring.nvars):
        mat = field.array(None, (n, n))
        for j, b in enumerate(basis):
            u = b[:v] + (b[v] + 1,) + b[v + 1:]
            if u in index:
                mat[index[u], j] = field.one
            else:
                for s, c in normal_form_monomial(u, gb).items():
                    mat[index[s], j] = c
        mats.append(mat)
    pres = AlgebraPresentation(gb, basis, mats)
    pres.__dict__["index"] = index
    return pres
