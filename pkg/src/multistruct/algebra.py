"""Ideal calculus inside a finite-dimensional local algebra B = S/J.

Ideals are multiplication-closed subspaces of B's coordinate space.  Products
and colon ideals reduce to exact linear algebra on the multiplication
matrices of the presentation.
"""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import AlgebraMismatch, NotLocal, ZeroRing
from .groebner import AlgebraPresentation, GroebnerBasis
from .linalg import Subspace, kernel
from .poly import Polynomial


class IdealSubspace:
    """An ideal of B, stored as a canonical subspace of k^dim(B)."""

    def __init__(self, algebra: AlgebraPresentation, space: Subspace, check: bool = True):
        if space.ambient_dim != algebra.dim:
            raise AlgebraMismatch("subspace does not live in this algebra")
        self.algebra = algebra
        self.space = space
        if check and space.dim:
            for x in algebra.mult_matrices:
                moved = algebra.field.matmul(space.basis, x.T)
                if np.any(space.reduce(moved)):
                    raise ValueError("subspace is not closed under multiplication")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> np.ndarray:
        return self.space.basis

    def _same(self, other: "IdealSubspace"):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("ideals of different algebras")

    def __eq__(self, other):
        if not isinstance(other, IdealSubspace):
            return NotImplemented
        self._same(other)
        return self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __le__(self, other: "IdealSubspace") -> bool:
        self._same(other)
        return other.space.contains(self.space)

    def __contains__(self, vector) -> bool:
        return vector in self.space

    def __add__(self, other: "IdealSubspace") -> "IdealSubspace":
        self._same(other)
        return IdealSubspace(self.algebra, self.space + other.space, check=False)

    def __and__(self, other: "IdealSubspace") -> "IdealSubspace":
        self._same(other)
        return IdealSubspace(self.algebra, self.space & other.space, check=False)

    def __mul__(self, other: "IdealSubspace") -> "IdealSubspace":
        return ideal_product(self, other)

    def __repr__(self):
        return f"IdealSubspace(dim={self.dim} in B of dim {self.algebra.dim})"

    @cached_property
    def maximal_multiple(self) -> Subspace:
        """I·a where I is the ideal generated by the variables."""
        alg = self.algebra
        if self.dim == 0:
            return self.space
        rows = [alg.field.matmul(self.basis, x.T) for x in alg.mult_matrices]
        return Subspace.span(alg.field, alg.dim, np.vstack(rows))

    @cached_property
    def minimal_generators(self) -> np.ndarray:
        """Basis representatives of a / I·a; a minimal generating set by Nakayama."""
        if self.dim == 0:
            return self.basis
        return self.space.quotient_reps(self.maximal_multiple)


def zero_ideal(algebra: AlgebraPresentation) -> IdealSubspace:
    return IdealSubspace(algebra, Subspace.zero(algebra.field, algebra.dim), check=False)


def unit_ideal(algebra: AlgebraPresentation) -> IdealSubspace:
    return IdealSubspace(algebra, Subspace.full(algebra.field, algebra.dim), check=False)


def ideal_generated(algebra: AlgebraPresentation, gens: Sequence) -> IdealSubspace:
    """Smallest multiplication-closed subspace containing ``gens``."""
    field = algebra.field
    n = algebra.dim
    space = Subspace.span(field, n, [np.asarray(g, dtype=field.dtype) for g in gens]) if len(gens) else Subspace.zero(field, n)
    while True:
        if space.dim == 0:
            break
        moved = np.vstack([field.matmul(space.basis, x.T) for x in algebra.mult_matrices])
        bigger = space + Subspace.span(field, n, moved)
        if bigger.dim == space.dim:
            break
        space = bigger
    return IdealSubspace(algebra, space, check=False)


def maximal_ideal(algebra: AlgebraPresentation) -> IdealSubspace:
    """The ideal I generated by the images of the variables."""
    if "maximal_ideal" not in algebra.__dict__:
        ring = algebra.ring
        gens = [algebra.coords(ring.gen(i)) for i in range(ring.nvars)]
        algebra.__dict__["maximal_ideal"] = ideal_generated(algebra, gens)
    return algebra.__dict__["maximal_ideal"]


def ideal_product(a: IdealSubspace, b: IdealSubspace) -> IdealSubspace:
    """a·b, spanned by products of a's basis with b's minimal generators."""
    a._same(b)
    alg = a.algebra
    field = alg.field
    if a.dim == 0 or b.dim == 0:
        return zero_ideal(alg)
    if b.dim < a.dim:
        a, b = b, a
    gens = b.minimal_generators
    rows = [field.matmul(a.basis, alg.mult_matrix(g).T) for g in gens]
    return IdealSubspace(alg, Subspace.span(field, alg.dim, np.vstack(rows)), check=False)


def _reduction_map(field, space: Subspace) -> np.ndarray:
    """Matrix (on columns) of v -> v reduced modulo ``space``."""
    n = space.ambient_dim
    r = field.identity(n)
    for i, c in enumerate(space.pivots):
        r[:, c] = field.reduce(r[:, c] - space.basis[i])
    return r


def colon(a: IdealSubspace, b: IdealSubspace) -> IdealSubspace:
    """a : b = {f in B : f·b ⊆ a}."""
    a._same(b)
    alg = a.algebra
    cache = alg.__dict__.setdefault("_colon_cache", {})
    key = (a.space, b.space)
    if key not in cache:
        cache[key] = _colon(a, b)
    return cache[key]


def _colon(a: IdealSubspace, b: IdealSubspace) -> IdealSubspace:
    alg = a.algebra
    field = alg.field
    n = alg.dim
    if b.dim == 0 or a.dim == n:
        return unit_ideal(alg)
    red = _reduction_map(field, a.space) if a.dim else None
    current = Subspace.full(field, n)
    for g in b.minimal_generators:
        m = alg.mult_matrix(g)
        if red is not None:
            m = field.matmul(red, m)
        restricted = field.matmul(m, current.basis.T)
        coeffs = kernel(field, restricted)
        if coeffs.dim == 0:
            return zero_ideal(alg)
        current = Subspace.span(field, n, field.matmul(coeffs.basis, current.basis))
    return IdealSubspace(alg, current, check=False)


def colon_into_zero(a: IdealSubspace) -> IdealSubspace:
    """The annihilator 0 : a."""
    return colon(zero_ideal(a.algebra), a)


annihilator = colon_into_zero


def power_chain(algebra: AlgebraPresentation) -> list:
    """[B, I, I^2, ..., I^m, 0]; raises NotLocal if the powers of I stall above 0."""
    if algebra.is_zero_ring:
        raise ZeroRing("B is the zero ring")
    if "power_chain" in algebra.__dict__:
        return algebra.__dict__["power_chain"]
    ideal = maximal_ideal(algebra)
    chain = [unit_ideal(algebra), ideal]
    while chain[-1].dim:
        nxt = IdealSubspace(algebra, chain[-1].maximal_multiple, check=False)
        if nxt.dim == chain[-1].dim:
            raise NotLocal(_nonlocal_message(algebra))
        chain.append(nxt)
    algebra.__dict__["power_chain"] = chain
    return chain


def _nonlocal_message(algebra: AlgebraPresentation) -> str:
    field = algebra.field
    bad = []
    for name, x in zip(algebra.ring.vars.names, algebra.mult_matrices):
        power = field.identity(algebra.dim)
        for _ in range(algebra.dim):
            power = field.matmul(power, x)
        if np.any(power):
            bad.append(name)
    if not bad:
        return "not a local algebra at the origin: the maximal ideal is not nilpotent"
    verb = "is" if len(bad) == 1 else "are"
    return f"not a local algebra at the origin: {', '.join(bad)} {verb} not nilpotent"


def locality_check(algebra: AlgebraPresentation) -> int:
    """Return m, the largest l with I^l != 0, after checking every variable is nilpotent."""
    return len(power_chain(algebra)) - 2


def socle(algebra: AlgebraPresentation) -> IdealSubspace:
    """0 : I.  B is Gorenstein exactly when this is one-dimensional."""
    power_chain(algebra)
    return colon_into_zero(maximal_ideal(algebra))


def lift_generators(a: IdealSubspace, gb: GroebnerBasis) -> list:
    """Ambient polynomials (in standard monomials) generating ``a`` modulo J."""
    alg = a.algebra
    if alg.gb != gb:
        raise AlgebraMismatch("ideal does not belong to the algebra presented by this basis")
    gens = [np.asarray(g) for g in a.minimal_generators]
    kept = list(gens)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others and kept[i] in ideal_generated(alg, others):
            kept.pop(i)
        else:
            i += 1
    return [_normalise(alg.to_polynomial(g)) for g in kept]


def _normalise(f: Polynomial) -> Polynomial:
    return f.monic() if f else f
