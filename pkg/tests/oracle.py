"""Brute-force reference computations built on sympy, independent of multistruct.

Everything here works over Q with sympy's own Groebner bases, ``reduced``
and Matrix rank/nullspace.  It is slow and only meant for small algebras.
"""

from itertools import product as cartesian

import sympy as sp


class BruteAlgebra:
    def __init__(self, gens_text, names):
        self.syms = sp.symbols(names)
        self.gens = [sp.sympify(g.replace("^", "**"), locals=dict(zip(names, self.syms))) for g in gens_text]
        self.G = sp.groebner(self.gens, *self.syms, order="grevlex", domain="QQ")
        lead = [sp.Poly(g, *self.syms).monoms(order="grevlex")[0] for g in self.G.exprs]
        bound = [max(lm[i] for lm in lead if sum(lm) == lm[i] and lm[i] > 0) for i in range(len(names))]
        self.basis = [
            e for e in cartesian(*[range(b) for b in bound])
            if not any(all(a <= b for a, b in zip(lm, e)) for lm in lead)
        ]
        self.index = {e: i for i, e in enumerate(self.basis)}
        self.n = len(self.basis)
        self.table = {}
        for i, a in enumerate(self.basis):
            for j, b in enumerate(self.basis):
                if j < i:
                    continue
                self.table[i, j] = self.table[j, i] = self.coords(self.mono(a) * self.mono(b))

    def mono(self, e):
        out = sp.Integer(1)
        for s, k in zip(self.syms, e):
            out *= s**k
        return out

    def coords(self, expr):
        _, rem = sp.reduced(sp.expand(expr), self.G.exprs, *self.syms, order="grevlex")
        vec = [sp.Integer(0)] * self.n
        if rem != 0:
            for mono, c in sp.Poly(rem, *self.syms).terms():
                vec[self.index[mono]] = c
        return vec

    def mul(self, u, v):
        out = [sp.Integer(0)] * self.n
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                t = self.table[i, j]
                for k in range(self.n):
                    if t[k] != 0:
                        out[k] += a * b * t[k]
        return out

    # spaces are lists of spanning vectors; reduce to a row basis when needed
    def basis_of(self, vecs):
        if not vecs:
            return []
        mat = sp.Matrix(vecs)
        r, piv = mat.rref()
        return [list(r.row(i)) for i in range(len(piv))]

    def dim(self, vecs):
        return len(self.basis_of(vecs))

    def maximal(self):
        return self.basis_of([self.coords(s) for s in self.syms] + [
            v for s in self.syms for v in [self.coords(s * self.mono(e)) for e in self.basis]
        ])

    def product(self, a, b):
        return self.basis_of([self.mul(u, v) for u in a for v in b])

    def annihilator(self, a):
        """0 : a by solving f·g = 0 for all g in a as one linear system."""
        if not a:
            return [list(r) for r in sp.eye(self.n).tolist()]
        rows = []
        for g in a:
            # column i of the map f -> f·g is e_i·g
            cols = [self.mul([1 if k == i else 0 for k in range(self.n)], g) for i in range(self.n)]
            rows.extend(sp.Matrix(cols).T.tolist())
        ns = sp.Matrix(rows).nullspace()
        return self.basis_of([list(v) for v in ns])

    def contains(self, big, small):
        return self.dim(big + small) == self.dim(big)

    def chains(self):
        one = [list(r) for r in sp.eye(self.n).tolist()]
        powers = [one, self.maximal()]
        while powers[-1]:
            powers.append(self.product(powers[-1], powers[1]))
            if len(powers[-1]) == len(powers[-2]):
                raise ValueError("maximal ideal is not nilpotent")
        m = len(powers) - 2
        ann = [self.annihilator(powers[m + 1 - l]) for l in range(m + 2)]
        dann = [self.annihilator(self.annihilator(powers[l])) for l in range(m + 2)]
        return m, powers, ann, dann

    def socle_dim(self):
        return len(self.annihilator(self.maximal()))

    def induced_rank(self, num_a, den_a, num_b, den_b):
        """Rank of num_a/den_a -> num_b/den_b induced by inclusion (num_a ⊆ num_b)."""
        return self.dim(num_a + den_b) - self.dim(den_b)

    def complement(self, big, small):
        """Vectors of ``big`` completing a basis of ``small``."""
        out, cur = [], list(small)
        for v in big:
            if self.dim(cur + [v]) > self.dim(cur):
                cur.append(v)
                out.append(v)
        return out

    def pairing_rank(self, ell):
        """Rank of A_l -> Hom(M_(m-l), M_m) from raw products a·x over a basis of J_l."""
        m, _, ann, dann = self.chains()
        xs = self.complement(ann[m - ell], ann[m - ell + 1])
        rows = [sum((self.mul(a, x) for x in xs), []) for a in dann[ell]]
        return self.dim(rows) if xs else 0, len(xs)
