"""Degree-slice linear algebra for homogeneous ideals.

These routines never call the Groebner engine: ``I_m`` is spanned by the
products of monomials with generators, reduced to a semi-echelon basis by
exact Gaussian elimination.  They are the independent side of the
Hilbert-function and colon-ideal cross-checks.
"""

from __future__ import annotations

import math
from typing import Sequence

from .gin import check_homogeneous
from .poly import Polynomial, Ring


class DegreeSlices:
    """Semi-echelon bases of ``I_m`` for ``m = 0, 1, 2, ...``, built lazily."""

    def __init__(self, F: Sequence[Polynomial], ring: Ring | None = None):
        F = [f for f in F if not f.is_zero()]
        check_homogeneous(F)
        self.ring = ring or (F[0].ring if F else None)
        if self.ring is None:
            raise ValueError("cannot infer the ring of an empty generator list")
        self.p = self.ring.characteristic
        self.n = self.ring.n
        self._by_degree: dict[int, list[dict]] = {}
        for f in F:
            self._by_degree.setdefault(f.degree, []).append(self._row(f))
        self._bases: list[dict] = []

    def _row(self, f: Polynomial) -> dict:
        if self.p:
            return dict(f._terms)
        den = 1
        for c in f._terms.values():
            den = math.lcm(den, getattr(c, "denominator", 1))
        return {m: int(c * den) for m, c in f._terms.items()}

    def _insert(self, basis: dict, row: dict) -> bool:
        """Reduce ``row`` against ``basis`` (pivot -> row); keep it if nonzero."""
        p = self.p
        row = dict(row)
        while row:
            lm = max(row)  # lex-largest exponent vector
            piv = basis.get(lm)
            if piv is None:
                if p:
                    inv = pow(row[lm], -1, p)
                    row = {k: v * inv % p for k, v in row.items()}
                else:
                    g = 0
                    for v in row.values():
                        g = math.gcd(g, v)
                    row = {k: v // g for k, v in row.items()}
                basis[lm] = row
                return True
            c, pc = row[lm], piv[lm]
            if p:
                f = c * pow(pc, -1, p) % p
                for k, v in piv.items():
                    w = (row.get(k, 0) - f * v) % p
                    if w:
                        row[k] = w
                    else:
                        row.pop(k, None)
            else:
                h = math.gcd(c, pc)
                a, b = pc // h, c // h
                new = {k: a * v for k, v in row.items()}
                for k, v in piv.items():
                    w = new.get(k, 0) - b * v
                    if w:
                        new[k] = w
                    else:
                        new.pop(k, None)
                row = new
        return False

    def basis(self, m: int) -> dict:
        while len(self._bases) <= m:
            d = len(self._bases)
            basis: dict = {}
            if d > 0:
                for row in self._bases[d - 1].values():
                    for j in range(self.n):
                        shifted = {k[:j] + (k[j] + 1,) + k[j + 1:]: v for k, v in row.items()}
                        self._insert(basis, shifted)
            for row in self._by_degree.get(d, []):
                self._insert(basis, row)
            self._bases.append(basis)
        return self._bases[m]

    def dim(self, m: int) -> int:
        return len(self.basis(m)) if m >= 0 else 0

    def ambient_dim(self, m: int) -> int:
        return math.comb(m + self.n - 1, self.n - 1) if m >= 0 else 0

    def quotient_dim(self, m: int) -> int:
        """dim_k (S/I)_m."""
        return self.ambient_dim(m) - self.dim(m)

    def contains(self, f: Polynomial) -> bool:
        """Membership of ``f`` in ``I``, tested homogeneous component by component."""
        parts: dict[int, dict] = {}
        for mono, c in f._terms.items():
            parts.setdefault(sum(mono), {})[mono] = c
        for d, terms in parts.items():
            basis = dict(self.basis(d))
            if self._insert(basis, self._row(Polynomial(f.ring, terms))):
                return False
        return True

    def colon_dim(self, i: int, m: int) -> int:
        """dim_k [I : x_i]_m, via ``x_i S_m`` intersected with ``I_{m+1}``."""
        k = i - 1
        rows = self.basis(m + 1).values()
        projected: dict = {}
        for row in rows:
            r = {mono: v for mono, v in row.items() if mono[k] == 0}
            if r:
                self._insert(projected, r)
        return len(rows) - len(projected)


def quotient_hf(F: Sequence[Polynomial], m: int) -> int:
    return DegreeSlices(F).quotient_dim(m)


def colon_slice_equalities(F: Sequence[Polynomial], i: int, max_degree: int) -> list[bool]:
    """For ``m = 0..max_degree``: does ``[(I, x_n..x_{i+1}) : x_i]_m`` equal ``(I, x_n..x_{i+1})_m``?

    Computed in ``k[x1..xi]`` on the image of ``I``.
    """
    ring = F[0].ring
    images = [f.restrict(i) for f in F]
    sl = DegreeSlices(images, ring.prefix(i))
    return [sl.colon_dim(i, m) == sl.dim(m) for m in range(max_degree + 1)]


def top_degree_after_cut(F: Sequence[Polynomial], d: int, limit: int = 200) -> int | None:
    """Largest ``m`` with ``(S/(I, x_n..x_{n-d+1}))_m != 0``; None if not finite up to ``limit``."""
    ring = F[0].ring
    keep = ring.n - d
    sl = DegreeSlices([f.restrict(keep) for f in F], ring.prefix(keep))
    top = None
    for m in range(limit + 1):
        if sl.quotient_dim(m) == 0:
            return top
        top = m
    return None
