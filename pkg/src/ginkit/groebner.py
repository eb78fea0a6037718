"""Buchberger's algorithm, normal forms and initial ideals.

Over Q the engine works on primitive integer polynomials: every reduction
step is ``a*f - b*t*g`` with ``a, b`` the cofactors of the leading
coefficients, and contents are divided out periodically.  Over GF(p)
basis elements are kept monic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import UnitIdeal
from .monomial_ideal import MonomialIdeal
from .poly import Polynomial, Ring, TermOrder, coprime, divides, mono_lcm

_CONTENT_EVERY = 8


def _heap_key(order: TermOrder):
    """Key whose minimum is the order's maximum, for use with heapq."""
    if order is TermOrder.LEX:
        return lambda a: tuple(-e for e in a)
    if order is TermOrder.DEGLEX:
        return lambda a: (-sum(a), tuple(-e for e in a))
    return lambda a: (-sum(a), a[::-1])


def _content(*dicts) -> int:
    g = 0
    for d in dicts:
        for c in d.values():
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


def _to_integer_terms(p: Polynomial) -> tuple[dict, Fraction]:
    """Primitive integer multiple ``s*p`` of ``p``; returns the terms and ``s``."""
    den = 1
    for c in p._terms.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    terms = {m: int(c * den) for m, c in p._terms.items()}
    g = _content(terms)
    return {m: c // g for m, c in terms.items()}, Fraction(den, g)


class _Engine:
    """Reduction machinery for one ring and order."""

    def __init__(self, ring: Ring, order: TermOrder):
        self.ring = ring
        self.order = order
        self.p = ring.characteristic
        self.key = order.key
        self.hkey = _heap_key(order)

    def prepare(self, poly: Polynomial) -> dict:
        if self.p:
            return dict(poly._terms)
        return _to_integer_terms(poly)[0]

    def lead(self, terms: dict):
        m = max(terms, key=self.key)
        return m, terms[m]

    def normalize(self, terms: dict) -> dict:
        """Monic over GF(p); primitive with positive leading coefficient over Q."""
        m, c = self.lead(terms)
        if self.p:
            inv = pow(c, -1, self.p)
            return {k: v * inv % self.p for k, v in terms.items()}
        g = _content(terms)
        if c < 0:
            g = -g
        return {k: v // g for k, v in terms.items()}

    def reduce(self, f: dict, divisors):
        """Divide ``f`` by ``divisors`` (a sequence of ``(lm, lc, terms)``).

        Returns ``(remainder, scale)`` where ``remainder = scale * r`` and
        ``r`` is the exact remainder; ``scale`` is 1 over GF(p).
        """
        p = self.p
        hkey = self.hkey
        f = dict(f)
        heap = [(hkey(m), m) for m in f]
        heapq.heapify(heap)
        rem: dict = {}
        scale = 1
        steps = 0
        while heap:
            _, m = heapq.heappop(heap)
            c = f.get(m)
            if c is None:
                continue
            for lm, lc, g in divisors:
                if divides(lm, m):
                    break
            else:
                del f[m]
                rem[m] = c
                continue
            q = tuple(x - y for x, y in zip(m, lm))
            if p:
                b = c * pow(lc, -1, p) % p
                for gm, gc in g.items():
                    mm = tuple(x + y for x, y in zip(q, gm))
                    old = f.get(mm)
                    v = ((old or 0) - b * gc) % p
                    if v:
                        f[mm] = v
                        if old is None:
                            heapq.heappush(heap, (hkey(mm), mm))
                    elif old is not None:
                        del f[mm]
            else:
                h = gcd(c, lc)
                a, b = lc // h, c // h
                if a < 0:
                    a, b = -a, -b
                if a != 1:
                    for k in f:
                        f[k] *= a
                    for k in rem:
                        rem[k] *= a
                    scale *= a
                for gm, gc in g.items():
                    mm = tuple(x + y for x, y in zip(q, gm))
                    old = f.get(mm)
                    v = (old or 0) - b * gc
                    if v:
                        f[mm] = v
                        if old is None:
                            heapq.heappush(heap, (hkey(mm), mm))
                    elif old is not None:
                        del f[mm]
                steps += 1
                if steps % _CONTENT_EVERY == 0:
                    d = _content(f, rem)
                    if d > 1:
                        for k in f:
                            f[k] //= d
                        for k in rem:
                            rem[k] //= d
                        scale = Fraction(scale, d)
        return rem, scale

    def spoly(self, f, g) -> dict:
        lm_f, lc_f, tf = f
        lm_g, lc_g, tg = g
        L = mono_lcm(lm_f, lm_g)
        qf = tuple(x - y for x, y in zip(L, lm_f))
        qg = tuple(x - y for x, y in zip(L, lm_g))
        p = self.p
        if p:
            a, b = lc_g, lc_f
        else:
            h = gcd(lc_f, lc_g)
            a, b = lc_g // h, lc_f // h
        out: dict = {}
        for m, c in tf.items():
            mm = tuple(x + y for x, y in zip(qf, m))
            out[mm] = a * c
        for m, c in tg.items():
            mm = tuple(x + y for x, y in zip(qg, m))
            v = out.get(mm, 0) - b * c
            if p:
                v %= p
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        return out

    def to_poly(self, terms: dict) -> Polynomial:
        R = self.ring
        return Polynomial._raw(R, {m: R.coerce(c) for m, c in terms.items()})


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder | str) -> Polynomial:
    """Remainder of ``f`` under the division algorithm by ``G``.

    Divisors are tried in the given sequence order, so the result is
    deterministic (and unique whenever ``G`` is a Groebner basis).
    """
    order = TermOrder.parse(order)
    if not G:
        raise ValueError("normal_form needs at least one divisor")
    R = f.ring
    eng = _Engine(R, order)
    divisors = []
    for g in G:
        if g.ring != R:
            raise ValueError("polynomials belong to different rings")
        if g.is_zero():
            continue
        t = eng.prepare(g)
        lm, lc = eng.lead(t)
        divisors.append((lm, lc, t))
    if f.is_zero():
        return f
    if R.characteristic:
        rem, _ = eng.reduce(dict(f._terms), divisors)
        return eng.to_poly(rem)
    terms, s = _to_integer_terms(f)
    rem, scale = eng.reduce(terms, divisors)
    factor = Fraction(1) / (s * scale)
    return Polynomial(R, {m: c * factor for m, c in rem.items()})


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    order: TermOrder
    generators: tuple[Polynomial, ...]
    source: tuple[Polynomial, ...] = ()

    def leading_monomials(self) -> list[tuple]:
        return [tuple(g.leading_monomial(self.order)) for g in self.generators]

    def initial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, self.leading_monomials())

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _update(lms, G, B, h):
    """Gebauer-Moeller installation of the new basis element ``h``."""
    lh = lms[h]
    C = [g for g in G]
    D = []
    lcm_h = {g: mono_lcm(lh, lms[g]) for g in G}
    while C:
        g1 = C.pop(0)
        L1 = lcm_h[g1]
        if coprime(lh, lms[g1]) or not any(divides(lcm_h[g2], L1) for g2 in C + D):
            D.append(g1)
    E = [(g, h) for g in D if not coprime(lh, lms[g])]
    B_new = []
    for g1, g2 in B:
        L = mono_lcm(lms[g1], lms[g2])
        if (
            not divides(lh, L)
            or mono_lcm(lms[g1], lh) == L
            or mono_lcm(lh, lms[g2]) == L
        ):
            B_new.append((g1, g2))
    B_new.extend(E)
    G_new = [g for g in G if not divides(lh, lms[g])]
    G_new.append(h)
    return G_new, B_new


def reduced_groebner_basis(F: Sequence[Polynomial], order: TermOrder | str = TermOrder.DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``F``.

    Pairs are selected by the normal strategy (smallest lcm first, ties by
    the pair's position in the basis list).  Generators are made monic.

    Raises:
        UnitIdeal: if the ideal is the whole ring.
    """
    order = TermOrder.parse(order)
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("need at least one nonzero polynomial")
    R = F[0].ring
    if any(f.ring != R for f in F):
        raise ValueError("polynomials belong to different rings")
    eng = _Engine(R, order)
    key = eng.key

    polys: list = []
    lms: list = []
    G: list[int] = []
    B: list[tuple[int, int]] = []

    def add(terms):
        terms = eng.normalize(terms)
        lm, lc = eng.lead(terms)
        if sum(lm) == 0:
            raise UnitIdeal("the ideal contains a nonzero constant")
        polys.append((lm, lc, terms))
        lms.append(lm)
        return len(polys) - 1

    for f in F:
        t = eng.prepare(f)
        if G:
            t, _ = eng.reduce(t, [polys[g] for g in G])
            if not t:
                continue
        G, B = _update(lms, G, B, add(t))

    def pair_key(pair):
        L = mono_lcm(lms[pair[0]], lms[pair[1]])
        return (sum(L), key(L), pair[1], pair[0])

    while B:
        best = min(range(len(B)), key=lambda k: pair_key(B[k]))
        i, j = B.pop(best)
        s = eng.spoly(polys[i], polys[j])
        if not s:
            continue
        h, _ = eng.reduce(s, [polys[g] for g in G])
        if not h:
            continue
        G, B = _update(lms, G, B, add(h))

    # tail-reduce the minimal basis
    basis = sorted(G, key=lambda g: key(lms[g]))
    reduced = []
    for g in basis:
        lm, lc, t = polys[g]
        others = [polys[o] for o in basis if o != g]
        tail = dict(t)
        del tail[lm]
        if others and tail:
            rem, scale = eng.reduce(tail, others)
            if eng.p:
                full = dict(rem)
                full[lm] = lc
            else:
                full = {m: c for m, c in rem.items()}
                full[lm] = lc * scale
                if isinstance(full[lm], Fraction):
                    d = full[lm].denominator
                    full = {m: int(c * d) for m, c in full.items()}
        else:
            full = dict(t)
        poly = eng.to_poly(eng.normalize(full)).monic(order)
        reduced.append(poly)
    return GroebnerBasis(R, order, tuple(reduced), tuple(F))


def initial_ideal(F: Sequence[Polynomial], order: TermOrder | str = TermOrder.DEGREVLEX) -> MonomialIdeal:
    """Minimal generators of the ideal of leading monomials of ``(F)``."""
    return reduced_groebner_basis(F, order).initial_ideal()
