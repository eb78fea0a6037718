"""Combinatorics of monomial ideals.

Everything here is exact and works on minimal generating sets.  The
brute-force helpers at the bottom (``standard_monomials_up_to``,
``colon_excess_counts``, ``delta_profile_bruteforce``) enumerate
monomials directly and serve as oracles for the Hilbert-series code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CharNotZero, UnitIdeal
from .poly import Monomial, Ring, divides, format_monomial, m_index

INF = math.inf
NEG_INF = -math.inf

_MAX_COVER_VARS = 16


def monomials_of_degree(n: int, d: int):
    """All exponent tuples of length ``n`` and total degree ``d``, lex-descending."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def _canonical_key(a):
    return (sum(a), tuple(-e for e in a))


def _minimal(ms: Iterable[tuple]) -> tuple[tuple, ...]:
    kept: list[tuple] = []
    for m in sorted(set(ms), key=_canonical_key):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    ``gens`` is an antichain under divisibility, sorted by degree and then
    lexicographically descending.  No generators means the zero ideal.
    The unit ideal only arises internally (a colon such as ``(x1) : x1``)
    and must be requested with ``allow_unit=True``.
    """

    __slots__ = ("ring", "gens")

    def __init__(self, ring: Ring | int, gens: Iterable[Sequence[int]] = (), allow_unit: bool = False):
        if isinstance(ring, int):
            ring = Ring.standard(ring)
        self.ring = ring
        n = ring.n
        ms = []
        for g in gens:
            g = tuple(g)
            if len(g) != n:
                raise ValueError(f"monomial {g} does not belong to a ring with {n} variables")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
            ms.append(g)
        if any(sum(g) == 0 for g in ms):
            if not allow_unit:
                raise UnitIdeal("the unit monomial generates the whole ring")
            self.gens = ((0,) * n,)
        else:
            self.gens = _minimal(ms)

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and sum(self.gens[0]) == 0

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def monomials(self) -> list[Monomial]:
        return [Monomial(g) for g in self.gens]

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def to_strings(self) -> list[str]:
        return [format_monomial(g, self.ring.var_names) for g in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.to_strings()) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def minimalize(ms: Iterable[Sequence[int]], ring: Ring | int | None = None) -> MonomialIdeal:
    ms = [tuple(m) for m in ms]
    if ring is None:
        if not ms:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = len(ms[0])
    return MonomialIdeal(ring, ms)


def contains(J: MonomialIdeal, m: Sequence[int]) -> bool:
    m = tuple(m)
    if len(m) != J.n:
        raise ValueError("monomial and ideal live in different rings")
    return any(divides(g, m) for g in J.gens)


def colon_by_variable(J: MonomialIdeal, i: int) -> MonomialIdeal:
    """``J : x_i`` (1-based ``i``); may be the unit ideal."""
    if not 1 <= i <= J.n:
        raise ValueError(f"variable index {i} out of range 1..{J.n}")
    k = i - 1
    out = []
    for g in J.gens:
        if g[k]:
            g = g[:k] + (g[k] - 1,) + g[k + 1:]
        out.append(g)
    return MonomialIdeal(J.ring, out, allow_unit=True)


def restrict_below(J: MonomialIdeal, i: int) -> MonomialIdeal:
    """Image of ``J`` in ``k[x1..xi]`` after setting the later variables to zero."""
    if not 1 <= i <= J.n:
        raise ValueError(f"restriction index {i} out of range 1..{J.n}")
    if i == J.n:
        return J
    return MonomialIdeal(
        J.ring.prefix(i),
        [g[:i] for g in J.gens if m_index(g) <= i],
        allow_unit=True,
    )


def add_variables(J: MonomialIdeal, indices: Iterable[int]) -> MonomialIdeal:
    """``J + (x_j : j in indices)``."""
    n = J.n
    extra = [tuple(int(c == j - 1) for c in range(n)) for j in indices]
    return MonomialIdeal(J.ring, list(J.gens) + extra, allow_unit=True)


# integer polynomials in t, as coefficient lists (index = degree)

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for k, v in enumerate(a):
        out[k] += v
    for k, v in enumerate(b):
        out[k] += v
    return _trim(out)


def _psub(a, b):
    return _padd(a, [-v for v in b])


def _pshift(a, k):
    return [0] * k + list(a) if a else []


def _divide_one_minus_t(c: Sequence[int]) -> list[int] | None:
    """Quotient of ``c(t)`` by ``(1 - t)``, or None if it does not divide."""
    if not c:
        return []
    if sum(c) != 0:
        return None
    q, acc = [], 0
    for v in c[:-1]:
        acc += v
        q.append(acc)
    return _trim(q)


@lru_cache(maxsize=65536)
def _numerator(gens: tuple[tuple, ...], n: int) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    disjoint = True
    for a, b in combinations(gens, 2):
        if any(x and y for x, y in zip(a, b)):
            disjoint = False
            break
    if disjoint:
        out = [1]
        for g in gens:
            out = _psub(out, _pshift(out, sum(g)))
        return tuple(out)
    counts = [sum(1 for g in gens if g[v]) for v in range(n)]
    v = max(range(n), key=lambda k: (counts[k], -k))
    xv = tuple(int(c == v) for c in range(n))
    plus = _minimal([g for g in gens if not g[v]] + [xv])
    colon = _minimal([g[:v] + (g[v] - 1,) + g[v + 1:] if g[v] else g for g in gens])
    return tuple(_padd(list(_numerator(plus, n)), _pshift(list(_numerator(colon, n)), 1)))


@dataclass(frozen=True)
class HilbertNumerator:
    """``N(t)`` with ``N(t) / (1 - t)^n`` the Hilbert series of ``S/J``."""

    coeffs: tuple[int, ...]
    n: int

    @property
    def dimension(self) -> int:
        """Pole order at ``t = 1``; -1 for the unit ideal."""
        c = list(self.coeffs)
        if not c:
            return -1
        k = 0
        while True:
            q = _divide_one_minus_t(c)
            if q is None:
                break
            c, k = q, k + 1
        return self.n - k

    def hf(self, m: int) -> int:
        """dim_k (S/J)_m."""
        if m < 0:
            return 0
        n = self.n
        return sum(
            v * math.comb(m - k + n - 1, n - 1)
            for k, v in enumerate(self.coeffs)
            if k <= m
        )

    def __str__(self):
        return format_tpoly(self.coeffs)


def format_tpoly(coeffs: Sequence[int]) -> str:
    parts = []
    for k, v in enumerate(coeffs):
        if not v:
            continue
        mag = abs(v)
        mon = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        body = str(mag) if not mon else (mon if mag == 1 else f"{mag}{mon}")
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {b}" for s, b in parts[1:])


def hilbert_numerator(J: MonomialIdeal) -> HilbertNumerator:
    return HilbertNumerator(_numerator(J.gens, J.n), J.n)


def hf(J: MonomialIdeal, m: int) -> int:
    return hilbert_numerator(J).hf(m)


def krull_dimension(J: MonomialIdeal) -> int:
    """``n`` minus the size of a smallest variable set meeting every generator."""
    if J.is_unit:
        raise UnitIdeal("the unit ideal has no dimension")
    n = J.n
    if not J.gens:
        return n
    if n > _MAX_COVER_VARS:
        raise ValueError(f"exhaustive vertex cover is limited to {_MAX_COVER_VARS} variables")
    supports = [frozenset(k for k, e in enumerate(g) if e) for g in J.gens]
    for size in range(1, n + 1):
        for cover in combinations(range(n), size):
            s = set(cover)
            if all(sup & s for sup in supports):
                return n - size
    return 0


@dataclass(frozen=True)
class DeltaProfile:
    """Colon degrees ``delta_i`` for the variables ``x_n, ..., x_1``.

    ``values[i - 1]`` is the largest degree in which
    ``(J, x_n..x_{i+1}) : x_i`` and ``(J, x_n..x_{i+1})`` differ, with
    ``-inf`` when they agree everywhere and ``inf`` when they differ in
    infinitely many degrees.
    """

    values: tuple

    def __getitem__(self, i: int):
        return self.values[i - 1]

    @property
    def n(self) -> int:
        return len(self.values)

    def descending(self) -> tuple:
        """``(delta_n, ..., delta_1)``."""
        return tuple(reversed(self.values))

    @property
    def filter_regular(self) -> bool:
        return all(v != INF for v in self.values)

    def first_unbounded(self) -> int | None:
        """Largest index ``i`` with ``delta_i = inf`` (the first one met from x_n down)."""
        for i in range(self.n, 0, -1):
            if self[i] == INF:
                return i
        return None


def _colon_delta(Ji: MonomialIdeal, i: int):
    Ki = colon_by_variable(Ji, i)
    diff = _psub(list(_numerator(Ji.gens, Ji.n)), list(_numerator(Ki.gens, Ki.n)))
    if not diff:
        return NEG_INF
    for _ in range(Ji.n):
        diff = _divide_one_minus_t(diff)
        if diff is None:
            return INF
    return len(diff) - 1


def delta_profile(J: MonomialIdeal) -> DeltaProfile:
    if J.is_unit:
        raise UnitIdeal("delta profile of the unit ideal")
    values = []
    for i in range(1, J.n + 1):
        values.append(_colon_delta(restrict_below(J, i), i))
    return DeltaProfile(tuple(values))


def _single_swaps(u: tuple):
    n = len(u)
    for j in range(1, n):
        if u[j]:
            for i in range(j):
                v = list(u)
                v[i] += 1
                v[j] -= 1
                yield tuple(v)


def is_borel_fixed(J: MonomialIdeal) -> bool:
    """Strong stability: every single swap ``u * x_i / x_j`` (i < j) of a generator stays in J."""
    if J.ring.characteristic:
        raise CharNotZero("Borel-fixedness is only characterized combinatorially in characteristic 0")
    return all(contains(J, v) for u in J.gens for v in _single_swaps(u))


def borel_closure(ms: Iterable[Sequence[int]], ring: Ring | int | None = None) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given monomials."""
    ms = [tuple(m) for m in ms]
    if ring is None:
        ring = len(ms[0])
    if isinstance(ring, Ring) and ring.characteristic:
        raise CharNotZero("Borel closure is only meaningful in characteristic 0")
    seen = set(ms)
    frontier = list(ms)
    while frontier:
        u = frontier.pop()
        for v in _single_swaps(u):
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return MonomialIdeal(ring, seen)


# brute-force oracles

def standard_monomials_up_to(J: MonomialIdeal, D: int) -> list[Monomial]:
    """All monomials of degree at most ``D`` outside ``J``, by degree."""
    out = []
    for d in range(D + 1):
        for m in monomials_of_degree(J.n, d):
            if not contains(J, m):
                out.append(Monomial(m))
    return out


def colon_excess_counts(Ji: MonomialIdeal, i: int, D: int) -> list[int]:
    """``#{m not in Ji : m * x_i in Ji}`` in each degree ``0..D``."""
    k = i - 1
    counts = []
    for d in range(D + 1):
        c = 0
        for m in monomials_of_degree(Ji.n, d):
            if contains(Ji, m):
                continue
            mx = m[:k] + (m[k] + 1,) + m[k + 1:]
            if contains(Ji, mx):
                c += 1
        counts.append(c)
    return counts


def delta_profile_bruteforce(J: MonomialIdeal) -> DeltaProfile:
    """Delta profile by direct enumeration.

    Membership depends only on exponents capped at ``E_j``, the largest
    exponent of ``x_j`` among the generators, so the excess set is either
    empty above degree ``sum(E_j) - n`` or nonempty in every degree from
    ``sum(E_j)`` on.  Two consecutive nonempty degrees there mean ``inf``.
    """
    values = []
    for i in range(1, J.n + 1):
        Ji = restrict_below(J, i)
        if Ji.is_unit:
            values.append(0)
            continue
        caps = [max((g[j] for g in Ji.gens), default=0) for j in range(i)]
        B = sum(caps)
        counts = colon_excess_counts(Ji, i, B + 1)
        if counts[B] and counts[B + 1]:
            values.append(INF)
            continue
        nz = [d for d, c in enumerate(counts) if c]
        values.append(max(nz) if nz else NEG_INF)
    return DeltaProfile(tuple(values))
