"""Exact coefficients, monomials, term orders and sparse polynomials.

Monomials are exponent tuples; position 0 is ``x1``, the greatest variable
under every supported order.  Polynomials map exponent tuples to nonzero
coefficients and carry no order of their own: every order-dependent
operation takes a :class:`TermOrder` argument.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Ring:
    """Polynomial ring ``k[x1, ..., xn]`` over Q (characteristic 0) or GF(p)."""

    __slots__ = ("var_names", "characteristic", "_index")

    def __init__(self, var_names: Sequence[str], characteristic: int = 0):
        names = tuple(var_names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
        self.var_names = names
        self.characteristic = characteristic
        self._index = {v: i for i, v in enumerate(names)}

    @classmethod
    def standard(cls, n: int, characteristic: int = 0) -> "Ring":
        return cls([f"x{i}" for i in range(1, n + 1)], characteristic)

    @property
    def n(self) -> int:
        return len(self.var_names)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.var_names == other.var_names
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash((self.var_names, self.characteristic))

    def __repr__(self):
        return f"Ring({list(self.var_names)!r}, characteristic={self.characteristic})"

    def index(self, name: str) -> int:
        """0-based position of a variable name."""
        return self._index[name]

    def prefix(self, i: int) -> "Ring":
        """The subring ``k[x1, ..., xi]``."""
        return Ring(self.var_names[:i], self.characteristic)

    # coefficient field

    def coerce(self, c) -> Rational:
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, p) % p
            return int(c) % p
        if isinstance(c, int):
            return c
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c

    def div(self, a, b):
        p = self.characteristic
        if p:
            return a * pow(b, -1, p) % p
        q = Fraction(a, b) if isinstance(a, int) and isinstance(b, int) else Fraction(a) / b
        return q.numerator if q.denominator == 1 else q

    # constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.n: 1})

    def gen(self, i: int) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        e = [0] * self.n
        e[i - 1] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(1, self.n + 1)]

    def monomial(self, exponents: Sequence[int], coeff=1) -> "Polynomial":
        if len(exponents) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(exponents)}")
        return Polynomial(self, {tuple(exponents): coeff})


class Monomial(tuple):
    """Exponent vector ``A`` of the monomial ``x^A``."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        t = super().__new__(cls, exponents)
        if any(e < 0 for e in t):
            raise ValueError(f"negative exponent in {tuple(t)}")
        return t

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def m_index(self) -> int:
        """Largest 1-based ``i`` with a positive exponent; 0 for the unit monomial."""
        for i in range(len(self), 0, -1):
            if self[i - 1]:
                return i
        return 0

    def __repr__(self):
        return f"Monomial({tuple(self)})"


def degree(a: Sequence[int]) -> int:
    return sum(a)


def m_index(a: Sequence[int]) -> int:
    for i in range(len(a), 0, -1):
        if a[i - 1]:
            return i
    return 0


def mono_mul(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b) -> tuple:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def divides(a, b) -> bool:
    """True iff ``x^a`` divides ``x^b``."""
    return all(x <= y for x, y in zip(a, b))


def coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def format_monomial(a: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, v in zip(a, names):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


def _lex_key(a):
    return a


def _deglex_key(a):
    return (sum(a), a)


def _degrevlex_key(a):
    return (sum(a), tuple(-e for e in reversed(a)))


class TermOrder(enum.Enum):
    """Monomial orders with ``x1 > x2 > ... > xn``."""

    LEX = "lex"
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"

    @property
    def key(self):
        """Sort key: ``a > b`` in this order iff ``key(a) > key(b)``."""
        return _KEYS[self]

    @classmethod
    def parse(cls, name: "str | TermOrder") -> "TermOrder":
        if isinstance(name, TermOrder):
            return name
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown term order {name!r}; expected lex, deglex or degrevlex") from None

    def __str__(self):
        return self.value


_KEYS = {
    TermOrder.LEX: _lex_key,
    TermOrder.DEGLEX: _deglex_key,
    TermOrder.DEGREVLEX: _degrevlex_key,
}


def monomial_compare(a: Sequence[int], b: Sequence[int], order: TermOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller than, equal to, or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError(f"monomials from rings of different size: {len(a)} vs {len(b)}")
    key = TermOrder.parse(order).key
    ka, kb = key(tuple(a)), key(tuple(b))
    return (ka > kb) - (ka < kb)


class Polynomial:
    """Immutable sparse polynomial over a :class:`Ring`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Sequence[int], object]):
        clean = {}
        n = ring.n
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} does not belong to a ring with {n} variables")
            c = ring.coerce(c)
            if c:
                clean[m] = ring.coerce(clean.get(m, 0) + c)
                if not clean[m]:
                    del clean[m]
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        # terms already normalized: nonzero, coerced, tuple keys
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m) -> Rational:
        return self._terms.get(tuple(m), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    @property
    def homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.one() * other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # arithmetic

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            c = self.ring.coerce(other)
            return Polynomial._raw(self.ring, {(0,) * self.ring.n: c} if c else {})
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        R = self.ring
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = R.coerce(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(R, out)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return Polynomial._raw(R, {m: R.coerce(-c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        R = self.ring
        p = R.characteristic
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: R.coerce(c) for m, c in out.items() if c}
        return Polynomial._raw(R, out)

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

    def scale(self, c) -> "Polynomial":
        return self * c

    # order-dependent views

    def sorted_terms(self, order: TermOrder) -> list[tuple[tuple, Rational]]:
        """Terms from greatest to smallest monomial."""
        key = TermOrder.parse(order).key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        return Monomial(max(self._terms, key=TermOrder.parse(order).key))

    def leading_term(self, order: TermOrder) -> tuple[Rational, Monomial]:
        lm = self.leading_monomial(order)
        return self._terms[tuple(lm)], lm

    def monic(self, order: TermOrder) -> "Polynomial":
        c, _ = self.leading_term(order)
        R = self.ring
        return Polynomial._raw(R, {m: R.div(a, c) for m, a in self._terms.items()})

    # substitutions

    def substitute(self, matrix: Sequence[Sequence[int]]) -> "Polynomial":
        return apply_linear_substitution(self, matrix)

    def restrict(self, i: int) -> "Polynomial":
        """Image in ``k[x1..xi]`` after setting ``x_{i+1}, ..., x_n`` to zero."""
        R = self.ring.prefix(i)
        return Polynomial._raw(
            R, {m[:i]: c for m, c in self._terms.items() if not any(m[i:])}
        )

    def to_string(self, order: TermOrder = TermOrder.DEGREVLEX) -> str:
        if not self._terms:
            return "0"
        names = self.ring.var_names
        out = []
        for k, (m, c) in enumerate(self.sorted_terms(order)):
            neg = (not self.ring.characteristic) and c < 0
            a = -c if neg else c
            mon = format_monomial(m, names)
            if mon == "1":
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{a}*{mon}"
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def apply_linear_substitution(p: Polynomial, g: Sequence[Sequence[int]]) -> Polynomial:
    """Replace each ``x_j`` by ``sum_k g[j][k] * x_k`` and expand."""
    R = p.ring
    n = R.n
    if len(g) != n or any(len(row) != n for row in g):
        raise ValueError(f"substitution matrix must be {n}x{n}")
    images = [Polynomial(R, {tuple(int(k == c) for c in range(n)): g[j][k] for k in range(n)}) for j in range(n)]
    powers: list[dict[int, Polynomial]] = [{0: R.one(), 1: images[j]} for j in range(n)]

    def power(j, e):
        cache = powers[j]
        if e not in cache:
            cache[e] = power(j, e - 1) * images[j]
        return cache[e]

    result = R.zero()
    for m, c in p.items():
        term = R.one() * c
        for j, e in enumerate(m):
            if e:
                term = term * power(j, e)
        result = result + term
    return result
