"""The profiles ``reg_t`` and ``a*_t`` of ``S/J`` for a monomial ideal ``J``.

Two routes live here: the colon route, reading both profiles off the
colon degrees ``delta_i``, and the generator route for strongly stable
ideals, reading them off the degrees and last variables of the minimal
generators.  The Betti route is in :mod:`ginkit.betti`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharNotZero, NotBorelFixed, NotFilterRegular
from .monomial_ideal import NEG_INF, MonomialIdeal, delta_profile, is_borel_fixed
from .poly import m_index


def _shift(v, k):
    return v if v == NEG_INF else v + k


@dataclass(frozen=True)
class InvariantProfile:
    """``reg_q[t] = reg_t(S/J)`` and ``astar_q[t] = a*_t(S/J)`` for ``t = 0..n-1``."""

    reg_q: tuple
    astar_q: tuple
    route: str = ""

    @property
    def reg_full(self):
        return self.reg_q[-1]

    @property
    def astar_full(self):
        return self.astar_q[-1]

    @property
    def reg_ideal(self):
        """``reg(J) = reg(S/J) + 1``."""
        return _shift(self.reg_full, 1)

    @property
    def reg_ideal_q(self) -> tuple:
        return tuple(_shift(v, 1) for v in self.reg_q)

    def same_values(self, other: "InvariantProfile") -> bool:
        return self.reg_q == other.reg_q and self.astar_q == other.astar_q


def profiles_colon(J: MonomialIdeal) -> InvariantProfile:
    """Profiles from the colon degrees; needs ``x_n, ..., x_1`` filter-regular on ``S/J``.

    Raises:
        NotFilterRegular: some ``delta_i`` is infinite; carries ``i``.
    """
    delta = delta_profile(J)
    if not delta.filter_regular:
        raise NotFilterRegular(delta.first_unbounded())
    n = J.n
    reg, astar = [], []
    for t in range(n):
        idx = range(n - t, n + 1)
        reg.append(max(delta[i] for i in idx))
        astar.append(max(_shift(delta[i], -(n - i)) for i in idx))
    return InvariantProfile(tuple(reg), tuple(astar), "colon")


def profiles_borel(J: MonomialIdeal) -> InvariantProfile:
    """Profiles from the minimal generators of a strongly stable ideal.

    ``reg_t(J)`` is the largest degree of a generator ``u`` with
    ``m(u) >= n - t``; ``a*_t(S/J)`` is ``max(deg u + m(u)) - n - 1`` over
    the same generators.
    """
    if J.ring.characteristic:
        raise CharNotZero("the generator route needs characteristic 0")
    if not is_borel_fixed(J):
        raise NotBorelFixed(f"{J} is not strongly stable")
    n = J.n
    reg, astar = [], []
    for t in range(n):
        sel = [u for u in J.gens if m_index(u) >= n - t]
        reg.append(_shift(max((sum(u) for u in sel), default=NEG_INF), -1))
        astar.append(_shift(max((sum(u) + m_index(u) for u in sel), default=NEG_INF), -n - 1))
    return InvariantProfile(tuple(reg), tuple(astar), "borel")
