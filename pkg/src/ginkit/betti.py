"""Eliahou-Kervaire Betti tables of strongly stable ideals."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import NotBorelFixed
from .monomial_ideal import NEG_INF, MonomialIdeal, is_borel_fixed
from .poly import m_index
from .profiles import InvariantProfile


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta[(i, j)]`` of the ideal ``J`` or of ``S/J``."""

    beta: dict
    n: int
    subject: str = "ideal"

    @property
    def length(self) -> int:
        """Number of homological positions that can be nonzero."""
        return self.n if self.subject == "ideal" else self.n + 1

    def b(self, i: int):
        """Largest degree of a generator of ``F_i``; ``-inf`` if ``F_i = 0``."""
        return max((j for (k, j), v in self.beta.items() if k == i and v), default=NEG_INF)

    @property
    def b_sequence(self) -> tuple:
        return tuple(self.b(i) for i in range(self.length))

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), v in self.beta.items() if v), default=-1)

    def quotient(self) -> "BettiTable":
        """Table of ``S/J``: shift homological degree by one and add ``beta_{0,0} = 1``."""
        if self.subject != "ideal":
            raise ValueError("already a quotient table")
        beta = {(0, 0): 1}
        for (i, j), v in self.beta.items():
            beta[(i + 1, j)] = v
        return BettiTable(beta, self.n, "quotient")

    def entries(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, v) for (i, j), v in self.beta.items() if v)

    def diagram(self) -> dict[tuple[int, int], int]:
        """Macaulay-style layout: ``(row, column) = (j - i, i)``."""
        return {(j - i, i): v for (i, j), v in self.beta.items() if v}


def ek_betti(J: MonomialIdeal) -> BettiTable:
    """``beta_{i, i+d}(J) = sum over generators u of degree d of C(m(u) - 1, i)``."""
    if not is_borel_fixed(J):
        raise NotBorelFixed(f"{J} is not strongly stable")
    beta: dict = {}
    for u in J.gens:
        m, d = m_index(u), sum(u)
        for i in range(m):
            c = comb(m - 1, i)
            if c:
                beta[(i, d + i)] = beta.get((i, d + i), 0) + c
    return BettiTable(beta, J.n, "ideal")


def profiles_from_betti(J: MonomialIdeal) -> InvariantProfile:
    """``reg_t(S/J) = max{b_i - i : i >= n-t}`` and ``a*_t(S/J) = max{b_i : i >= n-t} - n``."""
    table = ek_betti(J).quotient()
    n = J.n
    b = table.b_sequence
    reg, astar = [], []
    for t in range(n):
        tail = range(n - t, n + 1)
        reg.append(max((b[i] - i for i in tail), default=NEG_INF))
        astar.append(max((b[i] for i in tail), default=NEG_INF) - n)
    return InvariantProfile(tuple(reg), tuple(astar), "betti")


def extremal_betti(table: BettiTable) -> list[tuple[int, int, int]]:
    """Positions ``(l, m)`` of the extremal numbers ``beta_{l, l+m}`` with their values.

    ``beta_{l, l+m}`` is extremal when it is nonzero and every other
    ``beta_{i, i+j}`` with ``i >= l`` and ``j >= m`` vanishes.
    """
    nonzero = [(i, j - i, v) for (i, j), v in table.beta.items() if v]
    out = []
    for l, m, v in nonzero:
        if not any(i >= l and j >= m and (i, j) != (l, m) for i, j, _ in nonzero):
            out.append((l, m, v))
    return sorted(out)


def l_regularity(table: BettiTable, l: int):
    """``max{b_i - i : i >= l}``."""
    return max((table.b(i) - i for i in range(l, table.length)), default=NEG_INF)
