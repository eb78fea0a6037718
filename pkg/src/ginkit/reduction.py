"""Reduction numbers of ``S/I``.

Two routes are computed and compared: cutting by the last ``d`` variables
in random coordinates and reading the top degree of the artinian quotient
(``direct``), and the least power ``x_{n-d}^{r+1}`` in the degrevlex gin
(``bh``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import GinUnstable, NoPower, NotAReduction, RouteDisagreement
from .gin import DEFAULT_BOUND, DEFAULT_TRIALS, check_homogeneous, derive_seed, gin, random_coordinate_change
from .groebner import initial_ideal
from .monomial_ideal import (
    MonomialIdeal,
    _divide_one_minus_t,
    contains,
    hilbert_numerator,
    krull_dimension,
    monomials_of_degree,
    restrict_below,
)
from .poly import Polynomial, Ring, TermOrder, apply_linear_substitution, format_monomial


@dataclass(frozen=True)
class ReductionResult:
    d: int
    r: int
    route: str
    witness: str
    agreement: bool | None = None
    details: dict = field(default_factory=dict)
    ring: Ring | None = field(default=None, compare=False, repr=False)


def bh_reduction(J: MonomialIdeal, d: int) -> ReductionResult:
    """Least ``r`` with ``x_{n-d}^{r+1}`` in ``J``.

    Raises:
        NoPower: no power of ``x_{n-d}`` lies in ``J``.
    """
    n = J.n
    if not 0 <= d < n:
        raise ValueError(f"dimension {d} out of range for {n} variables")
    v = n - d - 1
    powers = [g[v] for g in J.gens if sum(g) == g[v]]
    if not powers:
        raise NoPower(f"no power of {J.ring.var_names[v]} lies in {J}")
    e = min(powers)
    witness = format_monomial(tuple(e if k == v else 0 for k in range(n)), J.ring.var_names)
    return ReductionResult(d, e - 1, "bh", witness, ring=J.ring)


def artinian_top_degree(J: MonomialIdeal) -> tuple[int, tuple]:
    """Top degree of ``S/J`` and one standard monomial there; ``J`` must be artinian."""
    n = J.n
    for v in range(n):
        if not any(sum(g) == g[v] for g in J.gens):
            raise NotAReduction(f"{J} has no power of {J.ring.var_names[v]}; quotient is not artinian")
    c = list(hilbert_numerator(J).coeffs)
    for _ in range(n):
        c = _divide_one_minus_t(c)
    top = len(c) - 1
    mono = next(m for m in monomials_of_degree(n, top) if not contains(J, m))
    return top, mono


def reduction_from_initial(J: MonomialIdeal) -> ReductionResult:
    """Direct route on an initial ideal: top degree of ``S/(J, x_n..x_{n-d+1})``."""
    d = krull_dimension(J)
    n = J.n
    if d >= n:
        raise NotAReduction("the zero ideal has no reduction number here")
    cut = restrict_below(J, n - d)
    top, mono = artinian_top_degree(cut)
    return ReductionResult(d, top, "direct", format_monomial(mono, cut.ring.var_names), ring=J.ring)


def direct_reduction_degree(F: Sequence[Polynomial], order: TermOrder | str = TermOrder.DEGREVLEX) -> ReductionResult:
    """Reduction number of ``(I, x_n, ..., x_{n-d+1})/I`` in the given coordinates.

    Raises:
        NotAReduction: the last ``d`` variables do not cut ``S/I`` down to
            finite length; the coordinates are not generic for ``I``.
    """
    check_homogeneous(F)
    return reduction_from_initial(initial_ideal(F, order))


def reduction_number(
    F: Sequence[Polynomial],
    trials: int = DEFAULT_TRIALS,
    seed: int = 42,
    bound: int = DEFAULT_BOUND,
) -> ReductionResult:
    """``r(S/I)`` by generic cuts, cross-checked against the gin criterion.

    Raises:
        GinUnstable: the direct route disagreed across trials.
        RouteDisagreement: direct and gin routes differ.
    """
    F = [f for f in F if not f.is_zero()]
    check_homogeneous(F)
    n = F[0].ring.n
    p = F[0].ring.characteristic
    direct = []
    for k in range(trials):
        g = random_coordinate_change(n, derive_seed(seed, k, "reduction"), bound, p)
        direct.append(direct_reduction_degree([apply_linear_substitution(f, g) for f in F]))
    values = sorted({(res.d, res.r) for res in direct})
    if len(values) > 1:
        raise GinUnstable(f"generic cuts disagree across {trials} trials: (d, r) in {values}")
    gres = gin(F, TermOrder.DEGREVLEX, trials, seed, bound)
    d = krull_dimension(gres.gin)
    bh = bh_reduction(gres.gin, d)
    if (bh.d, bh.r) != values[0]:
        raise RouteDisagreement(
            f"direct route gives (d, r) = {values[0]}, gin criterion gives {(bh.d, bh.r)}"
        )
    return ReductionResult(
        d,
        bh.r,
        "combined",
        bh.witness,
        True,
        {"direct_witness": direct[0].witness, "gin": gres.gin.to_strings()},
        ring=F[0].ring,
    )
