"""Full invariant pipeline: gin, three profile routes, Betti table, reduction number."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .betti import BettiTable, ek_betti, extremal_betti, profiles_from_betti
from .errors import NoPower
from .gin import DEFAULT_BOUND, DEFAULT_TRIALS, GinResult, check_homogeneous, gin
from .monomial_ideal import DeltaProfile, MonomialIdeal, delta_profile, hf, is_borel_fixed, krull_dimension
from .poly import Polynomial, Ring, TermOrder
from .profiles import InvariantProfile, profiles_borel, profiles_colon
from .reduction import ReductionResult, bh_reduction
from .slices import DegreeSlices

DEFAULT_MAX_DEGREE = 12


@dataclass(frozen=True)
class ReportConfig:
    order: TermOrder = TermOrder.DEGREVLEX
    trials: int = DEFAULT_TRIALS
    seed: int = 42
    bound: int = DEFAULT_BOUND
    use_gin: bool = True
    max_degree: int = DEFAULT_MAX_DEGREE


@dataclass
class InvariantReport:
    ring: Ring
    config: ReportConfig
    gin: MonomialIdeal
    gin_result: GinResult | None
    dimension: int
    delta: DeltaProfile
    colon: InvariantProfile
    borel: InvariantProfile | None = None
    betti_profile: InvariantProfile | None = None
    betti: BettiTable | None = None
    extremal: list | None = None
    reduction: ReductionResult | None = None
    hilbert: dict | None = None
    routes_agree: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)


def monomial_input(F: Sequence[Polynomial]) -> MonomialIdeal:
    """The monomial ideal generated by ``F``; every element must be a single term."""
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("empty ideal")
    if not all(f.is_monomial() for f in F):
        raise ValueError("--no-gin needs every generator to be a monomial")
    return MonomialIdeal(F[0].ring, [next(iter(f.monomials())) for f in F])


def invariant_report(F: Sequence[Polynomial], config: ReportConfig = ReportConfig()) -> InvariantReport:
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("empty ideal")
    check_homogeneous(F)
    ring = F[0].ring
    timings = {}

    t0 = time.perf_counter()
    gres = None
    if config.use_gin:
        gres = gin(F, config.order, config.trials, config.seed, config.bound)
        J = gres.gin
    else:
        J = monomial_input(F)
    timings["gin"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    d = krull_dimension(J)
    delta = delta_profile(J)
    colon = profiles_colon(J)
    timings["colon"] = time.perf_counter() - t0

    rep = InvariantReport(ring, config, J, gres, d, delta, colon, timings=timings)

    t0 = time.perf_counter()
    if ring.characteristic:
        reason = "not applicable: characteristic is not 0"
        rep.notes["borel"] = rep.notes["betti"] = reason
    elif not is_borel_fixed(J):
        reason = "not applicable: ideal is not Borel-fixed"
        rep.notes["borel"] = rep.notes["betti"] = reason
    else:
        rep.borel = profiles_borel(J)
        rep.betti_profile = profiles_from_betti(J)
        rep.betti = ek_betti(J).quotient()
        rep.extremal = extremal_betti(rep.betti)
    timings["borel_betti"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if d < J.n:
        try:
            rep.reduction = bh_reduction(J, d)
        except NoPower as exc:
            rep.notes["reduction_number"] = f"not applicable: {exc}"
    timings["reduction"] = time.perf_counter() - t0

    if config.use_gin:
        t0 = time.perf_counter()
        sl = DegreeSlices(F)
        lhs = [sl.quotient_dim(m) for m in range(config.max_degree + 1)]
        rhs = [hf(J, m) for m in range(config.max_degree + 1)]
        rep.hilbert = {"input": lhs, "gin": rhs}
        rep.routes_agree["hilbert"] = lhs == rhs
        timings["hilbert"] = time.perf_counter() - t0

    rep.routes_agree["borel"] = None if rep.borel is None else rep.borel.same_values(colon)
    rep.routes_agree["betti"] = None if rep.betti_profile is None else rep.betti_profile.same_values(colon)
    rep.routes_agree["all"] = all(v is not False for v in rep.routes_agree.values())
    return rep
