"""Generic initial ideals by random change of coordinates.

Seeding: trial ``k`` of a run with master seed ``s`` uses the integer
seed ``derive_seed(s, k, salt)``, the first eight bytes (big endian) of
``sha256(f"{salt}:{s}:{k}")``.  That seed initializes
:class:`random.Random` (Mersenne Twister), and matrix entries are drawn
row by row with ``randint(-bound, bound)``.  A draw with a zero entry or a
vanishing determinant is discarded and the next matrix is drawn from the
same stream.  Zero entries are rejected because sparse inputs meet the
non-generic locus there far more often than anywhere else: a zero in the
first column already kills the leading coefficient of ``x1^d``.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import BorelCheckFailed, GinUnstable, NotHomogeneous
from .groebner import initial_ideal
from .monomial_ideal import MonomialIdeal, is_borel_fixed
from .poly import Polynomial, TermOrder, apply_linear_substitution

DEFAULT_TRIALS = 5
DEFAULT_BOUND = 100


def derive_seed(seed: int, trial: int, salt: str = "gin") -> int:
    digest = hashlib.sha256(f"{salt}:{seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def determinant(matrix: Sequence[Sequence[int]]) -> Fraction:
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def random_coordinate_change(n: int, seed: int, bound: int = DEFAULT_BOUND, characteristic: int = 0) -> list[list[int]]:
    """Invertible ``n x n`` integer matrix with nonzero entries in ``[-bound, bound]``."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = random.Random(seed)
    while True:
        g = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if any(v == 0 for row in g for v in row):
            continue
        det = determinant(g)
        if characteristic:
            if det.numerator % characteristic:
                return g
        elif det:
            return g


def check_homogeneous(F: Sequence[Polynomial]) -> None:
    for f in F:
        if not f.homogeneous:
            raise NotHomogeneous(f"not homogeneous: {f}")


@dataclass(frozen=True)
class GinResult:
    gin: MonomialIdeal
    order: TermOrder
    trials: int
    seed: int
    seeds_used: tuple[int, ...]
    agreement: bool
    matrices: tuple = field(repr=False, default=())
    borel_fixed: bool | None = None


def transformed_initial_ideal(F: Sequence[Polynomial], matrix, order: TermOrder) -> MonomialIdeal:
    return initial_ideal([apply_linear_substitution(f, matrix) for f in F], order)


def gin(
    F: Sequence[Polynomial],
    order: TermOrder | str = TermOrder.DEGREVLEX,
    trials: int = DEFAULT_TRIALS,
    seed: int = 42,
    bound: int = DEFAULT_BOUND,
    salt: str = "gin",
) -> GinResult:
    """Generic initial ideal of ``(F)``, certified by agreement across trials.

    Raises:
        GinUnstable: the trials produced different initial ideals.
        BorelCheckFailed: (characteristic 0) the agreed ideal is not Borel-fixed.
    """
    order = TermOrder.parse(order)
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("gin of the zero ideal")
    if trials < 1:
        raise ValueError("need at least one trial")
    check_homogeneous(F)
    ring = F[0].ring
    seeds = tuple(derive_seed(seed, k, salt) for k in range(trials))
    matrices = tuple(random_coordinate_change(ring.n, s, bound, ring.characteristic) for s in seeds)
    results = [transformed_initial_ideal(F, g, order) for g in matrices]
    first = results[0]
    if any(r != first for r in results[1:]):
        distinct = sorted({str(r) for r in results})
        raise GinUnstable(
            f"{trials} trials gave {len(distinct)} different initial ideals: {', '.join(distinct)}; "
            "raise --coeff-bound or --trials"
        )
    borel = None
    if ring.characteristic == 0:
        borel = is_borel_fixed(first)
        if not borel:
            raise BorelCheckFailed(f"agreed initial ideal {first} is not Borel-fixed; raise --coeff-bound")
    return GinResult(first, order, trials, seed, seeds, True, matrices, borel)
