"""Seeded generators for the test corpora.

Each function is a pure function of its ``seed`` so that the property and
acceptance suites always see the same ideals.
"""

from __future__ import annotations

import random

from .monomial_ideal import MonomialIdeal, borel_closure, monomials_of_degree
from .poly import Polynomial, Ring


def random_homogeneous_ideal(
    rng: random.Random,
    n: int = 3,
    max_gens: int = 3,
    max_degree: int = 3,
    max_terms: int = 4,
    coeff_range: int = 3,
) -> list[Polynomial]:
    ring = Ring.standard(n)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_degree)
        monos = list(monomials_of_degree(n, d))
        k = rng.randint(1, min(max_terms, len(monos)))
        terms = {}
        for m in rng.sample(monos, k):
            c = 0
            while c == 0:
                c = rng.randint(-coeff_range, coeff_range)
            terms[m] = c
        gens.append(Polynomial(ring, terms))
    return gens


def homogeneous_corpus(size: int = 50, seed: int = 2024, **kwargs) -> list[list[Polynomial]]:
    rng = random.Random(seed)
    return [random_homogeneous_ideal(rng, **kwargs) for _ in range(size)]


def random_monomial_ideal(rng: random.Random, n: int, max_gens: int = 4, max_degree: int = 4) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_degree)
        gens.append(rng.choice(list(monomials_of_degree(n, d))))
    return MonomialIdeal(n, gens)


def monomial_corpus(size: int = 120, seed: int = 7, max_n: int = 4, max_degree: int = 4) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_monomial_ideal(rng, rng.randint(1, max_n), max_degree=max_degree) for _ in range(size)]


def borel_corpus(size: int = 60, seed: int = 11, max_n: int = 4, max_degree: int = 5, max_seeds: int = 3) -> list[MonomialIdeal]:
    """Borel closures of a few random monomials."""
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        n = rng.randint(1, max_n)
        seeds = []
        for _ in range(rng.randint(1, max_seeds)):
            d = rng.randint(1, max_degree)
            seeds.append(rng.choice(list(monomials_of_degree(n, d))))
        out.append(borel_closure(seeds, n))
    return out
