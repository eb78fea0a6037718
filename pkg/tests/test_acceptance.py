"""Acceptance checks; each prints one PASS/FAIL line.

Run ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import os
import subprocess
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ginkit.betti import profiles_from_betti  # noqa: E402
from ginkit.corpus import borel_corpus, homogeneous_corpus, monomial_corpus  # noqa: E402
from ginkit.gin import derive_seed, gin, random_coordinate_change  # noqa: E402
from ginkit.groebner import initial_ideal  # noqa: E402
from ginkit.monomial_ideal import (  # noqa: E402
    MonomialIdeal,
    colon_by_variable,
    delta_profile,
    delta_profile_bruteforce,
    hf,
    krull_dimension,
    restrict_below,
)
from ginkit.poly import TermOrder, apply_linear_substitution  # noqa: E402
from ginkit.profiles import profiles_borel, profiles_colon  # noqa: E402
from ginkit.reduction import bh_reduction, direct_reduction_degree, reduction_number  # noqa: E402
from ginkit.slices import DegreeSlices, colon_slice_equalities  # noqa: E402

from _util import GIN_LEX, WORKED_EXAMPLE, ideal, worked_example  # noqa: E402

CORPUS_SEED = 2024


def _line(number, ok, detail, elapsed):
    status = "PASS" if ok else "FAIL"
    return f"[{status}] criterion {number}: {detail} ({elapsed:.2f} s)"


@pytest.fixture
def emit(capsys):
    def _emit(number, ok, detail, elapsed):
        with capsys.disabled():
            print("\n" + _line(number, ok, detail, elapsed))
        assert ok, detail

    return _emit


def check_worked_example_example():
    t0 = time.perf_counter()
    F = worked_example()
    target = MonomialIdeal(3, GIN_LEX)
    panel = [gin(F, TermOrder.LEX, seed=s).gin == target for s in range(10)]
    red = reduction_number(F)
    lex = gin(F, TermOrder.LEX).gin
    bh = bh_reduction(lex, 1).r
    prof = profiles_colon(lex)
    elapsed = time.perf_counter() - t0
    ok = all(panel) and red.r == 2 and bh == 3 and prof.reg_full == 3 and prof.reg_q[0] == 2 and elapsed < 5
    detail = (
        f"lex gin stable on {sum(panel)}/10 seeds, r(S/I) = {red.r}, r(S/gin_lex) = {bh}, "
        f"reg = {prof.reg_full}, reg_0 = {prof.reg_q[0]}"
    )
    return ok, detail, elapsed


def check_reduction_routes():
    t0 = time.perf_counter()
    corpus = homogeneous_corpus(50, seed=CORPUS_SEED)
    agree = 0
    for k, F in enumerate(corpus):
        g = random_coordinate_change(3, derive_seed(42, k, "acceptance"), 100)
        direct = direct_reduction_degree([apply_linear_substitution(f, g) for f in F])
        J = gin(F, TermOrder.DEGREVLEX).gin
        bh = bh_reduction(J, krull_dimension(J))
        agree += (direct.d, direct.r) == (bh.d, bh.r)
    elapsed = time.perf_counter() - t0
    ok = agree == len(corpus) and elapsed < 60
    return ok, f"direct route = gin criterion on {agree}/{len(corpus)} ideals", elapsed


def check_route_agreement():
    t0 = time.perf_counter()
    corpus = borel_corpus(60)
    agree = 0
    for J in corpus:
        c, b, e = profiles_colon(J), profiles_borel(J), profiles_from_betti(J)
        agree += c.same_values(b) and c.same_values(e)
    elapsed = time.perf_counter() - t0
    ok = agree == len(corpus) and elapsed < 60
    return ok, f"colon = Borel = Betti profiles on {agree}/{len(corpus)} Borel-fixed ideals", elapsed


def check_colon_slices():
    t0 = time.perf_counter()
    corpus = homogeneous_corpus(50, seed=CORPUS_SEED)
    total = mismatched = 0
    for F in corpus:
        J = initial_ideal(F, TermOrder.DEGREVLEX)
        for i in range(1, J.n + 1):
            lin = colon_slice_equalities(F, i, 10)
            Ji = restrict_below(J, i)
            Ki = colon_by_variable(Ji, i)
            mono = [hf(Ki, m) == hf(Ji, m) for m in range(11)]
            total += len(lin)
            mismatched += sum(a != b for a, b in zip(lin, mono))
    elapsed = time.perf_counter() - t0
    return mismatched == 0, f"colon slice equality for I iff for in(I): {total - mismatched}/{total} (i, m) pairs", elapsed


def check_hilbert_invariance():
    t0 = time.perf_counter()
    corpus = homogeneous_corpus(50, seed=CORPUS_SEED)
    good = 0
    for F in corpus:
        J = initial_ideal(F, TermOrder.DEGREVLEX)
        sl = DegreeSlices(F)
        good += all(hf(J, m) == sl.quotient_dim(m) for m in range(11))
    elapsed = time.perf_counter() - t0
    return good == len(corpus), f"hf(in(I), m) = dim (S/I)_m for m <= 10 on {good}/{len(corpus)} ideals", elapsed


def check_delta_oracle():
    t0 = time.perf_counter()
    corpus = monomial_corpus(120)
    good = sum(delta_profile(J) == delta_profile_bruteforce(J) for J in corpus)
    infinite = sum(not delta_profile(J).filter_regular for J in corpus)
    elapsed = time.perf_counter() - t0
    ok = good == len(corpus) and len(corpus) >= 100 and infinite >= 5
    return ok, f"delta profile = enumeration oracle on {good}/{len(corpus)} ideals, {infinite} with an infinite entry", elapsed


def check_principal_family():
    t0 = time.perf_counter()
    good = 0
    for d in range(1, 7):
        J = MonomialIdeal(1, [(d,)])
        routes = [profiles_colon(J), profiles_borel(J), profiles_from_betti(J)]
        ok_routes = all(p.reg_full == d - 1 and p.astar_full == d - 1 for p in routes)
        ok_gin = profiles_colon(gin(ideal(f"x1^{d}", n=1)).gin).reg_full == d - 1
        r = reduction_number(ideal(f"x1^{d}", n=3)).r
        good += ok_routes and ok_gin and r == d - 1
    elapsed = time.perf_counter() - t0
    return good == 6, f"reg = a* = r = d - 1 by every route for {good}/6 exponents d", elapsed


def check_cli_determinism(tmpdir):
    t0 = time.perf_counter()
    path = os.path.join(tmpdir, "ideal.txt")
    with open(path, "w") as fh:
        fh.write(WORKED_EXAMPLE)
    outs = []
    for _ in range(2):
        proc = subprocess.run(
            [sys.executable, "-m", "ginkit", "report", path, "--seed", "7", "--format", "json"],
            capture_output=True,
        )
        outs.append((proc.returncode, proc.stdout))
    elapsed = time.perf_counter() - t0
    ok = outs[0] == outs[1] and outs[0][0] == 0 and len(outs[0][1]) > 0
    return ok, f"two CLI report runs byte-identical ({len(outs[0][1])} bytes)", elapsed


def test_criterion_1_worked_example_example(emit):
    emit(1, *check_worked_example_example())


def test_criterion_2_reduction_routes(emit):
    emit(2, *check_reduction_routes())


def test_criterion_3_route_agreement(emit):
    emit(3, *check_route_agreement())


def test_criterion_4_colon_slices(emit):
    emit(4, *check_colon_slices())


def test_criterion_5_hilbert_invariance(emit):
    emit(5, *check_hilbert_invariance())


def test_criterion_6_delta_oracle(emit):
    emit(6, *check_delta_oracle())


def test_criterion_7_principal_family(emit):
    emit(7, *check_principal_family())


def test_criterion_8_cli_determinism(emit, tmp_path):
    emit(8, *check_cli_determinism(str(tmp_path)))


if __name__ == "__main__":
    import tempfile

    checks = [
        check_worked_example_example,
        check_reduction_routes,
        check_route_agreement,
        check_colon_slices,
        check_hilbert_invariance,
        check_delta_oracle,
        check_principal_family,
    ]
    results = [fn() for fn in checks]
    with tempfile.TemporaryDirectory() as tmp:
        results.append(check_cli_determinism(tmp))
    for k, res in enumerate(results, start=1):
        print(_line(k, *res))
    sys.exit(0 if all(ok for ok, _, _ in results) else 1)
