"""Finite combinatorics: colorings, Schur/Rado, finite sums, 3-adic arithmetic."""

from __future__ import annotations

import random
import time
from itertools import combinations, product

import pytest

from ultraperiodic import ramsey as rm
from ultraperiodic.errors import (BudgetExceeded, FixedPointPresent, NotFound,
                                  PreconditionViolated, TooLarge,
                                  TooManyCoefficients)

SCHUR = rm.LinearEquation((1, 1, -1))
XMINUSY = rm.LinearEquation((1, -1, -1))
SUM_TO_TRIPLE = rm.LinearEquation((1, 1, -3))

# 2-coloring of [1,8] with no monochromatic x + y = 3z; the equation fails
# the coefficient criterion, and exhaustive search shows no such coloring
# survives past 8 (every 2-coloring of [1,9] contains a solution).
AVOIDS_SUM_TO_TRIPLE_8 = rm.Coloring((1, 2, 1, 1, 2, 2, 1, 2))

# the classic Schur-avoiding split {1,4} / {2,3} of [1,4]
SCHUR_AVOIDER_4 = rm.Coloring((1, 2, 2, 1))


def random_graph(rng: random.Random, n: int) -> rm.FunctionalGraph:
    succ = [0] * n
    for i in range(n):
        j = rng.randrange(n - 1)
        succ[i] = j if j < i else j + 1
    return rm.FunctionalGraph(tuple(succ))


# -- three_color ---------------------------------------------------------------


def test_three_color_two_cycle():
    g = rm.FunctionalGraph((1, 0))
    chi = rm.three_color(g)
    assert rm.verify_coloring(g, chi)
    assert len(set(chi.colors)) == 2


def test_three_color_odd_cycle_needs_three_colors():
    g = rm.FunctionalGraph((1, 2, 0))
    chi = rm.three_color(g)
    assert rm.verify_coloring(g, chi)
    # no proper 2-coloring of an odd cycle exists
    for bits in product((1, 2), repeat=3):
        assert any(bits[v] == bits[w] for v, w in enumerate(g.successors))


def test_three_color_random_graphs():
    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 400))
        assert rm.verify_coloring(g, rm.three_color(g))


def test_three_color_large_graph_is_fast():
    rng = random.Random(5)
    g = random_graph(rng, 100_000)
    start = time.perf_counter()
    chi = rm.three_color(g)
    elapsed = time.perf_counter() - start
    assert rm.verify_coloring(g, chi)
    assert elapsed < 1.0


def test_fixed_point_rejected():
    with pytest.raises(FixedPointPresent):
        rm.FunctionalGraph((0, 0))


def test_verify_coloring_examples():
    g = rm.FunctionalGraph((1, 0))
    assert rm.verify_coloring(g, rm.Coloring((1, 2)))
    assert not rm.verify_coloring(g, rm.Coloring((1, 1)))
    assert rm.verify_coloring(rm.FunctionalGraph((1, 2, 0)), rm.Coloring((1, 2, 3)))
    with pytest.raises(ValueError):
        rm.verify_coloring(g, rm.Coloring((1, 2, 3)))


# -- Rado's single-equation criterion --------------------------------------------


def test_rado_examples():
    assert rm.rado_single_pr(XMINUSY)
    assert not rm.rado_single_pr(SUM_TO_TRIPLE)
    assert rm.rado_single_pr(rm.LinearEquation((2, -2)))


def test_rado_matches_naive_subset_enumeration():
    rng = random.Random(7)
    for _ in range(200):
        k = rng.randint(2, 10)
        cs = tuple(rng.choice([c for c in range(-6, 7) if c]) for _ in range(k))
        eq = rm.LinearEquation(cs)
        naive = any(sum(sub) == 0
                    for r in range(1, k + 1)
                    for sub in combinations(cs, r))
        assert rm.rado_single_pr(eq) == naive


def test_rado_guard():
    with pytest.raises(TooManyCoefficients):
        rm.rado_single_pr(rm.LinearEquation((1,) * 26))


# curated equations: each PR-true one carries a finite certificate size,
# each PR-false one an avoiding 2-coloring fixture at small n
CURATED = [
    (SCHUR, True, (5, 2), None),
    (XMINUSY, True, (5, 2), None),
    (rm.LinearEquation((2, -2)), True, (1, 2), None),
    (SUM_TO_TRIPLE, False, None, AVOIDS_SUM_TO_TRIPLE_8),
    (rm.LinearEquation((1, 1, 2)), False, None, rm.Coloring((1, 2) * 5)),
]


def test_curated_equation_fixtures():
    for eq, regular, certificate, avoider in CURATED:
        assert rm.rado_single_pr(eq) == regular
        if regular:
            n, r = certificate
            assert rm.exhaustive_pr_check(eq, n, r)
        else:
            assert rm.find_mono_solution(eq, avoider) is None


# -- monochromatic solutions ------------------------------------------------------


def test_find_mono_solution_examples():
    got = rm.find_mono_solution(XMINUSY, rm.Coloring((1, 1, 1)))
    assert got is not None
    values, color = got
    assert color == 1
    assert values[0] - values[1] - values[2] == 0
    assert rm.find_mono_solution(SCHUR, SCHUR_AVOIDER_4) is None
    assert rm.find_mono_solution(SCHUR, rm.Coloring(())) is None


def test_stored_avoiding_fixture_for_non_regular_equation():
    assert rm.find_mono_solution(SUM_TO_TRIPLE, AVOIDS_SUM_TO_TRIPLE_8) is None
    # and the window cannot be extended: [1,9] forces a solution in 2 colors
    for bits in product((1, 2), repeat=8):
        chi = rm.Coloring((1,) + bits)
        assert rm.find_mono_solution(SUM_TO_TRIPLE, chi) is not None


# -- exhaustive partition-regularity certificates ----------------------------------


def brute_force_forced(eq: rm.LinearEquation, n: int, r: int) -> bool:
    """Unpruned enumeration of all r^n colorings."""
    return all(
        rm.find_mono_solution(eq, rm.Coloring(bits)) is not None
        for bits in product(range(1, r + 1), repeat=n))


def test_schur_certificate():
    assert rm.exhaustive_pr_check(SCHUR, 5, 2)
    assert brute_force_forced(SCHUR, 5, 2)
    assert not rm.exhaustive_pr_check(SCHUR, 4, 2)
    assert not brute_force_forced(SCHUR, 4, 2)


def test_exhaustive_pr_check_trivia():
    # 1*x + 1*x... at n=1, r=1: decided by whether (1,...,1) solves
    assert rm.exhaustive_pr_check(rm.LinearEquation((1, -1)), 1, 1)
    assert not rm.exhaustive_pr_check(rm.LinearEquation((1, 1)), 1, 1)
    with pytest.raises(BudgetExceeded):
        rm.exhaustive_pr_check(SCHUR, 40, 3)


# -- finite sums --------------------------------------------------------------------


def brute_fs(xs) -> frozenset:
    elems = sorted(set(xs))
    out = set()
    for r in range(1, len(elems) + 1):
        for sub in combinations(elems, r):
            out.add(sum(sub))
    return frozenset(out)


def test_fs_examples():
    assert rm.fs({1, 2, 4}) == frozenset(range(1, 8))
    assert rm.fs({9}) == frozenset({9})
    assert rm.fs({2, 3}) == frozenset({2, 3, 5})
    with pytest.raises(TooLarge):
        rm.fs(range(1, 25))


def test_fs_matches_brute_force():
    rng = random.Random(11)
    for _ in range(100):
        xs = {rng.randint(1, 60) for _ in range(rng.randint(1, 10))}
        assert rm.fs(xs) == brute_fs(xs)


def test_find_fs_set_examples():
    got = rm.find_fs_set(rm.Coloring((1,) * 7), 3)
    assert got == ((1, 2, 4), 1)
    assert rm.fs((1, 2, 4)) == frozenset(range(1, 8))
    got = rm.find_fs_set(rm.Coloring((1, 2) * 10), 1)
    assert got is not None and len(got[0]) == 1
    parity = rm.Coloring(tuple(1 + (n % 2 == 0) for n in range(1, 51)))
    got = rm.find_fs_set(parity, 3)
    assert got == ((2, 4, 8), 2)


def test_find_fs_set_witnesses_verify():
    rng = random.Random(13)
    found = 0
    for _ in range(50):
        n = rng.randint(10, 60)
        chi = rm.Coloring(tuple(rng.randint(1, 3) for _ in range(n)))
        got = rm.find_fs_set(chi, 3)
        if got is None:
            continue
        xs, color = got
        sums = rm.fs(xs)
        assert len(sums) == 7
        assert all(1 <= s <= n and chi.color(s) == color for s in sums)
        found += 1
    assert found > 20


# -- Gamma FIP witnesses ---------------------------------------------------------


def test_gamma_fip_examples():
    evens = frozenset(range(2, 101, 2))
    a, b = rm.gamma_fip_witness([evens], 100)
    assert (a, b) == (2, 4)
    a, b = rm.gamma_fip_witness([frozenset(range(1, 101))], 100)
    assert (a, b) == (1, 2)


def test_gamma_fip_random_families_verify():
    rng = random.Random(17)
    for _ in range(60):
        fam = [frozenset(x for x in range(1, 101) if rng.random() < 0.5)
               for _ in range(2)]
        a, b = rm.gamma_fip_witness(fam, 100)
        sig = tuple(a in s for s in fam)
        assert tuple(b in s for s in fam) == sig
        assert tuple((b - a) in s for s in fam) == sig


def test_gamma_fip_guards():
    with pytest.raises(PreconditionViolated):
        rm.gamma_fip_witness([frozenset()] * 4, 10)
    with pytest.raises(NotFound):
        rm.gamma_fip_witness([frozenset({1}), frozenset({2})], 2)


# -- 3-adic arithmetic -------------------------------------------------------------


def test_triadic_split_examples():
    assert rm.triadic_split(6) == (1, 2)
    assert rm.triadic_split(1) == (0, 1)
    assert rm.triadic_split(27) == (3, 1)
    with pytest.raises(ValueError):
        rm.triadic_split(0)


def test_star_obstruction_examples():
    report = rm.star_obstruction_check(3, 9)
    assert (report.val_diff, report.unit_diff) == (1, 2)
    assert report.valuation_preserved and report.unit_negated
    report = rm.star_obstruction_check(6, 27)
    assert (report.val_diff, report.unit_diff) == (1, 7)
    assert report.unit_negated  # 7 = -2 mod 3
    with pytest.raises(PreconditionViolated):
        rm.star_obstruction_check(3, 6)  # equal valuations
    with pytest.raises(PreconditionViolated):
        rm.star_obstruction_check(9, 3)


def test_star_obstruction_randomized_with_big_integers():
    rng = random.Random(19)
    for _ in range(300):
        va = rng.randint(0, 12)
        vb = rng.randint(va + 1, va + 10)
        ua = rng.choice((1, 2)) + 3 * rng.randint(0, 10 ** 12)
        ub = rng.choice((1, 2)) + 3 * rng.randint(0, 10 ** 12)
        a, b = 3 ** va * ua, 3 ** vb * ub
        if b <= a:
            continue
        report = rm.star_obstruction_check(a, b)
        assert report.val_diff == va
        assert (report.unit_diff + report.unit_a) % 3 == 0
