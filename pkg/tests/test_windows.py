"""Finite windows: shifts at big offsets, densities, good starts, embedding."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import random_set
from ultraperiodic import profinite as pf
from ultraperiodic import semilinear as sl
from ultraperiodic import windows as wd
from ultraperiodic.errors import PreconditionViolated
from ultraperiodic.profinite import ProfinitePoint

EVENS = sl.residues({0}, 2)
ODDS = sl.residues({1}, 2)
MOD3 = sl.residues({0}, 3)


# -- windows and finite shifts -------------------------------------------------


def test_window_of_examples():
    w = wd.window_of(wd.from_semilinear(EVENS), 0, 4)
    assert w.bits == (True, False, True, False)
    blocks = wd.squares_blocks()
    assert wd.window_of(blocks, 100, 5).bits == (True,) * 5
    assert wd.window_of(blocks, 121, 5).bits == (False,) * 5


def test_finite_hyper_shift_examples():
    g = 10 ** 6 + 1
    w = wd.finite_hyper_shift(wd.from_semilinear(MOD3), g, 6)
    expected = pf.hyper_shift(MOD3, ProfinitePoint(3, g % 3))
    assert w.bits == tuple(sl.member(expected, n) for n in range(6))
    assert w.bits == tuple((g + n) % 3 == 0 for n in range(6))
    blocks = wd.squares_blocks()
    assert wd.finite_hyper_shift(blocks, 100, 21).bits == (True,) * 21
    assert wd.finite_hyper_shift(blocks, 121, 21).bits == (False,) * 21


def test_finite_hyper_shift_bridges_to_profinite():
    rng = random.Random(3)
    for _ in range(100):
        a = random_set(rng)
        m = a.period * rng.randint(1, 3)
        r = rng.randrange(m)
        g = r + m * 10 ** 6
        w = wd.finite_hyper_shift(wd.from_semilinear(a), g, 120)
        shifted = pf.hyper_shift(a, ProfinitePoint(m, r))
        assert w.bits == tuple(sl.member(shifted, n) for n in range(120))


def test_predicates_accept_big_integers():
    blocks = wd.squares_blocks()
    nu = 10 ** 30
    assert blocks(nu * nu)
    assert not blocks((nu + 1) * (nu + 1))
    assert wd.triadic_val_ge(40)(3 ** 41)
    assert wd.triadic_unit(2)(3 ** 50 * (3 ** 20 + 2))


# -- window densities ----------------------------------------------------------


def test_window_banach_examples():
    evens100 = wd.window_of(wd.from_semilinear(EVENS), 0, 100)
    assert wd.window_banach(evens100, 2) == Fraction(1, 2)
    solid = wd.WindowSet(0, (True,) * 8)
    assert wd.window_banach(solid, 5) == 1
    w = wd.WindowSet(0, (True, True, False, False, True, True, False, False))
    assert wd.window_banach(w, 2) == 1
    with pytest.raises(PreconditionViolated):
        wd.window_banach(w, 9)


def test_window_banach_counts_are_subadditive():
    rng = random.Random(5)
    for _ in range(50):
        bits = tuple(rng.random() < rng.choice((0.3, 0.6)) for _ in range(60))
        w = wd.WindowSet(0, bits)
        for n in range(1, 30):
            for m in range(1, 30):
                if n + m <= w.length:
                    assert wd.window_banach(w, n + m) * (n + m) <= \
                        wd.window_banach(w, n) * n + wd.window_banach(w, m) * m


# -- good starts -----------------------------------------------------------------


def brute_good_starts(w, nu):
    return [g for g in range(w.length - nu + 1) if wd.good_start_ok(w, nu, g)]


def test_good_start_examples():
    evens_1_100 = wd.WindowSet(1, tuple(n % 2 == 0 for n in range(1, 101)))
    gamma = wd.good_start(evens_1_100, 5)
    assert gamma % 2 == 1  # starts on an even value, i.e. odd offset in [1,100]
    assert wd.good_start_ok(evens_1_100, 5, gamma)
    solid = wd.WindowSet(0, (True,) * 40)
    assert wd.good_start(solid, 10) == 0
    gappy = wd.WindowSet(0, (False,) * 12 + (True, False) * 24)
    gamma = wd.good_start(gappy, 4)
    assert gamma >= 12
    assert wd.good_start_ok(gappy, 4, gamma)


def test_good_start_precondition():
    sparse = wd.WindowSet(0, (True,) + (False,) * 99)
    with pytest.raises(PreconditionViolated):
        wd.good_start(sparse, 10)  # density 1/100 <= nu/N = 1/10
    with pytest.raises(PreconditionViolated):
        wd.good_start(sparse, 0)


def test_good_start_randomized_against_brute_force():
    rng = random.Random(7)
    found = 0
    for _ in range(60):
        n = rng.randint(40, 120)
        nu = rng.randint(2, 8)
        bits = tuple(rng.random() < rng.choice((0.2, 0.5, 0.8)) for _ in range(n))
        w = wd.WindowSet(0, bits)
        if w.density() <= Fraction(nu, n):
            continue
        gamma = wd.good_start(w, nu)
        assert gamma in brute_good_starts(w, nu)
        found += 1
    assert found > 30


# -- exact embedding -------------------------------------------------------------


def test_exact_embed_window_examples():
    odds_p, evens_p = wd.from_semilinear(ODDS), wd.from_semilinear(EVENS)
    x = wd.exact_embed_window(odds_p, evens_p, (1, 6), (0, 20))
    assert x is not None and x % 2 == 1
    full = wd.from_semilinear(sl.FULL)
    assert wd.exact_embed_window(full, full, (1, 9), (0, 5)) == 0
    x = wd.exact_embed_window(evens_p, evens_p, (1, 4), (0, 20))
    assert x is not None and x % 2 == 0


def test_exact_embed_decide_examples():
    got = wd.exact_embed_decide(ODDS, EVENS)
    assert got is not None
    assert wd.exact_embed_decide(EVENS, sl.FULL) is None
    rng = random.Random(11)
    for _ in range(40):
        a = random_set(rng)
        got = wd.exact_embed_decide(a, a)
        assert got == wd.EmbedWitness("shift", 0)


def test_exact_embed_decide_witnesses_check_out():
    rng = random.Random(13)
    for _ in range(150):
        a, b = random_set(rng, max_period=8, max_threshold=12), None
        b = random_set(rng, max_period=8, max_threshold=12)
        got = wd.exact_embed_decide(a, b)
        if got is None:
            continue
        if got.kind == "shift":
            assert sl.shift_left(b, got.value) == a
        else:
            assert pf.hyper_shift(b, ProfinitePoint(b.period, got.value)) == a


def test_exact_embed_decide_cross_validates_with_window_search():
    # one interval long enough to pin both tails decides the whole relation:
    # agreement on [0, n*] forces A = B - x, and conversely any witness kind
    # produces an x for it
    rng = random.Random(17)
    both = [0, 0]
    for i in range(80):
        b = random_set(rng, max_period=6, max_threshold=8)
        if i % 2:
            a = random_set(rng, max_period=6, max_threshold=8)
        else:  # plant a genuine embedding half the time
            a = sl.shift_left(b, rng.randint(0, b.threshold + 2 * b.period))
        decided = wd.exact_embed_decide(a, b) is not None
        pa, pb = wd.from_semilinear(a), wd.from_semilinear(b)
        n_star = max(a.threshold, b.threshold) + 2 * a.period * b.period + 1
        hi = b.threshold + 2 * a.period * b.period + 4
        found = wd.exact_embed_window(pa, pb, (0, n_star), (0, hi)) is not None
        assert decided == found
        both[decided] += 1
    assert min(both) > 5  # the sample exercises both outcomes


def test_banach_density_monotone_under_embedding():
    rng = random.Random(19)
    hits = 0
    for _ in range(300):
        a = random_set(rng, max_period=6, max_threshold=8)
        b = random_set(rng, max_period=6, max_threshold=8)
        if wd.exact_embed_decide(b, a) is not None:
            assert sl.banach(b) <= sl.banach(a)
            hits += 1
    assert hits > 10


# -- noncommutativity demo --------------------------------------------------------


def test_noncomm_demo_examples():
    report = wd.noncomm_demo(10, 21)
    assert report.even_origin == 100 and report.odd_origin == 121
    assert report.even_all_true and report.odd_all_false
    small = wd.noncomm_demo(2, 5)
    assert small.even_all_true and small.odd_all_false
    with pytest.raises(PreconditionViolated):
        wd.noncomm_demo(7, 21)
