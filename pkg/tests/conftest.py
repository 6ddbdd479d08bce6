"""Shared generators and independent oracles for the suite.

Randomized checks use explicit seeded Random instances so failures are
reproducible.  The oracles here re-derive membership from raw field
semantics on purpose; they must stay independent of the canonicalizing
code paths they check.
"""

from __future__ import annotations

import random
from math import lcm

from ultraperiodic import semilinear as sl
from ultraperiodic.profinite import ProfinitePoint


def raw_member(threshold, period, pattern, exceptional, n):
    """Field semantics of an eventually periodic set, no normalization."""
    if n < threshold:
        return n in exceptional
    return n % period in pattern


def members_upto(a, hi):
    """Membership bitmap of a set on [0, hi)."""
    return [sl.member(a, n) for n in range(hi)]


def random_set(rng: random.Random, max_period=36, max_threshold=50) -> sl.SemilinearSet:
    p = rng.randint(1, max_period)
    fill = rng.choice((0.15, 0.3, 0.5, 0.7, 0.9))
    pattern = [r for r in range(p) if rng.random() < fill]
    n0 = rng.randint(0, max_threshold)
    exceptional = [e for e in range(n0) if rng.random() < 0.3]
    return sl.make(n0, p, pattern, exceptional)


def random_point(rng: random.Random, *sets, factor_max=3) -> ProfinitePoint:
    """A point deep enough for every given set's period."""
    base = lcm(*(a.period for a in sets)) if sets else 1
    modulus = base * rng.randint(1, factor_max)
    return ProfinitePoint(modulus, rng.randrange(modulus))


EXPR_ATOMS = ["0%2", "1%3", "{0,5,9}", "[2,7)", "N", "0", "{4}"]


def random_expr_text(rng: random.Random, depth=3) -> str:
    """Random well-formed scalar expression text for fuzzing the parser."""
    if depth == 0 or rng.random() < 0.35:
        return rng.choice(EXPR_ATOMS)
    kind = rng.randrange(5)
    if kind == 0:
        return f"!({random_expr_text(rng, depth - 1)})"
    if kind == 1:
        return f"({random_expr_text(rng, depth - 1)}) << {rng.randint(0, 6)}"
    if kind == 2:
        return f"({random_expr_text(rng, depth - 1)}) >> {rng.randint(0, 6)}"
    op = "&" if kind == 3 else "|"
    return (f"({random_expr_text(rng, depth - 1)}) {op} "
            f"({random_expr_text(rng, depth - 1)})")
