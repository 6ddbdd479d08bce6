"""Exact algebra of eventually periodic subsets of the naturals.

A set is stored as a finite exceptional part below a threshold plus a
residue pattern that decides membership from the threshold on.  All
constructors return the canonical representative (minimal period, then
minimal threshold), so two values denote the same subset of the naturals
exactly when they compare equal.  Densities are exact rationals; nothing
in this module touches floating point.

The naturals include 0 as a set element, while the density formulas count
over the window [1, n].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NoRotation


@dataclass(frozen=True)
class SemilinearSet:
    """Eventually periodic subset of the naturals, always canonical.

    Membership: n < threshold looks up the exceptional part, n >= threshold
    tests n mod period against the pattern.  Use the module constructors or
    make(); the raw dataclass constructor trusts its arguments.
    """

    threshold: int
    period: int
    pattern: frozenset[int]
    exceptional: frozenset[int]

    def __contains__(self, n: int) -> bool:
        return member(self, n)

    def is_empty(self) -> bool:
        return not self.pattern and not self.exceptional

    def is_full(self) -> bool:
        return self == FULL


def make(threshold: int, period: int, pattern, exceptional=()) -> SemilinearSet:
    """Build the canonical set from raw fields (bounds are validated)."""
    if period <= 0:
        raise ValueError("period must be >= 1")
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    pattern = frozenset(pattern)
    exceptional = frozenset(exceptional)
    if any(not 0 <= r < period for r in pattern):
        raise ValueError("pattern residues must lie in [0, period)")
    if any(not 0 <= e < threshold for e in exceptional):
        raise ValueError("exceptional elements must lie below the threshold")
    return _canonical(threshold, period, pattern, exceptional)


def normalize(threshold: int, period: int, pattern, exceptional=()) -> SemilinearSet:
    """Canonicalize raw fields; idempotent on already-canonical input."""
    return make(threshold, period, pattern, exceptional)


def _canonical(n0: int, p: int, pat: frozenset[int], exc: frozenset[int]) -> SemilinearSet:
    # Minimal period: smallest divisor d of p with pattern invariant under
    # rotation by d, i.e. the pattern is determined by residues mod d.
    for d in range(1, p + 1):
        if p % d:
            continue
        if all((r + d) % p in pat for r in pat):
            if d < p:
                pat = frozenset(r for r in pat if r < d)
                p = d
            break
    # Minimal threshold: pull n0 down while the boundary point is classified
    # identically by the exceptional part and by the pattern.
    exc = set(exc)
    while n0 > 0:
        b = n0 - 1
        if (b in exc) != (b % p in pat):
            break
        exc.discard(b)
        n0 = b
    return SemilinearSet(n0, p, pat, frozenset(exc))


EMPTY = SemilinearSet(0, 1, frozenset(), frozenset())
FULL = SemilinearSet(0, 1, frozenset({0}), frozenset())


def residues(pattern, period: int) -> SemilinearSet:
    """The union of residue classes {n : n mod period in pattern}."""
    return make(0, period, pattern)


def finite(elements) -> SemilinearSet:
    """The finite set with exactly the given elements."""
    elems = frozenset(elements)
    if not elems:
        return EMPTY
    return make(max(elems) + 1, 1, (), elems)


def interval(lo: int, hi: int) -> SemilinearSet:
    """Half-open interval [lo, hi) as a finite set."""
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    return finite(range(lo, hi))


def member(a: SemilinearSet, n: int) -> bool:
    if n < 0:
        return False
    if n < a.threshold:
        return n in a.exceptional
    return n % a.period in a.pattern


def _combine(a: SemilinearSet, b: SemilinearSet, op) -> SemilinearSet:
    p = lcm(a.period, b.period)
    n0 = max(a.threshold, b.threshold)
    pat = frozenset(r for r in range(p)
                    if op(r % a.period in a.pattern, r % b.period in b.pattern))
    exc = frozenset(n for n in range(n0) if op(member(a, n), member(b, n)))
    return _canonical(n0, p, pat, exc)


def union(a: SemilinearSet, b: SemilinearSet) -> SemilinearSet:
    return _combine(a, b, lambda x, y: x or y)


def intersect(a: SemilinearSet, b: SemilinearSet) -> SemilinearSet:
    return _combine(a, b, lambda x, y: x and y)


def complement(a: SemilinearSet) -> SemilinearSet:
    pat = frozenset(r for r in range(a.period) if r not in a.pattern)
    exc = frozenset(n for n in range(a.threshold) if n not in a.exceptional)
    return _canonical(a.threshold, a.period, pat, exc)


def difference(a: SemilinearSet, b: SemilinearSet) -> SemilinearSet:
    return intersect(a, complement(b))


def shift_left(a: SemilinearSet, n: int) -> SemilinearSet:
    """A - n = {m : m + n in A} (drops the first n places of A)."""
    if n < 0:
        raise ValueError("shift amount must be >= 0")
    if n == 0:
        return a
    p = a.period
    n0 = max(0, a.threshold - n)
    pat = frozenset((r - n) % p for r in a.pattern)
    exc = frozenset(m for m in range(n0) if m + n in a.exceptional)
    return _canonical(n0, p, pat, exc)


def shift_right(a: SemilinearSet, n: int) -> SemilinearSet:
    """A + n = {a + n : a in A}."""
    if n < 0:
        raise ValueError("shift amount must be >= 0")
    if n == 0:
        return a
    p = a.period
    n0 = a.threshold + n
    pat = frozenset((r + n) % p for r in a.pattern)
    exc = frozenset(m for m in range(n0) if m >= n and member(a, m - n))
    return _canonical(n0, p, pat, exc)


@dataclass(frozen=True)
class AffineMap:
    """n -> scale*n + offset with scale >= 1, so the map is injective."""

    scale: int
    offset: int = 0

    def __post_init__(self):
        if self.scale < 1:
            raise ValueError("scale must be >= 1")
        if self.offset < 0:
            raise ValueError("offset must be >= 0")

    def __call__(self, n: int) -> int:
        return self.scale * n + self.offset


def preimage_affine(a: SemilinearSet, f: AffineMap) -> SemilinearSet:
    """{n : f(n) in A}, exact."""
    p = a.period
    # f(n) lands in the periodic regime once n >= n0; below that, pointwise.
    n0 = max(0, (a.threshold - f.offset + f.scale - 1) // f.scale)
    pat = frozenset(r for r in range(p) if (f.scale * r + f.offset) % p in a.pattern)
    exc = frozenset(n for n in range(n0) if member(a, f(n)))
    return _canonical(n0, p, pat, exc)


def count_range(a: SemilinearSet, lo: int, hi: int) -> int:
    """|A ∩ [lo, hi)| by exact counting (period-block arithmetic)."""
    if hi <= lo:
        return 0
    lo = max(lo, 0)
    total = 0
    head_end = min(hi, a.threshold)
    if lo < head_end:
        total += sum(1 for n in a.exceptional if lo <= n < head_end)
    start = max(lo, a.threshold)
    if start >= hi:
        return total
    span = hi - start
    p = a.period
    full, rest = divmod(span, p)
    total += full * len(a.pattern)
    total += sum(1 for i in range(rest) if (start + i) % p in a.pattern)
    return total


def schnirelmann(a: SemilinearSet) -> Fraction:
    """inf over n >= 1 of |A ∩ [1,n]| / n, returned exactly.

    Within each residue class beyond the threshold the prefix ratio moves
    monotonically toward the periodic ratio, so the infimum is attained at
    some n < threshold + period or it equals that ratio.
    """
    tail = Fraction(len(a.pattern), a.period)
    best = tail
    for n in range(1, a.threshold + a.period + 1):
        best = min(best, Fraction(count_range(a, 1, n + 1), n))
    return best


def asymptotic(a: SemilinearSet) -> Fraction:
    """Asymptotic density; the limit exists for eventually periodic sets."""
    return Fraction(len(a.pattern), a.period)


def lower_density(a: SemilinearSet) -> Fraction:
    return asymptotic(a)


def upper_density(a: SemilinearSet) -> Fraction:
    return asymptotic(a)


def banach(a: SemilinearSet) -> Fraction:
    """Banach density; every long window carries the periodic ratio."""
    return asymptotic(a)


def best_rotation(a: SemilinearSet) -> int:
    """Rotation r making the rotated pattern meet the Banach density.

    Returns r in [0, period) such that the purely periodic set with pattern
    {(x + r) mod p : x in pattern} has Schnirelmann density exactly
    |pattern| / period.  The start is chosen by the cycle lemma: rotate to
    just after a minimum of the centered prefix-sum walk, which makes every
    prefix carry at least its proportional share.
    """
    if not a.pattern:
        raise NoRotation("cannot rotate an empty pattern")
    p = a.period
    w = len(a.pattern)
    walk = 0
    low, low_at = 0, 0
    for i in range(p):
        walk += p * (i in a.pattern) - w
        if walk <= low:
            low, low_at = walk, i + 1
    start = low_at % p
    r = (1 - start) % p
    rotated = rotate_pattern(a, r)
    if schnirelmann(rotated) != Fraction(w, p):
        raise AssertionError("cycle-lemma rotation failed verification")
    return r


def rotate_pattern(a: SemilinearSet, r: int) -> SemilinearSet:
    """Purely periodic set whose pattern is A's pattern rotated by r."""
    p = a.period
    return make(0, p, ((x + r) % p for x in a.pattern))
