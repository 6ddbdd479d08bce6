"""Finite windows onto arbitrary computable sets.

Everything infinite elsewhere in the package has a finite surrogate here:
a window is an explicit run of membership bits anchored at an arbitrary-
precision origin, so shifts by astronomically large numbers, sliding-block
densities, the density-realizing good-start scan, and exact-embeddability
searches all run on plain data.  Origins are Python ints throughout, so
windows may live at offsets far beyond machine range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Callable, Optional

from . import profinite as pf
from . import semilinear as sl
from .errors import PreconditionViolated
from .profinite import ProfinitePoint
from .semilinear import SemilinearSet


@dataclass(frozen=True)
class WindowSet:
    """Membership bits of some set on [origin, origin + length)."""

    origin: int
    bits: tuple[bool, ...]

    def __post_init__(self):
        if self.origin < 0:
            raise ValueError("origin must be >= 0")
        if not self.bits:
            raise ValueError("window must have length >= 1")

    @property
    def length(self) -> int:
        return len(self.bits)

    def density(self) -> Fraction:
        return Fraction(sum(self.bits), len(self.bits))


@dataclass(frozen=True)
class PredicateSet:
    """Named total membership predicate on the naturals."""

    name: str
    contains: Callable[[int], bool]

    def __call__(self, n: int) -> bool:
        return bool(self.contains(n))


def from_semilinear(a: SemilinearSet, name: str | None = None) -> PredicateSet:
    return PredicateSet(name or "semilinear", lambda n: sl.member(a, n))


def squares_blocks() -> PredicateSet:
    """Union of the blocks [v^2, (v+1)^2) over even v."""
    return PredicateSet("squaresblocks", lambda n: n >= 0 and isqrt(n) % 2 == 0)


def triadic_val_ge(k: int) -> PredicateSet:
    """{n >= 1 : 3^k divides n}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    q = 3 ** k
    return PredicateSet(f"triadic-val-ge({k})", lambda n: n >= 1 and n % q == 0)


def triadic_unit(j: int) -> PredicateSet:
    """{n >= 1 : the 3-free part of n is congruent to j mod 3}."""
    if j not in (1, 2):
        raise ValueError("unit class must be 1 or 2")

    def has_unit(n: int) -> bool:
        if n < 1:
            return False
        while n % 3 == 0:
            n //= 3
        return n % 3 == j

    return PredicateSet(f"triadic-unit({j})", has_unit)


def window_of(p: PredicateSet, origin: int, length: int) -> WindowSet:
    """Evaluate the predicate pointwise on [origin, origin + length)."""
    if length < 1:
        raise ValueError("length must be >= 1")
    return WindowSet(origin, tuple(p(origin + i) for i in range(length)))


def finite_hyper_shift(p: PredicateSet, g: int, length: int) -> WindowSet:
    """{n < length : g + n in P} as a window at origin 0.

    The finite stand-in for shifting by an infinite point: g plays the
    point, and only the first `length` places of the shifted set are kept.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    return WindowSet(0, tuple(p(g + i) for i in range(length)))


def window_banach(w: WindowSet, n: int) -> Fraction:
    """Best density among the length-n blocks inside the window."""
    if not 1 <= n <= w.length:
        raise PreconditionViolated(f"block length {n} outside [1, {w.length}]")
    count = sum(w.bits[:n])
    best = count
    for k in range(w.length - n):
        count += w.bits[k + n] - w.bits[k]
        if count > best:
            best = count
    return Fraction(best, n)


def good_start(w: WindowSet, nu: int) -> int:
    """Find an offset whose first nu prefixes all carry the window density.

    Returns gamma such that for every 1 <= i <= nu the block of i cells
    after gamma has density at least a - nu/N, where a is the window's
    density and N its length.  The scan repeatedly discards the shortest
    failing prefix; the counting bound shows it must succeed before the
    window runs out whenever a > nu/N.
    """
    n_len = w.length
    if not 1 <= nu <= n_len:
        raise PreconditionViolated(f"nu must lie in [1, {n_len}]")
    a = w.density()
    theta = a - Fraction(nu, n_len)
    if theta <= 0:
        raise PreconditionViolated(
            f"window density {a} must exceed nu/N = {Fraction(nu, n_len)}")
    prefix = [0]
    for b in w.bits:
        prefix.append(prefix[-1] + b)
    gamma = 0
    while gamma + nu <= n_len:
        jump = 0
        for i in range(1, nu + 1):
            if Fraction(prefix[gamma + i] - prefix[gamma], i) < theta:
                jump = i
                break
        if jump == 0:
            return gamma
        gamma += jump
    raise AssertionError("good-start scan exhausted the window; "
                         "the counting bound forbids this under the precondition")


def good_start_ok(w: WindowSet, nu: int, gamma: int) -> bool:
    """Exhaustive check of the good-start postcondition at one offset."""
    if gamma < 0 or gamma + nu > w.length:
        return False
    theta = w.density() - Fraction(nu, w.length)
    count = 0
    for i in range(1, nu + 1):
        count += w.bits[gamma + i - 1]
        if Fraction(count, i) < theta:
            return False
    return True


def exact_embed_window(a: PredicateSet, b: PredicateSet,
                       interval: tuple[int, int],
                       x_range: tuple[int, int]) -> Optional[int]:
    """Smallest x in the range with x + (A on I) matching B on x + I."""
    lo, hi = interval
    if hi < lo:
        raise ValueError("interval must satisfy lo <= hi")
    pattern = [a(t) for t in range(lo, hi + 1)]
    for x in range(x_range[0], x_range[1] + 1):
        if all(b(x + lo + i) == bit for i, bit in enumerate(pattern)):
            return x
    return None


@dataclass(frozen=True)
class EmbedWitness:
    """How one periodic set arises as a shift of another."""

    kind: str  # "shift": A = B - g for finite g; "rotation": A = B shifted at infinity
    value: int


def exact_embed_decide(a: SemilinearSet, b: SemilinearSet) -> Optional[EmbedWitness]:
    """Decide whether A is exactly embedded in B, with a witness.

    True exactly when A is B shifted left by some finite g, or A is the
    purely periodic trace of B at some infinite point (a rotation of B's
    pattern).  Finite shifts repeat with period lcm of the periods once g
    clears B's threshold, so the search range below is exhaustive.
    """
    bound = b.threshold + lcm(a.period, b.period) + 1
    for g in range(bound + 1):
        if sl.shift_left(b, g) == a:
            return EmbedWitness("shift", g)
    for r in range(b.period):
        if pf.hyper_shift(b, ProfinitePoint(b.period, r)) == a:
            return EmbedWitness("rotation", r)
    return None


@dataclass(frozen=True)
class NoncommReport:
    """Shift windows of the squares-blocks set at consecutive squares.

    The set whose blocks sit under even squares answers oppositely to
    shifts placed at nu^2 and at (nu+1)^2: one window is solid, the other
    empty.  That dichotomy is what breaks commutativity of the pseudo-sum
    for the ultrafilters those two placements generate.
    """

    nu: int
    length: int
    even_origin: int
    odd_origin: int
    even_window: WindowSet
    odd_window: WindowSet

    @property
    def even_all_true(self) -> bool:
        return all(self.even_window.bits)

    @property
    def odd_all_false(self) -> bool:
        return not any(self.odd_window.bits)


def noncomm_demo(nu: int, length: int) -> NoncommReport:
    """Windows of the squares-blocks set at nu^2 and (nu+1)^2, nu even."""
    if nu < 2 or nu % 2:
        raise PreconditionViolated(
            "nu must be even and >= 2: the demo anchors its full window on an "
            "even block [nu^2, (nu+1)^2) and its empty window on the odd block after it")
    if length < 1:
        raise PreconditionViolated("length must be >= 1")
    blocks = squares_blocks()
    even_origin = nu * nu
    odd_origin = (nu + 1) * (nu + 1)
    return NoncommReport(
        nu=nu,
        length=length,
        even_origin=even_origin,
        odd_origin=odd_origin,
        even_window=finite_hyper_shift(blocks, even_origin, length),
        odd_window=finite_hyper_shift(blocks, odd_origin, length),
    )
