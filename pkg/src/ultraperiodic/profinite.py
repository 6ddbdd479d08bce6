"""Residue-system surrogates for infinite hypernatural points.

A ProfinitePoint fixes, for one modulus M, the remainder that an infinite
number leaves under Euclidean division by every divisor of M.  On the
eventually periodic set algebra this trace is enough to decide generated-
ultrafilter membership, hyper-shifts, pseudo-sums and the star variant
exactly, provided the set's period divides the point's modulus.  Depth is
never refined silently: operations fail with InsufficientDepth instead of
inventing residues the point does not carry.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import semilinear as sl
from .errors import DepthMismatch, IncompatibleLift, InsufficientDepth, NotADivisor
from .semilinear import AffineMap, SemilinearSet


@dataclass(frozen=True)
class ProfinitePoint:
    """An infinite point known modulo every divisor of `modulus`."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")

    def reduce(self, d: int) -> ProfinitePoint:
        """Forget depth down to d, which must divide the modulus."""
        if d < 1 or self.modulus % d:
            raise NotADivisor(f"{d} does not divide depth {self.modulus}")
        return ProfinitePoint(d, self.residue % d)

    def lift(self, modulus: int, residue: int) -> ProfinitePoint:
        """Refine to a deeper modulus with a compatible residue."""
        if modulus % self.modulus:
            raise NotADivisor(f"depth {self.modulus} does not divide {modulus}")
        if residue % self.modulus != self.residue:
            raise IncompatibleLift(
                f"residue {residue} is not {self.residue} mod {self.modulus}")
        return ProfinitePoint(modulus, residue)


def _check_depth(a: SemilinearSet, gamma: ProfinitePoint) -> None:
    if gamma.modulus % a.period:
        raise InsufficientDepth(
            f"set period {a.period} does not divide depth {gamma.modulus}")


def _check_equal_depth(gamma: ProfinitePoint, delta: ProfinitePoint) -> None:
    if gamma.modulus != delta.modulus:
        raise DepthMismatch(
            f"depths {gamma.modulus} and {delta.modulus} differ; align with reduce()")


def member_set(a: SemilinearSet, gamma: ProfinitePoint) -> bool:
    """Decide whether A belongs to the ultrafilter generated by the point.

    The point is infinite, so the finite exceptional part of A is invisible;
    only the residue pattern matters.
    """
    _check_depth(a, gamma)
    return gamma.residue % a.period in a.pattern


def hyper_shift(a: SemilinearSet, gamma: ProfinitePoint) -> SemilinearSet:
    """The trace of A shifted down by the infinite point: {n : gamma+n in A}.

    Purely periodic: n belongs iff (residue + n) mod period hits the pattern.
    """
    _check_depth(a, gamma)
    p = a.period
    r = gamma.residue % p
    return sl.make(0, p, (n for n in range(p) if (r + n) % p in a.pattern))


def ultrafilter_shift(a: SemilinearSet, gamma: ProfinitePoint) -> SemilinearSet:
    """A - U_gamma = {n : A - n in U_gamma}, assembled shift by shift.

    Computed from the definition, one leftward shift per residue; agreeing
    with hyper_shift is a theorem the test suite checks, not a shortcut
    taken here.
    """
    _check_depth(a, gamma)
    p = a.period
    hits = (n for n in range(p) if member_set(sl.shift_left(a, n), gamma))
    return sl.make(0, p, hits)


def reverse_hyper_shift(a: SemilinearSet, gamma: ProfinitePoint) -> SemilinearSet:
    """{n : A + n in U_gamma}, the rightward-shift companion."""
    _check_depth(a, gamma)
    p = a.period
    hits = (n for n in range(p) if member_set(sl.shift_right(a, n), gamma))
    return sl.make(0, p, hits)


def add(gamma: ProfinitePoint, delta: ProfinitePoint) -> ProfinitePoint:
    _check_equal_depth(gamma, delta)
    m = gamma.modulus
    return ProfinitePoint(m, (gamma.residue + delta.residue) % m)


def sub(delta: ProfinitePoint, gamma: ProfinitePoint) -> ProfinitePoint:
    """Residue trace of delta - gamma (callers know which is larger)."""
    _check_equal_depth(gamma, delta)
    m = gamma.modulus
    return ProfinitePoint(m, (delta.residue - gamma.residue) % m)


def add_integer(gamma: ProfinitePoint, k: int) -> ProfinitePoint:
    """gamma + k for a finite integer k (k may be negative)."""
    m = gamma.modulus
    return ProfinitePoint(m, (gamma.residue + k) % m)


def pseudo_sum_member(a: SemilinearSet, gamma: ProfinitePoint,
                      delta: ProfinitePoint) -> bool:
    """Decide A in U_gamma (+) U_delta via the shift identity A_delta in U_gamma."""
    _check_depth(a, gamma)
    _check_depth(a, delta)
    return member_set(hyper_shift(a, delta), gamma)


def star_member(a: SemilinearSet, gamma: ProfinitePoint,
                delta: ProfinitePoint) -> bool:
    """Decide A in U_gamma (*) U_delta = {n : A + n in U_delta} in U_gamma."""
    _check_depth(a, gamma)
    _check_depth(a, delta)
    return member_set(reverse_hyper_shift(a, delta), gamma)


def is_idempotent(gamma: ProfinitePoint) -> bool:
    """Idempotency of U_gamma at this depth: 2r = r (mod M), i.e. r = 0."""
    return gamma.residue == 0


def image_member(a: SemilinearSet, f: AffineMap, gamma: ProfinitePoint) -> bool:
    """Decide A in f(U_gamma) = {A : preimage of A under f in U_gamma}."""
    return member_set(sl.preimage_affine(a, f), gamma)
