"""Two-dimensional set algebra over pairs of naturals.

Pair sets are Boolean expression trees over four primitive families:
rectangles A x B, sum bands {(n,m) : n+m in A}, difference bands
{(n,m) : m >= n, m-n in A}, and the strict upper triangle {(n,m) : n < m}.
Every vertical fiber of such a tree is eventually periodic, which is what
makes tensor products, pair-generated membership, and diagonal sections
computable on this fragment.

A PairPoint carries two equal-depth profinite points plus a declared
difference tag for beta - alpha (zero, a finite offset, or an infinite
gap in either direction).  The tag is metadata the residues cannot see;
construction checks it for consistency where residues do constrain it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from . import profinite as pf
from . import semilinear as sl
from .errors import DepthMismatch, InconsistentDiff
from .profinite import ProfinitePoint
from .semilinear import AffineMap, SemilinearSet


# ---------------------------------------------------------------------------
# pair-set expression trees


@dataclass(frozen=True)
class Rect:
    """A x B."""

    left: SemilinearSet
    right: SemilinearSet


@dataclass(frozen=True)
class SumBand:
    """{(n, m) : n + m in A}."""

    base: SemilinearSet


@dataclass(frozen=True)
class DiffBand:
    """{(n, m) : m >= n and m - n in A}."""

    base: SemilinearSet


@dataclass(frozen=True)
class UpperTriangle:
    """{(n, m) : n < m}."""


@dataclass(frozen=True)
class PairUnion:
    left: PairSet
    right: PairSet


@dataclass(frozen=True)
class PairInter:
    left: PairSet
    right: PairSet


@dataclass(frozen=True)
class PairComplement:
    inner: PairSet


PairSet = Union[Rect, SumBand, DiffBand, UpperTriangle,
                PairUnion, PairInter, PairComplement]

DELTA_PLUS = UpperTriangle()


def pair_contains(x: PairSet, n: int, m: int) -> bool:
    """Concrete membership of the pair (n, m), by structural recursion."""
    if isinstance(x, Rect):
        return sl.member(x.left, n) and sl.member(x.right, m)
    if isinstance(x, SumBand):
        return sl.member(x.base, n + m)
    if isinstance(x, DiffBand):
        return m >= n and sl.member(x.base, m - n)
    if isinstance(x, UpperTriangle):
        return n < m
    if isinstance(x, PairUnion):
        return pair_contains(x.left, n, m) or pair_contains(x.right, n, m)
    if isinstance(x, PairInter):
        return pair_contains(x.left, n, m) and pair_contains(x.right, n, m)
    if isinstance(x, PairComplement):
        return not pair_contains(x.inner, n, m)
    raise TypeError(f"not a pair set: {x!r}")


def fiber(x: PairSet, n: int) -> SemilinearSet:
    """The vertical fiber {m : (n, m) in X} as an eventually periodic set."""
    if isinstance(x, Rect):
        return x.right if sl.member(x.left, n) else sl.EMPTY
    if isinstance(x, SumBand):
        return sl.shift_left(x.base, n)
    if isinstance(x, DiffBand):
        return sl.shift_right(x.base, n)
    if isinstance(x, UpperTriangle):
        return sl.shift_right(sl.FULL, n + 1)
    if isinstance(x, PairUnion):
        return sl.union(fiber(x.left, n), fiber(x.right, n))
    if isinstance(x, PairInter):
        return sl.intersect(fiber(x.left, n), fiber(x.right, n))
    if isinstance(x, PairComplement):
        return sl.complement(fiber(x.inner, n))
    raise TypeError(f"not a pair set: {x!r}")


# ---------------------------------------------------------------------------
# pair points


class DiffKind(Enum):
    INFINITE_POSITIVE = "infinite+"
    INFINITE_NEGATIVE = "infinite-"
    ZERO = "zero"
    FINITE_OFFSET = "offset"


@dataclass(frozen=True)
class Diff:
    """Declared value of beta - alpha: a kind plus the offset when finite."""

    kind: DiffKind
    offset: int = 0

    def __post_init__(self):
        if self.kind is not DiffKind.FINITE_OFFSET and self.offset:
            raise ValueError("offset only meaningful for FINITE_OFFSET")


INFINITE_POSITIVE = Diff(DiffKind.INFINITE_POSITIVE)
INFINITE_NEGATIVE = Diff(DiffKind.INFINITE_NEGATIVE)
ZERO = Diff(DiffKind.ZERO)


def finite_offset(k: int) -> Diff:
    return ZERO if k == 0 else Diff(DiffKind.FINITE_OFFSET, k)


@dataclass(frozen=True)
class PairPoint:
    """Equal-depth point pair (alpha, beta) with declared beta - alpha."""

    alpha: ProfinitePoint
    beta: ProfinitePoint
    diff: Diff

    def __post_init__(self):
        if self.alpha.modulus != self.beta.modulus:
            raise DepthMismatch("pair components must share a depth")
        m = self.alpha.modulus
        if self.diff.kind is DiffKind.ZERO and self.alpha != self.beta:
            raise InconsistentDiff("diff says zero but the components differ")
        if self.diff.kind is DiffKind.FINITE_OFFSET:
            if (self.alpha.residue + self.diff.offset) % m != self.beta.residue:
                raise InconsistentDiff(
                    f"offset {self.diff.offset} contradicts the residues mod {m}")


def pair_member(x: PairSet, point: PairPoint) -> bool:
    """Decide X in the ultrafilter generated by the ordered pair."""
    alpha, beta, diff = point.alpha, point.beta, point.diff
    if isinstance(x, Rect):
        return pf.member_set(x.left, alpha) and pf.member_set(x.right, beta)
    if isinstance(x, SumBand):
        return pf.member_set(x.base, pf.add(alpha, beta))
    if isinstance(x, DiffBand):
        if diff.kind is DiffKind.ZERO:
            return sl.member(x.base, 0)
        if diff.kind is DiffKind.FINITE_OFFSET:
            return diff.offset >= 0 and sl.member(x.base, diff.offset)
        if diff.kind is DiffKind.INFINITE_POSITIVE:
            return pf.member_set(x.base, pf.sub(beta, alpha))
        return False
    if isinstance(x, UpperTriangle):
        if diff.kind is DiffKind.INFINITE_POSITIVE:
            return True
        return diff.kind is DiffKind.FINITE_OFFSET and diff.offset > 0
    if isinstance(x, PairUnion):
        return pair_member(x.left, point) or pair_member(x.right, point)
    if isinstance(x, PairInter):
        return pair_member(x.left, point) and pair_member(x.right, point)
    if isinstance(x, PairComplement):
        return not pair_member(x.inner, point)
    raise TypeError(f"not a pair set: {x!r}")


def fiber_membership_set(x: PairSet, delta: ProfinitePoint) -> SemilinearSet:
    """{n : the n-fiber of X lies in U_delta}, computed leafwise.

    Boolean structure pushes through because the ultrafilter trace is
    prime: a union's fiber is in the trace iff one of the parts' is.
    """
    if isinstance(x, Rect):
        return x.left if pf.member_set(x.right, delta) else sl.EMPTY
    if isinstance(x, SumBand):
        return pf.hyper_shift(x.base, delta)
    if isinstance(x, DiffBand):
        return pf.reverse_hyper_shift(x.base, delta)
    if isinstance(x, UpperTriangle):
        return sl.FULL
    if isinstance(x, PairUnion):
        return sl.union(fiber_membership_set(x.left, delta),
                        fiber_membership_set(x.right, delta))
    if isinstance(x, PairInter):
        return sl.intersect(fiber_membership_set(x.left, delta),
                            fiber_membership_set(x.right, delta))
    if isinstance(x, PairComplement):
        return sl.complement(fiber_membership_set(x.inner, delta))
    raise TypeError(f"not a pair set: {x!r}")


def tensor_member(x: PairSet, gamma: ProfinitePoint, delta: ProfinitePoint) -> bool:
    """Decide X in U_gamma (x) U_delta: fiber membership set in U_gamma."""
    return pf.member_set(fiber_membership_set(x, delta), gamma)


def canonical_tensor_point(gamma: ProfinitePoint, delta: ProfinitePoint) -> PairPoint:
    """The pair point that realizes the tensor product on this algebra."""
    if gamma.modulus != delta.modulus:
        raise DepthMismatch("tensor point needs equal depths; align with reduce()")
    return PairPoint(gamma, delta, INFINITE_POSITIVE)


def diagonal_section(x: PairSet) -> SemilinearSet:
    """{n : (n, n) in X}, by structural recursion."""
    if isinstance(x, Rect):
        return sl.intersect(x.left, x.right)
    if isinstance(x, SumBand):
        return sl.preimage_affine(x.base, AffineMap(2))
    if isinstance(x, DiffBand):
        return sl.FULL if sl.member(x.base, 0) else sl.EMPTY
    if isinstance(x, UpperTriangle):
        return sl.EMPTY
    if isinstance(x, PairUnion):
        return sl.union(diagonal_section(x.left), diagonal_section(x.right))
    if isinstance(x, PairInter):
        return sl.intersect(diagonal_section(x.left), diagonal_section(x.right))
    if isinstance(x, PairComplement):
        return sl.complement(diagonal_section(x.inner))
    raise TypeError(f"not a pair set: {x!r}")


def diagonal_member(x: PairSet, gamma: ProfinitePoint) -> bool:
    """Decide X in the diagonal ultrafilter determined by U_gamma."""
    return pf.member_set(diagonal_section(x), gamma)


def image_pair(f: AffineMap, g: AffineMap, point: PairPoint) -> PairPoint:
    """Push the pair through coordinatewise affine maps.

    Residues map exactly.  An infinite gap survives affine images on the
    modeled (tensor-like) pairs; zero and finite offsets are recomputed
    from the scales and offsets, where the outcome is determined.
    """
    m = point.alpha.modulus
    alpha = ProfinitePoint(m, (f.scale * point.alpha.residue + f.offset) % m)
    beta = ProfinitePoint(m, (g.scale * point.beta.residue + g.offset) % m)
    d = point.diff
    if d.kind in (DiffKind.INFINITE_POSITIVE, DiffKind.INFINITE_NEGATIVE):
        new = d
    else:
        k = d.offset  # ZERO carries offset 0
        if g.scale > f.scale:
            new = INFINITE_POSITIVE
        elif g.scale < f.scale:
            new = INFINITE_NEGATIVE
        else:
            new = finite_offset(g.scale * k + g.offset - f.offset)
    return PairPoint(alpha, beta, new)
