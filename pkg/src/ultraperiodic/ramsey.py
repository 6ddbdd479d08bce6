"""Finite combinatorics: colorings, partition regularity, finite sums.

The searches here are exhaustive and deterministic (smallest witness in a
fixed order), so their outputs double as certificates: a coloring that
passes verify_coloring, a monochromatic solution that can be re-checked by
substitution, a finite-sums set whose sums are listed explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import (BudgetExceeded, FixedPointPresent, NotFound,
                     PreconditionViolated, TooLarge, TooManyCoefficients)

SUBSET_SUM_GUARD = 25
ENUMERATION_BUDGET = 1 << 22


@dataclass(frozen=True)
class FunctionalGraph:
    """A fixed-point-free self-map of [0, size)."""

    successors: tuple[int, ...]

    def __post_init__(self):
        n = len(self.successors)
        for i, j in enumerate(self.successors):
            if not 0 <= j < n:
                raise ValueError(f"successor {j} of {i} outside [0, {n})")
            if j == i:
                raise FixedPointPresent(f"f({i}) = {i}")

    @property
    def size(self) -> int:
        return len(self.successors)


@dataclass(frozen=True)
class Coloring:
    """Colors for the first `size` domain elements.

    colors[i] is the color of element i+1 when the domain is read as the
    integers [1, size] (the Ramsey searches below), or of vertex i when it
    is read as graph vertices [0, size).
    """

    colors: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.colors)

    def color(self, n: int) -> int:
        """Color of the integer n, domain [1, size]."""
        return self.colors[n - 1]

    def num_colors(self) -> int:
        return max(self.colors, default=0)


@dataclass(frozen=True)
class LinearEquation:
    """c1*X1 + ... + ck*Xk = 0 with every coefficient nonzero, k >= 2."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise ValueError("need at least two coefficients")
        if any(c == 0 for c in self.coefficients):
            raise ValueError("coefficients must be nonzero")


def three_color(graph: FunctionalGraph) -> Coloring:
    """Proper 3-coloring of a fixed-point-free functional graph.

    Peel vertices of in-degree at most one onto a stack (one always exists
    by counting: the vertices still present contribute at most one edge
    each), then color in reverse peel order.  A vertex returning to the
    graph sees its successor and at most one in-neighbour already colored,
    so a third color is always free.  Linear time.
    """
    f = graph.successors
    n = len(f)
    indeg = [0] * n
    for j in f:
        indeg[j] += 1
    alive = [True] * n
    ready = [v for v in range(n) if indeg[v] <= 1]
    order = []
    while ready:
        v = ready.pop()
        if not alive[v]:
            continue
        alive[v] = False
        order.append(v)
        w = f[v]
        if alive[w]:
            indeg[w] -= 1
            if indeg[w] == 1:
                ready.append(w)
    if len(order) != n:
        raise AssertionError("peeling stalled; impossible for a functional graph")
    rev: list[list[int]] = [[] for _ in range(n)]
    for v, w in enumerate(f):
        rev[w].append(v)
    colors = [0] * n
    for v in reversed(order):
        succ_color = colors[f[v]]
        in_color = 0
        for y in rev[v]:
            c = colors[y]
            if c:
                in_color = c  # at most one by the peel invariant
        colors[v] = 1 if 1 not in (succ_color, in_color) else \
            2 if 2 not in (succ_color, in_color) else 3
    return Coloring(tuple(colors))


def verify_coloring(graph: FunctionalGraph, coloring: Coloring) -> bool:
    """True iff the coloring separates every vertex from its successor."""
    if coloring.size != graph.size:
        raise ValueError("coloring and graph sizes differ")
    colors = coloring.colors
    return all(colors[v] != colors[w] for v, w in enumerate(graph.successors))


def rado_single_pr(eq: LinearEquation) -> bool:
    """Partition regularity of a single linear equation.

    Holds exactly when some nonempty subset of the coefficients sums to
    zero; decided by meet-in-the-middle subset-sum enumeration.
    """
    cs = eq.coefficients
    if len(cs) > SUBSET_SUM_GUARD:
        raise TooManyCoefficients(f"more than {SUBSET_SUM_GUARD} coefficients")
    half = len(cs) // 2
    left = _nonempty_subset_sums(cs[:half])
    right = _nonempty_subset_sums(cs[half:])
    if 0 in left or 0 in right:
        return True
    return any(-s in right for s in left)


def _nonempty_subset_sums(cs: Sequence[int]) -> set[int]:
    sums: set[int] = set()
    for c in cs:
        sums |= {s + c for s in sums}
        sums.add(c)
    return sums


def find_mono_solution(eq: LinearEquation,
                       coloring: Coloring) -> Optional[tuple[tuple[int, ...], int]]:
    """A monochromatic solution of the equation within [1, size], if any.

    Values may repeat; the k-th variable is solved from the others, the
    rest are enumerated over the color class.  Returns (values, color) for
    the lexicographically first solution, or None.
    """
    n = coloring.size
    if n == 0:
        return None
    cs = eq.coefficients
    k = len(cs)
    by_color: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        by_color.setdefault(coloring.color(x), []).append(x)
    for color in sorted(by_color):
        members = by_color[color]
        mset = set(members)
        prefix = [0] * k

        def rec(pos: int, acc: int) -> Optional[tuple[int, ...]]:
            if pos == k - 1:
                num = -acc
                den = cs[-1]
                if num % den:
                    return None
                x = num // den
                if 1 <= x <= n and x in mset:
                    return tuple(prefix[:k - 1] + [x])
                return None
            for x in members:
                prefix[pos] = x
                got = rec(pos + 1, acc + cs[pos] * x)
                if got is not None:
                    return got
            return None

        sol = rec(0, 0)
        if sol is not None:
            return sol, color
    return None


def exhaustive_pr_check(eq: LinearEquation, n: int, r: int) -> bool:
    """Whether every r-coloring of [1, n] has a monochromatic solution.

    Enumerates colorings with the color of 1 pinned (color permutations
    preserve the property), bailing out early on each coloring as soon as
    a solution appears.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    if r ** n > ENUMERATION_BUDGET:
        raise BudgetExceeded(f"{r}^{n} colorings exceed the enumeration budget")
    solutions = _solutions_upto(eq, n)
    if not solutions:
        return False

    def colorings(prefix: list[int]):
        if len(prefix) == n:
            yield prefix
            return
        for c in range(1, r + 1):
            prefix.append(c)
            yield from colorings(prefix)
            prefix.pop()

    for colors in colorings([1]):
        if not any(len({colors[x - 1] for x in sol}) == 1 for sol in solutions):
            return False
    return True


def _solutions_upto(eq: LinearEquation, n: int) -> list[tuple[int, ...]]:
    """All solutions of the equation with values in [1, n] (values may repeat)."""
    cs = eq.coefficients
    k = len(cs)
    out: list[tuple[int, ...]] = []
    values = list(range(1, n + 1))
    stack: list[int] = []

    def rec(pos: int, acc: int) -> None:
        if pos == k - 1:
            num = -acc
            den = cs[-1]
            if num % den == 0 and 1 <= num // den <= n:
                out.append(tuple(stack + [num // den]))
            return
        for x in values:
            stack.append(x)
            rec(pos + 1, acc + cs[pos] * x)
            stack.pop()

    rec(0, 0)
    return out


def fs(xs) -> frozenset[int]:
    """All sums of nonempty subsets of distinct elements of xs."""
    elems = sorted(set(xs))
    if len(elems) > 20:
        raise TooLarge("finite-sums enumeration capped at 20 elements")
    sums: set[int] = set()
    for x in elems:
        sums |= {s + x for s in sums}
        sums.add(x)
    return frozenset(sums)


def find_fs_set(coloring: Coloring, k: int) -> Optional[tuple[tuple[int, ...], int]]:
    """A k-element set whose full complement of subset sums is monochromatic.

    Depth-first extension by smallest candidate: each new element must keep
    every subset sum inside [1, size], of the base color, and distinct from
    the sums already present (so a size-k witness always exhibits 2^k - 1
    different sums).  Returns (elements, color) or None when the window is
    exhausted; absence here says nothing about larger domains.
    """
    n = coloring.size
    if k < 1:
        raise ValueError("k must be >= 1")

    def extend(chosen: list[int], sums: set[int], color: int,
               start: int) -> Optional[tuple[int, ...]]:
        if len(chosen) == k:
            return tuple(chosen)
        for x in range(start, n + 1):
            if coloring.color(x) != color or x in sums:
                continue
            new = {x + s for s in sums}
            new.add(x)
            if new & sums:
                continue  # would repeat an existing sum
            if any(s > n or coloring.color(s) != color for s in new):
                continue
            got = extend(chosen + [x], sums | new, color, x + 1)
            if got is not None:
                return got
        return None

    for first in range(1, n + 1):
        got = extend([first], {first}, coloring.color(first), first + 1)
        if got is not None:
            return got, coloring.color(first)
    return None


def gamma_fip_witness(sets: Sequence[frozenset[int]], n: int) -> tuple[int, int]:
    """A pair (a, b) with a, b, b-a all in one atom of the given sets.

    The atom of x is its membership signature across the family; the search
    is exhaustive over 1 <= a < b <= n and returns the lexicographically
    first hit.  With at most two sets the four atoms form a 4-coloring, and
    monochromatic Schur triples below 45 guarantee a witness for n >= 45.
    """
    if len(sets) > 3:
        raise PreconditionViolated("at most three sets (eight atoms) supported")

    def atom(x: int) -> tuple[bool, ...]:
        return tuple(x in s for s in sets)

    atoms = [atom(x) for x in range(0, n + 1)]
    for a in range(1, n + 1):
        sig = atoms[a]
        for b in range(a + 1, n + 1):
            if atoms[b] == sig and atoms[b - a] == sig:
                return a, b
    raise NotFound(f"no pair with a, b, b-a in one atom within [1, {n}]")


def triadic_split(n: int) -> tuple[int, int]:
    """(v, u) with n = 3^v * u and u not divisible by 3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    v = 0
    while n % 3 == 0:
        n //= 3
        v += 1
    return v, n


@dataclass(frozen=True)
class ObstructionReport:
    """Arithmetic of the 3-adic obstruction to star-idempotency.

    When a < b and the 3-adic valuation of a is strictly smaller, b - a
    keeps a's valuation while its 3-free part flips sign mod 3.  A point
    whose trace matched both a-like and (b-a)-like data would therefore
    need its unit class j to satisfy j = -j mod 3, impossible for j in
    {1, 2}: no ultrafilter is idempotent for the rightward-shift sum.
    """

    a: int
    b: int
    val_a: int
    unit_a: int
    val_b: int
    unit_b: int
    val_diff: int
    unit_diff: int

    @property
    def valuation_preserved(self) -> bool:
        return self.val_diff == self.val_a

    @property
    def unit_negated(self) -> bool:
        return (self.unit_diff + self.unit_a) % 3 == 0

    @property
    def j(self) -> int:
        return self.unit_a % 3

    @property
    def contradiction(self) -> str:
        j = self.j
        return (f"a star-idempotent trace would force j = -j (mod 3) "
                f"for j = {j}, but -{j} = {(-j) % 3} (mod 3) != {j}")


def star_obstruction_check(a: int, b: int) -> ObstructionReport:
    """Check the valuation/unit congruences on a concrete pair a < b."""
    if a < 1 or b < 1:
        raise PreconditionViolated("a and b must be >= 1")
    if b <= a:
        raise PreconditionViolated("need b > a")
    va, ua = triadic_split(a)
    vb, ub = triadic_split(b)
    if not va < vb:
        raise PreconditionViolated(
            f"need val3(a) < val3(b); got {va} and {vb}")
    vd, ud = triadic_split(b - a)
    report = ObstructionReport(a, b, va, ua, vb, ub, vd, ud)
    if not (report.valuation_preserved and report.unit_negated):
        raise AssertionError("3-adic congruence failed; unreachable for valid input")
    return report
