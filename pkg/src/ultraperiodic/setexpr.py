"""Text grammar for set expressions, shared by the library and the CLI.

Scalar expressions denote subsets of the naturals::

    atom  :=  {n, ...}  |  r%m  |  [a,b)  |  N  |  0  |  predicate-name
    expr  :=  atom | !expr | expr & expr | expr '|' expr
            | expr << k | expr >> k | (expr)

Binding, tightest first: ``!``, shifts, ``&``, ``|``.  ``E << k`` denotes
the leftward shift E - k = {m : m + k in E} and ``E >> k`` the rightward
shift E + k; the arrows point the way elements move.

Pair expressions reuse the same scalar grammar inside the 2D primitives::

    pair  :=  rect(E, E) | sumband(E) | diffband(E) | delta+
            | !pair | pair & pair | pair '|' pair | (pair)

Expressions made only of finite sets, residue classes, intervals, N and 0
evaluate to canonical SemilinearSet values; predicate names (squaresblocks,
triadic-unit(j), triadic-val-ge(k)) evaluate only as membership predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import pairs as pr
from . import semilinear as sl
from . import windows as wd
from .errors import NotPeriodic, ParseError
from .profinite import ProfinitePoint
from .semilinear import SemilinearSet


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Finite:
    elements: frozenset[int]


@dataclass(frozen=True)
class Residue:
    residue: int
    modulus: int


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int


@dataclass(frozen=True)
class Full:
    pass


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Predicate:
    name: str
    arg: int | None = None


@dataclass(frozen=True)
class Not:
    inner: Expr


@dataclass(frozen=True)
class And:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Or:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class LShift:
    inner: Expr
    amount: int


@dataclass(frozen=True)
class RShift:
    inner: Expr
    amount: int


Expr = Union[Finite, Residue, Interval, Full, Empty, Predicate,
             Not, And, Or, LShift, RShift]


# ---------------------------------------------------------------------------
# tokenizer

_SYMBOLS = ("<<", ">>", "%", "{", "}", "[", "]", "(", ")", ",", "|", "&", "!")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", or the symbol itself
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    out: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if text.startswith("<<", i) or text.startswith(">>", i):
            out.append(_Token(text[i:i + 2], text[i:i + 2], i))
            i += 2
            continue
        if c in "%{}[](),|&!":
            out.append(_Token(c, c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            if j < n and text[j] == "+":  # delta+
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    out.append(_Token("end", "", n))
    return out


# ---------------------------------------------------------------------------
# recursive-descent parser

_PAIR_KEYWORDS = {"rect", "sumband", "diffband", "delta+"}
_PREDICATES = {"squaresblocks", "triadic-unit", "triadic-val-ge"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.pos)
        return tok

    def integer(self) -> int:
        return int(self.expect("int").text)

    # scalar grammar -------------------------------------------------------

    def expr(self) -> Expr:
        node = self.inter()
        while self.peek().kind == "|":
            self.next()
            node = Or(node, self.inter())
        return node

    def inter(self) -> Expr:
        node = self.shifted()
        while self.peek().kind == "&":
            self.next()
            node = And(node, self.shifted())
        return node

    def shifted(self) -> Expr:
        node = self.unary()
        while self.peek().kind in ("<<", ">>"):
            op = self.next()
            k = self.integer()
            node = LShift(node, k) if op.kind == "<<" else RShift(node, k)
        return node

    def unary(self) -> Expr:
        if self.peek().kind == "!":
            self.next()
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "{":
            self.next()
            elems = []
            if self.peek().kind != "}":
                elems.append(self.integer())
                while self.peek().kind == ",":
                    self.next()
                    elems.append(self.integer())
            self.expect("}")
            return Finite(frozenset(elems)) if elems else Empty()
        if tok.kind == "[":
            self.next()
            lo = self.integer()
            self.expect(",")
            hi = self.integer()
            self.expect(")")
            if hi < lo:
                raise ParseError(f"empty-interval bounds must satisfy {lo} <= {hi}",
                                 tok.pos)
            return Interval(lo, hi)
        if tok.kind == "int":
            self.next()
            if self.peek().kind == "%":
                self.next()
                mod_tok = self.peek()
                modulus = self.integer()
                residue = int(tok.text)
                if modulus < 1:
                    raise ParseError("modulus must be >= 1", mod_tok.pos)
                if residue >= modulus:
                    raise ParseError(
                        f"residue {residue} must be below modulus {modulus}", tok.pos)
                return Residue(residue, modulus)
            if tok.text == "0":
                return Empty()
            raise ParseError(
                f"bare integer {tok.text}: write {{{tok.text}}} for a singleton "
                f"or r%m for a residue class", tok.pos)
        if tok.kind == "name":
            self.next()
            if tok.text == "N":
                return Full()
            if tok.text == "squaresblocks":
                return Predicate("squaresblocks")
            if tok.text in ("triadic-unit", "triadic-val-ge"):
                self.expect("(")
                arg_tok = self.peek()
                arg = self.integer()
                self.expect(")")
                if tok.text == "triadic-unit" and arg not in (1, 2):
                    raise ParseError("triadic unit class must be 1 or 2", arg_tok.pos)
                return Predicate(tok.text, arg)
            if tok.text in _PAIR_KEYWORDS:
                raise ParseError(
                    f"{tok.text!r} is a 2D primitive; use it in a pair expression",
                    tok.pos)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        raise ParseError(f"expected a set atom, found {tok.text or 'end of input'!r}",
                         tok.pos)

    # pair grammar ---------------------------------------------------------

    def pair_expr(self) -> pr.PairSet:
        node = self.pair_inter()
        while self.peek().kind == "|":
            self.next()
            node = pr.PairUnion(node, self.pair_inter())
        return node

    def pair_inter(self) -> pr.PairSet:
        node = self.pair_unary()
        while self.peek().kind == "&":
            self.next()
            node = pr.PairInter(node, self.pair_unary())
        return node

    def pair_unary(self) -> pr.PairSet:
        if self.peek().kind == "!":
            self.next()
            return pr.PairComplement(self.pair_unary())
        return self.pair_atom()

    def pair_atom(self) -> pr.PairSet:
        tok = self.peek()
        if tok.kind == "(":
            self.next()
            node = self.pair_expr()
            self.expect(")")
            return node
        if tok.kind == "name" and tok.text in _PAIR_KEYWORDS:
            self.next()
            if tok.text == "delta+":
                return pr.DELTA_PLUS
            self.expect("(")
            first = evaluate(self.expr())
            if tok.text == "rect":
                self.expect(",")
                second = evaluate(self.expr())
                self.expect(")")
                return pr.Rect(first, second)
            self.expect(")")
            return pr.SumBand(first) if tok.text == "sumband" else pr.DiffBand(first)
        raise ParseError(
            f"expected a pair atom (rect/sumband/diffband/delta+), "
            f"found {tok.text or 'end of input'!r}", tok.pos)

    def finish(self) -> None:
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos)


def parse_expr(text: str) -> Expr:
    """Parse a scalar set expression into its AST."""
    p = _Parser(text)
    node = p.expr()
    p.finish()
    return node


def parse_set(text: str) -> SemilinearSet:
    """Parse and evaluate a scalar expression to a canonical set."""
    return evaluate(parse_expr(text))


def parse_pair_set(text: str) -> pr.PairSet:
    """Parse a 2D pair-set expression."""
    p = _Parser(text)
    node = p.pair_expr()
    p.finish()
    return node


def parse_point(text: str) -> ProfinitePoint:
    """Parse the point form 'point M:r' (the leading word is optional)."""
    body = text.strip()
    if body.startswith("point"):
        body = body[len("point"):].strip()
    head, sep, tail = body.partition(":")
    if not sep or not head.strip().isdigit() or not tail.strip().isdigit():
        raise ParseError(f"expected 'point M:r', got {text!r}", 0)
    modulus, residue = int(head), int(tail)
    if modulus < 1:
        raise ParseError("point modulus must be >= 1", 0)
    if not 0 <= residue < modulus:
        raise ParseError(f"point residue {residue} must lie in [0, {modulus})", 0)
    return ProfinitePoint(modulus, residue)


# ---------------------------------------------------------------------------
# evaluation


def evaluate(node: Expr) -> SemilinearSet:
    """Evaluate to a canonical SemilinearSet; predicates are rejected."""
    if isinstance(node, Finite):
        return sl.finite(node.elements)
    if isinstance(node, Residue):
        return sl.residues({node.residue}, node.modulus)
    if isinstance(node, Interval):
        return sl.interval(node.lo, node.hi)
    if isinstance(node, Full):
        return sl.FULL
    if isinstance(node, Empty):
        return sl.EMPTY
    if isinstance(node, Predicate):
        raise NotPeriodic(
            f"{node.name!r} denotes no eventually periodic set; "
            f"it is only usable where a membership predicate is expected")
    if isinstance(node, Not):
        return sl.complement(evaluate(node.inner))
    if isinstance(node, And):
        return sl.intersect(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Or):
        return sl.union(evaluate(node.left), evaluate(node.right))
    if isinstance(node, LShift):
        return sl.shift_left(evaluate(node.inner), node.amount)
    if isinstance(node, RShift):
        return sl.shift_right(evaluate(node.inner), node.amount)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_predicate(node: Expr) -> wd.PredicateSet:
    """Evaluate to a membership predicate; every atom is allowed here."""
    if isinstance(node, Predicate):
        if node.name == "squaresblocks":
            return wd.squares_blocks()
        if node.name == "triadic-unit":
            return wd.triadic_unit(node.arg)
        return wd.triadic_val_ge(node.arg)
    if isinstance(node, Not):
        inner = evaluate_predicate(node.inner)
        return wd.PredicateSet(f"!({inner.name})", lambda m: not inner(m))
    if isinstance(node, And):
        a, b = evaluate_predicate(node.left), evaluate_predicate(node.right)
        return wd.PredicateSet(f"({a.name} & {b.name})", lambda m: a(m) and b(m))
    if isinstance(node, Or):
        a, b = evaluate_predicate(node.left), evaluate_predicate(node.right)
        return wd.PredicateSet(f"({a.name} | {b.name})", lambda m: a(m) or b(m))
    if isinstance(node, LShift):
        inner, k = evaluate_predicate(node.inner), node.amount
        return wd.PredicateSet(f"({inner.name} << {k})", lambda m: inner(m + k))
    if isinstance(node, RShift):
        inner, k = evaluate_predicate(node.inner), node.amount
        return wd.PredicateSet(f"({inner.name} >> {k})",
                               lambda m: m >= k and inner(m - k))
    value = evaluate(node)
    return wd.from_semilinear(value, format_set(value))


def parse_predicate(text: str) -> wd.PredicateSet:
    return evaluate_predicate(parse_expr(text))


# ---------------------------------------------------------------------------
# printing


def format_expr(node: Expr) -> str:
    """Print an AST back to the grammar (parses to an equal value)."""
    return _fmt(node, 0)


_LEVEL = {"or": 0, "and": 1, "shift": 2, "not": 3}


def _fmt(node: Expr, level: int) -> str:
    if isinstance(node, Finite):
        return "{" + ",".join(str(n) for n in sorted(node.elements)) + "}"
    if isinstance(node, Residue):
        return f"{node.residue}%{node.modulus}"
    if isinstance(node, Interval):
        return f"[{node.lo},{node.hi})"
    if isinstance(node, Full):
        return "N"
    if isinstance(node, Empty):
        return "0"
    if isinstance(node, Predicate):
        return node.name if node.arg is None else f"{node.name}({node.arg})"
    if isinstance(node, Not):
        return _wrap(f"!{_fmt(node.inner, _LEVEL['not'])}", _LEVEL["not"], level)
    if isinstance(node, And):
        body = f"{_fmt(node.left, _LEVEL['and'])} & {_fmt(node.right, _LEVEL['and'])}"
        return _wrap(body, _LEVEL["and"], level)
    if isinstance(node, Or):
        body = f"{_fmt(node.left, _LEVEL['or'])} | {_fmt(node.right, _LEVEL['or'])}"
        return _wrap(body, _LEVEL["or"], level)
    if isinstance(node, LShift):
        body = f"{_fmt(node.inner, _LEVEL['shift'])} << {node.amount}"
        return _wrap(body, _LEVEL["shift"], level)
    if isinstance(node, RShift):
        body = f"{_fmt(node.inner, _LEVEL['shift'])} >> {node.amount}"
        return _wrap(body, _LEVEL["shift"], level)
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(body: str, mine: int, outer: int) -> str:
    return f"({body})" if mine < outer else body


def format_set(a: SemilinearSet) -> str:
    """Canonical text form of a set; re-parsing yields the same value.

    Residue classes are printed lowest residue first, shifted past the
    threshold where it cuts into them; the exceptional part comes last.
    """
    if a.is_empty():
        return "0"
    if a.is_full():
        return "N"
    pieces = []
    for r in sorted(a.pattern):
        first = r if r >= a.threshold else a.threshold + ((r - a.threshold) % a.period)
        if first < a.period:
            pieces.append(f"{first}%{a.period}")
        else:
            pieces.append(f"0%{a.period} >> {first}")
    if a.exceptional:
        pieces.append("{" + ",".join(str(n) for n in sorted(a.exceptional)) + "}")
    return " | ".join(pieces)


def format_point(p: ProfinitePoint) -> str:
    return f"point {p.modulus}:{p.residue}"
