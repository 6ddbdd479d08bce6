"""Command-line front end.

Every command prints a deterministic report: ``--format human`` (default)
emits ``key = value`` lines, ``--format json`` emits one JSON document with
sorted keys, so identical inputs always produce identical bytes.  Domain
errors (violated preconditions such as insufficient depth) exit with code
2 and a one-line diagnostic on stderr; usage errors exit with code 1.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import profinite as pf
from . import pairs as prs
from . import ramsey as rm
from . import semilinear as sl
from . import setexpr as sx
from . import windows as wd
from .errors import DomainError, ParseError


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_fmt_value(x) for x in v)
    return str(v)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, default=str))
    else:
        for key, value in report.items():
            print(f"{key} = {_fmt_value(value)}")


# ---------------------------------------------------------------------------
# input files


def _read_lines(path: str) -> list[str]:
    with open(path, "r", encoding="utf-8") as fh:
        return [line.strip() for line in fh if line.strip()]


_ARROW = re.compile(r"^(\d+)\s*->\s*(\d+)$")


def _read_graph(path: str) -> rm.FunctionalGraph:
    """Functional graph from 'i -> f(i)' lines, one per vertex."""
    lines = _read_lines(path)
    n = len(lines)
    succ = [-1] * n
    for line in lines:
        m = _ARROW.match(line)
        if not m:
            raise ParseError(f"expected 'i -> j', got {line!r}", 0)
        i, j = int(m.group(1)), int(m.group(2))
        if not 0 <= i < n or not 0 <= j < n:
            raise ParseError(f"vertex out of range in {line!r}", 0)
        if succ[i] != -1:
            raise ParseError(f"vertex {i} mapped twice", 0)
        succ[i] = j
    return rm.FunctionalGraph(tuple(succ))


def _read_coloring(path: str) -> rm.Coloring:
    """Coloring from one line of color indices."""
    lines = _read_lines(path)
    if len(lines) != 1:
        raise ParseError("coloring file must hold one line of color indices", 0)
    try:
        colors = tuple(int(tok) for tok in lines[0].split())
    except ValueError:
        raise ParseError("color indices must be integers", 0) from None
    if not colors or min(colors) < 1:
        raise ParseError("color indices start at 1", 0)
    return rm.Coloring(colors)


def _read_window(path: str) -> wd.WindowSet:
    """Window from one line of 0/1 bits (spaces optional)."""
    lines = _read_lines(path)
    if len(lines) != 1:
        raise ParseError("window file must hold one line of 0/1 bits", 0)
    bits = lines[0].replace(" ", "").replace("\t", "")
    if not bits or set(bits) - {"0", "1"}:
        raise ParseError("window line may contain only 0 and 1", 0)
    return wd.WindowSet(0, tuple(c == "1" for c in bits))


# ---------------------------------------------------------------------------
# command handlers


def _cmd_density(args) -> dict:
    a = sx.parse_set(args.set)
    return {
        "command": "density",
        "set": sx.format_set(a),
        "sigma": str(sl.schnirelmann(a)),
        "lower": str(sl.lower_density(a)),
        "upper": str(sl.upper_density(a)),
        "asymptotic": str(sl.asymptotic(a)),
        "banach": str(sl.banach(a)),
    }


def _cmd_shift(args) -> dict:
    a = sx.parse_set(args.set)
    gamma = sx.parse_point(args.point)
    hs = pf.hyper_shift(a, gamma)
    us = pf.ultrafilter_shift(a, gamma)
    return {
        "command": "shift",
        "set": sx.format_set(a),
        "point": sx.format_point(gamma),
        "hyper_shift": sx.format_set(hs),
        "ultrafilter_shift": sx.format_set(us),
        "agree": hs == us,
    }


def _cmd_embed(args) -> dict:
    a = sx.parse_set(args.first)
    b = sx.parse_set(args.second)
    witness = wd.exact_embed_decide(a, b)
    report = {
        "command": "embed",
        "first": sx.format_set(a),
        "second": sx.format_set(b),
        "embedded": witness is not None,
    }
    report["witness"] = "none" if witness is None else f"{witness.kind} {witness.value}"
    return report


def _cmd_psum(args) -> dict:
    a = sx.parse_set(args.set)
    gamma = sx.parse_point(args.left)
    delta = sx.parse_point(args.right)
    return {
        "command": "psum",
        "set": sx.format_set(a),
        "left": sx.format_point(gamma),
        "right": sx.format_point(delta),
        "member": pf.pseudo_sum_member(a, gamma, delta),
    }


def _cmd_star(args) -> dict:
    a = sx.parse_set(args.set)
    gamma = sx.parse_point(args.left)
    delta = sx.parse_point(args.right)
    return {
        "command": "star",
        "set": sx.format_set(a),
        "left": sx.format_point(gamma),
        "right": sx.format_point(delta),
        "member": pf.star_member(a, gamma, delta),
    }


def _cmd_idem(args) -> dict:
    gamma = sx.parse_point(args.point)
    return {
        "command": "idem",
        "point": sx.format_point(gamma),
        "idempotent": pf.is_idempotent(gamma),
    }


def _cmd_tensor(args) -> dict:
    x = sx.parse_pair_set(args.pair_set)
    gamma = sx.parse_point(args.left)
    delta = sx.parse_point(args.right)
    return {
        "command": "tensor",
        "pair_set": args.pair_set.strip(),
        "left": sx.format_point(gamma),
        "right": sx.format_point(delta),
        "member": prs.tensor_member(x, gamma, delta),
    }


def _cmd_color3(args) -> dict:
    graph = _read_graph(args.file)
    coloring = rm.three_color(graph)
    return {
        "command": "color3",
        "vertices": graph.size,
        "coloring": list(coloring.colors),
        "verified": rm.verify_coloring(graph, coloring),
    }


def _cmd_rado(args) -> dict:
    try:
        coeffs = tuple(int(tok) for tok in args.coefficients.split(","))
    except ValueError:
        raise ParseError("coefficients must be a comma-separated integer list", 0) \
            from None
    eq = rm.LinearEquation(coeffs)
    return {
        "command": "rado",
        "equation": args.coefficients,
        "partition_regular": rm.rado_single_pr(eq),
    }


def _cmd_schur(args) -> dict:
    eq = rm.LinearEquation((1, 1, -1))
    return {
        "command": "schur",
        "n": args.n,
        "colors": args.r,
        "forced": rm.exhaustive_pr_check(eq, args.n, args.r),
    }


def _cmd_hindman(args) -> dict:
    coloring = _read_coloring(args.file)
    found = rm.find_fs_set(coloring, args.k)
    report = {
        "command": "hindman",
        "domain": coloring.size,
        "k": args.k,
    }
    if found is None:
        report["witness"] = "none"
    else:
        xs, color = found
        report["witness"] = list(xs)
        report["color"] = color
        report["sums"] = sorted(rm.fs(xs))
    return report


def _cmd_banach_start(args) -> dict:
    window = _read_window(args.file)
    gamma = wd.good_start(window, args.nu)
    return {
        "command": "banach-start",
        "length": window.length,
        "nu": args.nu,
        "density": str(window.density()),
        "gamma": gamma,
        "verified": wd.good_start_ok(window, args.nu, gamma),
    }


def _cmd_demo_noncomm(args) -> dict:
    report = wd.noncomm_demo(args.nu, args.length)
    return {
        "command": "demo-noncomm",
        "nu": report.nu,
        "length": report.length,
        "even_origin": report.even_origin,
        "even_window": "".join("1" if b else "0" for b in report.even_window.bits),
        "even_all_true": report.even_all_true,
        "odd_origin": report.odd_origin,
        "odd_window": "".join("1" if b else "0" for b in report.odd_window.bits),
        "odd_all_false": report.odd_all_false,
    }


def _cmd_gamma_fip(args) -> dict:
    exprs = _read_lines(args.file)
    if not exprs:
        raise ParseError("gamma-fip file must hold one set expression per line", 0)
    limit = args.limit
    preds = [sx.parse_predicate(text) for text in exprs]
    sets = [frozenset(x for x in range(1, limit + 1) if p(x)) for p in preds]
    a, b = rm.gamma_fip_witness(sets, limit)
    sig = tuple(a in s for s in sets)
    verified = all(tuple(v in s for s in sets) == sig for v in (b, b - a))
    return {
        "command": "gamma-fip",
        "sets": len(sets),
        "limit": limit,
        "a": a,
        "b": b,
        "difference": b - a,
        "verified": verified,
    }


# ---------------------------------------------------------------------------
# machine-block schemas (JSON Schema fragments, one per command)

_STR = {"type": "string"}
_INT = {"type": "integer"}
_BOOL = {"type": "boolean"}
_INTS = {"type": "array", "items": _INT}


def _schema(required: dict) -> dict:
    return {
        "type": "object",
        "required": sorted(required),
        "properties": {"command": _STR, **required},
        "additionalProperties": True,
    }


SCHEMAS = {
    "density": _schema({"set": _STR, "sigma": _STR, "lower": _STR, "upper": _STR,
                        "asymptotic": _STR, "banach": _STR}),
    "shift": _schema({"set": _STR, "point": _STR, "hyper_shift": _STR,
                      "ultrafilter_shift": _STR, "agree": _BOOL}),
    "embed": _schema({"first": _STR, "second": _STR, "embedded": _BOOL,
                      "witness": _STR}),
    "psum": _schema({"set": _STR, "left": _STR, "right": _STR, "member": _BOOL}),
    "star": _schema({"set": _STR, "left": _STR, "right": _STR, "member": _BOOL}),
    "idem": _schema({"point": _STR, "idempotent": _BOOL}),
    "tensor": _schema({"pair_set": _STR, "left": _STR, "right": _STR,
                       "member": _BOOL}),
    "color3": _schema({"vertices": _INT, "coloring": _INTS, "verified": _BOOL}),
    "rado": _schema({"equation": _STR, "partition_regular": _BOOL}),
    "schur": _schema({"n": _INT, "colors": _INT, "forced": _BOOL}),
    "hindman": _schema({"domain": _INT, "k": _INT}),
    "banach-start": _schema({"length": _INT, "nu": _INT, "density": _STR,
                             "gamma": _INT, "verified": _BOOL}),
    "demo-noncomm": _schema({"nu": _INT, "length": _INT, "even_origin": _INT,
                             "even_window": _STR, "even_all_true": _BOOL,
                             "odd_origin": _INT, "odd_window": _STR,
                             "odd_all_false": _BOOL}),
    "gamma-fip": _schema({"sets": _INT, "limit": _INT, "a": _INT, "b": _INT,
                          "difference": _INT, "verified": _BOOL}),
}


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(
        prog="ultraperiodic",
        description="Ultrafilter calculus on eventually periodic sets, "
                    "with finite-window and Ramsey companions.")
    top.add_argument("--format", choices=("human", "json"), default="human",
                     help="report style (identical inputs give identical bytes)")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("density", help="Schnirelmann, asymptotic and Banach "
                       "density of a set, all exact rationals")
    p.add_argument("set", help="set expression, e.g. '0%%3 | {5}'")
    p.set_defaults(handler=_cmd_density)

    p = sub.add_parser("shift", help="shift a set by an infinite point; the "
                       "hyper-shift and the ultrafilter-shift {n : A-n in U} "
                       "coincide, and both are printed")
    p.add_argument("set")
    p.add_argument("point", help="'point M:r' with the set's period dividing M")
    p.set_defaults(handler=_cmd_shift)

    p = sub.add_parser("embed", help="decide exact embeddability: the first set "
                       "equals some finite or infinite shift of the second")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser("psum", help="membership in the pseudo-sum: A is in "
                       "U (+) V iff the shift A_V lies in U")
    p.add_argument("set")
    p.add_argument("left", help="point generating U")
    p.add_argument("right", help="point generating V")
    p.set_defaults(handler=_cmd_psum)

    p = sub.add_parser("star", help="membership in the rightward-shift sum: "
                       "A is in U (*) V iff {n : A+n in V} lies in U")
    p.add_argument("set")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_star)

    p = sub.add_parser("idem", help="idempotency of the generated ultrafilter "
                       "at this depth: U (+) U = U iff the residue is 0")
    p.add_argument("point")
    p.set_defaults(handler=_cmd_idem)

    p = sub.add_parser("tensor", help="membership of a 2D set in the tensor "
                       "product: fiberwise membership set lies in the left point")
    p.add_argument("pair_set", help="e.g. 'rect(0%%2, 1%%3)', 'sumband(0%%3)', "
                   "'diffband({0})', 'delta+'")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_tensor)

    p = sub.add_parser("color3", help="3-color a fixed-point-free functional "
                       "graph so every vertex differs from its image")
    p.add_argument("file", help="lines 'i -> f(i)', vertices 0..N-1")
    p.set_defaults(handler=_cmd_color3)

    p = sub.add_parser("rado", help="partition regularity of c1*X1+...+ck*Xk=0: "
                       "holds iff some nonempty subset of coefficients sums to 0")
    p.add_argument("coefficients", help="comma-separated, e.g. '1,-1,-1'")
    p.set_defaults(handler=_cmd_rado)

    p = sub.add_parser("schur", help="check that every r-coloring of [1,n] has "
                       "a monochromatic x, y, x+y (exhaustive)")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(handler=_cmd_schur)

    p = sub.add_parser("hindman", help="find k elements all of whose subset "
                       "sums land in one color class of the given coloring")
    p.add_argument("file", help="one line of color indices for 1..N")
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_hindman)

    p = sub.add_parser("banach-start", help="find an offset in a 0/1 window "
                       "whose first nu prefix densities all reach the window "
                       "density minus nu/N")
    p.add_argument("file", help="one line of 0/1 bits")
    p.add_argument("nu", type=int)
    p.set_defaults(handler=_cmd_banach_start)

    p = sub.add_parser("demo-noncomm", help="show the squares-blocks set "
                       "answering oppositely to shifts at nu^2 and (nu+1)^2, "
                       "the mechanism that breaks pseudo-sum commutativity")
    p.add_argument("nu", type=int, help="even block index")
    p.add_argument("length", type=int)
    p.set_defaults(handler=_cmd_demo_noncomm)

    p = sub.add_parser("gamma-fip", help="find a pair a, b with a, b, b-a in "
                       "one atom of the given sets (x - y = z is partition "
                       "regular, so small windows already contain one)")
    p.add_argument("file", help="one set expression per line")
    p.add_argument("--limit", type=int, default=100,
                   help="window [1, limit] to search (default 100)")
    p.set_defaults(handler=_cmd_gamma_fip)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except DomainError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"cannot read input: {err}", file=sys.stderr)
        return 1
    _emit(report, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
