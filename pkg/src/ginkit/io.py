"""Ideal files and report rendering.

Ideal file grammar::

    ring CHAR NAME NAME ...        # first non-blank line; CHAR is 0 or a prime
    POLY                           # one polynomial per line
    POLY := [+|-] TERM { (+|-) TERM }
    TERM := FACTOR { * FACTOR }
    FACTOR := INT [/ INT] | NAME [^ INT]

``#`` starts a comment running to the end of the line.  Products need an
explicit ``*`` so that ``x12`` is always a single name.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .poly import Polynomial, Ring, TermOrder
from .reduction import ReductionResult

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/]))")


def _tokenize(text: str, lineno: int, offset: int = 0):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", lineno, offset + bad + 1)
        kind = m.lastgroup
        col = offset + m.start(kind) + 1
        tokens.append((kind, m.group(kind), col))
        pos = m.end()
    return tokens


class _PolyParser:
    def __init__(self, ring: Ring, tokens, lineno: int, end_col: int):
        self.ring = ring
        self.tokens = tokens
        self.k = 0
        self.lineno = lineno
        self.end_col = end_col

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else None

    def error(self, msg, tok=None):
        col = tok[2] if tok else self.end_col
        raise ParseError(msg, self.lineno, col)

    def take(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of line")
        self.k += 1
        return tok

    def poly(self) -> dict:
        terms: dict = {}
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        while True:
            c, mono = self.term()
            terms[mono] = terms.get(mono, 0) + sign * c
            tok = self.peek()
            if tok is None:
                return terms
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                sign = -1 if tok[1] == "-" else 1
                continue
            self.error(f"expected '+', '-' or '*' before {tok[1]!r}", tok)

    def term(self):
        expo = [0] * self.ring.n
        coeff_box = [Fraction(1)]
        self.factor(expo, coeff_box)
        while (tok := self.peek()) is not None and tok[0] == "op" and tok[1] == "*":
            self.take()
            self.factor(expo, coeff_box)
        return coeff_box[0], tuple(expo)

    def factor(self, expo, coeff_box):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            c = Fraction(int(val))
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    self.error("expected an integer denominator", den)
                if int(den[1]) == 0:
                    self.error("division by zero", den)
                if self.ring.characteristic and int(den[1]) % self.ring.characteristic == 0:
                    self.error(f"denominator {den[1]} is zero in characteristic {self.ring.characteristic}", den)
                c /= int(den[1])
            coeff_box[0] *= c
        elif kind == "name":
            try:
                v = self.ring.index(val)
            except KeyError:
                self.error(f"undeclared variable {val}", tok)
            e = 1
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "^":
                self.take()
                pw = self.take()
                if pw[0] != "num":
                    self.error("expected an integer exponent", pw)
                e = int(pw[1])
            expo[v] += e
        else:
            self.error(f"unexpected {val!r}", tok)


def _parse_ring(line: str, lineno: int, characteristic: int | None) -> Ring:
    parts = line.split()
    if not parts or parts[0] != "ring":
        raise ParseError("expected a ring declaration 'ring CHAR x1 x2 ...'", lineno, 1)
    if len(parts) < 3:
        raise ParseError("ring declaration needs a characteristic and at least one variable", lineno, 1)
    if not parts[1].isdigit():
        raise ParseError(f"characteristic must be an integer, got {parts[1]!r}", lineno, line.index(parts[1]) + 1)
    for name in parts[2:]:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"invalid variable name {name!r}", lineno, line.index(name) + 1)
    char = int(parts[1]) if characteristic is None else characteristic
    try:
        return Ring(parts[2:], char)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, 1) from None


def parse_ideal(text: str, characteristic: int | None = None) -> tuple[Ring, list[Polynomial]]:
    """Parse an ideal file; ``characteristic`` overrides the declared one."""
    ring = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ring is None:
            ring = _parse_ring(line, lineno, characteristic)
            continue
        tokens = _tokenize(line, lineno)
        terms = _PolyParser(ring, tokens, lineno, len(line.rstrip()) + 1).poly()
        f = Polynomial(ring, terms)
        if f.is_zero():
            raise ParseError("polynomial is zero", lineno, 1)
        polys.append(f)
    if ring is None:
        raise ParseError("missing ring declaration", 1, 1)
    return ring, polys


def format_ideal(ring: Ring, polys: Sequence[Polynomial], order: TermOrder = TermOrder.DEGREVLEX) -> str:
    """Canonical ideal file; ``parse_ideal`` reads it back to the same polynomials."""
    lines = [f"ring {ring.characteristic} " + " ".join(ring.var_names)]
    lines.extend(f.to_string(order) for f in polys)
    return "\n".join(lines) + "\n"


# rendering

def jsonable(v):
    """``-inf`` becomes None, ``inf`` the string "inf"; tuples become lists."""
    if isinstance(v, float) and math.isinf(v):
        return None if v < 0 else "inf"
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, Fraction):
        return str(v)
    return v


def _fmt(v) -> str:
    if isinstance(v, float) and math.isinf(v):
        return "-inf" if v < 0 else "inf"
    if v is None:
        return "n/a"
    return str(v)


def ring_dict(ring: Ring) -> dict:
    return {"characteristic": ring.characteristic, "variables": list(ring.var_names)}


def _profile_dict(p):
    if p is None:
        return None
    return {"reg_profile": list(p.reg_q), "astar_profile": list(p.astar_q)}


def report_dict(rep, timings: bool = False) -> dict:
    """Stable JSON layout of an :class:`~ginkit.report.InvariantReport`."""
    cfg = rep.config
    out = {
        "ring": ring_dict(rep.ring),
        "order": str(cfg.order),
        "seed": cfg.seed if cfg.use_gin else None,
        "trials": cfg.trials if cfg.use_gin else None,
        "coeff_bound": cfg.bound if cfg.use_gin else None,
        "used_gin": cfg.use_gin,
        "gin": rep.gin.to_strings(),
        "dimension": rep.dimension,
        "delta": list(rep.delta.descending()),
        "reg_profile": list(rep.colon.reg_q),
        "astar_profile": list(rep.colon.astar_q),
        "reg": rep.colon.reg_full,
        "astar": rep.colon.astar_full,
        "reg_ideal": rep.colon.reg_ideal,
        "routes": {
            "colon": _profile_dict(rep.colon),
            "borel": _profile_dict(rep.borel),
            "betti": _profile_dict(rep.betti_profile),
        },
        "betti": None
        if rep.betti is None
        else {
            "subject": "S/J",
            "entries": [list(e) for e in rep.betti.entries()],
            "b": list(rep.betti.b_sequence),
        },
        "extremal_betti": None if rep.extremal is None else [list(e) for e in rep.extremal],
        "reduction_number": None if rep.reduction is None else rep.reduction.r,
        "reduction_witness": None if rep.reduction is None else rep.reduction.witness,
        "hilbert_function": rep.hilbert,
        "routes_agree": dict(rep.routes_agree),
        "notes": dict(rep.notes),
    }
    if timings:
        out["timings"] = {k: round(v, 6) for k, v in rep.timings.items()}
    return jsonable(out)


def reduction_dict(res) -> dict:
    out = {
        "ring": None if res.ring is None else ring_dict(res.ring),
        "dimension": res.d,
        "reduction_number": res.r,
        "route": res.route,
        "witness": res.witness,
        "agreement": res.agreement,
    }
    out.update(res.details)
    return jsonable(out)


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def _text_report(rep) -> str:
    cfg = rep.config
    n = rep.ring.n
    lines = [
        f"ring        : char {rep.ring.characteristic}, variables {' '.join(rep.ring.var_names)}",
        f"order       : {cfg.order}",
    ]
    if cfg.use_gin:
        lines.append(f"sampling    : seed {cfg.seed}, trials {cfg.trials}, coeff bound {cfg.bound}")
        lines.append(f"gin         : {rep.gin}")
    else:
        lines.append(f"input       : {rep.gin}  (no gin)")
    lines.append(f"dimension   : {rep.dimension}")
    lines.append("delta       : " + ", ".join(f"d{i}={_fmt(rep.delta[i])}" for i in range(n, 0, -1)))
    lines.append("")
    routes = [("colon", rep.colon), ("borel", rep.borel), ("betti", rep.betti_profile)]
    header = f"{'t':>3}  " + "  ".join(f"{name + ' reg':>10} {name + ' a*':>9}" for name, _ in routes)
    lines.append(header)
    for t in range(n):
        cells = []
        for _, p in routes:
            if p is None:
                cells.append(f"{'n/a':>10} {'n/a':>9}")
            else:
                cells.append(f"{_fmt(p.reg_q[t]):>10} {_fmt(p.astar_q[t]):>9}")
        lines.append(f"{t:>3}  " + "  ".join(cells))
    lines.append("")
    lines.append(f"reg(S/J)    : {_fmt(rep.colon.reg_full)}   reg(J): {_fmt(rep.colon.reg_ideal)}   a*(S/J): {_fmt(rep.colon.astar_full)}")
    if rep.betti is not None:
        lines.append("betti S/J   : " + ", ".join(f"b{i},{j}={v}" for i, j, v in rep.betti.entries()))
        lines.append("extremal    : " + ", ".join(f"beta_{l},{l + m}={v}" for l, m, v in rep.extremal))
    if rep.reduction is not None:
        lines.append(f"reduction   : r = {rep.reduction.r}  (witness {rep.reduction.witness})")
    if rep.hilbert is not None:
        lines.append("hilbert     : " + " ".join(str(v) for v in rep.hilbert["gin"]))
    agree = ", ".join(f"{k}={_fmt(v).lower()}" for k, v in rep.routes_agree.items())
    lines.append(f"routes agree: {agree}")
    for k, v in rep.notes.items():
        lines.append(f"note        : {k}: {v}")
    return "\n".join(lines) + "\n"


def _text_reduction(res) -> str:
    lines = [
        f"dimension        : {res.d}",
        f"reduction number : {res.r}",
        f"route            : {res.route}",
        f"witness          : {res.witness}",
    ]
    if res.agreement is not None:
        lines.append(f"routes agree     : {str(res.agreement).lower()}")
    for k, v in res.details.items():
        lines.append(f"{k:<17}: {v if not isinstance(v, list) else ', '.join(v)}")
    return "\n".join(lines) + "\n"


def render_report(report, format: str = "text", timings: bool = False) -> str:
    """Render an invariant report or a reduction result as ``json`` or ``text``."""
    is_red = isinstance(report, ReductionResult)
    if format == "json":
        return to_json(reduction_dict(report) if is_red else report_dict(report, timings))
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    if is_red:
        return _text_reduction(report)
    text = _text_report(report)
    if timings:
        text += "timings     : " + ", ".join(f"{k}={v:.3f}s" for k, v in report.timings.items()) + "\n"
    return text
