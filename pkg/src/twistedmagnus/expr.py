"""Text grammars for the command-line surface.

Two little languages, both round-tripping through the printers here:

  group words   whitespace-separated syllables `X0^<int>` / `X1^<int>`,
                exponent omitted = 1, `1` = identity:  `X0 X1^-1 X0^2`

  series        scalars `p/q`, generators `t0 t1 u0 u1`, operators `+ - *`,
                `exp( )`, `log( )`, bracket `[a,b]` = ab - ba, parentheses:
                `1/2 * t1 + t0*t1`, `exp([u0,u1])`

Series expressions may mix coordinate systems over a Q-algebra; any term
written in the exponential letters is converted once a Magnus-letter term
enters, so `t0 + u1` means t0 + (exp-coordinate u1 rewritten in t's).
"""
from __future__ import annotations

import re

from gmpy2 import mpq

from .coeff import RingSpec
from .errors import ParseError
from .freegroup import GroupWord
from .series import COORD_T, COORD_U, Series

# -- group words -------------------------------------------------------

_SYLLABLE = re.compile(r"X([01])(?:\^(-?\d+))?\Z")


def parse_groupword(text: str) -> GroupWord:
    toks = text.split()
    if toks == ["1"]:
        return GroupWord()
    syllables = []
    for tok in toks:
        m = _SYLLABLE.match(tok)
        if m is None:
            raise ParseError(
                "bad syllable %r (expected X0^<int> or X1^<int>)" % (tok,)
            )
        syllables.append((int(m.group(1)), int(m.group(2) or 1)))
    return GroupWord(tuple(syllables))


def groupword_to_str(w: GroupWord) -> str:
    return w.to_str()


# -- series expressions ------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[tu][01]|exp|log|[+\-*/(),\[\]])")


def _lex(text: str):
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character %r at position %d" % (text[pos], pos))
        toks.append((m.group(1), m.start(1)))
        pos = m.end()
    return toks


class _SeriesParser:
    """Recursive descent; precedence is sum < product < unary < atom."""

    def __init__(self, text: str, spec: RingSpec, n: int):
        self.toks = _lex(text)
        self.i = 0
        self.spec = spec
        self.n = n

    def _peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def _next(self, expected=None):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of input (expected %s)" % (expected or "more"))
        tok, pos = self.toks[self.i]
        if expected is not None and tok != expected:
            raise ParseError("expected %r at position %d, got %r" % (expected, pos, tok))
        self.i += 1
        return tok

    def parse(self) -> Series:
        out = self._sum()
        if self.i < len(self.toks):
            tok, pos = self.toks[self.i]
            raise ParseError("trailing input %r at position %d" % (tok, pos))
        return out

    def _coerce(self, a: Series, b: Series):
        if a.coords == b.coords:
            return a, b
        # scalars are coordinate-free; otherwise rewrite in Magnus letters
        if set(a.c) <= {()}:
            return Series(a.spec, a.n, b.coords, a.c), b
        if set(b.c) <= {()}:
            return a, Series(b.spec, b.n, a.coords, b.c)
        return a.to_t(), b.to_t()

    def _sum(self) -> Series:
        out = self._product()
        while self._peek() in ("+", "-"):
            op = self._next()
            rhs = self._product()
            out, rhs = self._coerce(out, rhs)
            out = out + rhs if op == "+" else out - rhs
        return out

    def _product(self) -> Series:
        out = self._unary()
        while self._peek() in ("*", "/"):
            op = self._next()
            rhs = self._unary()
            if op == "/":
                out, rhs = self._coerce(out, rhs)
                out = out * rhs.inverse()
            else:
                out, rhs = self._coerce(out, rhs)
                out = out * rhs
        return out

    def _unary(self) -> Series:
        if self._peek() == "-":
            self._next()
            return -self._unary()
        if self._peek() == "+":
            self._next()
            return self._unary()
        return self._atom()

    def _atom(self) -> Series:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input (expected an atom)")
        if tok.isdigit():
            self._next()
            return Series.scalar(self.spec, self.n, COORD_T, self.spec.from_int(int(tok)))
        if tok in ("t0", "t1", "u0", "u1"):
            self._next()
            coords = COORD_T if tok[0] == "t" else COORD_U
            return Series.gen(self.spec, self.n, coords, int(tok[1]))
        if tok in ("exp", "log"):
            self._next()
            self._next("(")
            arg = self._sum()
            self._next(")")
            return arg.exp() if tok == "exp" else arg.log()
        if tok == "(":
            self._next()
            out = self._sum()
            self._next(")")
            return out
        if tok == "[":
            self._next()
            a = self._sum()
            self._next(",")
            b = self._sum()
            self._next("]")
            a, b = self._coerce(a, b)
            return a * b - b * a
        pos = self.toks[self.i][1]
        raise ParseError("unexpected %r at position %d (expected an atom)" % (tok, pos))


def parse_series(text: str, spec: RingSpec, n: int) -> Series:
    return _SeriesParser(text, spec, n).parse()


def series_to_expr(s: Series) -> str:
    """Print a series in the literal grammar (one term per basis word)."""
    if not s.c:
        return "0"
    letter = s.coords
    parts = []
    for w in sorted(s.c, key=lambda w: (len(w), w)):
        v = s.c[w]
        if s.spec.is_q_algebra():
            q = mpq(v.v) if not isinstance(v.v, tuple) else None
            if q is None:
                raise ParseError("dual-number series have no literal form")
            scalar = str(q)
        else:
            scalar = str(v.v)
        mono = "*".join("%s%d" % (letter, i) for i in w)
        parts.append(scalar if not mono else "%s*%s" % (scalar, mono))
    return " + ".join(parts)


def parse_g_argument(text: str, spec: RingSpec, n: int) -> Series:
    """A group element given either as a group word or a series expression.

    Group words evaluate through X_i -> 1 + t_i; series expressions are
    taken literally and converted to Magnus coordinates.
    """
    from .freegroup import eval_magnus

    stripped = text.strip()
    if stripped and all(
        _SYLLABLE.match(tok) or tok == "1" for tok in stripped.split()
    ):
        return eval_magnus(parse_groupword(stripped), spec, n)
    return parse_series(text, spec, n).in_coords(COORD_T)
