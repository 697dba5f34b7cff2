"""The free group on X0, X1: reduced words, endomorphisms, and evaluations.

Words are kept in reduced syllable form [(gen, exp), ...] with gen in {0, 1},
exp != 0, and no two adjacent syllables on the same generator.
"""
from __future__ import annotations

from .coeff import RingSpec, int_binomial
from .errors import MixedContext
from .series import COORD_T, COORD_U, PowerSeries1, Series


class GroupWord:
    __slots__ = ("syllables",)

    def __init__(self, syllables=()):
        self.syllables = _reduce(syllables)

    def __mul__(self, other):
        return GroupWord(self.syllables + other.syllables)

    def __invert__(self):
        return GroupWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, e: int):
        if e < 0:
            return (~self) ** (-e)
        out = GroupWord()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def __repr__(self):
        return "GroupWord(%s)" % (self.to_str(),)

    def to_str(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for g, e in self.syllables:
            parts.append("X%d" % g if e == 1 else "X%d^%d" % (g, e))
        return " ".join(parts)

    def is_identity(self) -> bool:
        return not self.syllables

    def length(self) -> int:
        """Word length as a product of single letters."""
        return sum(abs(e) for _, e in self.syllables)


def _reduce(syllables):
    out = []
    for g, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e2 = out[-1][1] + e
            out.pop()
            if e2:
                out.append((g, e2))
        else:
            out.append((g, e))
    return tuple(out)


IDENTITY = GroupWord()
X0 = GroupWord(((0, 1),))
X1 = GroupWord(((1, 1),))


def gw_hom(img0: GroupWord, img1: GroupWord, w: GroupWord) -> GroupWord:
    """The endomorphism X_i -> img_i, applied to w."""
    imgs = (img0, img1)
    out = GroupWord()
    for g, e in w.syllables:
        out = out * imgs[g] ** e
    return out


def theta(w: GroupWord) -> GroupWord:
    """The involution exchanging X0 and X1."""
    return gw_hom(X1, X0, w)


def kappa(w: GroupWord) -> GroupWord:
    """The order-3 map X0 -> X1, X1 -> (X0 X1)^(-1)."""
    return gw_hom(X1, ~(X0 * X1), w)


def enumerate_reduced(maxlen: int):
    """All reduced words of length <= maxlen, shortest first.

    Generation works letter by letter over {X0, X0^-1, X1, X1^-1}, never
    appending the inverse of the previous letter, so each reduced word shows
    up exactly once.
    """
    letters = [(0, 1), (0, -1), (1, 1), (1, -1)]
    frontier = [((), None)]
    yield GroupWord()
    for _ in range(maxlen):
        nxt = []
        for word, last in frontier:
            for g, s in letters:
                if last is not None and last == (g, -s):
                    continue
                w2 = word + ((g, s),)
                nxt.append((w2, (g, s)))
                yield GroupWord(w2)
        frontier = nxt


def gen_power_magnus(spec: RingSpec, n: int, i: int, e: int) -> Series:
    """X_i^e = (1 + t_i)^e as a series, exact over any ring."""
    terms = []
    for k in range(n + 1):
        c = int_binomial(e, k)
        if c:
            terms.append(((i,) * k, spec.from_int(c)))
    return Series.from_terms(spec, n, COORD_T, terms)


def eval_magnus(w: GroupWord, spec: RingSpec, n: int) -> Series:
    """Group homomorphism X_i -> 1 + t_i into units of the series ring."""
    out = Series.one(spec, n, COORD_T)
    for g, e in w.syllables:
        out = out * gen_power_magnus(spec, n, g, e)
    return out


def eval_exp(w: GroupWord, spec: RingSpec, n: int) -> Series:
    """Group homomorphism X_i -> exp(u_i); needs a Q-algebra."""
    out = Series.one(spec, n, COORD_U)
    for g, e in w.syllables:
        out = out * Series.gen(spec, n, COORD_U, g).scale(e).exp()
    return out


def ev_F1(s: Series) -> PowerSeries1:
    """Abelianize away the first generator: t_0 -> 0, t_1 -> s."""
    if s.coords != COORD_T:
        raise MixedContext("ev_F1 expects Magnus coordinates")
    out = [s.spec.zero()] * (s.n + 1)
    for w, el in s.c.items():
        if 0 in w:
            continue
        out[len(w)] = out[len(w)] + el
    return PowerSeries1(s.spec, s.n, out)


def iso_to_qt(ps: PowerSeries1) -> PowerSeries1:
    """Substitute s = e^t - 1, landing in the one-variable exp coordinates."""
    spec, n = ps.spec, ps.n
    et_minus_1 = PowerSeries1.var(spec, n).exp() - PowerSeries1.one(spec, n)
    return ps.compose(et_minus_1)
