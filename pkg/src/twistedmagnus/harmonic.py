"""Harmonic-type coproducts on the subalgebra W and the quotient module M.

Inside the Magnus-coordinate series ring, W is spanned by 1 and the words
ending in the letter 1 (i.e. k*1 + V*(X1 - 1)), and M is the quotient of the
augmentation part by the right ideal V*(X0 - 1); a class in M has a unique
representative supported on W-words, obtained by deleting every word that
ends in the letter 0.

The coproduct on W is defined through the elements

    Y_a = X0^a (X1 - 1) = (1 + t0)^a t1     (a in Z, Y_0 = t1)

on which it takes the closed forms (empty sums for |a| = 1):

    D(Y_a)  = Y_a x 1 + 1 x Y_a - sum_{0 < a' < a} Y_{a'} x Y_{a - a'}
    D(Y_-a) = Y_-a x X1 + X1 x Y_-a + sum_{0 < a' < a} Y_-a' x Y_{a' - a}
    D(t1)   = t1 x t1 + t1 x 1 + 1 x t1         (X1 group-like)

A word t0^m t1 expands as sum_{a=0}^m (-1)^(m-a) C(m,a) Y_a, and a general
W-word is the product of its t0^m t1 blocks, so the coproduct of any basis
word is the product of its block coproducts.
"""
from __future__ import annotations

from .coeff import RingSpec, int_binomial
from .errors import MixedContext, NotInW
from .series import COORD_T, EMPTY, Series, TensorSeries

# -- membership and projection -----------------------------------------


def is_in_W(s: Series) -> bool:
    """True when every supported word is empty or ends in the letter 1."""
    if s.coords != COORD_T:
        raise MixedContext("W membership is read in Magnus coordinates")
    return all(not w or w[-1] == 1 for w in s.c)


def assert_in_W(s: Series):
    if not is_in_W(s):
        raise NotInW("series has a word ending in the letter 0")


def project_M(s: Series) -> Series:
    """Canonical representative of s * 1_B: delete words ending in 0."""
    if s.coords != COORD_T:
        raise MixedContext("the quotient M is read in Magnus coordinates")
    return Series(
        s.spec, s.n, s.coords,
        {w: el for w, el in s.c.items() if not w or w[-1] == 1},
    )


def tensor_project_M(t: TensorSeries) -> TensorSeries:
    return TensorSeries(
        t.spec, t.n, t.coords,
        {
            (w1, w2): el
            for (w1, w2), el in t.c.items()
            if (not w1 or w1[-1] == 1) and (not w2 or w2[-1] == 1)
        },
    )


# -- the Y elements ----------------------------------------------------

_Y_CACHE: dict = {}


def y_series(spec: RingSpec, n: int, a: int) -> Series:
    """Y_a = (1 + t0)^a t1 as a truncated series (any integer a)."""
    key = (spec, n, a)
    got = _Y_CACHE.get(key)
    if got is None:
        from .freegroup import gen_power_magnus

        t1 = Series.gen(spec, n, COORD_T, 1)
        got = gen_power_magnus(spec, n, 0, a) * t1
        _Y_CACHE[key] = got
    return got


def blocks_of(word) -> list:
    """Split a W-word into its t0^m t1 blocks, returning the list of m's."""
    if word and word[-1] != 1:
        raise NotInW("word does not end in the letter 1")
    out, run = [], 0
    for letter in word:
        if letter == 0:
            run += 1
        else:
            out.append(run)
            run = 0
    return out


def blocks_to_Y(word) -> dict:
    """Expand a W-word in the Y basis: map (a_1, ..., a_k) -> integer."""
    out = {EMPTY: 1}
    for m in blocks_of(word):
        nxt = {}
        for tail, c in out.items():
            for a in range(m + 1):
                coeff = c * int_binomial(m, a) * (-1 if (m - a) % 2 else 1)
                key = tail + (a,)
                nxt[key] = nxt.get(key, 0) + coeff
        out = nxt
    return out


# -- coproducts --------------------------------------------------------

_DELTA_Y_CACHE: dict = {}
_DELTA_BLOCK_CACHE: dict = {}
_DELTA_WORD_CACHE: dict = {}


def delta_Y(spec: RingSpec, n: int, a: int) -> TensorSeries:
    """Coproduct of Y_a (a any integer; a = 0 means t1)."""
    key = (spec, n, a)
    got = _DELTA_Y_CACHE.get(key)
    if got is not None:
        return got
    one = Series.one(spec, n, COORD_T)
    if a == 0:
        t1 = Series.gen(spec, n, COORD_T, 1)
        out = (
            TensorSeries.tensor(t1, t1)
            + TensorSeries.tensor(t1, one)
            + TensorSeries.tensor(one, t1)
        )
    elif a > 0:
        ya = y_series(spec, n, a)
        out = TensorSeries.tensor(ya, one) + TensorSeries.tensor(one, ya)
        for ap in range(1, a):
            out = out - TensorSeries.tensor(
                y_series(spec, n, ap), y_series(spec, n, a - ap)
            )
    else:
        x1 = one + Series.gen(spec, n, COORD_T, 1)
        ya = y_series(spec, n, a)
        out = TensorSeries.tensor(ya, x1) + TensorSeries.tensor(x1, ya)
        for ap in range(1, -a):
            out = out + TensorSeries.tensor(
                y_series(spec, n, -ap), y_series(spec, n, ap + a)
            )
    _DELTA_Y_CACHE[key] = out
    return out


def _delta_block(spec: RingSpec, n: int, m: int) -> TensorSeries:
    key = (spec, n, m)
    got = _DELTA_BLOCK_CACHE.get(key)
    if got is not None:
        return got
    out = TensorSeries.zero(spec, n, COORD_T)
    for a in range(m + 1):
        c = int_binomial(m, a) * (-1 if (m - a) % 2 else 1)
        out = out + delta_Y(spec, n, a).scale(c)
    _DELTA_BLOCK_CACHE[key] = out
    return out


def delta_W_word(spec: RingSpec, n: int, word) -> TensorSeries:
    """Coproduct of a single W basis word, cached."""
    key = (spec, n, word)
    got = _DELTA_WORD_CACHE.get(key)
    if got is not None:
        return got
    out = TensorSeries.unit(spec, n, COORD_T)
    for m in blocks_of(word):
        out = out * _delta_block(spec, n, m)
    _DELTA_WORD_CACHE[key] = out
    return out


def coproduct_W(s: Series) -> TensorSeries:
    assert_in_W(s)
    out = TensorSeries.zero(s.spec, s.n, COORD_T)
    for w, el in s.c.items():
        out = out + delta_W_word(s.spec, s.n, w).scale(el)
    return out


def coproduct_M(m: Series) -> TensorSeries:
    """Coproduct of the class m * 1_B; m must be the canonical representative."""
    assert_in_W(m)
    return tensor_project_M(coproduct_W(m))


def grouplike_M(m: Series) -> bool:
    """Is the class m * 1_B group-like (coproduct m x m, constant term 1)?"""
    if m.constant() != m.spec.one():
        return False
    return coproduct_M(m) == tensor_project_M(TensorSeries.tensor(m, m))


def primitive_M(m: Series) -> bool:
    if not m.constant().is_zero():
        return False
    one = Series.one(m.spec, m.n, COORD_T)
    expected = TensorSeries.tensor(m, one) + TensorSeries.tensor(one, m)
    return coproduct_M(m) == tensor_project_M(expected)


def grouplike_W(w: Series) -> bool:
    if w.constant() != w.spec.one():
        return False
    return coproduct_W(w) == TensorSeries.tensor(w, w)


# -- generating-series identity ----------------------------------------


def gen_series_coeffs(spec: RingSpec, n: int, sign: int, kmax: int) -> list:
    """Coefficients in u of (1 - u X0^s)^(-1) (1 - u X0^s X1^s), s = sign.

    Coefficient 0 is 1; coefficient k is -Y_k for s = +1 and Y_{-k} X1^{-1}
    for s = -1.
    """
    from .freegroup import gen_power_magnus

    out = [Series.one(spec, n, COORD_T)]
    if sign > 0:
        for k in range(1, kmax + 1):
            out.append(-y_series(spec, n, k))
    else:
        x1inv = gen_power_magnus(spec, n, 1, -1)
        for k in range(1, kmax + 1):
            out.append(y_series(spec, n, -k) * x1inv)
    return out


def gen_series_grouplike(spec: RingSpec, n: int, sign: int, kmax: int = 4) -> bool:
    """Check D(c_k) = sum_{i+j=k} c_i x c_j coefficientwise through u^kmax."""
    cs = gen_series_coeffs(spec, n, sign, kmax)
    for k in range(kmax + 1):
        lhs = coproduct_W(cs[k])
        rhs = TensorSeries.zero(spec, n, COORD_T)
        for i in range(k + 1):
            rhs = rhs + TensorSeries.tensor(cs[i], cs[k - i])
        if lhs != rhs:
            return False
    return True
