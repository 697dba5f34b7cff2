"""Deterministic seeded generators for test corpora.

Random primitive series are integer combinations of Lyndon-word brackets, so
group-like elements come out as exponentials with controlled denominators.
"""
from __future__ import annotations

import random

from gmpy2 import mpq

from .coeff import RingSpec
from .errors import RingUnsupported
from .freegroup import GroupWord
from .magnus import TwistedMagnusElement
from .series import COORD_T, COORD_U, Series


def lyndon_words(maxlen: int):
    """All Lyndon words over {0, 1} of length <= maxlen (Duval's algorithm)."""
    s = [0]
    while s:
        yield tuple(s)
        m = len(s)
        while len(s) < maxlen:
            s.append(s[len(s) - m])
        while s and s[-1] == 1:
            s.pop()
        if s:
            s[-1] += 1
        else:
            break


def _least_proper_suffix(w):
    return min(range(1, len(w)), key=lambda i: w[i:])


def lyndon_bracket(spec: RingSpec, n: int, w) -> Series:
    """The standard (Chen-Fox-Lyndon) bracketing of a Lyndon word, as a series."""
    if len(w) == 1:
        return Series.gen(spec, n, COORD_U, w[0])
    i = _least_proper_suffix(w)
    a = lyndon_bracket(spec, n, w[:i])
    b = lyndon_bracket(spec, n, w[i:])
    return a * b - b * a


def random_primitive(
    rng: random.Random, spec: RingSpec, n: int, lo: int = -3, hi: int = 3
) -> Series:
    """Integer combination of Lyndon brackets in degrees 1..n (u coordinates)."""
    out = Series.zero(spec, n, COORD_U)
    for w in lyndon_words(n):
        c = rng.randint(lo, hi)
        if c:
            out = out + lyndon_bracket(spec, n, w).scale(c)
    return out


def random_primitive_nolinear(rng, spec, n) -> Series:
    """As above but with no degree-1 part (quadratic-friendly)."""
    out = Series.zero(spec, n, COORD_U)
    for w in lyndon_words(n):
        if len(w) == 1:
            continue
        c = rng.randint(-3, 3)
        if c:
            out = out + lyndon_bracket(spec, n, w).scale(c)
    return out


def random_grouplike(rng: random.Random, spec: RingSpec, n: int) -> Series:
    """exp of a random primitive, in Magnus coordinates (Q-algebras only)."""
    if not spec.is_q_algebra():
        raise RingUnsupported("use random_groupword over residue rings")
    return random_primitive(rng, spec, n).exp().to_t()


def random_unit(rng: random.Random, spec: RingSpec):
    if spec.is_q_algebra():
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        den = rng.choice([1, 2, 3])
        return spec.from_mpq(mpq(num, den))
    m, p = spec.modulus, spec.p
    while True:
        v = rng.randrange(1, m)
        if v % p:
            return spec.from_int(v)


def random_element(
    rng: random.Random, spec: RingSpec, n: int
) -> TwistedMagnusElement:
    return TwistedMagnusElement(random_unit(rng, spec), random_grouplike(rng, spec, n))


def random_groupword(rng: random.Random, maxlen: int) -> GroupWord:
    letters = [(0, 1), (0, -1), (1, 1), (1, -1)]
    word, last = [], None
    for _ in range(rng.randint(0, maxlen)):
        options = [l for l in letters if last is None or l != (last[0], -last[1])]
        last = rng.choice(options)
        word.append(last)
    return GroupWord(tuple(word))
