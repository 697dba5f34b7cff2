"""Finite-precision pro-p shadows: semigroup law, inversion, relations."""
import random

import pytest
from gmpy2 import mpq

from twistedmagnus.coeff import PADIC, RATIONAL, RingSpec
from twistedmagnus.errors import HalfNotDefined, NotAUnit
from twistedmagnus.freegroup import X0, X1, eval_magnus
from twistedmagnus.magnus import (
    TwistedMagnusElement,
    gt_relations_check,
    star,
)
from twistedmagnus.propadic import (
    ProPElement,
    gtp_relations_check,
    padic_identity,
    padic_invert,
    padic_star,
    reduce_precision,
)
from twistedmagnus.series import COORD_T, Series

Q = RingSpec(RATIONAL)
N = 5


def from_word(lam, w, spec, n=N):
    return ProPElement(lam, eval_magnus(w, spec, n))


def random_unit(rng, spec, n=N):
    from twistedmagnus.series import words_up_to

    lam = spec.p
    while lam % spec.p == 0:
        lam = rng.randrange(1, spec.p ** spec.k)
    c = {(): spec.one()}
    for w in words_up_to(n):
        if w and rng.random() < 0.4:
            c[w] = spec.from_int(rng.randrange(spec.modulus))
    return ProPElement(lam, Series(spec, n, COORD_T,
                                   {w: el for w, el in c.items()
                                    if not el.is_zero()}))


def test_star_example():
    spec = RingSpec(PADIC, 3, 2)
    a = from_word(2, X1**0, spec)
    b = from_word(1, X1, spec)
    got = padic_star(a, b)
    assert got == from_word(2, X1**2, spec)


def test_identity_and_associativity():
    rng = random.Random(80)
    for p, k in ((2, 3), (3, 3), (5, 2)):
        spec = RingSpec(PADIC, p, k)
        e = padic_identity(spec, N)
        for _ in range(6):
            a, b, c = (random_unit(rng, spec) for _ in range(3))
            assert padic_star(a, e) == a
            assert padic_star(e, a) == a
            assert padic_star(padic_star(a, b), c) == padic_star(a, padic_star(b, c))


def test_invert_roundtrip():
    rng = random.Random(81)
    for p in (2, 3, 5):
        spec = RingSpec(PADIC, p, 3)
        e = padic_identity(spec, N)
        for _ in range(10):
            a = random_unit(rng, spec)
            ai = padic_invert(a)
            assert padic_star(a, ai) == e
            assert padic_star(ai, a) == e


def test_invert_non_unit_raises():
    spec = RingSpec(PADIC, 3, 2)
    with pytest.raises(NotAUnit):
        padic_invert(from_word(3, X1, spec))


def test_invert_matches_rational():
    from twistedmagnus.magnus import star_inverse

    spec = RingSpec(PADIC, 5, 3)
    for lam, w in ((1, X0 * X1), (3, X1 * X0**2), (-1, X1)):
        got = padic_invert(from_word(lam, w, spec))
        rat = star_inverse(
            TwistedMagnusElement(Q.from_int(lam), eval_magnus(w, Q, N))
        )
        want = Series(spec, N, COORD_T,
                      {ww: spec.from_mpq(c.v) for ww, c in rat.g.c.items()})
        assert got.f == want


def test_reduce_precision_commutes():
    rng = random.Random(82)
    for p in (2, 3, 5):
        spec = RingSpec(PADIC, p, 3)
        for _ in range(6):
            a, b = random_unit(rng, spec), random_unit(rng, spec)
            hi = reduce_precision(padic_star(a, b), 2)
            lo = padic_star(reduce_precision(a, 2), reduce_precision(b, 2))
            assert hi.f == lo.f
            assert hi.lam_lift % p**2 == lo.lam_lift % p**2
            inv_then_cut = reduce_precision(padic_invert(a), 2)
            cut_then_inv = padic_invert(reduce_precision(a, 2))
            assert inv_then_cut.f == cut_then_inv.f


def test_relations_examples():
    for p in (2, 3, 5):
        spec = RingSpec(PADIC, p, 3)
        for lam in (1, -1):
            res = gtp_relations_check(from_word(lam, X1**0, spec))
            assert res["duality"] and res["kappa"]
        res = gtp_relations_check(from_word(1, X0 * X1, spec))
        assert not res["duality"]


def test_relations_half_at_two():
    spec = RingSpec(PADIC, 2, 3)
    with pytest.raises(HalfNotDefined):
        gtp_relations_check(from_word(2, X1, spec))


def test_verdicts_match_rational():
    # integral corpus: group words with small integer scalars
    corpus = [
        (1, X1**0), (-1, X1**0), (1, X0 * X1), (1, X1), (3, X1**2),
        (-1, X0 * X1 * X0**-1), (1, X1 * X0),
    ]
    for p in (3, 5):
        spec = RingSpec(PADIC, p, 3)
        for lam, w in corpus:
            rat = gt_relations_check(
                TwistedMagnusElement(Q.from_int(lam), eval_magnus(w, Q, N))
            )
            pad = gtp_relations_check(from_word(lam, w, spec))
            assert rat["duality"] == pad["duality"]
            assert rat["kappa"] == pad["kappa"]
