"""Discrete group-algebra model of W and its group-like classification."""
import random

import pytest
from gmpy2 import mpq

from twistedmagnus.coeff import RATIONAL, RingSpec
from twistedmagnus.discrete import (
    DT,
    DW,
    delta_full,
    delta_mod,
    grouplike_M_discrete,
    phi_dw,
    pr_n,
    pr_n_of_w,
    strip_action,
    w_of_g,
    w_of_g_y_basis,
)
from twistedmagnus.errors import NotStratified
from twistedmagnus.freegroup import IDENTITY, X0, X1, GroupWord, enumerate_reduced
from twistedmagnus.harmonic import grouplike_M, project_M
from twistedmagnus.freegroup import eval_magnus

Q = RingSpec(RATIONAL)


def random_dw(rng, nterms=4):
    out = DW.zero()
    for _ in range(nterms):
        m = [rng.randint(-2, 2)]
        for _ in range(rng.randint(0, 2)):
            a = rng.choice([-2, -1, 1, 2])
            m += [a, rng.randint(-2, 2)]
        out = out + DW({tuple(m): mpq(rng.randint(-3, 3))})
    return out


def test_monomial_algebra():
    assert DW.x1_power(2) * DW.x1_power(-2) == DW.one()
    assert DW.y(1) * DW.one() == DW.y(1)
    rng = random.Random(50)
    for _ in range(50):
        a, b, c = (random_dw(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    with pytest.raises(NotStratified):
        DW.y(0)


def test_w_of_g_example():
    # w(X0 X1) = 1 + X0 (X1 - 1)
    got = w_of_g(X0 * X1)
    want = {IDENTITY: mpq(1), X0 * X1: mpq(1), X0: mpq(-1)}
    assert got == want


def test_w_of_g_two_strata():
    g = X0 * X1 * X0**2 * X1**-1
    got = w_of_g(g)
    want = {
        IDENTITY: mpq(1),
        X0 * X1: mpq(1),
        X0: mpq(-1),
        X0 * X1 * X0**2 * X1**-1: mpq(1),
        X0 * X1 * X0**2: mpq(-1),
    }
    assert got == want


def test_pr_n_of_w_examples():
    assert pr_n_of_w(X0 * X1) == DW.y(1)
    assert pr_n_of_w(X0 * X1**2) == DW.y(1) * (DW.one() + DW.x1_power(1))
    assert pr_n_of_w(X0 * X1**-1) == -(DW.y(1) * DW.x1_power(-1))
    g = X0 * X1 * X0**2 * X1**-1
    assert pr_n_of_w(g) == -(DW.y(1) * DW.y(2) * DW.x1_power(-1))


def test_phi_dw():
    assert phi_dw(0) == DW.zero()
    assert phi_dw(1) == DW.one()
    assert phi_dw(3) == DW.one() + DW.x1_power(1) + DW.x1_power(2)
    assert phi_dw(-2) == -(DW.x1_power(-1) + DW.x1_power(-2))


def test_w_of_g_y_basis_matches_top():
    # the full rewrite must agree with the closed top-degree formula
    rng = random.Random(51)
    words = [w for w in enumerate_reduced(6) if not w.is_identity()]
    for g in rng.sample(words, 60):
        alpha, core, beta = strip_action(g)
        if core.is_identity():
            continue
        full = w_of_g_y_basis(core)
        npairs = len(core.syllables) // 2
        assert pr_n(full, npairs) == pr_n_of_w(core)


def test_delta_mod_examples():
    assert delta_mod(DW.y(1)).is_zero()
    y1, y2 = DW.y(1), DW.y(2)
    got = delta_mod(DW.y(3))
    want = (DT.tensor(y1, y2) + DT.tensor(y2, y1)).scale(-1)
    assert got == want
    x1 = DW.x1_power(1)
    assert delta_mod(x1) == DT.tensor(x1, x1)


def test_delta_full_multiplicative():
    rng = random.Random(52)
    for _ in range(15):
        a, b = random_dw(rng, 2), random_dw(rng, 2)
        assert delta_full(a * b) == delta_full(a) * delta_full(b)
        assert delta_mod(a * b) == delta_mod(a) * delta_mod(b)


def test_delta_mod_is_top_shadow():
    # on a degree-k piece, delta_mod is the bidegree (k, k) part of delta_full
    rng = random.Random(53)
    from twistedmagnus.discrete import mono_degree

    for _ in range(15):
        x = random_dw(rng, 3)
        k = x.max_degree()
        xx = pr_n(x, k)
        full = delta_full(xx)
        top = DT({mm: c for mm, c in full.terms.items()
                  if mono_degree(mm[0]) == k and mono_degree(mm[1]) == k})
        assert top == delta_mod(xx)


def test_strip_action():
    g = X1**2 * X0 * X1 * X0**3
    alpha, core, beta = strip_action(g)
    assert (alpha, beta) == (2, 3)
    assert core == X0 * X1
    assert X1**alpha * core * X0**beta == g


def test_grouplike_classification():
    assert grouplike_M_discrete(IDENTITY)
    assert grouplike_M_discrete(X1**3 * X0**-2)
    assert grouplike_M_discrete(X0**5)
    assert grouplike_M_discrete(X1**-1)
    assert not grouplike_M_discrete(X0 * X1)
    assert not grouplike_M_discrete(X1 * X0 * X1**-1)
    for g in enumerate_reduced(4):
        alpha, core, beta = strip_action(g)
        assert grouplike_M_discrete(g) == core.is_identity()


def test_grouplike_matches_series_model():
    rng = random.Random(54)
    words = list(enumerate_reduced(4))
    for g in rng.sample(words, 40):
        series_side = grouplike_M(project_M(eval_magnus(g, Q, 6)))
        assert series_side == grouplike_M_discrete(g)
