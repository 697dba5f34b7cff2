"""End-to-end acceptance checks for the workbench.

Each test exercises one headline guarantee; all equalities are exact and
coefficientwise, with no numeric tolerances anywhere.
"""
import random
import time

from gmpy2 import mpq

from twistedmagnus.coeff import DUAL, PADIC, RATIONAL, RingSpec
from twistedmagnus.discrete import (
    DT,
    delta_full,
    delta_mod,
    grouplike_M_discrete,
    mono_degree,
    pr_n,
    strip_action,
)
from twistedmagnus.freegroup import IDENTITY, X0, X1, enumerate_reduced, eval_magnus
from twistedmagnus.harmonic import (
    coproduct_W,
    delta_W_word,
    gen_series_grouplike,
    grouplike_M,
    project_M,
)
from twistedmagnus.lie import (
    LieElement,
    dual_lift,
    is_lie_dmr,
    is_lie_quad,
    is_lie_stab_M,
    is_lie_stab_W,
    solution_vector,
    solve_degree,
)
from twistedmagnus.linalg import in_span, same_span
from twistedmagnus.magnus import (
    TwistedMagnusElement,
    aut_V1,
    gamma_aut_M,
    gamma_aut_W,
    gamma_cocycle_value,
    gt_relations_check,
    identity,
    is_dmr,
    is_quad,
    is_stab_M,
    is_stab_W,
    star,
    star_inverse,
)
from twistedmagnus.propadic import (
    ProPElement,
    gtp_relations_check,
    padic_identity,
    padic_invert,
    padic_star,
    reduce_precision,
)
from twistedmagnus.series import COORD_T, COORD_U, Series, words_up_to

Q = RingSpec(RATIONAL)


def random_group_element(rng, spec, n):
    """Random twisted Magnus element with unit scalar and small coefficients."""
    c = {(): spec.one()}
    for w in words_up_to(n):
        if w and rng.random() < 0.35:
            c[w] = spec.from_int(rng.randint(-3, 3))
    g = Series(spec, n, COORD_T, {w: el for w, el in c.items() if not el.is_zero()})
    mu = spec.zero()
    while not mu.is_unit():
        mu = spec.from_int(rng.randint(-6, 6))
    return TwistedMagnusElement(mu, g)


def random_lie_element(rng, n):
    c = {w: Q.from_int(rng.randint(-2, 2)) for w in words_up_to(n)
         if w and rng.random() < 0.4}
    x = Series(Q, n, COORD_U, {w: el for w, el in c.items() if not el.is_zero()})
    return LieElement(rng.randint(-3, 3), x)


# -- 1. group structure ------------------------------------------------


def test_acceptance_1_group_axioms():
    n = 6
    rng = random.Random(1001)
    e = identity(Q, n)
    start = time.monotonic()
    for _ in range(25):
        a, b, c = (random_group_element(rng, Q, n) for _ in range(3))
        assert star(star(a, b), c) == star(a, star(b, c))
        assert star(a, e) == a and star(e, a) == a
        ai = star_inverse(a)
        assert star(a, ai) == e and star(ai, a) == e
    assert time.monotonic() - start < 30


# -- 2. cocycle property -----------------------------------------------


def test_acceptance_2_cocycle():
    n = 6
    rng = random.Random(1002)
    for _ in range(25):
        a = random_group_element(rng, Q, n)
        b = random_group_element(rng, Q, n)
        lhs = gamma_cocycle_value(star(a, b))
        rhs = gamma_cocycle_value(a) * aut_V1(a, gamma_cocycle_value(b))
        assert lhs == rhs


# -- 3. Hopf structure -------------------------------------------------


def _w_words(n):
    return [w for w in words_up_to(n) if not w or w[-1] == 1]


def _random_w_series(rng, n):
    c = {w: Q.from_int(rng.randint(-3, 3)) for w in _w_words(n)
         if rng.random() < 0.5}
    return Series(Q, n, COORD_T, {w: el for w, el in c.items() if not el.is_zero()})


def _coassociative(s):
    n = s.n
    d = coproduct_W(s)
    left, right = {}, {}
    for (w1, w2), el in d.c.items():
        for (v1, v2), el2 in delta_W_word(Q, n, w1).c.items():
            if len(v1) + len(v2) + len(w2) <= n:
                key = (v1, v2, w2)
                left[key] = left.get(key, Q.zero()) + el * el2
        for (v1, v2), el2 in delta_W_word(Q, n, w2).c.items():
            if len(w1) + len(v1) + len(v2) <= n:
                key = (w1, v1, v2)
                right[key] = right.get(key, Q.zero()) + el * el2
    left = {k: v for k, v in left.items() if not v.is_zero()}
    right = {k: v for k, v in right.items() if not v.is_zero()}
    return left == right


def _random_dw(rng, wdeg_max):
    from twistedmagnus.discrete import DW

    out = DW.zero()
    for _ in range(4):
        m = [rng.randint(-2, 2)]
        for _ in range(rng.randint(0, wdeg_max)):
            m += [rng.choice([-2, -1, 1, 2, 3]), rng.randint(-2, 2)]
        out = out + DW({tuple(m): mpq(rng.randint(-3, 3))})
    return out


def test_acceptance_3_hopf():
    n = 5
    rng = random.Random(1003)
    for _ in range(8):
        a = _random_w_series(rng, n)
        b = _random_w_series(rng, n)
        assert _coassociative(a)
        assert coproduct_W(a * b) == coproduct_W(a) * coproduct_W(b)
    # generating-series coefficients stay group-like through u^4
    for sign in (1, -1):
        assert gen_series_grouplike(Q, n, sign, kmax=4)
    # the discrete square: top projection intertwines the two coproducts
    for _ in range(10):
        x = _random_dw(rng, 3)
        for k in range(0, min(3, x.max_degree()) + 1):
            xk = pr_n(x, k)
            full = delta_full(xk)
            top = DT({mm: c for mm, c in full.terms.items()
                      if mono_degree(mm[0]) == k and mono_degree(mm[1]) == k})
            assert top == delta_mod(xk)


# -- 4 and 5. the degreewise solver ------------------------------------


def test_acceptance_4_stab_equals_primitive_on_quad_locus():
    for d in range(1, 8):
        stab = solve_degree(d, {"quad", "stabM"})
        prim = solve_degree(d, {"quad", "primM"})
        sv = [solution_vector(a, d) for a in stab]
        pv = [solution_vector(a, d) for a in prim]
        assert same_span(sv, pv)


def test_acceptance_5_stabM_inside_stabW():
    for d in range(1, 8):
        inner = solve_degree(d, {"stabM"})
        outer = solve_degree(d, {"stabW"})
        ov = [solution_vector(a, d) for a in outer]
        for a in inner:
            assert in_span(ov, solution_vector(a, d))


# -- 6. infinitesimal consistency --------------------------------------


def test_acceptance_6_dual_number_linearization():
    n = 5
    rng = random.Random(1006)
    for _ in range(20):
        a = random_lie_element(rng, n)
        e = dual_lift(a)
        assert is_quad(e) == is_lie_quad(a)
        assert is_stab_W(e) == is_lie_stab_W(a)
        assert is_stab_M(e) == is_lie_stab_M(a)
        assert is_dmr(e) == is_lie_dmr(a)


# -- 7. discrete classification ----------------------------------------


def test_acceptance_7_discrete_classification():
    start = time.monotonic()
    words = list(enumerate_reduced(8))
    assert len(words) == 13121

    grouplike = []
    for g in words:
        _, core, _ = strip_action(g)
        verdict = grouplike_M_discrete(g)
        assert verdict == core.is_identity()
        if verdict:
            grouplike.append(g)

    # DMR window: among group-like classes, only mu = +-1 over the identity
    # core survive the quadratic constraints
    n = 6
    window = []
    for g in grouplike:
        e1 = TwistedMagnusElement(Q.from_int(1), eval_magnus(g, Q, n))
        em = TwistedMagnusElement(Q.from_int(-1), eval_magnus(g, Q, n))
        for mu, e in ((1, e1), (-1, em)):
            if is_quad(e) and is_stab_M(e):
                window.append((mu, g))
    assert window == [(1, IDENTITY), (-1, IDENTITY)]

    # series cross-check on a 200-word sample
    rng = random.Random(1007)
    for g in rng.sample(words, 200):
        series_side = grouplike_M(project_M(eval_magnus(g, Q, n)))
        assert series_side == grouplike_M_discrete(g)
    assert time.monotonic() - start < 300


# -- 8. pro-p layer ----------------------------------------------------


def _random_prop_unit(rng, spec, n):
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


def test_acceptance_8_prop_inversion_and_reduction():
    n = 5
    rng = random.Random(1008)
    for p in (2, 3, 5):
        spec = RingSpec(PADIC, p, 3)
        e = padic_identity(spec, n)
        for _ in range(50):
            a = _random_prop_unit(rng, spec, n)
            ai = padic_invert(a)
            assert padic_star(a, ai) == e
            assert padic_star(ai, a) == e
            # reduction mod p^{K-1} commutes with the semigroup data
            b = _random_prop_unit(rng, spec, n)
            low_star = padic_star(reduce_precision(a, 2), reduce_precision(b, 2))
            assert reduce_precision(padic_star(a, b), 2).f == low_star.f
            assert reduce_precision(padic_invert(a), 2).f == \
                padic_invert(reduce_precision(a, 2)).f


# -- 9. GT-type relations ----------------------------------------------


def test_acceptance_9_gt_sanity():
    n = 5
    one = Series.one(Q, n)
    for mu in (1, -1):
        res = gt_relations_check(TwistedMagnusElement(Q.from_int(mu), one))
        assert res["duality"] and res["kappa"]
    bad = TwistedMagnusElement(Q.one(), eval_magnus(X0 * X1, Q, n))
    assert not gt_relations_check(bad)["duality"]

    # the p-adic engine agrees verdict for verdict on an integral corpus
    corpus = [
        (1, IDENTITY), (-1, IDENTITY), (1, X0 * X1), (1, X1), (3, X1**2),
        (-1, X0 * X1 * X0**-1), (1, X1 * X0), (5, X0**2 * X1**-1),
    ]
    for p in (2, 3, 5):
        spec = RingSpec(PADIC, p, 3)
        for lam, w in corpus:
            rat = gt_relations_check(
                TwistedMagnusElement(Q.from_int(lam), eval_magnus(w, Q, n))
            )
            pad = gtp_relations_check(
                ProPElement(lam, eval_magnus(w, spec, n))
            )
            assert rat["duality"] == pad["duality"]
            assert rat["kappa"] == pad["kappa"]


# -- 10. truncation soundness ------------------------------------------


def _pair_at(rng, n_small, n_big):
    """The same random series materialized at two truncation orders."""
    c = {w: rng.randint(-3, 3) for w in words_up_to(n_big) if rng.random() < 0.4}
    c = {w: v for w, v in c.items() if v}
    big = Series(Q, n_big, COORD_T, {w: Q.from_int(v) for w, v in c.items()})
    small = Series(Q, n_small, COORD_T,
                   {w: Q.from_int(v) for w, v in c.items() if len(w) <= n_small})
    return small, big


def _tensor_filtered(t, n):
    return {k: v for k, v in t.c.items() if len(k[0]) + len(k[1]) <= n}


def test_acceptance_10_truncation_soundness():
    n, m = 4, 6
    rng = random.Random(1010)
    for _ in range(6):
        a_s, a_b = _pair_at(rng, n, m)
        b_s, b_b = _pair_at(rng, n, m)
        # multiplication
        assert (a_b * b_b).truncate(n) == a_s * b_s
        # substitution
        i0_s, i0_b = _pair_at(rng, n, m)
        i1_s, i1_b = _pair_at(rng, n, m)
        i0_s, i0_b = i0_s - Series.scalar(Q, n, COORD_T, i0_s.constant()), \
            i0_b - Series.scalar(Q, m, COORD_T, i0_b.constant())
        i1_s, i1_b = i1_s - Series.scalar(Q, n, COORD_T, i1_s.constant()), \
            i1_b - Series.scalar(Q, m, COORD_T, i1_b.constant())
        assert a_b.subst(i0_b, i1_b).truncate(n) == a_s.subst(i0_s, i1_s)
        # deconcatenation-type coproduct
        assert _tensor_filtered(a_b.coproduct(), n) == \
            dict(a_s.coproduct().c)
        # harmonic coproduct on W
        w_s = Series(Q, n, COORD_T,
                     {w: el for w, el in a_s.c.items() if not w or w[-1] == 1})
        w_b = Series(Q, m, COORD_T,
                     {w: el for w, el in a_b.c.items() if not w or w[-1] == 1})
        assert _tensor_filtered(coproduct_W(w_b), n) == dict(coproduct_W(w_s).c)
        # the group action and its Gamma twist
        one_s = {(): Q.one()}
        g_s = Series(Q, n, COORD_T, {**a_s.c, (): Q.one()})
        g_b = Series(Q, m, COORD_T, {**a_b.c, (): Q.one()})
        mu = Q.from_int(2)
        e_s = TwistedMagnusElement(mu, g_s)
        e_b = TwistedMagnusElement(mu, g_b)
        assert aut_V1(e_b, b_b).truncate(n) == aut_V1(e_s, b_s)
        assert gamma_aut_W(e_b, w_b).truncate(n) == gamma_aut_W(e_s, w_s)
        m_s, m_b = project_M(w_s), project_M(w_b)
        assert gamma_aut_M(e_b, m_b).truncate(n) == gamma_aut_M(e_s, m_s)
