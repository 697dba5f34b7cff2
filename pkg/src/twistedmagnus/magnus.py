"""The twisted Magnus group and its Gamma-twisted actions.

An element is a pair (mu, g) with mu a unit scalar and g a group-like series
with constant term 1 in Magnus coordinates.  The pair acts on the series ring
by the automorphisms

    aut_V1:  X0 -> g X0^mu g^{-1},   X1 -> X1^mu
    aut_V10: a  -> aut_V1(a) * g

and the group law is (mu, g) * (mu', g') = (mu mu', aut_V10_{(mu,g)}(g')).

The one-variable series Gamma_g(t) = exp(sum_n (-1)^(n+1) (g | u0^(n-1) u1)
t^n / n) produces the cocycle value Gamma_g^{-1}(-log X1), which twists the
automorphisms into maps respecting the harmonic coproducts on W and M.
"""
from __future__ import annotations

from gmpy2 import mpq

from .coeff import RingElement, RingSpec
from .errors import BadConstantTerm, MixedContext, NotAUnit
from .harmonic import (
    assert_in_W,
    coproduct_M,
    coproduct_W,
    delta_W_word,
    grouplike_M,
    project_M,
    tensor_project_M,
)
from .series import COORD_T, COORD_U, EMPTY, PowerSeries1, Series, TensorSeries


class TwistedMagnusElement:
    __slots__ = ("mu", "g", "_cache")

    def __init__(self, mu: RingElement, g: Series, validate: bool = False):
        if g.coords != COORD_T:
            raise MixedContext("group part must be in Magnus coordinates")
        if mu.spec != g.spec:
            raise MixedContext("scalar and series live over different rings")
        if not mu.is_unit():
            raise NotAUnit("the scalar part must be a unit")
        if g.constant() != g.spec.one():
            raise BadConstantTerm("group part needs constant term 1")
        if validate and not g.is_grouplike():
            raise BadConstantTerm("group part is not group-like")
        self.mu = mu
        self.g = g
        self._cache = {}

    @property
    def spec(self) -> RingSpec:
        return self.g.spec

    @property
    def n(self) -> int:
        return self.g.n

    def __eq__(self, other):
        return (
            isinstance(other, TwistedMagnusElement)
            and self.mu == other.mu
            and self.g == other.g
        )

    def __repr__(self):
        return "TwistedMagnusElement(mu=%r, g=%s)" % (self.mu.v, self.g.to_str())


def identity(spec: RingSpec, n: int) -> TwistedMagnusElement:
    return TwistedMagnusElement(spec.one(), Series.one(spec, n, COORD_T))


# -- the untwisted action ----------------------------------------------


def _aut_images(e: TwistedMagnusElement):
    got = e._cache.get("imgs")
    if got is None:
        spec, n = e.spec, e.n
        one = Series.one(spec, n, COORD_T)
        x0mu = (one + Series.gen(spec, n, COORD_T, 0)).pow_scalar(e.mu)
        x1mu = (one + Series.gen(spec, n, COORD_T, 1)).pow_scalar(e.mu)
        img0 = e.g * x0mu * e.g.inverse() - one
        img1 = x1mu - one
        got = e._cache["imgs"] = (img0, img1)
    return got


def _aut_word(e: TwistedMagnusElement, w) -> Series:
    """Image of a single basis word under aut_V1, memoised per element."""
    memo = e._cache.setdefault("aut_words", {})
    got = memo.get(w)
    if got is None:
        if w == EMPTY:
            got = Series.one(e.spec, e.n, COORD_T)
        else:
            got = _aut_word(e, w[:-1]) * _aut_images(e)[w[-1]]
        memo[w] = got
    return got


def aut_V1(e: TwistedMagnusElement, a: Series) -> Series:
    """X0 -> g X0^mu g^{-1}, X1 -> X1^mu applied to a."""
    if a.coords != COORD_T or a.spec != e.spec or a.n != e.n:
        raise MixedContext("aut_V1 operand lives in a different context")
    out = Series.zero(e.spec, e.n, COORD_T)
    for w in sorted(a.c, key=len):
        out = out + _aut_word(e, w).scale(a.c[w])
    return out


def aut_V10(e: TwistedMagnusElement, a: Series) -> Series:
    return aut_V1(e, a) * e.g


# -- group law ---------------------------------------------------------


def star(e1: TwistedMagnusElement, e2: TwistedMagnusElement) -> TwistedMagnusElement:
    if e1.spec != e2.spec or e1.n != e2.n:
        raise MixedContext("group law operands live in different contexts")
    return TwistedMagnusElement(e1.mu * e2.mu, aut_V10(e1, e2.g))


def star_inverse(e: TwistedMagnusElement) -> TwistedMagnusElement:
    """Solve aut_V10_e(h) = 1 degree by degree; only divides by powers of mu.

    The degree-d part of aut_V1_e(h) is mu^d h_d plus terms determined by
    lower-degree parts of h, so each h_d is read off after one substitution.
    """
    spec, n = e.spec, e.n
    target = e.g.inverse()  # want aut_V1_e(h) = g^{-1}
    mu_inv = e.mu.inv()
    h = Series.one(spec, n, COORD_T)
    scale = spec.one()
    for d in range(1, n + 1):
        scale = scale * mu_inv  # mu^{-d}
        residue = (target - aut_V1(e, h)).degree_part(d)
        if not residue.is_zero():
            h = h + residue.scale(scale)
    return TwistedMagnusElement(mu_inv, h)


# -- Gamma -------------------------------------------------------------


def gamma_of(e: TwistedMagnusElement) -> PowerSeries1:
    """Gamma_g(t) = exp(sum_{k>=1} (-1)^(k+1) (g | u0^(k-1) u1) t^k / k)."""
    got = e._cache.get("gamma")
    if got is None:
        spec, n = e.spec, e.n
        gu = e.g.to_u()
        coeffs = [spec.zero()]
        for k in range(1, n + 1):
            word = (0,) * (k - 1) + (1,)
            c = gu.coeff_word(word).scale_q(mpq(-1 if k % 2 == 0 else 1, k))
            coeffs.append(c)
        got = PowerSeries1(spec, n, coeffs).exp()
        e._cache["gamma"] = got
    return got


def gamma_cocycle_value(e: TwistedMagnusElement) -> Series:
    """Gamma_g^{-1}(-log X1), a series in t1 alone (hence in W)."""
    got = e._cache.get("cocycle")
    if got is None:
        spec, n = e.spec, e.n
        one = Series.one(spec, n, COORD_T)
        arg = -(one + Series.gen(spec, n, COORD_T, 1)).log()
        got = gamma_of(e).inverse().eval_series(arg)
        e._cache["cocycle"] = got
    return got


def gamma_aut_W(e: TwistedMagnusElement, w: Series) -> Series:
    """Conjugate aut_V1 by the cocycle value; preserves W."""
    assert_in_W(w)
    c = gamma_cocycle_value(e)
    out = c * aut_V1(e, w) * c.inverse()
    assert_in_W(out)
    return out


def gamma_aut_M(e: TwistedMagnusElement, m: Series) -> Series:
    """Twisted action on the class m * 1_B (canonical representative in)."""
    assert_in_W(m)
    c = gamma_cocycle_value(e)
    return project_M(c * aut_V1(e, m) * e.g)


# -- predicates --------------------------------------------------------


def is_quad(e: TwistedMagnusElement) -> bool:
    """Vanishing linear part and mu^2 = 1 + 24 (g | u0 u1)."""
    gu = e.g.to_u()
    if not gu.coeff_word((0,)).is_zero() or not gu.coeff_word((1,)).is_zero():
        return False
    spec = e.spec
    rhs = spec.one() + gu.coeff_word((0, 1)) * spec.from_int(24)
    return e.mu * e.mu == rhs


def is_stab_W(e: TwistedMagnusElement) -> bool:
    """Does the twisted action intertwine the harmonic coproduct on W?"""
    spec, n = e.spec, e.n
    cache = {}

    def F(w):
        got = cache.get(w)
        if got is None:
            got = cache[w] = gamma_aut_W(e, Series(spec, n, COORD_T, {w: spec.one()}))
        return got

    for w in _w_words(n):
        lhs = coproduct_W(F(w))
        rhs = delta_W_word(spec, n, w).map_words(F, F)
        if lhs != rhs:
            return False
    return True


def is_stab_M(e: TwistedMagnusElement) -> bool:
    """Does the twisted action intertwine the harmonic coproduct on M?"""
    spec, n = e.spec, e.n
    cache = {}

    def G(w):
        got = cache.get(w)
        if got is None:
            got = cache[w] = gamma_aut_M(e, Series(spec, n, COORD_T, {w: spec.one()}))
        return got

    for w in _w_words(n):
        lhs = coproduct_M(G(w))
        rhs = tensor_project_M(delta_W_word(spec, n, w)).map_words(G, G)
        if lhs != rhs:
            return False
    return True


def _w_words(n: int):
    """Basis words of W up to degree n: empty, or ending in the letter 1."""
    yield EMPTY
    for d in range(1, n + 1):
        for m in range(2 ** (d - 1)):
            yield tuple((m >> (d - 2 - j)) & 1 for j in range(d - 1)) + (1,)


def is_dmr(e: TwistedMagnusElement, method: str = "stab") -> bool:
    """Membership in the double shuffle locus.

    ``method="stab"`` uses the quadratic constraints plus the M stabilizer
    property; ``method="grouplike"`` instead asks that the twisted action
    send the unit class to a group-like class.  The two agree.
    """
    if not is_quad(e):
        return False
    if method == "stab":
        return is_stab_M(e)
    if method == "grouplike":
        unit = Series.one(e.spec, e.n, COORD_T)
        return grouplike_M(gamma_aut_M(e, unit))
    raise MixedContext("unknown method %r" % (method,))


def is_dmr0(e: TwistedMagnusElement) -> bool:
    """The reduced locus: mu = 1, vanishing low coefficients, M stabilizer."""
    if e.mu != e.spec.one():
        return False
    gu = e.g.to_u()
    for w in ((0,), (1,), (0, 1)):
        if not gu.coeff_word(w).is_zero():
            return False
    return is_stab_M(e)


# -- series-level endomorphisms and relations --------------------------


def theta_series(s: Series) -> Series:
    """X0 <-> X1 on series: relabel every letter."""
    return Series(
        s.spec, s.n, s.coords,
        {tuple(1 - i for i in w): el for w, el in s.c.items()},
    )


def kappa_series(s: Series) -> Series:
    """X0 -> X1, X1 -> (X0 X1)^{-1} on Magnus-coordinate series."""
    if s.coords != COORD_T:
        raise MixedContext("kappa acts on Magnus coordinates")
    spec, n = s.spec, s.n
    one = Series.one(spec, n, COORD_T)
    x0 = one + Series.gen(spec, n, COORD_T, 0)
    x1 = one + Series.gen(spec, n, COORD_T, 1)
    img1 = (x0 * x1).inverse() - one
    return s.subst(Series.gen(spec, n, COORD_T, 1), img1)


def relations_check(f: Series, m: RingElement) -> dict:
    """Duality and kappa relations for (mu, f) with m = (mu - 1)/2.

    duality:  f theta(f) = 1
    kappa:    kappa^2(f) (X0 X1)^{-m} kappa(f) X1^m f X0^m = 1

    The pentagon relation involves a third tensor factor and is deliberately
    not implemented here.
    """
    spec, n = f.spec, f.n
    one = Series.one(spec, n, COORD_T)
    x0 = one + Series.gen(spec, n, COORD_T, 0)
    x1 = one + Series.gen(spec, n, COORD_T, 1)
    duality = f * theta_series(f) == one
    kf = kappa_series(f)
    kkf = kappa_series(kf)
    word = (
        kkf
        * (x0 * x1).pow_scalar(-m)
        * kf
        * x1.pow_scalar(m)
        * f
        * x0.pow_scalar(m)
    )
    return {"duality": duality, "kappa": word == one, "pentagon": None}


def gt_relations_check(e: TwistedMagnusElement) -> dict:
    """Relations over a Q-algebra, with m = (mu - 1)/2."""
    spec = e.spec
    if not spec.is_q_algebra():
        raise MixedContext("use the p-adic checker for residue rings")
    m = (e.mu - spec.one()).scale_q(mpq(1, 2))
    return relations_check(e.g, m)


def gamma_reflection_check(e: TwistedMagnusElement) -> bool:
    """Gamma_g(t) Gamma_g(-t) = lam (e^{t/2}-e^{-t/2}) / (e^{lam t/2}-e^{-lam t/2}).

    Both sides are compared after dividing numerator and denominator by t,
    which loses the top truncation coefficient, so degrees 0..n-1 are used.
    """
    spec, n = e.spec, e.n
    gamma = gamma_of(e)
    minus = PowerSeries1(
        spec, n, [(-c if k % 2 else c) for k, c in enumerate(gamma.a)]
    )
    lhs = gamma * minus
    half = spec.from_mpq(mpq(1, 2))
    lam = e.mu
    t = PowerSeries1.var(spec, n)

    def sinh2(c):
        a = t.scale(c)
        return a.exp() - (-a).exp()

    num = sinh2(half).shift_down()  # constant term 1
    den = sinh2(lam * half).shift_down()  # constant term lam
    rhs = num * den.inverse() * PowerSeries1.from_coeffs(spec, n, [lam])
    return lhs.truncate_list(n - 1) == rhs.truncate_list(n - 1)


# -- coordinate repackaging --------------------------------------------


def to_exp_coords(e: TwistedMagnusElement):
    """View the element as (mu, g) with g in exponential coordinates."""
    return (e.mu, e.g.to_u())


def from_exp_coords(mu: RingElement, g_u: Series) -> TwistedMagnusElement:
    if g_u.coords != COORD_U:
        raise MixedContext("expected exponential coordinates")
    return TwistedMagnusElement(mu, g_u.to_t())
