"""Finite-precision shadows of the pro-p twisted Magnus semigroup.

Elements are pairs (lam, f) with lam a p-adic integer scalar and f a series
with constant term 1 and coefficients in Z/p^K, truncated in degree n.  The
semigroup law is

    (lam1, f1) * (lam2, f2) = (lam1 lam2, f2(f1 X0^lam1 f1^{-1}, X1^lam1) f1)

and a pair is invertible exactly when lam is a unit.

Precision model: the binomial C(lam, k) mod p^K is only determined by lam
mod p^{K + v_p(k!)}, so a scalar known mod p^K alone cannot be raised to
series powers consistently (iterated powering and powering by a product
would disagree in degrees >= p).  The scalar is therefore carried as an
integer lift mod p^{K + v_p(n!)} (one more guard digit for p = 2, where the
relation checks halve it), and every X^lam is expanded through that lift.
With the guard digits, every operation here is the exact reduction mod p^K
of the corresponding computation over Z_p, which is what makes the law
associative and the relation checks match their rational counterparts.

Working in Z/p^K means every coefficient produced along the way is
automatically a p-adic integer; inversion additionally certifies itself by
a two-sided round-trip and raises IntegralityViolation if that fails.
"""
from __future__ import annotations

from .coeff import PADIC, RingElement, RingSpec, int_binomial
from .errors import (
    BadConstantTerm,
    HalfNotDefined,
    IntegralityViolation,
    MixedContext,
    NotAUnit,
    RingUnsupported,
)
from .magnus import kappa_series, theta_series
from .series import COORD_T, Series


def _vp_factorial(p: int, n: int) -> int:
    v, q = 0, p
    while q <= n:
        v += n // q
        q *= p
    return v


def _guard_exp(spec: RingSpec, n: int) -> int:
    return spec.k + _vp_factorial(spec.p, n) + (1 if spec.p == 2 else 0)


def _int_pow(s: Series, e: int) -> Series:
    """(1 + a)^e for an integer e, via binomial expansion of a = s - 1."""
    spec, n = s.spec, s.n
    a = s - Series.one(spec, n, COORD_T)
    out = Series.zero(spec, n, COORD_T)
    term = Series.one(spec, n, COORD_T)
    for k in range(n + 1):
        c = spec.from_int(int_binomial(e, k))
        if not c.is_zero():
            out = out + term.scale(c)
        term = term * a
    return out


class ProPElement:
    __slots__ = ("lam_lift", "f", "_cache")

    def __init__(self, lam, f: Series):
        if f.spec.kind != PADIC:
            raise RingUnsupported("ProPElement needs a residue ring")
        if f.coords != COORD_T:
            raise MixedContext("series part must be in Magnus coordinates")
        if f.constant() != f.spec.one():
            raise BadConstantTerm("series part needs constant term 1")
        if isinstance(lam, RingElement):
            if lam.spec != f.spec:
                raise MixedContext("scalar and series live over different rings")
            lam = lam.v
        guard = f.spec.p ** _guard_exp(f.spec, f.n)
        self.lam_lift = int(lam) % guard
        self.f = f
        self._cache = {}

    @property
    def spec(self) -> RingSpec:
        return self.f.spec

    @property
    def n(self) -> int:
        return self.f.n

    @property
    def lam(self) -> RingElement:
        return self.spec.from_int(self.lam_lift)

    def is_grouplike(self) -> bool:
        """Validation predicate; not enforced on construction."""
        return self.f.is_grouplike()

    def __eq__(self, other):
        return (
            isinstance(other, ProPElement)
            and self.lam_lift == other.lam_lift
            and self.f == other.f
        )

    def __repr__(self):
        return "ProPElement(lam=%r, f=%s)" % (self.lam_lift, self.f.to_str())


def padic_identity(spec: RingSpec, n: int) -> ProPElement:
    return ProPElement(1, Series.one(spec, n, COORD_T))


def _aut_images(e: ProPElement):
    """Images of t0, t1 under X0 -> f X0^lam f^{-1}, X1 -> X1^lam."""
    got = e._cache.get("imgs")
    if got is None:
        spec, n = e.spec, e.n
        one = Series.one(spec, n, COORD_T)
        x0l = _int_pow(one + Series.gen(spec, n, COORD_T, 0), e.lam_lift)
        x1l = _int_pow(one + Series.gen(spec, n, COORD_T, 1), e.lam_lift)
        got = e._cache["imgs"] = (e.f * x0l * e.f.inverse() - one, x1l - one)
    return got


def _aut(e: ProPElement, a: Series) -> Series:
    img0, img1 = _aut_images(e)
    return a.subst(img0, img1)


def padic_star(e1: ProPElement, e2: ProPElement) -> ProPElement:
    if e1.spec != e2.spec or e1.n != e2.n:
        raise MixedContext("semigroup operands live in different contexts")
    return ProPElement(e1.lam_lift * e2.lam_lift, _aut(e1, e2.f) * e1.f)


def padic_invert(e: ProPElement) -> ProPElement:
    """Two-sided inverse for unit lam, solved degree by degree.

    The degree-d part of the substitution applied to h is lam^d h_d plus
    terms determined by lower degrees, so each h_d is read off after one
    substitution.  All arithmetic stays in Z/p^K, so no coefficient can
    leave the p-adic integers; the closing round-trip check makes that
    guarantee loud rather than silent.
    """
    spec, n = e.spec, e.n
    if e.lam_lift % spec.p == 0:
        raise NotAUnit("only pairs with unit scalar are invertible")
    guard = spec.p ** _guard_exp(spec, n)
    lift_inv = pow(e.lam_lift, -1, guard)
    lam_inv = spec.from_int(lift_inv)
    target = e.f.inverse()
    h = Series.one(spec, n, COORD_T)
    scale = spec.one()
    for d in range(1, n + 1):
        scale = scale * lam_inv  # lam^{-d}
        residue = (target - _aut(e, h)).degree_part(d)
        if not residue.is_zero():
            h = h + residue.scale(scale)
    inv = ProPElement(lift_inv, h)
    ident = padic_identity(spec, n)
    if padic_star(e, inv) != ident or padic_star(inv, e) != ident:
        raise IntegralityViolation("inverse failed its round-trip certificate")
    return inv


def reduce_precision(e: ProPElement, k: int) -> ProPElement:
    """Reduce all residues mod p^k (k at most the current precision)."""
    spec = e.spec
    if not 1 <= k <= spec.k:
        raise MixedContext("target precision out of range")
    low = RingSpec(PADIC, spec.p, k)
    f = Series.from_terms(
        low, e.n, COORD_T, [(w, low.from_int(c.v)) for w, c in e.f.c.items()]
    )
    return ProPElement(e.lam_lift, f)


def gtp_relations_check(e: ProPElement) -> dict:
    """Duality and kappa relations with m = (lam - 1)/2.

    duality:  f theta(f) = 1
    kappa:    kappa^2(f) (X0 X1)^{-m} kappa(f) X1^m f X0^m = 1

    For p = 2 the scalar must be odd so that m is a 2-adic integer; this is
    where the extra guard digit of the lift is spent.  For odd p the lift is
    halved modulo the guard modulus.
    """
    spec, n, f = e.spec, e.n, e.f
    guard = spec.p ** _guard_exp(spec, n)
    if spec.p == 2:
        if e.lam_lift % 2 == 0:
            raise HalfNotDefined("(lam - 1)/2 needs lam in 1 + 2 Z_2")
        m = (e.lam_lift - 1) // 2
    else:
        m = (e.lam_lift - 1) * pow(2, -1, guard) % guard
    one = Series.one(spec, n, COORD_T)
    x0 = one + Series.gen(spec, n, COORD_T, 0)
    x1 = one + Series.gen(spec, n, COORD_T, 1)
    duality = f * theta_series(f) == one
    kf = kappa_series(f)
    kkf = kappa_series(kf)
    word = (
        kkf
        * _int_pow(x0 * x1, -m)
        * kf
        * _int_pow(x1, m)
        * f
        * _int_pow(x0, m)
    )
    return {"duality": duality, "kappa": word == one}
