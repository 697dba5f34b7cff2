"""Lie-algebra linearization of the twisted Magnus group.

An element is a pair (nu, x) with nu a rational scalar and x a primitive
series in exponential coordinates.  The basic derivations of the series ring
are

    D:    u_i -> u_i            (degree derivation on the generators)
    D_x:  u_0 -> [x, u_0], u_1 -> 0
    r_x:  right multiplication by x

giving der_V1 = nu D + D_x and der_V10 = der_V1 + r_x, and the bracket

    <(nu, x), (nu', x')> = (0, nu D(x') - nu' D(x) + D_x(x') - D_x'(x) - [x, x']).

With gamma_x(t) = sum_k (-1)^(k+1) (x | u0^(k-1) u1) t^k / k the twisted
derivations are

    gder_W = der_W1 - ad_{gamma_x(-log X1)}
    gder_M = der_M10 - l_{gamma_x(-log X1)}

and (nu, x) lies in the double shuffle Lie algebra when the quadratic
constraints hold and gder_M is a co-derivation of the harmonic coproduct on
M; equivalently, when (x - gamma_x(-log X1)) * 1_B is primitive in M.  (The
minus sign is forced by linearizing the group-level class
Gamma_g^{-1}(-log X1) * g * 1_B at g = 1 + eps x.)
"""
from __future__ import annotations

from gmpy2 import mpq

from .coeff import DUAL, RATIONAL, RingSpec
from .errors import DegreeOutOfRange, MixedContext
from .harmonic import (
    assert_in_W,
    coproduct_M,
    coproduct_W,
    delta_W_word,
    primitive_M,
    project_M,
    tensor_project_M,
)
from .linalg import nullspace
from .magnus import TwistedMagnusElement, _w_words
from .series import COORD_T, COORD_U, EMPTY, PowerSeries1, Series, TensorSeries

_Q = RingSpec(RATIONAL)


class LieElement:
    __slots__ = ("nu", "x", "_cache")

    def __init__(self, nu, x: Series):
        if x.coords != COORD_U:
            raise MixedContext("Lie part must be in exponential coordinates")
        if x.spec != _Q:
            raise MixedContext("Lie elements live over the rationals")
        self.nu = mpq(nu)
        self.x = x
        self._cache = {}

    @property
    def n(self) -> int:
        return self.x.n

    def __eq__(self, other):
        return (
            isinstance(other, LieElement)
            and self.nu == other.nu
            and self.x == other.x
        )

    def __repr__(self):
        return "LieElement(nu=%s, x=%s)" % (self.nu, self.x.to_str())


# -- basic derivations (all on exponential-coordinate series) ----------


def deg_derivation(s: Series) -> Series:
    """D: u_i -> u_i, i.e. multiply each word by its length."""
    return Series(
        s.spec, s.n, s.coords,
        {w: el * s.spec.from_int(len(w)) for w, el in s.c.items() if w},
    )


def d_x(x: Series, s: Series) -> Series:
    """The derivation u_0 -> [x, u_0], u_1 -> 0 applied to s."""
    u0 = Series.gen(x.spec, x.n, COORD_U, 0)
    img0 = x * u0 - u0 * x
    img1 = Series.zero(x.spec, x.n, COORD_U)
    return s.derive(img0, img1)


def der_V1(a: LieElement, s: Series) -> Series:
    return deg_derivation(s).scale_q(a.nu) + d_x(a.x, s)


def der_V10(a: LieElement, s: Series) -> Series:
    return der_V1(a, s) + s * a.x


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    """The bracket on Q (+) Lie F2; the scalar component is zero."""
    xa, xb = a.x, b.x
    part = (
        deg_derivation(xb).scale_q(a.nu)
        - deg_derivation(xa).scale_q(b.nu)
        + d_x(xa, xb)
        - d_x(xb, xa)
        - (xa * xb - xb * xa)
    )
    return LieElement(0, part)


# -- gamma and the twisted derivations ---------------------------------


def gamma_lower(a: LieElement) -> PowerSeries1:
    """gamma_x(t) = sum_k (-1)^(k+1) (x | u0^(k-1) u1) t^k / k."""
    coeffs = [_Q.zero()]
    for k in range(1, a.n + 1):
        word = (0,) * (k - 1) + (1,)
        coeffs.append(a.x.coeff_word(word).scale_q(mpq(-1 if k % 2 == 0 else 1, k)))
    return PowerSeries1(_Q, a.n, coeffs)


def gamma_value_t(a: LieElement) -> Series:
    """gamma_x(-log X1) as a Magnus-coordinate series (powers of t1)."""
    got = a._cache.get("gamma_t")
    if got is None:
        n = a.n
        one = Series.one(_Q, n, COORD_T)
        arg = -(one + Series.gen(_Q, n, COORD_T, 1)).log()
        got = a._cache["gamma_t"] = gamma_lower(a).eval_series(arg)
    return got


def _der_V1_t(a: LieElement, w: Series) -> Series:
    return der_V1(a, w.to_u()).to_t()


def gder_W(a: LieElement, w: Series) -> Series:
    """Twisted derivation on W: der_W1 - ad by gamma_x(-log X1)."""
    assert_in_W(w)
    gam = gamma_value_t(a)
    out = _der_V1_t(a, w) - (gam * w - w * gam)
    assert_in_W(out)
    return out


def gder_M(a: LieElement, m: Series) -> Series:
    """Twisted derivation on the class m * 1_B (canonical representative)."""
    assert_in_W(m)
    gam = gamma_value_t(a)
    return project_M(_der_V1_t(a, m) + m * a.x.to_t() - gam * m)


# -- predicates --------------------------------------------------------


def is_lie_quad(a: LieElement) -> bool:
    x = a.x
    return (
        x.coeff_word((0,)).is_zero()
        and x.coeff_word((1,)).is_zero()
        and a.nu == 12 * x.coeff_word((0, 1)).v
    )


def _coderivation_ok(n: int, apply_map, coproduct, project=None) -> bool:
    spec = _Q
    cache = {}

    def G(w):
        got = cache.get(w)
        if got is None:
            got = cache[w] = apply_map(Series(spec, n, COORD_T, {w: spec.one()}))
        return got

    def Id(w):
        return Series(spec, n, COORD_T, {w: spec.one()})

    for w in _w_words(n):
        lhs = coproduct(G(w))
        base = delta_W_word(spec, n, w)
        if project is not None:
            base = project(base)
        rhs = base.map_words(G, Id) + base.map_words(Id, G)
        if lhs != rhs:
            return False
    return True


def is_lie_stab_W(a: LieElement) -> bool:
    return _coderivation_ok(a.n, lambda w: gder_W(a, w), coproduct_W)


def is_lie_stab_M(a: LieElement) -> bool:
    return _coderivation_ok(
        a.n, lambda w: gder_M(a, w), coproduct_M, tensor_project_M
    )


def is_lie_prim_M(a: LieElement) -> bool:
    """Is (x - gamma_x(-log X1)) * 1_B primitive in M?"""
    m = project_M(a.x.to_t() - gamma_value_t(a))
    return primitive_M(m)


def is_lie_dmr(a: LieElement, method: str = "stab") -> bool:
    if not is_lie_quad(a):
        return False
    if method == "stab":
        return is_lie_stab_M(a)
    if method == "primitive":
        return is_lie_prim_M(a)
    raise MixedContext("unknown method %r" % (method,))


# -- the degreewise solver ---------------------------------------------


def _basis_words(d: int):
    from .series import words_of_degree

    return list(words_of_degree(d))


def solve_degree(d: int, conditions, n: int | None = None):
    """Solve the chosen linear conditions on homogeneous degree-d data.

    The unknown is (nu, x) with x supported in degree d; the returned basis
    is a list of LieElement instances at truncation n (default max(d+2, 5);
    low truncations cannot see the constraints on nu, whose co-derivation
    defect first shows up in degree 4).  The scalar nu enters as an unknown
    only for d = 2, where the quadratic condition couples it to (x|u0u1);
    homogeneous solutions in every other degree have nu = 0.
    Conditions: subsets of {"quad", "stabW", "stabM", "primM"}; primitivity
    of x is always imposed.
    """
    if n is None:
        n = max(d + 2, 5)
    if d < 1 or d > n - 1:
        raise DegreeOutOfRange("need 1 <= d <= n - 1")
    conditions = set(conditions)
    words = _basis_words(d)
    nu_unknown = 1 if d == 2 else 0
    ncols = nu_unknown + len(words)

    def unit_elem(col) -> LieElement:
        if nu_unknown and col == 0:
            return LieElement(1, Series.zero(_Q, n, COORD_U))
        w = words[col - nu_unknown]
        return LieElement(0, Series(_Q, n, COORD_U, {w: _Q.one()}))

    rows_by_key = {}

    def add_entries(col, keyed_values):
        for key, val in keyed_values:
            if val.is_zero() if hasattr(val, "is_zero") else not val:
                continue
            row = rows_by_key.setdefault(key, [mpq(0)] * ncols)
            row[col] = row[col] + (val.v if hasattr(val, "v") else mpq(val))

    check_words = [w for w in _w_words(n) if len(w) + d <= n or len(w) <= 2]

    for col in range(ncols):
        a = unit_elem(col)
        if col >= nu_unknown:
            # primitivity of x
            x = a.x
            one = Series.one(_Q, n, COORD_U)
            defect = (
                x.coproduct()
                - TensorSeries.tensor(x, one)
                - TensorSeries.tensor(one, x)
            )
            add_entries(col, ((("prim", k), v) for k, v in defect.c.items()))
        if "quad" in conditions:
            x = a.x
            add_entries(col, [(("quad", 0), x.coeff_word((0,)))])
            add_entries(col, [(("quad", 1), x.coeff_word((1,)))])
            nu_term = _Q.from_mpq(a.nu) - x.coeff_word((0, 1)) * _Q.from_int(12)
            add_entries(col, [(("quad", 2), nu_term)])
        if "primM" in conditions:
            m = project_M(a.x.to_t() - gamma_value_t(a))
            one_t = Series.one(_Q, n, COORD_T)
            defect = (
                coproduct_M(m)
                - tensor_project_M(
                    TensorSeries.tensor(m, one_t) + TensorSeries.tensor(one_t, m)
                )
            )
            add_entries(col, ((("primM", k), v) for k, v in defect.c.items()))
        if "stabW" in conditions or "stabM" in conditions:
            for w in check_words:
                ws = Series(_Q, n, COORD_T, {w: _Q.one()})
                base = delta_W_word(_Q, n, w)
                if "stabW" in conditions:
                    img = gder_W(a, ws)
                    defect = (
                        coproduct_W(img)
                        - base.map_words(lambda v: gder_W(a, _word_series(v, n)), _id_word(n))
                        - base.map_words(_id_word(n), lambda v: gder_W(a, _word_series(v, n)))
                    )
                    add_entries(
                        col, ((("stabW", w, k), v) for k, v in defect.c.items())
                    )
                if "stabM" in conditions:
                    img = gder_M(a, ws)
                    baseM = tensor_project_M(base)
                    defect = (
                        coproduct_M(img)
                        - baseM.map_words(lambda v: gder_M(a, _word_series(v, n)), _id_word(n))
                        - baseM.map_words(_id_word(n), lambda v: gder_M(a, _word_series(v, n)))
                    )
                    add_entries(
                        col, ((("stabM", w, k), v) for k, v in defect.c.items())
                    )

    keys = sorted(rows_by_key)
    rows = [rows_by_key[k] for k in keys]
    basis = nullspace(rows, ncols)
    out = []
    for v in basis:
        x = Series(
            _Q, n, COORD_U,
            {w: _Q.from_mpq(c) for w, c in zip(words, v[nu_unknown:]) if c},
        )
        out.append(LieElement(v[0] if nu_unknown else 0, x))
    return out


def _word_series(w, n) -> Series:
    return Series(_Q, n, COORD_T, {w: _Q.one()})


def _id_word(n):
    def f(w):
        return _word_series(w, n)

    return f


def solution_vector(a: LieElement, d: int):
    """Coordinates (nu, coefficients of x on degree-d words) for span tests."""
    words = _basis_words(d)
    return [a.nu] + [a.x.coeff_word(w).v for w in words]


# -- lift to the group over dual numbers -------------------------------


def dual_lift(a: LieElement) -> TwistedMagnusElement:
    """(nu, x) -> (1 + eps nu, 1 + eps x) over the dual numbers.

    1 + eps x = exp(eps x) is group-like, so the pair is a twisted Magnus
    element, and group predicates on the lift linearize the Lie predicates.
    """
    spec = RingSpec(DUAL)
    n = a.n
    g_u = Series.one(spec, n, COORD_U) + Series(
        spec, n, COORD_U,
        {w: spec.dual_from_pair(0, el.v) for w, el in a.x.c.items()},
    )
    mu = spec.dual_from_pair(1, a.nu)
    return TwistedMagnusElement(mu, g_u.to_t())
