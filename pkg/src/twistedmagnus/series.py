"""Degree-truncated non-commutative power series in two generators.

A ``Series`` is a finite sum  sum_w  c_w * w  over words w in the letters
{0, 1}, with all words of length > n discarded.  The ``coords`` tag records
which generators the letters stand for:

  * ``"t"`` -- letter i is t_i = X_i - 1 (Magnus coordinates);
  * ``"u"`` -- letter i is u_i = log X_i (exponential coordinates).

The tag matters for coproducts and coordinate conversions; plain ring
arithmetic is tag-agnostic but refuses to mix tags.
"""
from __future__ import annotations

from gmpy2 import mpq

from .coeff import RingElement, RingSpec, ring_binomial
from .errors import (
    BadConstantTerm,
    DegreeOutOfRange,
    MixedContext,
    RingUnsupported,
)

COORD_T = "t"
COORD_U = "u"

EMPTY = ()


def words_of_degree(d: int):
    """All words in {0,1} of length exactly d, lexicographic order."""
    if d == 0:
        yield EMPTY
        return
    for m in range(2 ** d):
        yield tuple((m >> (d - 1 - j)) & 1 for j in range(d))


def words_up_to(n: int):
    for d in range(n + 1):
        yield from words_of_degree(d)


class Series:
    __slots__ = ("spec", "n", "coords", "c")

    def __init__(self, spec: RingSpec, n: int, coords: str, c: dict):
        self.spec = spec
        self.n = n
        self.coords = coords
        self.c = c  # word tuple -> nonzero RingElement

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, spec, n, coords=COORD_T):
        return cls(spec, n, coords, {})

    @classmethod
    def one(cls, spec, n, coords=COORD_T):
        return cls(spec, n, coords, {EMPTY: spec.one()})

    @classmethod
    def scalar(cls, spec, n, coords, el: RingElement):
        if el.is_zero():
            return cls(spec, n, coords, {})
        return cls(spec, n, coords, {EMPTY: el})

    @classmethod
    def gen(cls, spec, n, coords, i):
        """The generator t_i or u_i as a series."""
        if i not in (0, 1):
            raise MixedContext("generator index must be 0 or 1")
        if n < 1:
            return cls.zero(spec, n, coords)
        return cls(spec, n, coords, {(i,): spec.one()})

    @classmethod
    def from_terms(cls, spec, n, coords, terms):
        c = {}
        for w, el in terms:
            if len(w) > n:
                continue
            cur = c.get(w)
            el = cur + el if cur is not None else el
            if el.is_zero():
                c.pop(w, None)
            else:
                c[w] = el
        return cls(spec, n, coords, c)

    # -- basics --------------------------------------------------------

    def _chk(self, other: "Series"):
        if (
            self.spec != other.spec
            or self.n != other.n
            or self.coords != other.coords
        ):
            raise MixedContext(
                "series contexts differ: (%s, %d, %s) vs (%s, %d, %s)"
                % (
                    self.spec.label(),
                    self.n,
                    self.coords,
                    other.spec.label(),
                    other.n,
                    other.coords,
                )
            )

    def is_zero(self) -> bool:
        return not self.c

    def constant(self) -> RingElement:
        return self.c.get(EMPTY, self.spec.zero())

    def coeff_word(self, w) -> RingElement:
        return self.c.get(tuple(w), self.spec.zero())

    def degree_part(self, d: int) -> "Series":
        return Series(
            self.spec, self.n, self.coords,
            {w: el for w, el in self.c.items() if len(w) == d},
        )

    def max_degree(self) -> int:
        return max((len(w) for w in self.c), default=0)

    def truncate(self, m: int) -> "Series":
        if m > self.n:
            raise DegreeOutOfRange("cannot raise truncation from %d to %d" % (self.n, m))
        return Series(
            self.spec, m, self.coords,
            {w: el for w, el in self.c.items() if len(w) <= m},
        )

    def __eq__(self, other):
        return (
            isinstance(other, Series)
            and self.spec == other.spec
            and self.n == other.n
            and self.coords == other.coords
            and self.c == other.c
        )

    def __hash__(self):
        return hash((self.spec, self.n, self.coords, frozenset(self.c.items())))

    def __repr__(self):
        return "Series(%s, n=%d, %s, %s)" % (
            self.spec.label(), self.n, self.coords, self.to_str(),
        )

    def to_str(self) -> str:
        if not self.c:
            return "0"
        letter = self.coords
        parts = []
        for w in sorted(self.c, key=lambda w: (len(w), w)):
            el = self.c[w]
            mono = "*".join("%s%d" % (letter, i) for i in w) or "1"
            parts.append("(%r)*%s" % (el.v, mono))
        return " + ".join(parts)

    # -- linear structure ----------------------------------------------

    def __add__(self, other):
        self._chk(other)
        c = dict(self.c)
        for w, el in other.c.items():
            cur = c.get(w)
            s = cur + el if cur is not None else el
            if s.is_zero():
                c.pop(w, None)
            else:
                c[w] = s
        return Series(self.spec, self.n, self.coords, c)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Series(self.spec, self.n, self.coords, {w: -el for w, el in self.c.items()})

    def scale(self, el) -> "Series":
        if isinstance(el, int):
            el = self.spec.from_int(el)
        if el.is_zero():
            return Series.zero(self.spec, self.n, self.coords)
        return Series(
            self.spec, self.n, self.coords,
            {w: v * el for w, v in self.c.items() if not (v * el).is_zero()},
        )

    def scale_q(self, q) -> "Series":
        return self.scale(self.spec.from_mpq(q))

    # -- multiplication ------------------------------------------------

    def __mul__(self, other):
        self._chk(other)
        n = self.n
        out = {}
        a, b = self.c, other.c
        if len(a) > len(b):
            # iterate the smaller operand outside
            pass
        for w1, e1 in a.items():
            l1 = len(w1)
            if l1 > n:
                continue
            room = n - l1
            for w2, e2 in b.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                p = e1 * e2
                cur = out.get(w)
                s = cur + p if cur is not None else p
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return Series(self.spec, self.n, self.coords, out)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Series.one(self.spec, self.n, self.coords)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "Series":
        """Two-sided inverse; the constant term must be a unit."""
        c0 = self.constant()
        if not c0.is_unit():
            raise BadConstantTerm("inverse needs a unit constant term")
        c0i = c0.inv()
        # a = c0 (1 + z)  with  z = c0^{-1} (a - c0);  a^{-1} = (sum (-z)^k) c0^{-1}
        z = (self - Series.scalar(self.spec, self.n, self.coords, c0)).scale(c0i)
        out = Series.one(self.spec, self.n, self.coords)
        term = Series.one(self.spec, self.n, self.coords)
        for _ in range(self.n):
            term = -(term * z)
            if term.is_zero():
                break
            out = out + term
        return out.scale(c0i)

    # -- analytic operations (Q-algebras) ------------------------------

    def _need_q(self, what):
        if not self.spec.is_q_algebra():
            raise RingUnsupported("%s needs a Q-algebra, not %s" % (what, self.spec.label()))

    def exp(self) -> "Series":
        self._need_q("exp")
        if not self.constant().is_zero():
            raise BadConstantTerm("exp needs zero constant term")
        out = Series.one(self.spec, self.n, self.coords)
        term = Series.one(self.spec, self.n, self.coords)
        for k in range(1, self.n + 1):
            term = (term * self).scale_q(mpq(1, k))
            if term.is_zero():
                break
            out = out + term
        return out

    def log(self) -> "Series":
        self._need_q("log")
        if self.constant() != self.spec.one():
            raise BadConstantTerm("log needs constant term 1")
        z = self - Series.one(self.spec, self.n, self.coords)
        out = Series.zero(self.spec, self.n, self.coords)
        power = Series.one(self.spec, self.n, self.coords)
        for k in range(1, self.n + 1):
            power = power * z
            if power.is_zero():
                break
            out = out + power.scale_q(mpq(-1 if k % 2 == 0 else 1, k))
        return out

    def pow_scalar(self, mu: RingElement) -> "Series":
        """a^mu = sum_k C(mu, k) (a-1)^k for a with constant term 1.

        All powers of a single series commute with each other, so this agrees
        with exp(mu * log a) over Q-algebras and stays exact over Z/p^K.
        """
        if self.constant() != self.spec.one():
            raise BadConstantTerm("scalar power needs constant term 1")
        z = self - Series.one(self.spec, self.n, self.coords)
        out = Series.one(self.spec, self.n, self.coords)
        power = Series.one(self.spec, self.n, self.coords)
        for k in range(1, self.n + 1):
            power = power * z
            if power.is_zero():
                break
            out = out + power.scale(ring_binomial(mu, k))
        return out

    # -- substitution and derivations ----------------------------------

    def subst(self, img0: "Series", img1: "Series") -> "Series":
        """Algebra map sending letter i to img_i (both with zero constant term).

        The images may carry a different coordinate tag; the result inherits
        theirs.  Prefixes of the support are memoised, so dense inputs cost
        one series product per distinct prefix.
        """
        img0._chk(img1)
        if img0.spec != self.spec or img0.n != self.n:
            raise MixedContext("substitution images live in a different context")
        if not img0.constant().is_zero() or not img1.constant().is_zero():
            raise BadConstantTerm("substitution images need zero constant term")
        imgs = (img0, img1)
        memo = {EMPTY: Series.one(self.spec, self.n, img0.coords)}

        def phi(w):
            got = memo.get(w)
            if got is None:
                got = phi(w[:-1]) * imgs[w[-1]]
                memo[w] = got
            return got

        out = Series.zero(self.spec, self.n, img0.coords)
        for w in sorted(self.c, key=len):
            out = out + phi(w).scale(self.c[w])
        return out

    def derive(self, img0: "Series", img1: "Series") -> "Series":
        """Extend letter i -> img_i as a derivation (Leibniz rule)."""
        img0._chk(img1)
        if img0.spec != self.spec or img0.n != self.n or img0.coords != self.coords:
            raise MixedContext("derivation images live in a different context")
        imgs = (img0, img1)
        out = {}
        for w, el in self.c.items():
            for j in range(len(w)):
                pre, let, suf = w[:j], w[j], w[j + 1 :]
                for wi, ei in imgs[let].c.items():
                    word = pre + wi + suf
                    if len(word) > self.n:
                        continue
                    p = el * ei
                    cur = out.get(word)
                    s = cur + p if cur is not None else p
                    if s.is_zero():
                        out.pop(word, None)
                    else:
                        out[word] = s
        return Series(self.spec, self.n, self.coords, out)

    # -- coordinate changes --------------------------------------------

    def to_u(self) -> "Series":
        """Rewrite in exponential coordinates: t_i = exp(u_i) - 1."""
        if self.coords == COORD_U:
            return self
        self._need_q("coordinate change")
        one = Series.one(self.spec, self.n, COORD_U)
        imgs = [
            Series.gen(self.spec, self.n, COORD_U, i).exp() - one for i in (0, 1)
        ]
        return self.subst(imgs[0], imgs[1])

    def to_t(self) -> "Series":
        """Rewrite in Magnus coordinates: u_i = log(1 + t_i)."""
        if self.coords == COORD_T:
            return self
        self._need_q("coordinate change")
        one = Series.one(self.spec, self.n, COORD_T)
        imgs = [
            (one + Series.gen(self.spec, self.n, COORD_T, i)).log() for i in (0, 1)
        ]
        return self.subst(imgs[0], imgs[1])

    def in_coords(self, coords: str) -> "Series":
        return self.to_t() if coords == COORD_T else self.to_u()

    # -- coproduct -----------------------------------------------------

    def coproduct(self) -> "TensorSeries":
        """Unshuffle coproduct for the tag at hand.

        In t coordinates each X_i = 1 + t_i is group-like, so
        D(t_i) = t_i x 1 + 1 x t_i + t_i x t_i; in u coordinates each u_i is
        primitive.
        """
        spec, n = self.spec, self.n
        one = spec.one()
        if self.coords == COORD_T:
            gen_images = [
                {((i,), EMPTY): one, (EMPTY, (i,)): one, ((i,), (i,)): one}
                for i in (0, 1)
            ]
        else:
            gen_images = [
                {((i,), EMPTY): one, (EMPTY, (i,)): one} for i in (0, 1)
            ]
        out = TensorSeries.zero(spec, n, self.coords)
        memo = {EMPTY: TensorSeries.unit(spec, n, self.coords)}

        def phi(w):
            got = memo.get(w)
            if got is None:
                got = phi(w[:-1]) * TensorSeries(
                    self.spec, n, self.coords, dict(gen_images[w[-1]])
                )
                memo[w] = got
            return got

        for w in sorted(self.c, key=len):
            out = out + phi(w).scale(self.c[w])
        return out

    def is_grouplike(self) -> bool:
        if self.constant() != self.spec.one():
            return False
        return self.coproduct() == TensorSeries.tensor(self, self)

    def is_primitive(self) -> bool:
        if not self.constant().is_zero():
            return False
        one = Series.one(self.spec, self.n, self.coords)
        return self.coproduct() == (
            TensorSeries.tensor(self, one) + TensorSeries.tensor(one, self)
        )

    # -- coefficient extraction ----------------------------------------

    def coeff(self, w, basis: str | None = None) -> RingElement:
        """Coefficient of the word w, read in the requested coordinate basis."""
        if basis is None or basis == self.coords:
            return self.coeff_word(w)
        return self.in_coords(basis).coeff_word(w)


class TensorSeries:
    """Element of the degree-truncated two-fold tensor square."""

    __slots__ = ("spec", "n", "coords", "c")

    def __init__(self, spec, n, coords, c):
        self.spec = spec
        self.n = n
        self.coords = coords
        self.c = c  # (w1, w2) -> nonzero RingElement, len(w1)+len(w2) <= n

    @classmethod
    def zero(cls, spec, n, coords=COORD_T):
        return cls(spec, n, coords, {})

    @classmethod
    def unit(cls, spec, n, coords=COORD_T):
        return cls(spec, n, coords, {(EMPTY, EMPTY): spec.one()})

    @classmethod
    def tensor(cls, a: Series, b: Series) -> "TensorSeries":
        a._chk(b)
        n = a.n
        out = {}
        for w1, e1 in a.c.items():
            room = n - len(w1)
            for w2, e2 in b.c.items():
                if len(w2) > room:
                    continue
                p = e1 * e2
                if not p.is_zero():
                    key = (w1, w2)
                    cur = out.get(key)
                    s = cur + p if cur is not None else p
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
        return cls(a.spec, n, a.coords, out)

    def _chk(self, other):
        if (
            self.spec != other.spec
            or self.n != other.n
            or self.coords != other.coords
        ):
            raise MixedContext("tensor contexts differ")

    def __add__(self, other):
        self._chk(other)
        c = dict(self.c)
        for k, el in other.c.items():
            cur = c.get(k)
            s = cur + el if cur is not None else el
            if s.is_zero():
                c.pop(k, None)
            else:
                c[k] = s
        return TensorSeries(self.spec, self.n, self.coords, c)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorSeries(self.spec, self.n, self.coords, {k: -el for k, el in self.c.items()})

    def scale(self, el) -> "TensorSeries":
        if isinstance(el, int):
            el = self.spec.from_int(el)
        if el.is_zero():
            return TensorSeries.zero(self.spec, self.n, self.coords)
        out = {}
        for k, v in self.c.items():
            p = v * el
            if not p.is_zero():
                out[k] = p
        return TensorSeries(self.spec, self.n, self.coords, out)

    def __mul__(self, other):
        self._chk(other)
        n = self.n
        out = {}
        for (a1, a2), e1 in self.c.items():
            la = len(a1) + len(a2)
            for (b1, b2), e2 in other.c.items():
                if la + len(b1) + len(b2) > n:
                    continue
                key = (a1 + b1, a2 + b2)
                p = e1 * e2
                cur = out.get(key)
                s = cur + p if cur is not None else p
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return TensorSeries(self.spec, self.n, self.coords, out)

    def __eq__(self, other):
        return (
            isinstance(other, TensorSeries)
            and self.spec == other.spec
            and self.n == other.n
            and self.coords == other.coords
            and self.c == other.c
        )

    def __repr__(self):
        return "TensorSeries(%s, n=%d, %s, %d terms)" % (
            self.spec.label(), self.n, self.coords, len(self.c),
        )

    def is_zero(self):
        return not self.c

    def map_words(self, f1, f2) -> "TensorSeries":
        """Apply linear maps (given on basis words, as word -> Series) per leg."""
        out = TensorSeries.zero(self.spec, self.n, self.coords)
        cache1, cache2 = {}, {}
        for (w1, w2), el in self.c.items():
            s1 = cache1.get(w1)
            if s1 is None:
                s1 = cache1[w1] = f1(w1)
            s2 = cache2.get(w2)
            if s2 is None:
                s2 = cache2[w2] = f2(w2)
            out = out + TensorSeries.tensor(s1, s2).scale(el)
        return out


class PowerSeries1:
    """Truncated power series in one central variable."""

    __slots__ = ("spec", "n", "a")

    def __init__(self, spec, n, a):
        self.spec = spec
        self.n = n
        self.a = list(a)  # length n + 1
        assert len(self.a) == n + 1

    @classmethod
    def zero(cls, spec, n):
        return cls(spec, n, [spec.zero()] * (n + 1))

    @classmethod
    def one(cls, spec, n):
        return cls(spec, n, [spec.one()] + [spec.zero()] * n)

    @classmethod
    def var(cls, spec, n):
        a = [spec.zero()] * (n + 1)
        if n >= 1:
            a[1] = spec.one()
        return cls(spec, n, a)

    @classmethod
    def from_coeffs(cls, spec, n, coeffs):
        a = [spec.zero()] * (n + 1)
        for i, el in enumerate(coeffs[: n + 1]):
            a[i] = el
        return cls(spec, n, a)

    def _chk(self, other):
        if self.spec != other.spec or self.n != other.n:
            raise MixedContext("one-variable series contexts differ")

    def __eq__(self, other):
        return (
            isinstance(other, PowerSeries1)
            and self.spec == other.spec
            and self.n == other.n
            and self.a == other.a
        )

    def __repr__(self):
        return "PowerSeries1(%s, %s)" % (self.spec.label(), [e.v for e in self.a])

    def __add__(self, other):
        self._chk(other)
        return PowerSeries1(self.spec, self.n, [x + y for x, y in zip(self.a, other.a)])

    def __sub__(self, other):
        self._chk(other)
        return PowerSeries1(self.spec, self.n, [x - y for x, y in zip(self.a, other.a)])

    def __neg__(self):
        return PowerSeries1(self.spec, self.n, [-x for x in self.a])

    def scale(self, el):
        return PowerSeries1(self.spec, self.n, [x * el for x in self.a])

    def __mul__(self, other):
        self._chk(other)
        out = [self.spec.zero()] * (self.n + 1)
        for i, x in enumerate(self.a):
            if x.is_zero():
                continue
            for j in range(self.n + 1 - i):
                y = other.a[j]
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return PowerSeries1(self.spec, self.n, out)

    def is_zero(self):
        return all(x.is_zero() for x in self.a)

    def inverse(self):
        if not self.a[0].is_unit():
            raise BadConstantTerm("inverse needs a unit constant term")
        inv0 = self.a[0].inv()
        out = [self.spec.zero()] * (self.n + 1)
        out[0] = inv0
        for d in range(1, self.n + 1):
            acc = self.spec.zero()
            for j in range(1, d + 1):
                acc = acc + self.a[j] * out[d - j]
            out[d] = -(inv0 * acc)
        return PowerSeries1(self.spec, self.n, out)

    def exp(self):
        if not self.spec.is_q_algebra():
            raise RingUnsupported("exp needs a Q-algebra")
        if not self.a[0].is_zero():
            raise BadConstantTerm("exp needs zero constant term")
        out = PowerSeries1.one(self.spec, self.n)
        term = PowerSeries1.one(self.spec, self.n)
        for k in range(1, self.n + 1):
            term = (term * self).scale(self.spec.from_mpq(mpq(1, k)))
            if term.is_zero():
                break
            out = out + term
        return out

    def compose(self, inner: "PowerSeries1") -> "PowerSeries1":
        """self(inner(t)); inner must have zero constant term."""
        self._chk(inner)
        if not inner.a[0].is_zero():
            raise BadConstantTerm("composition needs zero constant term")
        out = PowerSeries1.zero(self.spec, self.n)
        power = PowerSeries1.one(self.spec, self.n)
        for k in range(self.n + 1):
            if not self.a[k].is_zero():
                out = out + power.scale(self.a[k])
            if k < self.n:
                power = power * inner
        return out

    def eval_series(self, s: Series) -> Series:
        """Substitute a two-generator series with zero constant term."""
        if s.spec != self.spec or s.n != self.n:
            raise MixedContext("evaluation context differs")
        if not s.constant().is_zero():
            raise BadConstantTerm("evaluation point needs zero constant term")
        out = Series.zero(s.spec, s.n, s.coords)
        power = Series.one(s.spec, s.n, s.coords)
        for k in range(self.n + 1):
            if not self.a[k].is_zero():
                out = out + power.scale(self.a[k])
            if k < self.n:
                power = power * s
        return out

    def shift_down(self) -> "PowerSeries1":
        """Divide by the variable; requires zero constant term.

        The top coefficient of the quotient is unknown at this truncation and
        is set to zero, so callers should compare only below the top degree.
        """
        if not self.a[0].is_zero():
            raise BadConstantTerm("shift_down needs zero constant term")
        return PowerSeries1(self.spec, self.n, self.a[1:] + [self.spec.zero()])

    def truncate_list(self, m: int):
        return self.a[: m + 1]
