"""Exact coefficient rings.

Three rings are supported:

  * ``rational``   -- the rationals, held as gmpy2.mpq in lowest terms;
  * ``dual``       -- dual numbers Q[eps]/(eps^2), a pair (a, b) = a + b*eps;
  * ``padic:p:K``  -- the finite ring Z/p^K, residues stored in [0, p^K).

All arithmetic is exact.  Operations that need denominators (exp, log,
binomial with rational top argument, ...) are gated on ``is_q_algebra``.
"""
from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import ConfigError, MixedContext, NotAUnit, RingUnsupported

RATIONAL = "rational"
DUAL = "dual"
PADIC = "padic"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for the 64-bit range
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingSpec:
    """Identifies a coefficient ring.  Hashable, so usable as a cache key."""

    kind: str
    p: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind in (RATIONAL, DUAL):
            if self.p or self.k:
                raise ConfigError("p, K only make sense for padic rings")
        elif self.kind == PADIC:
            if not _is_prime(self.p):
                raise ConfigError("padic ring needs a prime p, got %r" % (self.p,))
            if self.k < 1:
                raise ConfigError("padic ring needs precision K >= 1")
        else:
            raise ConfigError("unknown ring kind %r" % (self.kind,))

    @property
    def modulus(self) -> int:
        return self.p ** self.k

    def is_q_algebra(self) -> bool:
        return self.kind in (RATIONAL, DUAL)

    def label(self) -> str:
        if self.kind == PADIC:
            return "padic:%d:%d" % (self.p, self.k)
        return "q" if self.kind == RATIONAL else "dual"

    @staticmethod
    def parse(text: str) -> "RingSpec":
        if text == "q":
            return RingSpec(RATIONAL)
        if text == "dual":
            return RingSpec(DUAL)
        if text.startswith("padic:"):
            parts = text.split(":")
            if len(parts) != 3:
                raise ConfigError("padic ring label must be padic:<p>:<K>")
            try:
                p, k = int(parts[1]), int(parts[2])
            except ValueError:
                raise ConfigError("padic ring label must be padic:<p>:<K>")
            return RingSpec(PADIC, p, k)
        raise ConfigError("unknown ring label %r" % (text,))

    # -- element constructors ------------------------------------------

    def zero(self) -> "RingElement":
        return self.from_int(0)

    def one(self) -> "RingElement":
        return self.from_int(1)

    def from_int(self, n: int) -> "RingElement":
        if self.kind == RATIONAL:
            return RingElement(self, mpq(n))
        if self.kind == DUAL:
            return RingElement(self, (mpq(n), mpq(0)))
        return RingElement(self, n % self.modulus)

    def from_mpq(self, q) -> "RingElement":
        q = mpq(q)
        if self.kind == RATIONAL:
            return RingElement(self, q)
        if self.kind == DUAL:
            return RingElement(self, (q, mpq(0)))
        num, den = int(q.numerator), int(q.denominator)
        m = self.modulus
        if den % self.p == 0:
            raise NotAUnit("denominator %d is not invertible mod %d" % (den, m))
        return RingElement(self, num * pow(den, -1, m) % m)

    def dual_from_pair(self, a, b) -> "RingElement":
        if self.kind != DUAL:
            raise ConfigError("dual_from_pair needs the dual ring")
        return RingElement(self, (mpq(a), mpq(b)))


class RingElement:
    """A coefficient.  Immutable; arithmetic returns fresh elements."""

    __slots__ = ("spec", "v")

    def __init__(self, spec: RingSpec, v):
        self.spec = spec
        self.v = v

    def _chk(self, other: "RingElement"):
        if self.spec != other.spec:
            raise MixedContext("elements of %s and %s" % (self.spec, other.spec))

    def __add__(self, other):
        self._chk(other)
        k = self.spec.kind
        if k == RATIONAL:
            return RingElement(self.spec, self.v + other.v)
        if k == PADIC:
            return RingElement(self.spec, (self.v + other.v) % self.spec.modulus)
        a, b = self.v
        c, d = other.v
        return RingElement(self.spec, (a + c, b + d))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        k = self.spec.kind
        if k == RATIONAL:
            return RingElement(self.spec, -self.v)
        if k == PADIC:
            return RingElement(self.spec, (-self.v) % self.spec.modulus)
        a, b = self.v
        return RingElement(self.spec, (-a, -b))

    def __mul__(self, other):
        self._chk(other)
        k = self.spec.kind
        if k == RATIONAL:
            return RingElement(self.spec, self.v * other.v)
        if k == PADIC:
            return RingElement(self.spec, (self.v * other.v) % self.spec.modulus)
        a, b = self.v
        c, d = other.v
        return RingElement(self.spec, (a * c, a * d + b * c))

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.spec == other.spec
            and self.v == other.v
        )

    def __hash__(self):
        return hash((self.spec, self.v))

    def __repr__(self):
        return "RingElement(%s, %r)" % (self.spec.label(), self.v)

    def is_zero(self) -> bool:
        if self.spec.kind == DUAL:
            return self.v == (0, 0)
        return self.v == 0

    def is_unit(self) -> bool:
        k = self.spec.kind
        if k == RATIONAL:
            return self.v != 0
        if k == PADIC:
            return self.v % self.spec.p != 0
        return self.v[0] != 0

    def inv(self) -> "RingElement":
        k = self.spec.kind
        if k == RATIONAL:
            if self.v == 0:
                raise NotAUnit("division by zero")
            return RingElement(self.spec, 1 / self.v)
        if k == PADIC:
            if self.v % self.spec.p == 0:
                raise NotAUnit("%d is divisible by %d" % (self.v, self.spec.p))
            return RingElement(self.spec, pow(self.v, -1, self.spec.modulus))
        a, b = self.v
        if a == 0:
            raise NotAUnit("dual number with zero real part")
        return RingElement(self.spec, (1 / a, -b / (a * a)))

    def scale_q(self, q) -> "RingElement":
        """Multiply by an exact rational scalar; padic rings need p !| denom."""
        return self * self.spec.from_mpq(q)


def int_binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for any integer n and k >= 0."""
    if k < 0:
        raise ConfigError("binomial needs k >= 0")
    num, den = 1, 1
    for j in range(k):
        num *= n - j
        den *= j + 1
    assert num % den == 0
    return num // den


def ring_binomial(lam: RingElement, k: int) -> RingElement:
    """C(lam, k) = lam (lam-1) ... (lam-k+1) / k!.

    Over Q-algebras this is the falling-factorial formula.  Over Z/p^K the
    stored residue is lifted to an integer m and the exact integer C(m, k)
    is reduced mod p^K; when the input residue comes from an actual integer
    in [0, p^K) the result is the exact reduction of C(m, k).
    """
    if k < 0:
        raise ConfigError("binomial needs k >= 0")
    spec = lam.spec
    if spec.kind == PADIC:
        return spec.from_int(int_binomial(lam.v, k))
    out = spec.one()
    for j in range(k):
        out = (out * (lam - spec.from_int(j))).scale_q(mpq(1, j + 1))
    return out
