"""Discrete (uncompleted) model of W over the group algebra of F2.

W_Q has a monomial basis  X1^b0 Y_a1 X1^b1 ... Y_an X1^bn  with a_i nonzero
integers and b_i integers, where Y_a = X0^a (X1 - 1).  A monomial is encoded
as the flat tuple (b0, a1, b1, ..., an, bn) of odd length; its W-degree is
the number of Y factors.

Two coproduct-like maps act on this basis:

  * ``delta_full`` -- the harmonic coproduct, multiplicative on the images
      D(Y_a)  = Y_a x 1 + 1 x Y_a - sum_{0<a'<a} Y_a' x Y_{a-a'}   (a > 0)
      D(Y_-a) = Y_-a x X1 + X1 x Y_-a + sum_{0<a'<a} Y_-a' x Y_{a'-a}
      D(X1^b) = X1^b x X1^b;
  * ``delta_mod`` -- its top-degree shadow, keeping only the bilinear part:
      Y_a -> -sum Y_a' x Y_{a-a'},  Y_-a -> +sum Y_-a' x Y_{a'-a},
      X1^b -> X1^b x X1^b.

For a group word g = X0^a1 X1^b1 ... X0^an X1^bn the element

    w(g) = 1 + sum_i X0^a1 X1^b1 ... X0^ai (X1^bi - 1)

lies in W_Q, and its top W-degree part has the closed form

    pr_n(w(g)) = Y_a1 phi_b1(X1) ... Y_an phi_bn(X1),
    phi_b(t) = (t^b - 1)/(t - 1).
"""
from __future__ import annotations

from gmpy2 import mpq

from .errors import NotInW, NotStratified
from .freegroup import GroupWord

ONE_MONO = (0,)


def mono_degree(m) -> int:
    return len(m) // 2


def mono_mul(m1, m2):
    return m1[:-1] + (m1[-1] + m2[0],) + m2[1:]


class DW:
    """A finite Q-linear combination of W monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({ONE_MONO: mpq(1)})

    @classmethod
    def x1_power(cls, b: int):
        return cls({(b,): mpq(1)})

    @classmethod
    def y(cls, a: int):
        if a == 0:
            raise NotStratified("Y_0 is not a basis generator here")
        return cls({(0, a, 0): mpq(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, mpq(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return DW(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DW({m: -c for m, c in self.terms.items()})

    def scale(self, q):
        q = mpq(q)
        if not q:
            return DW()
        return DW({m: c * q for m, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, mpq(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return DW(out)

    def __eq__(self, other):
        return isinstance(other, DW) and self.terms == other.terms

    def __repr__(self):
        return "DW(%d terms)" % len(self.terms)

    def is_zero(self):
        return not self.terms

    def degree_component(self, n: int) -> "DW":
        return DW({m: c for m, c in self.terms.items() if mono_degree(m) == n})

    def max_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            toks = []
            if m[0]:
                toks.append("X1^%d" % m[0])
            for j in range(1, len(m), 2):
                toks.append("Y(%d)" % m[j])
                if m[j + 1]:
                    toks.append("X1^%d" % m[j + 1])
            parts.append("(%s)*%s" % (c, " ".join(toks) or "1"))
        return " + ".join(parts)


class DT:
    """Element of the tensor square of the discrete model."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @classmethod
    def unit(cls):
        return cls({(ONE_MONO, ONE_MONO): mpq(1)})

    @classmethod
    def tensor(cls, a: DW, b: DW):
        out = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                out[(m1, m2)] = c1 * c2
        return cls(out)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, mpq(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return DT(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, q):
        q = mpq(q)
        if not q:
            return DT()
        return DT({k: c * q for k, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for (a1, a2), c1 in self.terms.items():
            for (b1, b2), c2 in other.terms.items():
                k = (mono_mul(a1, b1), mono_mul(a2, b2))
                s = out.get(k, mpq(0)) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return DT(out)

    def __eq__(self, other):
        return isinstance(other, DT) and self.terms == other.terms

    def __repr__(self):
        return "DT(%d terms)" % len(self.terms)

    def is_zero(self):
        return not self.terms


# -- generator images --------------------------------------------------


def _delta_y_full(a: int) -> DT:
    out = DT()
    if a > 0:
        out = out + DT.tensor(DW.y(a), DW.one()) + DT.tensor(DW.one(), DW.y(a))
        for ap in range(1, a):
            out = out - DT.tensor(DW.y(ap), DW.y(a - ap))
    else:
        x1 = DW.x1_power(1)
        out = out + DT.tensor(DW.y(a), x1) + DT.tensor(x1, DW.y(a))
        for ap in range(1, -a):
            out = out + DT.tensor(DW.y(-ap), DW.y(ap + a))
    return out


def _delta_y_mod(a: int) -> DT:
    out = DT()
    if a > 0:
        for ap in range(1, a):
            out = out - DT.tensor(DW.y(ap), DW.y(a - ap))
    else:
        for ap in range(1, -a):
            out = out + DT.tensor(DW.y(-ap), DW.y(ap + a))
    return out


def _fold_mono(m, y_image) -> DT:
    out = DT({(( m[0],), (m[0],)): mpq(1)})
    for j in range(1, len(m), 2):
        out = out * y_image(m[j])
        b = m[j + 1]
        out = out * DT({((b,), (b,)): mpq(1)})
    return out


def delta_full(x: DW) -> DT:
    out = DT()
    for m, c in x.terms.items():
        out = out + _fold_mono(m, _delta_y_full).scale(c)
    return out


def delta_mod(x: DW) -> DT:
    out = DT()
    for m, c in x.terms.items():
        out = out + _fold_mono(m, _delta_y_mod).scale(c)
    return out


def pr_n(x: DW, n: int) -> DW:
    """Projection onto the W-degree-n graded piece."""
    return x.degree_component(n)


# -- phi polynomials and w(g) ------------------------------------------


def phi_terms(b: int):
    """(t^b - 1)/(t - 1) as a list of (exponent, +-1) pairs; phi_0 = 0."""
    if b >= 0:
        return [(j, 1) for j in range(b)]
    return [(-j, -1) for j in range(1, -b + 1)]


def phi_dw(b: int) -> DW:
    return DW({(j,): mpq(c) for j, c in phi_terms(b)})


def stratified_pairs(g: GroupWord):
    """Decompose g as X0^a1 X1^b1 ... X0^an X1^bn or raise NotStratified."""
    syl = g.syllables
    if len(syl) % 2 != 0:
        raise NotStratified("odd number of syllables")
    pairs = []
    for i in range(0, len(syl), 2):
        if syl[i][0] != 0 or syl[i + 1][0] != 1:
            raise NotStratified("expected alternating X0, X1 syllables")
        pairs.append((syl[i][1], syl[i + 1][1]))
    return pairs


def w_of_g(g: GroupWord) -> dict:
    """w(g) = 1 + sum_i prefix_i (X1^bi - 1) as a map GroupWord -> mpq."""
    pairs = stratified_pairs(g)
    out = {GroupWord(): mpq(1)}

    def bump(word, c):
        s = out.get(word, mpq(0)) + c
        if s:
            out[word] = s
        else:
            out.pop(word, None)

    prefix = GroupWord()
    for a, b in pairs:
        head = prefix * GroupWord(((0, a),))
        bump(head * GroupWord(((1, b),)), mpq(1))
        bump(head, mpq(-1))
        prefix = head * GroupWord(((1, b),))
    return out


def pr_n_of_w(g: GroupWord) -> DW:
    """Top W-degree part of w(g), by the closed product formula."""
    pairs = stratified_pairs(g)
    out = DW.one()
    for a, b in pairs:
        out = out * DW.y(a) * phi_dw(b)
    return out


# -- rewriting group-algebra data into the Y / X1 basis ----------------


def w_of_g_y_basis(g: GroupWord) -> DW:
    """w(g) rewritten into the monomial basis, term by term.

    Each summand prefix * (X1^b - 1) is turned into a token string and
    normalised with the rules
        X0^a (X1^b - 1)      = Y_a phi_b(X1)
        X0^a X1^b (rest)     = Y_a phi_b(X1) (rest) + X0^a (rest)
        X0^a Y_a' (a+a' != 0) = Y_{a+a'}
        X0^a Y_{-a} (rest)   = (X1 - 1)(rest)
    each of which strictly lowers (number of X0 tokens, token count).
    """
    pairs = stratified_pairs(g)
    out = DW.one()
    prefix = []  # tokens for X0^a1 X1^b1 ... X0^ai
    for a, b in pairs:
        prefix = prefix + [("0", a)]
        out = out + _rewrite(list(prefix) + [("D", b)])
        prefix = prefix + [("1", b)]
    return out


def _rewrite(tokens) -> DW:
    out = DW.zero()
    stack = [(mpq(1), tuple(tokens))]
    while stack:
        coeff, toks = stack.pop()
        idx = None
        for i, (kind, _) in enumerate(toks):
            if kind in ("0", "D"):
                idx = i
                break
        if idx is None:
            out = out + DW({_mono_of(toks): coeff})
            continue
        kind, val = toks[idx]
        pre, post = toks[:idx], toks[idx + 1 :]
        if kind == "D":
            # difference token X1^b - 1
            if pre and pre[-1][0] == "0":
                a = pre[-1][1]
                for j, c in phi_terms(val):
                    stack.append(
                        (coeff * c, pre[:-1] + (("Y", a), ("1", j)) + post)
                    )
            else:
                stack.append((coeff, pre + (("1", val),) + post))
                stack.append((-coeff, pre + post))
            continue
        # kind == "0"
        if not post:
            raise NotInW("element has a dangling X0 power")
        nkind, nval = post[0]
        rest = post[1:]
        if nkind == "0":
            a = val + nval
            stack.append((coeff, pre + ((("0", a),) if a else ()) + rest))
        elif nkind == "Y":
            a = val + nval
            if a:
                stack.append((coeff, pre + (("Y", a),) + rest))
            else:
                stack.append((coeff, pre + (("1", 1),) + rest))
                stack.append((-coeff, pre + rest))
        elif nkind == "1":
            if nval == 0:
                stack.append((coeff, pre + (("0", val),) + rest))
            else:
                for j, c in phi_terms(nval):
                    stack.append(
                        (coeff * c, pre + (("Y", val), ("1", j)) + rest)
                    )
                stack.append((coeff, pre + (("0", val),) + rest))
        else:  # "D"
            for j, c in phi_terms(nval):
                stack.append((coeff * c, pre + (("Y", val), ("1", j)) + rest))
    return out


def _mono_of(toks):
    res = [0]
    for kind, val in toks:
        if kind == "1":
            res[-1] += val
        else:  # "Y"
            res.append(val)
            res.append(0)
    return tuple(res)


# -- group-like classification -----------------------------------------


def strip_action(g: GroupWord):
    """Factor g = X1^alpha * core * X0^beta with core stratified (or empty)."""
    syl = list(g.syllables)
    alpha = beta = 0
    if syl and syl[0][0] == 1:
        alpha = syl[0][1]
        syl = syl[1:]
    if syl and syl[-1][0] == 0:
        beta = syl[-1][1]
        syl = syl[:-1]
    return alpha, GroupWord(tuple(syl)), beta


def grouplike_M_discrete(g: GroupWord) -> bool:
    """Decide whether g * 1_B is group-like in the discrete quotient model.

    Left multiplication by X1 and right multiplication by X0 both preserve
    group-likeness of the class, so g is first reduced to its stratified
    core; the core is group-like exactly when the top-stratum identity
    delta_mod(pr_n(w(core))) = pr_n(w(core)) x pr_n(w(core)) holds.
    """
    _, core, _ = strip_action(g)
    if core.is_identity():
        return True
    top = pr_n_of_w(core)
    return delta_mod(top) == DT.tensor(top, top)
