"""Named verification suites and deterministic JSON reports.

Each suite runs a batch of exact checks and returns a report dict:

    {"schema": ..., "command": ..., "config": {...}, "ok": bool,
     "checks": [{"name", "status", "detail", "data"}, ...]}

Reports are deterministic given (config, seed): all randomness flows from
the seed, and checks are sorted by name before assembly.
"""
from __future__ import annotations

import random

from gmpy2 import mpq

from .coeff import PADIC, RATIONAL, RingSpec
from .discrete import (
    DW,
    delta_full,
    delta_mod,
    grouplike_M_discrete,
    mono_degree,
    pr_n,
)
from .errors import ConfigError, IntegralityViolation
from .freegroup import GroupWord, enumerate_reduced, eval_magnus
from .harmonic import (
    coproduct_W,
    delta_W_word,
    gen_series_grouplike,
    grouplike_M,
    project_M,
)
from .lie import solve_degree, solution_vector
from .linalg import in_span, same_span
from .magnus import (
    TwistedMagnusElement,
    aut_V1,
    gamma_cocycle_value,
    identity,
    is_quad,
    is_stab_M,
    star,
    star_inverse,
    _w_words,
)
from .propadic import (
    ProPElement,
    gtp_relations_check,
    padic_identity,
    padic_invert,
    padic_star,
    reduce_precision,
)
from .randgen import random_element, random_groupword, random_unit
from .series import COORD_T, Series

SCHEMA = "twistedmagnus-report/1"

_Q = RingSpec(RATIONAL)


def _check(name: str, ok: bool, detail: str = "", data=None) -> dict:
    return {
        "name": name,
        "status": "pass" if ok else "fail",
        "detail": detail,
        "data": data if data is not None else {},
    }


def _skip(name: str, detail: str) -> dict:
    return {"name": name, "status": "skipped", "detail": detail, "data": {}}


# -- group-axioms ------------------------------------------------------


def suite_group_axioms(config: dict) -> list:
    n = config.get("deg") or 6
    seed = config.get("seed", 0)
    count = config.get("count") or 25
    rng = random.Random(seed)
    ident = identity(_Q, n)
    assoc = unit = inverse = True
    for _ in range(count):
        a, b, c = (random_element(rng, _Q, n) for _ in range(3))
        assoc = assoc and star(star(a, b), c) == star(a, star(b, c))
        unit = unit and star(a, ident) == a and star(ident, a) == a
        inv = star_inverse(a)
        inverse = inverse and star(a, inv) == ident and star(inv, a) == ident
    data = {"deg": n, "triples": count}
    return [
        _check("group-axioms/associativity", assoc, "seeded random triples", data),
        _check("group-axioms/unit", unit, "(1,1) two-sided unit", data),
        _check("group-axioms/inverse", inverse, "two-sided inverses", data),
    ]


# -- cocycle -----------------------------------------------------------


def suite_cocycle(config: dict) -> list:
    n = config.get("deg") or 6
    seed = config.get("seed", 0)
    count = config.get("count") or 25
    rng = random.Random(seed)
    ok = True
    for _ in range(count):
        a, b = random_element(rng, _Q, n), random_element(rng, _Q, n)
        lhs = gamma_cocycle_value(star(a, b))
        rhs = gamma_cocycle_value(a) * aut_V1(a, gamma_cocycle_value(b))
        ok = ok and lhs == rhs
    return [
        _check(
            "cocycle/identity",
            ok,
            "c(a*b) = c(a) * aut(a, c(b)) on seeded pairs",
            {"deg": n, "pairs": count},
        )
    ]


# -- hopf --------------------------------------------------------------


def _random_w_series(rng: random.Random, n: int) -> Series:
    terms = []
    for w in _w_words(n):
        c = rng.randint(-2, 2)
        if c:
            terms.append((w, _Q.from_int(c)))
    return Series.from_terms(_Q, n, COORD_T, terms)


def _coassoc_holds(s: Series) -> bool:
    spec, n = s.spec, s.n

    def acc(out, key, val):
        cur = out.get(key)
        val = cur + val if cur is not None else val
        if val.is_zero():
            out.pop(key, None)
        else:
            out[key] = val

    d = coproduct_W(s)
    left, right = {}, {}
    for (w1, w2), c in d.c.items():
        for (a, b), c2 in delta_W_word(spec, n, w1).c.items():
            if len(a) + len(b) + len(w2) <= n:
                acc(left, (a, b, w2), c * c2)
        for (a, b), c2 in delta_W_word(spec, n, w2).c.items():
            if len(w1) + len(a) + len(b) <= n:
                acc(right, (w1, a, b), c * c2)
    return left == right


def _random_dw(rng: random.Random, wdeg_max: int) -> DW:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        k = rng.randint(0, wdeg_max)
        mono = [rng.randint(0, 2)]
        for _ in range(k):
            mono.append(rng.choice([-2, -1, 1, 2]))
            mono.append(rng.randint(-1, 2))
        terms[tuple(mono)] = mpq(rng.randint(-3, 3))
    return DW({m: c for m, c in terms.items() if c})


def _dt_top(t, n: int):
    return {
        m: c
        for m, c in t.terms.items()
        if mono_degree(m[0]) == n and mono_degree(m[1]) == n
    }


def suite_hopf(config: dict) -> list:
    n = config.get("deg") or 5
    seed = config.get("seed", 0)
    count = config.get("count") or 10
    rng = random.Random(seed)
    coassoc = multiplicative = True
    for _ in range(count):
        a, b = _random_w_series(rng, n), _random_w_series(rng, n)
        coassoc = coassoc and _coassoc_holds(a)
        multiplicative = (
            multiplicative and coproduct_W(a * b) == coproduct_W(a) * coproduct_W(b)
        )
    genseries = gen_series_grouplike(_Q, n, +1) and gen_series_grouplike(_Q, n, -1)
    square = True
    for _ in range(count * 2):
        x = _random_dw(rng, 3)
        for k in range(4):
            xx = pr_n(x, k)
            if not xx.terms:
                continue
            square = square and _dt_top(delta_full(xx), k) == delta_mod(xx).terms
    data = {"deg": n, "samples": count}
    return [
        _check("hopf/coassociativity", coassoc, "harmonic coproduct on W", data),
        _check("hopf/multiplicativity", multiplicative, "Delta(ab) = Delta(a)Delta(b)", data),
        _check(
            "hopf/generating-series",
            genseries,
            "geometric generating series group-like through u^4",
            {"deg": n},
        ),
        _check(
            "hopf/mod-projection-square",
            square,
            "top-degree shadow of the full coproduct matches delta_mod",
            data,
        ),
    ]


# -- lie-solver --------------------------------------------------------


def suite_lie_solver(config: dict) -> list:
    deg_max = config.get("deg_max") or 5
    compare = config.get("compare", "primM")
    inclusion_against = config.get("check_inclusion", "stabW")
    conditions = config.get("conditions") or ["quad", "stabM"]
    table = []
    equal_all = inclusion_all = True
    for d in range(1, deg_max + 1):
        sols = solve_degree(d, set(conditions))
        vecs = [solution_vector(a, d) for a in sols]
        row = {"degree": d, "dim": len(sols), "conditions": sorted(conditions)}
        if compare:
            other = solve_degree(d, (set(conditions) - {"stabM", "primM"}) | {compare})
            ovecs = [solution_vector(a, d) for a in other]
            row["dim_compare"] = len(other)
            row["equal"] = same_span(vecs, ovecs)
            equal_all = equal_all and row["equal"]
        if inclusion_against:
            target = solve_degree(d, (set(conditions) - {"stabM", "stabW"}) | {inclusion_against})
            tvecs = [solution_vector(a, d) for a in target]
            row["dim_inclusion_target"] = len(target)
            row["included"] = all(in_span(tvecs, v) for v in vecs) if vecs else True
            inclusion_all = inclusion_all and row["included"]
        row["basis"] = [
            {
                "nu": str(a.nu),
                "x": {
                    "".join(map(str, w)): str(a.x.c[w].v)
                    for w in sorted(a.x.c, key=lambda w: (len(w), w))
                },
            }
            for a in sols
        ]
        table.append(row)
    checks = [
        _check(
            "lie-solver/dimensions",
            True,
            "per-degree solution dimensions",
            {"table": table},
        )
    ]
    if compare:
        checks.append(
            _check(
                "lie-solver/equivalence",
                equal_all,
                "solution spaces agree with the %s formulation" % compare,
                {"deg_max": deg_max},
            )
        )
    if inclusion_against:
        checks.append(
            _check(
                "lie-solver/inclusion",
                inclusion_all,
                "solutions also satisfy the %s condition" % inclusion_against,
                {"deg_max": deg_max},
            )
        )
    return checks


# -- discrete-enum -----------------------------------------------------


def _is_stratified_power_pair(g: GroupWord) -> bool:
    """Is g of the form X1^alpha X0^beta?"""
    s = g.syllables
    if len(s) > 2:
        return False
    if len(s) == 2:
        return s[0][0] == 1 and s[1][0] == 0
    return True


def suite_discrete_enum(config: dict) -> list:
    maxlen = config.get("maxlen") or 8
    n = config.get("deg") or 6
    seed = config.get("seed", 0)
    sample = config.get("count") or 200
    words = list(enumerate_reduced(maxlen))
    classified = True
    grouplike_words = []
    for g in words:
        got = grouplike_M_discrete(g)
        if got != _is_stratified_power_pair(g):
            classified = False
        if got:
            grouplike_words.append(g)
    rng = random.Random(seed)
    pool = [g for g in words if g.syllables]
    crosscheck = True
    for g in rng.sample(pool, min(sample, len(pool))):
        series_side = grouplike_M(project_M(eval_magnus(g, _Q, n)))
        crosscheck = crosscheck and series_side == grouplike_M_discrete(g)
    window = []
    for g in grouplike_words:
        for mu in (1, -1):
            e = TwistedMagnusElement(_Q.from_int(mu), eval_magnus(g, _Q, n))
            if is_quad(e) and is_stab_M(e):
                window.append([mu, g.to_str()])
    window.sort(key=lambda it: (-it[0], it[1]))
    return [
        _check(
            "discrete-enum/classification",
            classified,
            "group-like module classes come exactly from X1^a X0^b",
            {"maxlen": maxlen, "words": len(words)},
        ),
        _check(
            "discrete-enum/series-crosscheck",
            crosscheck,
            "discrete decision matches the truncated-series test",
            {"deg": n, "sampled": min(sample, len(pool))},
        ),
        _check(
            "discrete-enum/dmr-window",
            window == [[1, "1"], [-1, "1"]],
            "double shuffle window reduces to the two signs",
            {"window": window},
        ),
    ]


# -- padic -------------------------------------------------------------


def suite_padic(config: dict) -> list:
    n = config.get("deg") or 5
    seed = config.get("seed", 0)
    count = config.get("count") or 50
    primes = config.get("primes") or [2, 3, 5]
    K = config.get("K") or 3
    roundtrip = reduction = True
    violations = 0
    for p in primes:
        spec = RingSpec(PADIC, p, K)
        ident = padic_identity(spec, n)
        rng = random.Random(seed + p)
        for _ in range(count):
            w = random_groupword(rng, 4)
            e = ProPElement(random_unit(rng, spec), eval_magnus(w, spec, n))
            try:
                inv = padic_invert(e)
            except IntegralityViolation:
                violations += 1
                roundtrip = False
                continue
            roundtrip = (
                roundtrip
                and padic_star(e, inv) == ident
                and padic_star(inv, e) == ident
            )
            if K > 1:
                reduction = reduction and reduce_precision(inv, K - 1) == padic_invert(
                    reduce_precision(e, K - 1)
                )
    gt_ok = True
    for p in primes:
        spec = RingSpec(PADIC, p, K)
        one = padic_identity(spec, n)
        minus = ProPElement(-1, Series.one(spec, n, COORD_T))
        for e, want in ((one, True), (minus, True)):
            rc = gtp_relations_check(e)
            gt_ok = gt_ok and rc["duality"] == want and rc["kappa"] == want
        x0x1 = eval_magnus(GroupWord(((0, 1), (1, 1))), spec, n)
        gt_ok = gt_ok and not gtp_relations_check(ProPElement(1, x0x1))["duality"]
    data = {"deg": n, "primes": primes, "K": K, "count": count}
    return [
        _check(
            "padic/invert-roundtrip",
            roundtrip and violations == 0,
            "inversion certified, no integrality violations",
            dict(data, violations=violations),
        ),
        _check(
            "padic/reduction-compatibility",
            reduction,
            "results reduce consistently to precision K-1",
            data,
        ),
        _check(
            "padic/gt-relations",
            gt_ok,
            "duality and kappa sanity at both signs",
            data,
        ),
    ]


# -- single-element commands -------------------------------------------


def _report(command: str, config: dict, checks: list) -> dict:
    checks.sort(key=lambda c: c["name"])
    return {
        "schema": SCHEMA,
        "command": command,
        "config": config,
        "ok": all(c["status"] != "fail" for c in checks),
        "checks": checks,
    }


def run_check(ring: str, deg: int, mu: str, g: str, tests: list) -> dict:
    """Membership predicates for one twisted Magnus element."""
    from gmpy2 import mpq as _mpq

    from .expr import parse_g_argument
    from .magnus import (
        gamma_reflection_check,
        gt_relations_check,
        is_dmr,
        is_stab_W,
    )

    spec = RingSpec.parse(ring)
    config = {"ring": spec.label(), "deg": deg, "mu": mu, "g": g}
    e = TwistedMagnusElement(
        spec.from_mpq(_mpq(mu)), parse_g_argument(g, spec, deg)
    )
    checks = []
    needs_q = {
        "quad", "stabW", "stabM", "dmr:stab", "dmr:grouplike", "gt", "gammaRefl"
    }
    for name in tests:
        if name in needs_q and not spec.is_q_algebra():
            checks.append(
                _skip("check/" + name, "needs a Q-algebra ring; see check-padic")
            )
            continue
        if name == "quad":
            checks.append(_check("check/quad", is_quad(e), "quadratic coefficient conditions"))
        elif name == "stabW":
            checks.append(_check("check/stabW", is_stab_W(e), "stabilizes the W coproduct"))
        elif name == "stabM":
            checks.append(_check("check/stabM", is_stab_M(e), "stabilizes the M coproduct"))
        elif name == "dmr:stab":
            checks.append(_check("check/dmr:stab", is_dmr(e, "stab"), "double shuffle, stabilizer form"))
        elif name == "dmr:grouplike":
            checks.append(_check("check/dmr:grouplike", is_dmr(e, "grouplike"), "double shuffle, group-like form"))
        elif name == "gt":
            rc = gt_relations_check(e)
            checks.append(
                _check(
                    "check/gt",
                    bool(rc["duality"] and rc["kappa"]),
                    "duality and kappa relations (pentagon not checked)",
                    {"duality": rc["duality"], "kappa": rc["kappa"]},
                )
            )
        elif name == "gammaRefl":
            checks.append(
                _check("check/gammaRefl", gamma_reflection_check(e), "Gamma reflection identity")
            )
        else:
            raise ConfigError("unknown test %r" % (name,))
    return _report("check", config, checks)


def run_check_padic(p: int, K: int, deg: int, lam: int, f: str, tests: list) -> dict:
    from .errors import HalfNotDefined
    from .expr import parse_groupword

    spec = RingSpec(PADIC, p, K)
    config = {"ring": spec.label(), "deg": deg, "lambda": lam, "f": f}
    e = ProPElement(lam, eval_magnus(parse_groupword(f), spec, deg))
    ident = padic_identity(spec, deg)
    checks = []
    for name in tests:
        if name == "star-roundtrip":
            try:
                inv = padic_invert(e)
                ok = padic_star(e, inv) == ident and padic_star(inv, e) == ident
                detail = "two-sided inverse at truncation"
            except IntegralityViolation as exc:
                ok, detail = False, str(exc)
            checks.append(_check("check-padic/star-roundtrip", ok, detail))
        elif name == "gt":
            try:
                rc = gtp_relations_check(e)
                checks.append(
                    _check(
                        "check-padic/gt",
                        bool(rc["duality"] and rc["kappa"]),
                        "duality and kappa relations mod p^K",
                        rc,
                    )
                )
            except HalfNotDefined as exc:
                checks.append(_check("check-padic/gt", False, str(exc)))
        else:
            raise ConfigError("unknown test %r" % (name,))
    return _report("check-padic", config, checks)


def run_gamma(ring: str, deg: int, mu: str, g: str) -> dict:
    from gmpy2 import mpq as _mpq

    from .expr import parse_g_argument, series_to_expr
    from .magnus import gamma_of, gamma_reflection_check

    spec = RingSpec.parse(ring)
    if not spec.is_q_algebra():
        raise ConfigError("the Gamma series needs a Q-algebra ring")
    config = {"ring": spec.label(), "deg": deg, "mu": mu, "g": g}
    e = TwistedMagnusElement(
        spec.from_mpq(_mpq(mu)), parse_g_argument(g, spec, deg)
    )
    from .magnus import gamma_cocycle_value as _cocycle

    coeffs = [str(c.v) for c in gamma_of(e).a]
    checks = [
        _check(
            "gamma/series",
            True,
            "coefficients of Gamma_g(t) by degree",
            {"coefficients": coeffs},
        ),
        _check(
            "gamma/cocycle-value",
            True,
            "Gamma_g^{-1}(-log X1)",
            {"series": series_to_expr(_cocycle(e))},
        ),
        _check(
            "gamma/reflection",
            gamma_reflection_check(e),
            "Gamma_g(t) Gamma_g(-t) reflection identity",
        ),
    ]
    return _report("gamma", config, checks)


def run_solve_lie(deg_max: int, conditions: list, compare: str | None,
                  check_inclusion: str | None) -> dict:
    config = {
        "deg_max": deg_max,
        "conditions": sorted(conditions),
        "compare": compare,
        "check_inclusion": check_inclusion,
    }
    checks = suite_lie_solver(
        {
            "deg_max": deg_max,
            "conditions": conditions,
            "compare": compare,
            "check_inclusion": check_inclusion,
        }
    )
    return _report("solve-lie", config, checks)


def run_enumerate_discrete(maxlen: int, deg: int, seed: int, count: int) -> dict:
    config = {"maxlen": maxlen, "deg": deg, "seed": seed, "count": count}
    checks = suite_discrete_enum(config)
    return _report("enumerate-discrete", config, checks)


# -- dispatch ----------------------------------------------------------

SUITES = {
    "group-axioms": suite_group_axioms,
    "cocycle": suite_cocycle,
    "hopf": suite_hopf,
    "lie-solver": suite_lie_solver,
    "discrete-enum": suite_discrete_enum,
    "padic": suite_padic,
}


def run_suite(name: str, config: dict | None = None) -> dict:
    config = dict(config or {})
    if name == "all":
        checks = []
        for key in sorted(SUITES):
            checks.extend(SUITES[key](config))
    elif name in SUITES:
        checks = SUITES[name](config)
    else:
        raise ConfigError(
            "unknown suite %r (choose from %s)" % (name, ", ".join(sorted(SUITES)) + ", all")
        )
    checks.sort(key=lambda c: c["name"])
    return {
        "schema": SCHEMA,
        "command": "suite:%s" % name,
        "config": {
            "seed": config.get("seed", 0),
            **{k: v for k, v in sorted(config.items()) if k != "seed"},
        },
        "ok": all(c["status"] != "fail" for c in checks),
        "checks": checks,
    }
