"""Self-test harness: every oracle-equivalence and invariant suite in one place.

Each suite returns the number of checks it ran and a list of failure
descriptions; the CLI turns nonempty failure lists into a nonzero exit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import classgroup, cyclo, genus, radicand, symbols
from .cyclo import CycInt
from .intarith import is_primitive_root, primitive_root, sieve_primes
from .primes import factor_rational_prime


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def note(self, ok: bool, message: str):
        self.checks += 1
        if not ok:
            self.failures.append(message)

    @property
    def passed(self) -> bool:
        return not self.failures


def _suite_ring(seed: int = 20240501) -> SuiteResult:
    res = SuiteResult("ring")
    rng = random.Random(seed)

    def rnd(bits=64):
        return CycInt(tuple(rng.randrange(-(1 << bits), (1 << bits) + 1) for _ in range(4)))

    for _ in range(2000):
        a, b = rnd(), rnd()
        res.note(cyclo.norm(a * b) == cyclo.norm(a) * cyclo.norm(b), f"norm mult {a!r} {b!r}")
        if b:
            q, r = cyclo.euclid_divmod(a, b)
            res.note(a == q * b + r and cyclo.norm(r) < cyclo.norm(b), f"euclid {a!r} {b!r}")
        t = rng.randrange(4)
        res.note(cyclo.norm(cyclo.galois_apply(t, a)) == cyclo.norm(a), f"galois norm {a!r}")
    for n in range(1, 500):
        if n % 5 == 0:
            continue
        want = n % 25 in (1, 7, 18, 24)
        got = cyclo.hyperprimary_class(CycInt(n)) is not None
        res.note(got == want, f"hyperprimary criterion at {n}")
        res.note((pow(n, 4, 25) == 1) == want, f"fourth-power criterion at {n}")
    return res


def _suite_splitting(limit: int = 2000) -> SuiteResult:
    res = SuiteResult("splitting")
    for p in sieve_primes(limit):
        qs = factor_rational_prime(p)
        g = len(qs)
        res.note(qs[0].e * qs[0].f * g == 4, f"efg at {p}")
        prod = CycInt(1)
        for q in qs:
            res.note(cyclo.norm(q.element) == p**q.f, f"norm at {p}")
            prod = prod * q.element**q.e
        unit = cyclo.exact_div(CycInt(p), prod)
        res.note(cyclo.norm(unit) == 1, f"unit cofactor at {p}")
        order = 1 if p == 5 else next(k for k in (1, 2, 4) if pow(p, k, 5) == 1)
        want_g = {1: 4, 2: 2, 4: 1}[order] if p != 5 else 1
        res.note(g == want_g, f"pattern at {p}")
    return res


def _suite_symbols() -> SuiteResult:
    res = SuiteResult("symbols")
    for p in (11, 19, 29, 31, 41):
        for q in factor_rational_prime(p):
            rf = symbols.residue_field(q)
            if rf.f == 1:
                elems = [CycInt(a) for a in range(1, p)]
            else:
                elems = [
                    CycInt((u0, u1, 0, 0))
                    for u0 in range(p)
                    for u1 in range(p)
                    if u0 or u1
                ]
            zeros = 0
            for a in elems:
                s = symbols.quintic_symbol(a, q)
                res.note(s == symbols.brute_force_symbol(a, q), f"oracle {p} {a!r}")
                zeros += s == 0
            res.note(zeros == (rf.order() - 1) // 5, f"fifth-power count above {p}")
    rng = random.Random(99)
    qs = factor_rational_prime(19) + factor_rational_prime(11)
    for _ in range(200):
        q = qs[rng.randrange(len(qs))]
        a = CycInt(tuple(rng.randrange(-40, 41) for _ in range(4)))
        b = CycInt(tuple(rng.randrange(-40, 41) for _ in range(4)))
        try:
            sa = symbols.quintic_symbol(a, q)
            sb = symbols.quintic_symbol(b, q)
            sab = symbols.quintic_symbol(a * b, q)
        except Exception:
            continue
        res.note(sab == (sa + sb) % 5, f"multiplicativity above {q.p}")
    return res


def _suite_periods(limit: int = 100) -> SuiteResult:
    res = SuiteResult("periods")
    pp = genus.period_polynomial(11)
    res.note(pp.coefficients == (1, 3, -3, -4, 1, 1), "frozen p=11 polynomial")
    res.note(pp.discriminant() == 11**4, "p=11 discriminant")
    for p in [p for p in sieve_primes(limit) if p % 5 == 1]:
        poly = genus.period_polynomial(p)
        res.note(poly.coefficients[4] == 1, f"trace at {p}")
        g0 = primitive_root(p)
        g1 = next(g for g in range(g0 + 1, p) if is_primitive_root(g, p))
        res.note(
            genus.period_polynomial(p, g1).coefficients == poly.coefficients,
            f"root independence at {p}",
        )
        d = abs(poly.discriminant())
        v = 0
        while d % p == 0:
            d //= p
            v += 1
        import math

        s = math.isqrt(d)
        res.note(v == 4 and s * s == d, f"discriminant shape at {p}")
    return res


def _suite_classifier(limit: int = 20000) -> SuiteResult:
    res = SuiteResult("classifier")
    for n in range(2, limit + 1):
        if not radicand.is_fifth_power_free(n):
            continue
        verdict = radicand.classify(n).verdict.value
        matches = radicand.crosscheck_verdicts(n)
        res.note(len(matches) <= 1, f"exclusivity at {n}")
        res.note(verdict == (matches[0] if matches else "none"), f"oracle at {n}")
    return res


def _suite_capitulation() -> SuiteResult:
    res = SuiteResult("capitulation")
    survey = classgroup.model_survey()
    res.note(survey.pairs_total == 480, "pair count")
    res.note(survey.kernel_dim_one == survey.pairs_total, "ambiguous rank")
    res.note(survey.kernel_equals_image == survey.pairs_total, "principal genus")
    res.note(survey.kernel_tau2_stable == survey.pairs_total, "tau2 stability")
    res.note(survey.ambiguity_operator_ok, "ambiguity operator")
    rank = classgroup.brute_force_rank_check()
    res.note(rank.order5_count == 24 and rank.all_fixed_lines, "order-5 fixed lines")
    types = classgroup.enumerate_capitulation_types()
    res.note(types == classgroup.EXPECTED_CAPITULATION_TYPES, "capitulation types")
    res.note(
        len(classgroup.enumerate_capitulation_types(require_uniform_conjugates=False)) > len(types),
        "uniformity constraint is active",
    )
    m = classgroup.canonical_model()
    perm = classgroup.tau2_permutation(m)
    res.note(perm == (1, 2, 6, 5, 4, 3), "canonical tau2 involution")
    return res


SUITES = {
    "ring": _suite_ring,
    "splitting": _suite_splitting,
    "symbols": _suite_symbols,
    "periods": _suite_periods,
    "classifier": _suite_classifier,
    "capitulation": _suite_capitulation,
}


def run(names=None) -> list[SuiteResult]:
    selected = SUITES if names is None else {n: SUITES[n] for n in names}
    return [fn() for fn in selected.values()]
