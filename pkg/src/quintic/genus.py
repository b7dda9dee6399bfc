"""Genus-field constructions for Gamma = Q(n^(1/5)) and k = Q(n^(1/5), zeta5).

Absolute side: the genus field of Gamma is Gamma composed with the unique
degree-5 subfields M(p) of Q(zeta_p) for each prime p = 1 mod 5 dividing n;
M(p) is represented by the minimal polynomial of its Gaussian periods,
computed exactly. Relative side: the genus field of k/k0 is k adjoined the
fifth root of a product of normalized prime elements; the admissible
exponent patterns are enumerated per family and filtered by the
hyperprimary congruence, one representative per Kummer class.

The ramified-prime count d feeds the ambiguous-rank formula
rank = d - 3 + q*; under the standing rank-1 hypothesis q* is inferred
as 1 + 3 - d rather than computed from unit norm equations.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polyfp
from .cyclo import CycInt, hyperprimary_class
from .errors import (
    BoundExceeded,
    ContradictionWitness,
    InputError,
    InternalCheckError,
    NoAdmissibleGenerator,
    QstarOutOfRange,
)
from .intarith import factorize, is_prime, is_primitive_root, primitive_root
from .primes import (
    CycPrime,
    factor_rational_prime,
    primary_normalize,
    splitting_count,
)
from .radicand import Verdict, classify

_PERIOD_PRIME_BOUND = 100_000


@dataclass(frozen=True)
class PeriodPolynomial:
    """Monic quintic minimal polynomial of the Gaussian periods for p."""

    p: int
    coefficients: tuple[int, ...]  # ascending; constant term first, monic

    def discriminant(self) -> int:
        return _poly_discriminant(self.coefficients)

    def to_json(self) -> dict:
        return {"p": self.p, "coefficients": [str(c) for c in self.coefficients]}


def period_polynomial(p: int, root: int | None = None) -> PeriodPolynomial:
    """Minimal polynomial of the five Gaussian periods of degree (p-1)/5.

    With g a primitive root mod p and H the index-5 subgroup of the units,
    eta_j = sum over h in H of zeta_p^(g^j * h); the product of (x - eta_j)
    is expanded exactly over length-p integer vectors of zeta_p-exponent
    counts, and the vanishing-sum relation (sum of all zeta_p^i = 0) is
    applied only when each coefficient is read off as a rational integer.
    The period set does not depend on the choice of g, so any primitive
    root may be passed in to cross-check the construction.
    """
    if not is_prime(p) or p % 5 != 1:
        raise InputError(f"{p} is not a prime congruent to 1 mod 5")
    if p > _PERIOD_PRIME_BOUND:
        raise BoundExceeded(f"period construction capped at p <= {_PERIOD_PRIME_BOUND}")
    if root is None:
        g = primitive_root(p)
    else:
        if not is_primitive_root(root, p):
            raise InputError(f"{root} is not a primitive root mod {p}")
        g = root

    cosets: list[list[int]] = [[] for _ in range(5)]
    x = 1
    for i in range(p - 1):
        cosets[i % 5].append(x)
        x = x * g % p
    # poly[k] = coefficient of X^k, as a zeta_p-exponent count vector
    poly: list[list[int]] = [[0] * p]
    poly[0][0] = 1
    for j in range(5):
        support = cosets[j]
        new = [[0] * p for _ in range(len(poly) + 1)]
        for k, vec in enumerate(poly):
            up = new[k + 1]
            down = new[k]
            for i, c in enumerate(vec):
                if c:
                    up[i] += c
                    for ex in support:
                        down[(i + ex) % p] -= c
        poly = new

    coeffs = []
    for vec in poly:
        tail = vec[1]
        if any(v != tail for v in vec[2:]):
            raise InternalCheckError(f"non-rational period coefficient for p = {p}")
        coeffs.append(vec[0] - tail)
    if coeffs[5] != 1 or coeffs[4] != 1:
        # trace of the periods is -1, so the X^4 coefficient must be 1
        raise InternalCheckError(f"period polynomial for p = {p} has a bad leading part")
    result = tuple(coeffs)
    if _irreducibility_witness(result) is None:
        raise InternalCheckError(f"could not certify irreducibility for p = {p}")
    return PeriodPolynomial(p, result)


def _poly_discriminant(coeffs: tuple[int, ...]) -> int:
    """disc(f) for monic quintic f, via the Sylvester resultant of f and f'."""
    n = len(coeffs) - 1
    deriv = tuple(i * coeffs[i] for i in range(1, n + 1))
    rows = []
    rev = list(reversed(coeffs))
    drev = list(reversed(deriv))
    size = 2 * n - 1
    for i in range(n - 1):
        rows.append([0] * i + rev + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + drev + [0] * (size - n - i))
    res = _bareiss_det(rows)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res  # lc = 1


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant, fraction-free Bareiss with row pivoting."""
    m = [row[:] for row in m]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def _irreducibility_witness(coeffs: tuple[int, ...]) -> int | None:
    """A prime q modulo which the quintic is irreducible, or None.

    A monic quintic factors over Q only with a factor of degree 1 or 2, so
    irreducibility mod q (no root in F_q, no root in F_{q^2}) certifies
    irreducibility over Q. Gaussian-period quintics are cyclic, making such
    witnesses dense; the search over q < 200 failing would itself be a bug.
    """
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
              61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127,
              131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199):
        f = polyfp.trim(c % q for c in coeffs)
        if len(f) != len(coeffs):
            continue  # leading coefficient collapsed (cannot happen: monic)
        fm = polyfp.monic(f, q)
        deriv = polyfp.trim(i * coeffs[i] % q for i in range(1, len(coeffs)))
        if len(polyfp.gcd(fm, deriv, q)) != 1:
            continue  # not squarefree mod q
        xq = polyfp.powmod((0, 1), q, fm, q)
        lin = polyfp.gcd(_poly_sub_x(xq, q), fm, q)
        if len(lin) != 1:
            continue
        xq2 = polyfp.powmod((0, 1), q * q, fm, q)
        quad = polyfp.gcd(_poly_sub_x(xq2, q), fm, q)
        if len(quad) != 1:
            continue
        return q
    return None


def _poly_sub_x(u: tuple[int, ...], p: int) -> tuple[int, ...]:
    v = list(u) + [0] * max(0, 2 - len(u))
    v[1] = (v[1] - 1) % p
    return polyfp.trim(v)


@dataclass(frozen=True)
class AbsoluteGenus:
    n: int
    r: int
    genus_number: int
    components: tuple[PeriodPolynomial, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "genus_number": self.genus_number,
            "components": [c.to_json() for c in self.components],
        }


def genus_prime_count(n: int) -> int:
    """r = number of distinct primes p = 1 mod 5 dividing n."""
    return sum(1 for p in factorize(n) if p % 5 == 1)


def absolute_genus(n: int) -> AbsoluteGenus:
    """Genus field data of Gamma: r, genus number 5^r, and the M(p) components."""
    if n < 2:
        raise InputError(f"radicand must be >= 2, got {n}")
    ps = sorted(p for p in factorize(n) if p % 5 == 1)
    comps = tuple(period_polynomial(p) for p in ps)
    return AbsoluteGenus(n, len(ps), 5 ** len(ps), comps)


def count_ramified_d(n: int) -> int:
    """Number of primes of k0 ramified in k = k0(n^(1/5)).

    Each prime of k0 dividing the prime-to-5 part of n ramifies; lambda
    ramifies exactly when n is not hyperprimary (which covers both 5 | n
    and the non-hyperprimary coprime case, without double counting).
    """
    if n < 2:
        raise InputError(f"radicand must be >= 2, got {n}")
    d = sum(splitting_count(p) for p in factorize(n) if p != 5)
    if hyperprimary_class(CycInt(n)) is None:
        d += 1
    return d


def infer_qstar(n: int, assumed_rank: int = 1) -> int:
    """q* back-solved from rank = d - 3 + q* under the rank hypothesis."""
    form = classify(n)
    if form.verdict is Verdict.NONE:
        raise InputError(f"{n} is not in any of the three families")
    d = count_ramified_d(n)
    q = assumed_rank + 3 - d
    if q not in (0, 1, 2):
        raise QstarOutOfRange(
            f"q* = {q} for n = {n} (d = {d}, assumed rank {assumed_rank}) "
            f"is outside {{0, 1, 2}}"
        )
    return q


@dataclass(frozen=True)
class KummerGenerator:
    """A radical w = lambda^a * prod(pi_i^a_i) with k0(w^(1/5)) = candidate genus field."""

    lambda_exp: int
    prime_exps: tuple[tuple[CycPrime, int], ...]
    realization: CycInt

    def exponent_tuple(self) -> tuple[int, ...]:
        return (self.lambda_exp,) + tuple(k for _, k in self.prime_exps)

    def to_json(self) -> dict:
        return {
            "lambda_exp": self.lambda_exp,
            "primes": [
                {**q.to_json(), "exponent": k} for q, k in self.prime_exps
            ],
            "w": self.realization.to_json(),
        }


def _realize(lambda_exp: int, prime_exps) -> CycInt:
    from .cyclo import LAMBDA

    w = LAMBDA**lambda_exp
    for q, k in prime_exps:
        w = w * q.element**k
    return w


def _kummer_orbit(exps: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest j-multiple of the exponent tuple, j in 1..4."""
    return min(tuple(x * j % 5 for x in exps) for j in range(1, 5))


def relative_genus(n: int) -> tuple[KummerGenerator, ...]:
    """Admissible Kummer generators for the relative genus field of k/k0.

    Shapes by family (pi_i the primary-normalized primes above p, q inert):

      Form I    lambda^a * pi1^a1 * pi2^a2,  a, a1, a2 in 1..4
      Form II   q * pi_i^a,                  i in {1, 2}, a in 1..4
      Form III  pi1^a1 * pi2^a2,             a1, a2 in 1..4

    Generators coprime to lambda (forms II and III) must be hyperprimary;
    that congruence is invariant on Kummer classes, and one lexicographically
    smallest representative per class is returned. The lambda-divisible
    Form I admits every exponent pattern (reduced to class representatives).
    """
    form = classify(n)
    if form.verdict is Verdict.NONE:
        raise InputError(f"{n} is not in any of the three families")
    pis = tuple(primary_normalize(q) for q in factor_rational_prime(form.p))
    out: list[KummerGenerator] = []
    rejections: list[tuple] = []

    if form.verdict is Verdict.FORM_I:
        seen = set()
        for a in range(1, 5):
            for a1 in range(1, 5):
                for a2 in range(1, 5):
                    rep = _kummer_orbit((a, a1, a2))
                    if rep in seen or rep != (a, a1, a2):
                        seen.add(rep)
                        continue
                    seen.add(rep)
                    pe = ((pis[0], a1), (pis[1], a2))
                    out.append(KummerGenerator(a, pe, _realize(a, pe)))
    elif form.verdict is Verdict.FORM_II:
        q_inert = factor_rational_prime(form.q)[0]
        for pi in pis:
            for a in range(1, 5):
                pe = ((q_inert, 1), (pi, a))
                w = _realize(0, pe)
                if hyperprimary_class(w) is not None:
                    out.append(KummerGenerator(0, pe, w))
                else:
                    rejections.append((("q", 1), (pi.element.c, a), "not hyperprimary"))
    else:
        seen = set()
        for a1 in range(1, 5):
            for a2 in range(1, 5):
                rep = _kummer_orbit((a1, a2))
                if rep in seen or rep != (a1, a2):
                    seen.add(rep)
                    continue
                seen.add(rep)
                pe = ((pis[0], a1), (pis[1], a2))
                w = _realize(0, pe)
                if hyperprimary_class(w) is not None:
                    out.append(KummerGenerator(0, pe, w))
                else:
                    rejections.append(((a1, a2), "not hyperprimary"))

    if not out:
        raise NoAdmissibleGenerator(
            f"no admissible Kummer generator for n = {n} ({len(rejections)} rejected)",
            rejections,
        )
    return tuple(sorted(out, key=lambda g: g.exponent_tuple()))


@dataclass(frozen=True)
class GenusReport:
    n: int
    r: int
    genus_number: int
    absolute_components: tuple[PeriodPolynomial, ...]
    relative_candidates: tuple[KummerGenerator, ...]
    d: int
    qstar_inferred: int | None
    rank_value: int | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "genus_number": self.genus_number,
            "absolute_components": [c.to_json() for c in self.absolute_components],
            "relative_candidates": [g.to_json() for g in self.relative_candidates],
            "d": self.d,
            "qstar_inferred": self.qstar_inferred,
            "rank_value": self.rank_value,
        }


def build_genus_report(n: int, assumed_rank: int = 1) -> GenusReport:
    """Assemble absolute and relative genus data; rank fields stay None when
    n falls outside the three families."""
    ag = absolute_genus(n)
    form = classify(n)
    if form.verdict is Verdict.NONE:
        return GenusReport(n, ag.r, ag.genus_number, ag.components, (), count_ramified_d(n), None, None)
    q = infer_qstar(n, assumed_rank)
    d = count_ramified_d(n)
    return GenusReport(
        n, ag.r, ag.genus_number, ag.components, relative_genus(n), d, q, d - 3 + q
    )


@dataclass(frozen=True)
class CorollaryReport:
    """Consequences of an exactly-once divisible class number h_Gamma."""

    n: int
    r: int
    h_gamma: int | None
    five_divides_exactly: bool | None
    statements: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "h_gamma": self.h_gamma,
            "five_divides_exactly": self.five_divides_exactly,
            "statements": list(self.statements),
        }


def corollary_report(n: int, h_gamma: int | None = None) -> CorollaryReport:
    """Field-coincidence consequences of 5 || h_Gamma, checked against r.

    When 5 divides h_Gamma exactly, at most one prime p = 1 mod 5 can divide
    n; r >= 2 contradicts the supplied class number. With r = 1 the genus
    field equals the Hilbert 5-class field of Gamma and the five composita
    k * HCF(conjugate of Gamma) coincide; with r = 0 they are distinct.
    """
    r = genus_prime_count(n)
    if h_gamma is None:
        return CorollaryReport(n, r, None, None, (f"r = {r}; no class number supplied",))
    exact = h_gamma % 5 == 0 and h_gamma % 25 != 0
    if not exact:
        return CorollaryReport(
            n, r, h_gamma, False,
            (f"5 does not divide h_Gamma = {h_gamma} exactly; no conclusion drawn",),
        )
    if r >= 2:
        raise ContradictionWitness(
            f"r = {r} primes = 1 mod 5 divide n = {n}, but 5^r | h_Gamma "
            f"forces r <= 1 when 5 divides h_Gamma = {h_gamma} exactly"
        )
    if r == 1:
        statements = (
            "Gamma* = Gamma_5(1): the genus field is the Hilbert 5-class field of Gamma",
            "the composita k.Gamma_5(1) of the five conjugate quintic fields coincide",
        )
    else:
        statements = (
            "r = 0: Gamma* = Gamma",
            "the five composita k.Gamma_5(1), ..., k.Gamma''''_5(1) are pairwise distinct",
        )
    return CorollaryReport(n, r, h_gamma, True, statements)


def load_class_number_table(path) -> dict[int, int]:
    """CSV lines "n,h_gamma"; '#' starts a comment, blank lines are skipped."""
    table: dict[int, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [x.strip() for x in line.split(",")]
            if len(parts) != 2:
                raise InputError(f"{path}:{lineno}: expected 'n,h_gamma', got {raw!r}")
            try:
                table[int(parts[0])] = int(parts[1])
            except ValueError as exc:
                raise InputError(f"{path}:{lineno}: non-integer entry {raw!r}") from exc
    return table
