"""Splitting of rational primes in Z[zeta5] and primary normalization.

Z[zeta5] has class number 1, so every prime ideal is generated by a single
element; factorizations here are always on the level of elements, with the
leftover unit tracked explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import cyclo
from .cyclo import EPSILON, LAMBDA, ZETA, CycInt
from .errors import InputError, InternalCheckError, NoPrimaryAssociate
from .intarith import element_of_order_five, factorize, is_prime, sqrt_mod


class SplittingType(Enum):
    RAMIFIED = "ramified"
    SPLIT_FOUR = "split-four"
    SPLIT_TWO = "split-two"
    INERT = "inert"


@dataclass(frozen=True)
class CycPrime:
    """A prime element of Z[zeta5] above the rational prime p."""

    p: int
    element: CycInt
    f: int  # residue degree
    e: int  # ramification index (4 only for p = 5)

    def norm(self) -> int:
        return self.p**self.f

    def to_json(self) -> dict:
        return {"p": self.p, "pi": self.element.to_json(), "f": self.f, "e": self.e}


@dataclass(frozen=True)
class CycFactorization:
    """unit * prod(prime^exponent), an exact factorization in Z[zeta5]."""

    unit: CycInt
    factors: tuple[tuple[CycPrime, int], ...]

    def value(self) -> CycInt:
        acc = self.unit
        for q, k in self.factors:
            acc = acc * q.element**k
        return acc

    def to_json(self) -> dict:
        return {
            "unit": self.unit.to_json(),
            "factors": [{"prime": q.to_json(), "exponent": k} for q, k in self.factors],
        }


def splitting_type(p: int) -> SplittingType:
    """Splitting of p in Z[zeta5]; decided by the order of p mod 5."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if p == 5:
        return SplittingType.RAMIFIED
    r = p % 5
    if r == 1:
        return SplittingType.SPLIT_FOUR
    if r == 4:
        return SplittingType.SPLIT_TWO
    return SplittingType.INERT


def splitting_count(p: int) -> int:
    """g, the number of primes of Z[zeta5] above p."""
    return {
        SplittingType.RAMIFIED: 1,
        SplittingType.SPLIT_FOUR: 4,
        SplittingType.SPLIT_TWO: 2,
        SplittingType.INERT: 1,
    }[splitting_type(p)]


@lru_cache(maxsize=None)
def factor_rational_prime(p: int) -> tuple[CycPrime, ...]:
    """The primes of Z[zeta5] above p, as canonical-associate elements.

    p = 5: the single ramified prime lambda = 1 - zeta (e = 4).
    p = 1 mod 5: four degree-1 primes gcd(p, zeta - c) over the four
    elements c of order 5 mod p.
    p = 4 mod 5: two degree-2 primes gcd(p, zeta^2 - t*zeta + 1) for the
    roots t of t^2 + t - 1 mod 5... mod p (the traces zeta + zeta^-1 of the
    two conjugate pairs of roots of Phi5 mod p).
    p = +-2 mod 5: p itself stays prime (f = 4).
    """
    kind = splitting_type(p)
    if kind is SplittingType.RAMIFIED:
        return (CycPrime(5, LAMBDA, 1, 4),)
    if kind is SplittingType.INERT:
        return (CycPrime(p, CycInt(p), 4, 1),)
    if kind is SplittingType.SPLIT_FOUR:
        y = element_of_order_five(p)
        roots = sorted(pow(y, i, p) for i in range(1, 5))
        out = []
        for c in roots:
            g = cyclo.gcd(CycInt(p), ZETA - CycInt(c))
            out.append(CycPrime(p, g, 1, 1))
        result = tuple(out)
    else:
        s = sqrt_mod(5, p)
        inv2 = pow(2, -1, p)
        t_roots = sorted(((sgn * s - 1) * inv2 % p for sgn in (1, -1)))
        out = []
        for t in t_roots:
            g = cyclo.gcd(CycInt(p), CycInt((1, -t, 1, 0)))
            out.append(CycPrime(p, g, 2, 1))
        result = tuple(out)
    for q in result:
        if cyclo.norm(q.element) != p**q.f:
            raise InternalCheckError(f"bad prime norm above {p}: {q.element!r}")
    return result


def factor_radicand(n: int) -> CycFactorization:
    """Full factorization of a rational integer n >= 2 over Z[zeta5]."""
    if n < 2:
        raise InputError(f"radicand must be >= 2, got {n}")
    fac = factorize(n)
    factors: list[tuple[CycPrime, int]] = []
    for p in sorted(fac):
        a = fac[p]
        for q in factor_rational_prime(p):
            factors.append((q, a * q.e))
    prod = CycInt(1)
    for q, k in factors:
        prod = prod * q.element**k
    unit = cyclo.exact_div(CycInt(n), prod)
    if cyclo.norm(unit) != 1:
        raise InternalCheckError(f"non-unit cofactor while factoring {n}")
    return CycFactorization(unit, tuple(factors))


# search order for unit exponents: identity first, then widening
_EPS_EXPONENTS = (0, 1, -1, 2, -2, 3, -3, 4, -4)


@lru_cache(maxsize=None)
def _eps_power(m: int) -> CycInt:
    if m >= 0:
        return EPSILON**m
    # epsilon^-1 = epsilon - 1 (the golden-ratio relation x^2 = x + 1)
    return (EPSILON - CycInt(1)) ** (-m)


def is_primary(a: CycInt) -> int | None:
    """The rational residue r in {1,2,3,4} with a = r mod 5*Z[zeta5], or None."""
    c = a.c
    if c[1] % 5 or c[2] % 5 or c[3] % 5:
        return None
    r = c[0] % 5
    return r if r else None


def primary_normalize(q: CycPrime) -> CycPrime:
    """Associate of q congruent to a rational residue in {1,2,3,4} mod 5.

    Searches u * pi over u = s * zeta^j * epsilon^m with s = +-1, j in 0..4,
    m in -4..4, trying the identity unit first so already-primary elements
    come back unchanged. A failed search raises rather than widening.
    """
    if q.p == 5:
        raise InputError("lambda has no primary associate (not coprime to 5)")
    for m in _EPS_EXPONENTS:
        em = _eps_power(m)
        for j in range(5):
            base = em * ZETA**j
            for cand in (base * q.element, -(base * q.element)):
                if is_primary(cand) is not None:
                    return CycPrime(q.p, cand, q.f, q.e)
    raise NoPrimaryAssociate(
        f"no associate of {q.element!r} (above {q.p}) is congruent to a rational "
        f"residue mod 5 within the unit search bound"
    )
