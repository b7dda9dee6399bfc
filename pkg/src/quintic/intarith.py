"""Integer-side number theory: certified factorization and modular roots.

Primality is decided by a deterministic Miller-Rabin base set, proven
correct below 3.317e24 (covers 64-bit inputs with a wide margin); larger
candidates are rejected rather than tested probabilistically.
"""

from __future__ import annotations

from .errors import BoundExceeded, FactorizationError, InputError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_LIMIT = 3317044064679887385961981
_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n >= _MR_PROVEN_LIMIT:
        raise BoundExceeded(f"primality of {n} cannot be certified deterministically")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Certified prime factorization as ``{prime: exponent}``.

    Trial division up to 10^6, then the cofactor must itself be a certified
    prime; composite cofactors are rejected.
    """
    if n < 1:
        raise InputError(f"cannot factor {n}")
    fac: dict[int, int] = {}
    m = n
    for p in (2, 3, 5):
        while m % p == 0:
            fac[p] = fac.get(p, 0) + 1
            m //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)  # skips multiples of 2, 3, 5 starting at 7
    i = 0
    while d * d <= m and d <= _TRIAL_LIMIT:
        while m % d == 0:
            fac[d] = fac.get(d, 0) + 1
            m //= d
        d += wheel[i]
        i = (i + 1) % 8
    if m > 1:
        if not is_prime(m):
            raise FactorizationError(
                f"cofactor {m} of {n} is composite and beyond the trial-division bound"
            )
        fac[m] = fac.get(m, 0) + 1
    return fac


def sieve_primes(limit: int) -> list[int]:
    """All primes < limit, by Eratosthenes."""
    if limit <= 2:
        return []
    flags = bytearray(b"\x01") * limit
    flags[0:2] = b"\x00\x00"
    p = 2
    while p * p < limit:
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit, p))
        p += 1
    return [i for i in range(limit) if flags[i]]


def primitive_root(p: int) -> int:
    """Smallest primitive root mod p."""
    if p == 2:
        return 1
    factors = factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise InputError(f"{p} has no primitive root (not prime?)")


def is_primitive_root(g: int, p: int) -> bool:
    factors = factorize(p - 1)
    return g % p != 0 and all(pow(g, (p - 1) // q, p) != 1 for q in factors)


def element_of_order_five(p: int) -> int:
    """Deterministic smallest y of multiplicative order 5 mod p (p = 1 mod 5)."""
    if p % 5 != 1:
        raise InputError(f"{p} is not 1 mod 5")
    for x in range(2, p):
        y = pow(x, (p - 1) // 5, p)
        if y != 1:
            return y
    raise InputError(f"no element of order 5 mod {p}")


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a mod p (p odd prime, a a quadratic residue).

    Tonelli-Shanks with a sequential non-residue search; fully deterministic.
    Returns the smaller of the two roots.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise InputError(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)
