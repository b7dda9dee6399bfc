"""Dense univariate polynomial arithmetic over prime fields F_p.

Polynomials are tuples of ints in [0, p), ascending degree, with no trailing
zeros; the zero polynomial is the empty tuple. Moduli must be monic.
"""

from __future__ import annotations


def trim(c) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def reduce_mod(u, modulus, p) -> tuple[int, ...]:
    """u mod (modulus, p) for monic modulus."""
    u = [x % p for x in u]
    d = len(modulus) - 1
    for i in range(len(u) - 1, d - 1, -1):
        c = u[i]
        if c:
            u[i] = 0
            for j in range(d):
                u[i - d + j] = (u[i - d + j] - c * modulus[j]) % p
    return trim(u)


def mulmod(u, v, modulus, p) -> tuple[int, ...]:
    if not u or not v:
        return ()
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] += a * b
    return reduce_mod(out, modulus, p)


def powmod(u, e: int, modulus, p) -> tuple[int, ...]:
    result = (1,)
    base = reduce_mod(u, modulus, p)
    while e:
        if e & 1:
            result = mulmod(result, base, modulus, p)
        base = mulmod(base, base, modulus, p)
        e >>= 1
    return result


def monic(u, p) -> tuple[int, ...]:
    u = trim(x % p for x in u)
    if not u:
        return ()
    inv = pow(u[-1], -1, p)
    return tuple(x * inv % p for x in u)


def gcd(u, v, p) -> tuple[int, ...]:
    """Monic gcd over F_p."""
    u = trim(x % p for x in u)
    v = trim(x % p for x in v)
    while v:
        # u mod v with v made monic
        vm = monic(v, p)
        u = reduce_mod(u, vm, p)
        u, v = v, u
    return monic(u, p)
