"""Exact arithmetic in Z[zeta5], the ring of integers of Q(zeta5).

Elements live on the power basis 1, zeta, zeta^2, zeta^3 with
arbitrary-precision integer coordinates; products reduce modulo
Phi5(x) = x^4 + x^3 + x^2 + x + 1 (zeta^4 = -1 - zeta - zeta^2 - zeta^3).
Everything here is a pure function on immutable values.
"""

from __future__ import annotations

from itertools import product as _cartesian

from .errors import InputError, InternalCheckError


class CycInt:
    """Element a0 + a1*zeta + a2*zeta^2 + a3*zeta^3 of Z[zeta5]."""

    __slots__ = ("c",)

    def __init__(self, coeffs=0):
        if isinstance(coeffs, CycInt):
            self.c = coeffs.c
            return
        if isinstance(coeffs, int):
            self.c = (coeffs, 0, 0, 0)
            return
        c = tuple(int(x) for x in coeffs)
        if len(c) != 4:
            raise InputError(f"expected 4 power-basis coordinates, got {len(c)}")
        self.c = c

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return CycInt((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return CycInt((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        a = self.c
        return CycInt((-a[0], -a[1], -a[2], -a[3]))

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        c4 = a1 * b3 + a2 * b2 + a3 * b1
        c5 = a2 * b3 + a3 * b2
        c6 = a3 * b3
        # fold zeta^5 = 1, zeta^6 = zeta, then zeta^4 = -(1 + zeta + zeta^2 + zeta^3)
        return CycInt((c0 + c5 - c4, c1 + c6 - c4, c2 - c4, c3 - c4))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise InputError("negative powers are not defined in Z[zeta5]")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return self.c != (0, 0, 0, 0)

    def __repr__(self):
        return f"CycInt({self.c!r})"

    def __str__(self):
        terms = []
        for coef, name in zip(self.c, ("", "z", "z^2", "z^3")):
            if coef == 0:
                continue
            if name == "":
                terms.append(str(coef))
            elif coef == 1:
                terms.append(name)
            elif coef == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{coef}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> list[str]:
        """Power-basis coordinates as decimal strings (arbitrary precision)."""
        return [str(x) for x in self.c]

    @classmethod
    def from_json(cls, data) -> "CycInt":
        return cls(tuple(int(x) for x in data))


def _coerce(x):
    if isinstance(x, CycInt):
        return x
    if isinstance(x, int):
        return CycInt(x)
    return None


ZERO = CycInt(0)
ONE = CycInt(1)
ZETA = CycInt((0, 1, 0, 0))
#: lambda = 1 - zeta, the unique prime above 5 (totally ramified, 5 = unit * lambda^4)
LAMBDA = CycInt((1, -1, 0, 0))
#: fundamental unit (1 + sqrt 5)/2 = -(zeta^2 + zeta^3) of the real quadratic subfield
EPSILON = CycInt((0, 0, -1, -1))

# zeta -> zeta^(2^t): exponents of the four automorphisms tau^t
_TAU_EXP = (1, 2, 4, 3)


def galois_apply(t: int, a: CycInt) -> CycInt:
    """Image of a under tau^t, the automorphism zeta -> zeta^(2^t)."""
    e = _TAU_EXP[t % 4]
    if e == 1:
        return a
    v = [0, 0, 0, 0, 0]
    for j, coef in enumerate(a.c):
        v[j * e % 5] += coef
    k = v[4]
    return CycInt((v[0] - k, v[1] - k, v[2] - k, v[3] - k))


def norm(a: CycInt) -> int:
    """Field norm N(a) = product of the four conjugates; a rational integer >= 0."""
    m = a * galois_apply(1, a) * galois_apply(2, a) * galois_apply(3, a)
    if m.c[1] or m.c[2] or m.c[3]:
        raise InternalCheckError(f"norm of {a!r} did not reduce to a rational integer")
    return m.c[0]


def _round_div(x: int, n: int) -> int:
    # nearest integer to x/n for n > 0, half rounded up
    return (2 * x + n) // (2 * n)


_OFFSETS = tuple(d for d in _cartesian((-1, 0, 1), repeat=4) if d != (0, 0, 0, 0))


def euclid_divmod(a: CycInt, b: CycInt) -> tuple[CycInt, CycInt]:
    """Quotient and remainder with norm(r) < norm(b).

    The quotient starts from coordinatewise nearest-integer rounding of the
    exact field quotient; when that misses the Euclidean bound (coordinate
    rounding alone is not guaranteed here), a bounded search over offset
    vectors in {-1,0,1}^4 restores it, taking the first offset that works.
    """
    a = CycInt(a)
    b = CycInt(b)
    if not b:
        raise ZeroDivisionError("division by zero in Z[zeta5]")
    conj = galois_apply(1, b) * galois_apply(2, b) * galois_apply(3, b)
    nb = (b * conj).c[0]
    num = a * conj
    q = CycInt(tuple(_round_div(x, nb) for x in num.c))
    r = a - q * b
    if norm(r) < nb:
        return q, r
    for delta in _OFFSETS:
        q2 = q + CycInt(delta)
        r2 = a - q2 * b
        if norm(r2) < nb:
            return q2, r2
    raise InternalCheckError(f"Euclidean division failed for {a!r} / {b!r}")


def exact_div(a: CycInt, b: CycInt) -> CycInt:
    """a/b when b divides a exactly; The remainder must vanish."""
    q, r = euclid_divmod(a, b)
    if r:
        raise InternalCheckError(f"{b!r} does not divide {a!r}")
    return q


def canonical_associate(a: CycInt) -> CycInt:
    """Deterministic representative among the ten associates ±zeta^j * a.

    The representative with the lexicographically smallest coordinate tuple
    is chosen, making gcd and factorization outputs reproducible.
    """
    best = a
    cur = a
    for _ in range(5):
        for cand in (cur, -cur):
            if cand.c < best.c:
                best = cand
        cur = cur * ZETA
    return best


def gcd(a: CycInt, b: CycInt) -> CycInt:
    """A generator of the ideal (a, b), returned as a canonical associate."""
    a = CycInt(a)
    b = CycInt(b)
    if not a and not b:
        raise InputError("gcd(0, 0) is undefined")
    while b:
        a, b = b, euclid_divmod(a, b)[1]
    return canonical_associate(a)


def lambda_valuation(a: CycInt) -> int:
    """v_lambda(a), the exponent of lambda = 1 - zeta in a.

    Equals the 5-adic valuation of norm(a): lambda has residue degree 1 and
    is the only prime whose norm is a power of 5.
    """
    a = CycInt(a)
    if not a:
        raise InputError("the zero element has no finite valuation")
    n = norm(a)
    v = 0
    while n % 5 == 0:
        n //= 5
        v += 1
    return v


#: congruence classes c with c^4 = 1 mod 25; the rational hyperprimary residues
HYPERPRIMARY_CLASSES = (1, -1, 7, -7)


def hyperprimary_class(a: CycInt) -> int | None:
    """The c in {1, -1, 7, -7} with a = c mod lambda^5, or None.

    For a rational integer coprime to 5 this is equivalent to
    a mod 25 in {1, 24, 7, 18}.
    """
    a = CycInt(a)
    if not a:
        raise InputError("hyperprimary class of zero is undefined")
    for c in HYPERPRIMARY_CLASSES:
        d = a - CycInt(c)
        if not d or lambda_valuation(d) >= 5:
            return c
    return None
