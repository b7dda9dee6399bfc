import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic.cyclo import CycInt
from quintic.errors import (
    EverythingIsAResidue,
    FieldTooLarge,
    InputError,
    NotCoprime,
    SymbolUndefined,
)
from quintic.primes import factor_rational_prime
from quintic.symbols import (
    brute_force_symbol,
    is_quintic_residue_mod_p,
    quintic_symbol,
    residue_field,
)


def field_elements(q):
    rf = residue_field(q)
    if rf.f == 1:
        return [CycInt(a) for a in range(1, rf.p)]
    return [
        CycInt((u0, u1, 0, 0))
        for u0 in range(rf.p)
        for u1 in range(rf.p)
        if u0 or u1
    ]


def test_symbol_of_one_is_zero_everywhere():
    for p in (11, 19, 2):
        for q in factor_rational_prime(p):
            assert quintic_symbol(CycInt(1), q) == 0


def test_worked_example_above_eleven():
    # at the prime with zeta -> 3, Euler gives 3^2 = 9 = 3^2, exponent 2
    q = next(q for q in factor_rational_prime(11) if residue_field(q).zeta_image == (3,))
    assert pow(3, (11 - 1) // 5, 11) == 9
    assert quintic_symbol(CycInt(3), q) == 2


def test_symbol_is_undefined_at_lambda():
    with pytest.raises(SymbolUndefined):
        quintic_symbol(CycInt(2), factor_rational_prime(5)[0])


def test_symbol_requires_coprimality():
    q = factor_rational_prime(11)[0]
    with pytest.raises(NotCoprime):
        quintic_symbol(CycInt(11), q)


@pytest.mark.parametrize("p", [11, 19, 29, 31, 41, 101])
def test_oracle_equivalence_exhaustive(p):
    for q in factor_rational_prime(p):
        rf = residue_field(q)
        zeros = 0
        for a in field_elements(q):
            s = quintic_symbol(a, q)
            assert s == brute_force_symbol(a, q)
            zeros += s == 0
        assert zeros == (rf.order() - 1) // 5


def test_oracle_equivalence_at_small_inert_primes():
    for p in (2, 3, 7):
        (q,) = factor_rational_prime(p)
        rf = residue_field(q)
        from itertools import product

        zeros = 0
        for coeffs in product(range(p), repeat=4):
            a = CycInt(coeffs)
            if not any(coeffs):
                continue
            s = quintic_symbol(a, q)
            assert s == brute_force_symbol(a, q)
            zeros += s == 0
        assert zeros == (rf.order() - 1) // 5


coords = st.tuples(*[st.integers(-60, 60)] * 4).map(CycInt)


@given(a=coords, b=coords, pi=st.sampled_from([11, 19, 31, 29]))
@settings(max_examples=300)
def test_multiplicativity(a, b, pi):
    q = factor_rational_prime(pi)[0]
    try:
        sa = quintic_symbol(a, q)
        sb = quintic_symbol(b, q)
    except NotCoprime:
        return
    assert quintic_symbol(a * b, q) == (sa + sb) % 5


def test_rational_residue_question_is_galois_invariant():
    for p in (19, 29, 59):
        q1, q2 = factor_rational_prime(p)
        for a in (2, 3, 5, 7, 10):
            assert (quintic_symbol(CycInt(a), q1) == 0) == (
                quintic_symbol(CycInt(a), q2) == 0
            )


def test_is_quintic_residue_examples():
    assert is_quintic_residue_mod_p(3, 11) is False  # 3^2 = 9 != 1 mod 11
    assert is_quintic_residue_mod_p(1, 19) is True
    q = factor_rational_prime(19)[0]
    assert is_quintic_residue_mod_p(5, 19) == (brute_force_symbol(CycInt(5), q) == 0)


def test_every_rational_is_a_residue_at_degree_two_primes():
    # F_p* has order coprime to 5 and lies inside the fifth powers of F_{p^2}
    for a in (2, 3, 5, 7, 11, 13):
        if a != 19:
            assert is_quintic_residue_mod_p(a, 19) is True


def test_inert_moduli_are_flagged_as_vacuous():
    with pytest.raises(EverythingIsAResidue):
        is_quintic_residue_mod_p(3, 7)


def test_residue_question_rejects_bad_inputs():
    with pytest.raises(InputError):
        is_quintic_residue_mod_p(3, 15)
    with pytest.raises(InputError):
        is_quintic_residue_mod_p(3, 5)
    with pytest.raises(NotCoprime):
        is_quintic_residue_mod_p(38, 19)


def test_brute_force_bound():
    q = factor_rational_prime(1009)[0]  # 1009 = 4 mod 5, field order > 10^6
    with pytest.raises(FieldTooLarge):
        brute_force_symbol(CycInt(2), q)


def test_residue_field_shapes():
    rf = residue_field(factor_rational_prime(19)[0])
    assert rf.f == 2 and rf.modulus[-1] == 1 and len(rf.modulus) == 3
    rf4 = residue_field(factor_rational_prime(2)[0])
    assert rf4.f == 4 and rf4.modulus == (1, 1, 1, 1, 1)
    assert rf4.order() == 16 and rf4.order() % 5 == 1
