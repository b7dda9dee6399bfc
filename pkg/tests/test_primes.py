import pytest

from quintic.cyclo import CycInt, LAMBDA, euclid_divmod, exact_div, galois_apply, norm
from quintic.errors import FactorizationError, InputError
from quintic.intarith import sieve_primes
from quintic.primes import (
    SplittingType,
    factor_radicand,
    factor_rational_prime,
    is_primary,
    primary_normalize,
    splitting_type,
)


def divides(d: CycInt, a: CycInt) -> bool:
    return not euclid_divmod(a, d)[1]


def test_splitting_types():
    assert splitting_type(5) is SplittingType.RAMIFIED
    assert splitting_type(19) is SplittingType.SPLIT_TWO
    assert splitting_type(2) is SplittingType.INERT
    assert splitting_type(11) is SplittingType.SPLIT_FOUR
    assert splitting_type(31) is SplittingType.SPLIT_FOUR


def test_splitting_rejects_composites():
    with pytest.raises(InputError):
        splitting_type(15)


def test_five_ramifies_as_lambda():
    (q,) = factor_rational_prime(5)
    assert q.element == LAMBDA and q.e == 4 and q.f == 1


def test_nineteen_splits_into_two_quadratic_primes():
    qs = factor_rational_prime(19)
    assert len(qs) == 2
    assert all(norm(q.element) == 361 and q.f == 2 for q in qs)
    # the defining quadratics come from t^2 + t - 1 = 0 mod 19: roots 4 and 14
    assert [t for t in range(19) if (t * t + t - 1) % 19 == 0] == [4, 14]
    # their product recovers Phi5 mod 19
    f1 = (1, -4, 1)
    f2 = (1, -14, 1)
    prod = [0] * 5
    for i, a in enumerate(f1):
        for j, b in enumerate(f2):
            prod[i + j] += a * b
    assert [c % 19 for c in prod] == [1, 1, 1, 1, 1]


def test_eleven_splits_into_four_primes_of_norm_eleven():
    qs = factor_rational_prime(11)
    assert len(qs) == 4 and all(norm(q.element) == 11 for q in qs)
    from quintic.cyclo import ZETA, gcd

    g = gcd(CycInt(11), ZETA - CycInt(3))
    assert any(divides(q.element, g) for q in qs)


@pytest.mark.parametrize("p", sieve_primes(300))
def test_splitting_sweep(p):
    qs = factor_rational_prime(p)
    g = len(qs)
    assert qs[0].e * qs[0].f * g == 4
    prod = CycInt(1)
    for q in qs:
        assert norm(q.element) == p**q.f
        prod = prod * q.element**q.e
    assert norm(exact_div(CycInt(p), prod)) == 1
    order = 1 if p == 5 else next(k for k in (1, 2, 4) if pow(p, k, 5) == 1)
    assert g == ({1: 4, 2: 2, 4: 1}[order] if p != 5 else 1)


@pytest.mark.parametrize("p", [5, 11, 19, 29, 31, 41, 2, 3])
def test_galois_permutes_the_primes_above_p(p):
    qs = factor_rational_prime(p)
    for q in qs:
        for t in range(4):
            img = galois_apply(t, q.element)
            hits = [q2 for q2 in qs if divides(q2.element, img)]
            assert len(hits) == 1


def test_factor_radicand_25_is_lambda_to_the_eighth():
    fac = factor_radicand(25)
    assert [(q.p, k) for q, k in fac.factors] == [(5, 8)]
    assert fac.value() == CycInt(25)


def test_factor_radicand_95():
    fac = factor_radicand(95)
    assert [(q.p, q.f, k) for q, k in fac.factors] == [(5, 1, 4), (19, 2, 1), (19, 2, 1)]
    assert norm(fac.unit) == 1
    assert fac.value() == CycInt(95)


def test_factor_radicand_inert_prime():
    fac = factor_radicand(2)
    (q, k), = fac.factors
    assert q.f == 4 and k == 1 and q.element == CycInt(2)


def test_factor_radicand_rejects_uncertifiable_cofactors():
    n = 1000003 * 1000033  # both factors prime and beyond the trial bound
    with pytest.raises(FactorizationError):
        factor_radicand(n)


def test_factor_radicand_rejects_small_inputs():
    with pytest.raises(InputError):
        factor_radicand(1)


def test_primary_normalize_keeps_rational_inert_primes():
    for p in (2, 3):
        q = factor_rational_prime(p)[0]
        assert primary_normalize(q).element == q.element


@pytest.mark.parametrize("p", [19, 29, 59, 79, 89, 109, 139, 149, 199])
def test_primary_normalize_reaches_a_rational_residue(p):
    # degree-2 primes (p = -1 mod 5) are the ones the families contain, and
    # they normalize throughout the tested range
    for q in factor_rational_prime(p):
        qn = primary_normalize(q)
        r = is_primary(qn.element)
        assert r in (1, 2, 3, 4)
        # still the same prime ideal
        assert divides(q.element, qn.element) and divides(qn.element, q.element)


def test_primary_normalize_can_genuinely_fail_for_degree_one_primes():
    # the unit images mod 5 span only a plane inside the three-dimensional
    # group of 1-units, so most degree-1 primes admit no primary associate;
    # the bounded search already covers every distinct unit class (the
    # 1-unit parts of zeta and epsilon have order 5), hence the error is a
    # fact, not a search-depth artifact
    from quintic.errors import NoPrimaryAssociate

    results = []
    for q in factor_rational_prime(11):
        try:
            primary_normalize(q)
            results.append("ok")
        except NoPrimaryAssociate:
            results.append("none")
    assert "none" in results


def test_primary_normalize_rejects_lambda():
    with pytest.raises(InputError):
        primary_normalize(factor_rational_prime(5)[0])


def test_cycprime_json_shape():
    q = factor_rational_prime(19)[0]
    doc = q.to_json()
    assert set(doc) == {"p", "pi", "f", "e"}
    assert doc["p"] == 19 and doc["f"] == 2 and doc["e"] == 1
    assert CycInt.from_json(doc["pi"]) == q.element


def test_factorization_json_round_trips_value():
    fac = factor_radicand(57)
    doc = fac.to_json()
    assert CycInt.from_json(doc["unit"]) == fac.unit
    assert len(doc["factors"]) == len(fac.factors)
