import json

import pytest

from mforge import GF, NotPrimePowerError, field_new, is_prime, prime_power


def test_prime_power_factoring():
    assert prime_power(2) == (2, 1)
    assert prime_power(4) == (2, 2)
    assert prime_power(9) == (3, 2)
    assert prime_power(49) == (7, 2)
    assert prime_power(64) == (2, 6)
    assert prime_power(1) is None
    assert prime_power(6) is None
    assert prime_power(12) is None
    assert prime_power(0) is None


def test_is_prime_small():
    primes = [p for p in range(60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_non_prime_power_rejected():
    with pytest.raises(NotPrimePowerError):
        field_new(6)
    with pytest.raises(NotPrimePowerError):
        field_new(1)
    with pytest.raises(NotPrimePowerError):
        field_new(1 << 17)


def test_gf4_table_values():
    gf = field_new(4)
    assert gf.modulus == (1, 1, 1)  # x^2 + x + 1, constant term first
    assert gf.mul(2, 2) == 3
    assert gf.mul(2, 3) == 1
    assert gf.add(2, 3) == 1
    assert gf.add(1, 1) == 0
    assert gf.inv(2) == 3
    assert gf.neg(2) == 2


def test_gf9_table_values():
    gf = field_new(9)
    assert gf.modulus == (1, 0, 1)  # x^2 + 1 is irreducible mod 3
    # element 3 encodes x; x*x = -1 = 2
    assert gf.mul(3, 3) == 2
    assert gf.add(3, 3) == 6  # x + x = 2x
    assert gf.neg(1) == 2


def test_prime_field_is_mod_arithmetic():
    gf = field_new(7)
    for a in gf.elements():
        for b in gf.elements():
            assert gf.add(a, b) == (a + b) % 7
            assert gf.mul(a, b) == (a * b) % 7


def test_coeff_encoding_roundtrip():
    gf = field_new(8)
    for a in gf.elements():
        assert gf.from_coeffs(gf.coeffs(a)) == a


def test_inverse_of_zero():
    gf = field_new(5)
    with pytest.raises(ZeroDivisionError):
        gf.inv(0)


def test_pow_matches_repeated_mul():
    gf = field_new(9)
    for a in list(gf.nonzero())[:4]:
        acc = 1
        for e in range(1, 6):
            acc = gf.mul(acc, a)
            assert gf.pow(a, e) == acc
        assert gf.pow(a, gf.q - 1) == 1  # Fermat


def test_json_roundtrip_and_identity():
    gf = field_new(16)
    doc = gf.to_json()
    assert set(doc) == {"p", "k", "modulus"}
    back = GF.from_json(json.loads(json.dumps(doc)))
    assert back == gf
    assert back.mul(5, 7) == gf.mul(5, 7)


def test_from_parts_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        GF.from_parts(2, 2, (0, 0, 1))  # x^2 factors as x * x
    with pytest.raises(NotPrimePowerError):
        GF.from_parts(6, 1, (0, 1))


def test_element_counts():
    for q in (2, 3, 4, 5, 8, 27):
        gf = field_new(q)
        assert len(list(gf.elements())) == q
        assert len(list(gf.nonzero())) == q - 1
