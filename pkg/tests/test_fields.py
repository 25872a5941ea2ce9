import itertools
import random

import pytest

from fqzeta.errors import MixedFieldsError, NotPrimeError
from fqzeta.fields import (
    PrimeField,
    enumerate_elements,
    field_add,
    field_inv,
    field_mul,
    field_neg,
    is_prime,
    make_extension,
)


def test_is_prime_matches_trial_division():
    def trial(n):
        if n < 2:
            return False
        return all(n % d for d in range(2, int(n**0.5) + 1))

    for n in range(10000):
        assert is_prime(n) == trial(n), n
    assert is_prime(2**31 - 1)
    assert not is_prime(2**31 - 2)


def test_prime_field_rejects_composites_and_bounds():
    with pytest.raises(NotPrimeError):
        PrimeField(4)
    with pytest.raises(NotPrimeError):
        PrimeField(1)
    with pytest.raises(NotPrimeError):
        PrimeField(0)
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)
    assert PrimeField(7).p == 7


def test_make_extension_rejects_composite_p():
    with pytest.raises(NotPrimeError):
        make_extension(4, 1)


def test_degree_one_modulus_is_x():
    assert make_extension(2, 1).modulus == (0, 1)
    assert make_extension(13, 1).modulus == (0, 1)


def _lex_smallest_quadratic_without_roots(p):
    # Independent oracle: a monic quadratic over F_p is irreducible iff it
    # has no roots; scan candidates in lex order on (c0, c1).
    for c0, c1 in itertools.product(range(p), repeat=2):
        if all((x * x + c1 * x + c0) % p for x in range(p)):
            return (c0, c1, 1)
    raise AssertionError


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_modulus_is_lex_smallest_irreducible_quadratic(p):
    assert make_extension(p, 2).modulus == _lex_smallest_quadratic_without_roots(p)


def test_modulus_deterministic_and_cached():
    f1 = make_extension(3, 4)
    f2 = make_extension(3, 4)
    assert f1 is f2
    assert f1.modulus == make_extension(3, 4).modulus


def test_prime_field_arithmetic_examples():
    f5 = make_extension(5, 1)
    assert field_add(f5.element(3), f5.element(4)) == f5.element(2)
    assert field_inv(f5.element(2)) == f5.element(3)
    assert field_neg(f5.element(2)) == f5.element(3)
    assert field_mul(f5.element(2), f5.element(4)) == f5.element(3)


def test_f4_square_of_generator():
    # Modulus is x^2 + x + 1, so x * x reduces to x + 1.
    f4 = make_extension(2, 2)
    x = f4.element((0, 1))
    assert (x * x).coeffs == (1, 1)
    assert x.inverse().coeffs == (1, 1)
    assert x * x.inverse() == f4.one


def test_enumerate_elements_examples():
    assert [e.coeffs for e in enumerate_elements(make_extension(2, 1))] == [(0,), (1,)]
    assert [e.coeffs for e in enumerate_elements(make_extension(3, 1))] == [
        (0,),
        (1,),
        (2,),
    ]
    f9 = list(enumerate_elements(make_extension(3, 2)))
    assert len(f9) == 9
    assert f9[0].coeffs == (0, 0)
    assert f9[-1].coeffs == (2, 2)
    assert len({e.coeffs for e in f9}) == 9


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (5, 2), (3, 3), (3, 4)])
def test_field_axioms_random_triples(p, k):
    field = make_extension(p, k)
    rng = random.Random(20240 + p * 10 + k)
    elems = [field.element(tuple(rng.randrange(p) for _ in range(k))) for _ in range(60)]
    one = field.one
    for _ in range(2000):
        a, b, c = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == one


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2), (7, 1)])
def test_frobenius_is_additive(p, k):
    field = make_extension(p, k)
    for a in field.elements():
        for b in field.elements():
            assert (a + b) ** p == a**p + b**p


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (5, 1), (2, 4), (7, 2)])
def test_multiplicative_group_order(p, k):
    field = make_extension(p, k)
    n = p**k
    for a in field.elements():
        if not a.is_zero():
            assert a ** (n - 1) == field.one
            assert a * a.inverse() == field.one


def test_exp_log_multiplication_matches_direct():
    field = make_extension(7, 2)
    tuples = list(field._tuples())
    field._build_exp_log()
    for a in tuples:
        for b in tuples:
            assert field._mul(a, b) == field._mul_direct(a, b)


def test_numpy_tables_match_direct():
    field = make_extension(3, 3)
    add_t, mul_t = field.numpy_tables()
    n = field.order
    for ai in range(n):
        for bi in range(n):
            a, b = field.tuple_at(ai), field.tuple_at(bi)
            assert add_t[ai * n + bi] == field.index_of(field._add(a, b))
            assert mul_t[ai * n + bi] == field.index_of(field._mul_direct(a, b))


def test_numpy_tables_refused_for_large_fields():
    assert make_extension(1031, 1).numpy_tables() is None


def test_mixed_fields_rejected():
    a = make_extension(5, 1).element(2)
    b = make_extension(7, 1).element(2)
    with pytest.raises(MixedFieldsError):
        _ = a + b
    with pytest.raises(MixedFieldsError):
        _ = a * b


def test_zero_inversion_raises():
    field = make_extension(5, 2)
    with pytest.raises(ZeroDivisionError):
        field.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        _ = field.one / field.zero


def test_index_tuple_round_trip():
    field = make_extension(3, 3)
    for i, t in enumerate(field._tuples()):
        assert field.index_of(t) == i
        assert field.tuple_at(i) == t


def test_element_int_coercion_and_pow():
    field = make_extension(5, 2)
    a = field.element((2, 3))
    assert a + 1 == field.element((3, 3))
    assert 2 * a == field.element((4, 1))
    assert a ** (-1) == a.inverse()
    assert a**0 == field.one
