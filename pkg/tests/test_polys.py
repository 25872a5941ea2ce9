from fractions import Fraction

from fqzeta import polys


def F(*cs):
    return tuple(Fraction(c) for c in cs)


def test_normalize_strips_trailing_zeros():
    assert polys.normalize([1, 2, 0, 0]) == (1, 2)
    assert polys.normalize([0, 0]) == ()
    assert polys.degree(()) == -1


def test_mul_and_divmod_round_trip():
    a = F(1, -3, 2, 5)
    b = F(2, 1)
    prod = polys.mul(a, b)
    quo, rem = polys.div_mod(prod, b)
    assert quo == a
    assert rem == ()
    quo2, rem2 = polys.div_mod(polys.add(prod, F(7)), b)
    assert quo2 == a
    assert rem2 == F(7)


def test_gcd_is_monic_common_factor():
    common = F(1, 1)
    a = polys.mul(common, F(1, -2))
    b = polys.mul(common, F(3, 1))
    g = polys.gcd(a, b)
    assert g == F(1, 1)
    assert polys.gcd(F(2, 2), ()) == F(1, 1)


def test_evaluate_and_derivative():
    a = F(1, 0, 3)  # 1 + 3t^2
    assert polys.evaluate(a, Fraction(2)) == 13
    assert polys.derivative(a) == F(0, 6)


def test_clear_integer_pair_primitive_and_sign():
    num, den = polys.clear_integer_pair(F(Fraction(1, 2), 1), F(Fraction(-3, 2)))
    # scaled by -2/3 gcd handling: denominator leading coefficient positive
    assert den[-1] > 0
    from math import gcd

    g = 0
    for c in (*num, *den):
        g = gcd(g, c)
    assert g == 1
    # and the pair still represents the same ratio at a sample point
    x = Fraction(7)
    lhs = polys.evaluate(F(Fraction(1, 2), 1), x) * polys.evaluate(den, x)
    rhs = polys.evaluate(num, x) * polys.evaluate(F(Fraction(-3, 2)), x)
    assert lhs == rhs


def test_is_integral_and_to_ints():
    assert polys.is_integral(F(1, -4, 3))
    assert not polys.is_integral(F(Fraction(1, 2)))
    assert polys.to_ints(F(1, -4)) == (1, -4)


def test_squarefree_decomposition():
    # (t - 1)(t - 2)^2 (t - 3)^3
    f = F(1)
    for root, mult in ((1, 1), (2, 2), (3, 3)):
        for _ in range(mult):
            f = polys.mul(f, F(-root, 1))
    parts = polys.squarefree(f)
    assert parts == [(F(-1, 1), 1), (F(-2, 1), 2), (F(-3, 1), 3)]
    # square-free input comes back whole
    g = polys.mul(F(-1, 1), F(-5, 1))
    assert polys.squarefree(g) == [(g, 1)]
    # reassembling the powers reproduces the input (monic case)
    acc = F(1)
    for factor, mult in parts:
        for _ in range(mult):
            acc = polys.mul(acc, factor)
    assert acc == f
    assert polys.squarefree(F(7)) == []
