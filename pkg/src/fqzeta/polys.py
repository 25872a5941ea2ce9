"""Dense univariate polynomial arithmetic over exact scalars.

Polynomials are tuples of coefficients, low degree first, with no trailing
zeros; the zero polynomial is the empty tuple.  Coefficients are ints or
fractions.Fraction (division-using helpers require Fraction inputs).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm

ZERO: tuple = ()
ONE: tuple = (Fraction(1),)


def normalize(coeffs) -> tuple:
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def degree(a) -> int:
    """Degree, with deg 0 = -1."""
    return len(a) - 1


def add(a, b) -> tuple:
    n = max(len(a), len(b))
    return normalize(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def neg(a) -> tuple:
    return tuple(-c for c in a)


def sub(a, b) -> tuple:
    return add(a, neg(b))


def scale(a, s) -> tuple:
    if not s:
        return ZERO
    return tuple(c * s for c in a)


def mul(a, b) -> tuple:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return normalize(out)


def div_mod(a, b) -> tuple[tuple, tuple]:
    """Exact division with remainder; coefficients must form a field."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = Fraction(1) / Fraction(b[-1])
    while len(rem) >= len(b) and normalize(rem):
        rem = list(normalize(rem))
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        factor = rem[-1] * inv_lead
        quo[shift] = factor
        for i, cb in enumerate(b):
            rem[shift + i] -= factor * cb
        rem.pop()
    return normalize(quo), normalize(rem)


def gcd(a, b) -> tuple:
    """Monic gcd over the fraction field."""
    a, b = normalize(a), normalize(b)
    while b:
        a, b = b, div_mod(a, b)[1]
    if not a:
        return ZERO
    inv_lead = Fraction(1) / Fraction(a[-1])
    return tuple(Fraction(c) * inv_lead for c in a)


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def derivative(a) -> tuple:
    return normalize(i * c for i, c in enumerate(a) if i >= 1)


def is_integral(a) -> bool:
    return all(Fraction(c).denominator == 1 for c in a)


def to_ints(a) -> tuple[int, ...]:
    if not is_integral(a):
        raise ValueError(f"non-integral coefficients: {a}")
    return tuple(int(c) for c in a)


def from_ints(a) -> tuple:
    return normalize(Fraction(c) for c in a)


def squarefree(a) -> list[tuple[tuple, int]]:
    """Yun's algorithm: a = lead * prod f_i^i with the f_i monic, square-free
    and pairwise coprime.  Returns [(f_i, i), ...] for the nonconstant f_i.
    """
    a = normalize(tuple(Fraction(c) for c in a))
    if degree(a) < 1:
        return []
    lead_inv = Fraction(1) / a[-1]
    a = scale(a, lead_inv)
    da = derivative(a)
    g = gcd(a, da)
    if degree(g) == 0:
        return [(a, 1)]
    out = []
    b = div_mod(a, g)[0]
    c = div_mod(da, g)[0]
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        f = gcd(b, d)
        if degree(f) > 0:
            out.append((f, i))
        b = div_mod(b, f)[0]
        c = div_mod(d, f)[0]
        d = sub(c, derivative(b))
        i += 1
    return out


def clear_integer_pair(num, den) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Scale a pair of Fraction polynomials to a primitive integer pair.

    The common scalar is chosen so that all coefficients are integers, their
    collective gcd is 1, and the leading coefficient of ``den`` is positive
    (of ``num`` if den is zero).
    """
    coeffs = [Fraction(c) for c in (*num, *den)]
    if not any(coeffs):
        return ZERO, ZERO
    lam = int_lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    scaled = [c * lam for c in coeffs]
    g = 0
    for c in scaled:
        g = int_gcd(g, int(c))
    g = g or 1
    anchor = den if normalize(den) else num
    if Fraction(anchor[-1]) < 0:
        g = -g
    n = len(num)
    ints = [int(c) // g for c in scaled]
    return normalize(ints[:n]), normalize(ints[n:])
