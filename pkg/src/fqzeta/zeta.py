"""Zeta functions from point counts, and their weight-graded structure.

The zeta function of a variety over F_q is the generating function
exp(sum_n N_n t^n / n); for the varieties handled here it is a rational
function in t with integer coefficients and constant term 1 in numerator and
denominator.  This module converts exactly between:

* point-count series and zeta functions (both directions),
* a zeta function and its factors P_0..P_{2d} grouped by root modulus
  q^(-i/2), one factor per cohomological degree,
* factor coefficients and the traces of the q^n-power Frobenius per degree,
  via Newton's identities.

All reported objects are integer polynomials verified by exact identities;
floating point appears only as a guide when grouping roots by modulus, and in
the advisory modulus check (check_riemann_hypothesis), never as a source of
truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg, polys
from .errors import (
    DualityViolationError,
    InsufficientCountsError,
    NonIntegralCoefficientsError,
    NonIntegralCountError,
    NoRationalFitError,
    RoundingMismatchError,
    WeightSeparationError,
)
from .varieties import PointCountSeries

DEFAULT_RH_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ZetaFunction:
    """A reduced rational function in t; num and den have constant term 1."""

    q: int
    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self):
        num = polys.normalize(self.num)
        den = polys.normalize(self.den)
        object.__setattr__(self, "num", tuple(int(c) for c in num))
        object.__setattr__(self, "den", tuple(int(c) for c in den))
        if not self.num or self.num[0] != 1 or not self.den or self.den[0] != 1:
            raise ValueError("numerator and denominator must have constant term 1")
        g = polys.gcd(polys.from_ints(self.num), polys.from_ints(self.den))
        if polys.degree(g) > 0:
            raise ValueError(f"numerator and denominator share a factor: {g}")

    def to_dict(self) -> dict:
        return {"q": self.q, "num": list(self.num), "den": list(self.den)}

    @staticmethod
    def from_dict(data: dict) -> "ZetaFunction":
        return ZetaFunction(data["q"], tuple(data["num"]), tuple(data["den"]))


@dataclass(frozen=True)
class CohomologyProfile:
    """Expected dimensions b_0..b_{2d}, symmetric with b_0 = b_{2d} = 1."""

    d: int
    betti: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "betti", tuple(int(b) for b in self.betti))
        if len(self.betti) != 2 * self.d + 1:
            raise ValueError(f"expected {2 * self.d + 1} betti numbers, got {len(self.betti)}")
        if any(b < 0 for b in self.betti):
            raise ValueError("betti numbers must be nonnegative")
        if self.betti != self.betti[::-1]:
            raise ValueError("betti numbers must satisfy b_i = b_(2d-i)")
        if self.betti[0] != 1:
            raise ValueError("b_0 must be 1 (geometrically connected)")

    @property
    def odd_total(self) -> int:
        return sum(self.betti[1::2])

    @property
    def even_total(self) -> int:
        return sum(self.betti[0::2])

    @staticmethod
    def from_dict(data: dict) -> "CohomologyProfile":
        return CohomologyProfile(data["d"], tuple(data["betti"]))

    def to_dict(self) -> dict:
        return {"d": self.d, "betti": list(self.betti)}


@dataclass(frozen=True)
class WeilFactorization:
    """Integer factors P_0..P_{2d} with P_i(0) = 1 and deg P_i = b_i."""

    q: int
    d: int
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        factors = tuple(tuple(int(c) for c in polys.normalize(f)) for f in self.factors)
        object.__setattr__(self, "factors", factors)
        if len(self.factors) != 2 * self.d + 1:
            raise ValueError(f"expected {2 * self.d + 1} factors, got {len(self.factors)}")
        if any(not f or f[0] != 1 for f in self.factors):
            raise ValueError("every factor must have constant term 1")

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(len(f) - 1 for f in self.factors)

    def to_dict(self) -> dict:
        return {"q": self.q, "d": self.d, "factors": [list(f) for f in self.factors]}


@dataclass(frozen=True)
class TraceVector:
    """traces[i][n-1] = trace of the q^n-power Frobenius in degree i, n = 1..depth."""

    q: int
    d: int
    depth: int
    traces: tuple[tuple[Fraction, ...], ...]

    def trace(self, i: int, n: int) -> Fraction:
        return self.traces[i][n - 1]


# ---------------------------------------------------------------------------
# Power series helpers (Fraction coefficients, index = degree)
# ---------------------------------------------------------------------------


def _series_from_counts(counts) -> list[Fraction]:
    """exp(sum N_n t^n / n) to order len(counts), via z' = (sum N_n t^(n-1)) z."""
    z = [Fraction(1)]
    for m in range(1, len(counts) + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += Fraction(counts[i - 1]) * z[m - i]
        z.append(acc / m)
    return z


def _series_mul(a, b, order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ca in enumerate(a[: order + 1]):
        if not ca:
            continue
        for j, cb in enumerate(b[: order + 1 - i]):
            out[i + j] += ca * cb
    return out


def _series_div(a, b, order: int) -> list[Fraction]:
    if not b or not b[0]:
        raise ZeroDivisionError("series division requires a unit constant term")
    out = []
    inv0 = Fraction(1) / Fraction(b[0])
    for m in range(order + 1):
        acc = a[m] if m < len(a) else Fraction(0)
        for i in range(1, min(m, len(b) - 1) + 1):
            acc -= Fraction(b[i]) * out[m - i]
        out.append(acc * inv0)
    return out


def _log_derivative_counts(int_poly, terms: int) -> list[Fraction]:
    """Coefficients of t*A'/A up to t^terms for A with A(0) = 1."""
    a = polys.from_ints(int_poly)
    ta_prime = [Fraction(0)] + [i * c for i, c in enumerate(a) if i >= 1]
    inv = _series_div([Fraction(1)], list(a), terms)
    return _series_mul(ta_prime, inv, terms)


# ---------------------------------------------------------------------------
# Counts <-> zeta
# ---------------------------------------------------------------------------


def zeta_from_counts(
    series: PointCountSeries,
    num_degree: int,
    den_degree: int,
    *,
    known_numerator=(1,),
    known_denominator=(1,),
) -> ZetaFunction:
    """The unique rational function matching the supplied counts exactly.

    num_degree and den_degree bound the degrees of numerator and denominator.
    Factors that are pinned a priori (for a geometrically connected variety
    the degree-0 and degree-2d factors are 1 - t and 1 - q^d t; see
    connected_denominator) may be passed in, which lowers the number of counts
    needed by the number of coefficients they fix.  The remaining coefficients
    are solved by exact linear algebra on the power-series expansion; every
    supplied count beyond the minimum acts as a consistency check.
    """
    counts = series.counts
    kn = polys.from_ints(known_numerator)
    kd = polys.from_ints(known_denominator)
    if not kn or kn[0] != 1 or not kd or kd[0] != 1:
        raise ValueError("known factors must have constant term 1")
    free_num = num_degree - polys.degree(kn)
    free_den = den_degree - polys.degree(kd)
    if free_num < 0 or free_den < 0:
        raise ValueError("known factors exceed the requested degrees")
    needed = free_num + free_den
    if len(counts) < needed:
        raise InsufficientCountsError(
            f"{needed} counts needed to fit degrees ({num_degree},{den_degree}) "
            f"with the given known factors; got {len(counts)}",
            needed=needed,
            given=len(counts),
        )
    order = len(counts)
    z = _series_from_counts(counts)
    w = _series_div(_series_mul(z, list(kd), order), list(kn), order)

    # Find Q_u with Q_u(0)=1, deg <= free_den, killing the series tail of
    # Q_u * w beyond degree free_num.
    if free_den:
        rows = []
        rhs = []
        for j in range(free_num + 1, order + 1):
            rows.append([w[j - i] if j - i >= 0 else Fraction(0) for i in range(1, free_den + 1)])
            rhs.append(-w[j])
        sol = linalg.solve(rows, rhs) if rows else [0] * free_den
        if sol is None:
            raise NoRationalFitError(
                f"no rational function of degree ({num_degree},{den_degree}) "
                f"matches the {len(counts)} supplied counts"
            )
        q_u = polys.normalize([Fraction(1)] + [Fraction(c) for c in sol])
    else:
        q_u = polys.ONE
    p_u = polys.normalize(_series_mul(list(q_u), w, free_num)[: free_num + 1])

    num = polys.mul(kn, p_u)
    den = polys.mul(kd, q_u)
    g = polys.gcd(num, den)
    if polys.degree(g) > 0:
        g = polys.scale(g, Fraction(1) / g[0])
        num = polys.div_mod(num, g)[0]
        den = polys.div_mod(den, g)[0]

    # Verify den * Z = num through every supplied term.
    check = _series_mul(list(den), z, order)
    for j in range(order + 1):
        expected = num[j] if j < len(num) else Fraction(0)
        if check[j] != expected:
            raise NoRationalFitError(
                f"fit of degree ({num_degree},{den_degree}) fails the supplied "
                f"counts at order t^{j}"
            )
    if not (polys.is_integral(num) and polys.is_integral(den)):
        raise NonIntegralCoefficientsError(
            f"counts admit the rational fit ({num})/({den}) "
            "but its coefficients are not integers"
        )
    return ZetaFunction(series.q, polys.to_ints(num), polys.to_ints(den))


def counts_from_zeta(zeta: ZetaFunction, terms: int) -> PointCountSeries:
    """N_n read off t (d/dt) log zeta; counts must be nonnegative integers."""
    from_num = _log_derivative_counts(zeta.num, terms)
    from_den = _log_derivative_counts(zeta.den, terms)
    counts = []
    for n in range(1, terms + 1):
        c = from_num[n] - from_den[n]
        if c.denominator != 1 or c < 0:
            raise NonIntegralCountError(
                f"zeta expands to N_{n} = {c}, not a nonnegative integer"
            )
        counts.append(int(c))
    return PointCountSeries(zeta.q, tuple(counts))


def connected_denominator(q: int, d: int) -> tuple[int, ...]:
    """(1 - t)(1 - q^d t), the pinned degree-0 and degree-2d factors; (1 - t) if d = 0."""
    if d == 0:
        return (1, -1)
    return polys.to_ints(polys.mul((1, -1), (1, -(q**d))))


# ---------------------------------------------------------------------------
# Weight separation and traces
# ---------------------------------------------------------------------------


def _roots_with_multiplicity(int_poly) -> list[complex]:
    """Numeric roots, each repeated by multiplicity.

    The multiplicity structure is extracted first by exact square-free
    decomposition, so the numeric solver only ever sees simple roots and
    full floating-point accuracy is preserved.
    """
    import numpy as np

    roots: list[complex] = []
    for factor, mult in polys.squarefree(polys.from_ints(int_poly)):
        if polys.degree(factor) == 1:
            simple = [complex(-factor[0] / factor[1])]
        else:
            simple = list(np.roots([float(c) for c in reversed(factor)]))
        for root in simple:
            roots.extend([root] * mult)
    return roots


def factor_by_weights(
    zeta: ZetaFunction, profile: CohomologyProfile, tol: float = DEFAULT_RH_TOLERANCE
) -> WeilFactorization:
    """Split zeta into factors P_i grouped by root modulus q^(-i/2).

    Roots are located numerically and grouped by modulus within relative
    tolerance tol; a root matching zero or several weight classes is an
    error, never a guess.  The regrouped integer factors are verified against
    the input by exact polynomial multiplication.
    """
    d, betti = profile.d, profile.betti
    if polys.degree(zeta.num) != profile.odd_total:
        raise ValueError(
            f"numerator degree {polys.degree(zeta.num)} != sum of odd betti "
            f"numbers {profile.odd_total}"
        )
    if polys.degree(zeta.den) != profile.even_total:
        raise ValueError(
            f"denominator degree {polys.degree(zeta.den)} != sum of even betti "
            f"numbers {profile.even_total}"
        )

    pools = {
        0: _roots_with_multiplicity(zeta.den),
        1: _roots_with_multiplicity(zeta.num),
    }
    assigned: dict[int, list[complex]] = {i: [] for i in range(2 * d + 1)}
    for parity, pool in pools.items():
        targets = [i for i in range(parity, 2 * d + 1, 2) if betti[i] > 0]
        for root in pool:
            matches = [
                i
                for i in targets
                if abs(abs(root) - zeta.q ** (-i / 2)) <= tol * zeta.q ** (-i / 2)
            ]
            if len(matches) != 1:
                raise WeightSeparationError(
                    f"root {root} of modulus {abs(root):.12g} matches weight "
                    f"classes {matches} at tolerance {tol}"
                )
            assigned[matches[0]].append(root)
    for i in range(2 * d + 1):
        if len(assigned[i]) != betti[i]:
            raise WeightSeparationError(
                f"degree {i}: expected {betti[i]} roots of modulus "
                f"q^(-{i}/2), found {len(assigned[i])}"
            )

    factors = []
    for i in range(2 * d + 1):
        coeffs = [complex(1)]
        for root in assigned[i]:
            alpha = 1 / root
            coeffs = [
                (coeffs[j] if j < len(coeffs) else 0)
                - alpha * (coeffs[j - 1] if j >= 1 else 0)
                for j in range(len(coeffs) + 1)
            ]
        factors.append(tuple(int(round(c.real)) for c in coeffs))

    even = (1,)
    odd = (1,)
    for i, f in enumerate(factors):
        if i % 2 == 0:
            even = polys.to_ints(polys.mul(even, f))
        else:
            odd = polys.to_ints(polys.mul(odd, f))
    if even != zeta.den or odd != zeta.num:
        raise RoundingMismatchError(
            "rounded weight factors fail the exact product identity: "
            f"even {even} vs {zeta.den}, odd {odd} vs {zeta.num}"
        )
    return WeilFactorization(zeta.q, d, tuple(factors))


def traces_from_factorization(w: WeilFactorization, depth: int) -> TraceVector:
    """Power sums of the inverse roots of each P_i, by Newton's identities."""
    all_traces = []
    for f in w.factors:
        b = len(f) - 1
        e = [Fraction(0)] * (b + 1)
        for j in range(1, b + 1):
            e[j] = Fraction((-1) ** j * f[j])
        ps: list[Fraction] = []
        for n in range(1, depth + 1):
            acc = Fraction(0)
            for j in range(1, min(n - 1, b) + 1):
                acc += (-1) ** (j - 1) * e[j] * ps[n - 1 - j]
            if n <= b:
                acc += (-1) ** (n - 1) * n * e[n]
            ps.append(acc)
        all_traces.append(tuple(ps))
    return TraceVector(w.q, w.d, depth, tuple(all_traces))


def check_functional_equation(w: WeilFactorization) -> dict:
    """Verify that P_{2d-i} is P_i with inverse roots scaled by q^(d-i), exactly.

    Coefficientwise this means P_{2d-i}[m] = P_i[m] * q^((d-i)m) for all m;
    the comparison is integer-exact.
    """
    q, d = w.q, w.d
    bad = []
    for i in range(d):
        low, high = w.factors[i], w.factors[2 * d - i]
        if len(low) != len(high):
            bad.append(i)
            continue
        scale = q ** (d - i)
        if any(high[m] != low[m] * scale**m for m in range(len(low))):
            bad.append(i)
    if bad:
        raise DualityViolationError(
            f"degrees {bad} violate the q^(d-i) pairing with their "
            f"complementary degrees",
            degrees=tuple(bad),
        )
    return {"d": d, "checked": [[i, 2 * d - i] for i in range(d)], "ok": True}


def check_riemann_hypothesis(
    w: WeilFactorization, tol: float = DEFAULT_RH_TOLERANCE
) -> dict:
    """Advisory numeric check that roots of P_i have modulus q^(-i/2)."""
    violations = []
    for i, f in enumerate(w.factors):
        if len(f) <= 1:
            continue
        expected = w.q ** (-i / 2)
        for root in _roots_with_multiplicity(f):
            if abs(abs(root) - expected) > tol * expected:
                violations.append(
                    {
                        "degree": i,
                        "root": [float(root.real), float(root.imag)],
                        "modulus": float(abs(root)),
                        "expected": expected,
                    }
                )
    return {"ok": not violations, "tolerance": tol, "violations": violations}
