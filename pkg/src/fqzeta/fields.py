"""Exact arithmetic in finite fields F_{p^k}.

A field is built as F_p[x] / (m(x)) where m is the lexicographically
smallest monic irreducible polynomial of degree k over F_p, comparing the
non-leading coefficient vectors (c_0, ..., c_{k-1}) entry by entry from the
constant term up.  This choice is deterministic across runs and platforms.
Elements are coefficient vectors reduced mod p; all arithmetic is exact.

Fields and elements are immutable, so they are safe to share between
threads and to enumerate in parallel.

Performance notes, none of which change semantics:

* fields of order up to 2^16 lazily build discrete exp/log tables for
  multiplication and inversion;
* fields of order up to 1024 additionally expose flat numpy add/mul tables
  (index i*order+j) used by the vectorized point counters.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import MixedFieldsError, NotPrimeError

MAX_CHARACTERISTIC = 1 << 31

_EXPLOG_MAX_ORDER = 1 << 16
_NUMPY_TABLE_MAX_ORDER = 1024

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2^64."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise NotPrimeError(f"characteristic must be an integer >= 2, got {p!r}")
        if p >= MAX_CHARACTERISTIC:
            raise ValueError(f"characteristic {p} exceeds supported bound 2^31")
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        object.__setattr__(self, "p", p)

    def __setattr__(self, *_):
        raise AttributeError("PrimeField is immutable")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# Polynomial helpers over F_p; coefficient lists are low degree first.
# ---------------------------------------------------------------------------


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _fp_trim(out)


def _fp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        a = _fp_trim(a)
        if len(a) < len(m):
            break
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, cm in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * cm) % p
        a.pop()
    return _fp_trim(a)


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _fp_mod(base, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        base = _fp_mod(_fp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _is_irreducible(f: list[int], p: int, k: int) -> bool:
    """gcd(f, x^(p^i) - x) must be 1 for every i <= k/2."""
    x = [0, 1]
    frob = x
    for _ in range(k // 2):
        frob = _fp_powmod(frob, p, f, p)
        diff = [(c1 - c2) % p for c1, c2 in itertools.zip_longest(frob, x, fillvalue=0)]
        g = _fp_gcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    # A zero constant term means x divides the candidate, so start at c_0 = 1.
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=k - 1):
            f = [c0, *rest, 1]
            if _is_irreducible(f, p, k):
                return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


class ExtensionField:
    """F_{p^k} with a fixed monic irreducible modulus.

    Do not construct directly; use make_extension, which also guarantees a
    single shared instance per (p, k).
    """

    def __init__(self, base: PrimeField, k: int, modulus: tuple[int, ...]):
        self.base = base
        self.p = base.p
        self.k = k
        self.modulus = modulus
        self.order = base.p**k
        # x^(k+j) mod m for j = 0..k-2, used during multiplication.
        p = self.p
        red = []
        cur = [(-c) % p for c in modulus[:-1]]
        for _ in range(max(k - 1, 0)):
            red.append(tuple(cur))
            cur = [0] + cur
            lead = cur.pop()
            if lead:
                cur = [(c - lead * m) % p for c, m in zip(cur, modulus[:-1])]
        self._reduction_rows = tuple(red)
        self._exp: list[tuple[int, ...]] | None = None
        self._log: dict[tuple[int, ...], int] | None = None
        self._np_tables = None

    # -- element constructors -------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def element(self, coeffs) -> "FieldElement":
        if isinstance(coeffs, int):
            coeffs = (coeffs,) + (0,) * (self.k - 1)
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def elements(self):
        """All p^k elements, lexicographic on coefficient vectors."""
        for coeffs in self._tuples():
            yield FieldElement(self, coeffs)

    def _tuples(self):
        return itertools.product(range(self.p), repeat=self.k)

    def index_of(self, coeffs: tuple[int, ...]) -> int:
        idx = 0
        for c in coeffs:
            idx = idx * self.p + c
        return idx

    def tuple_at(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            idx, c = divmod(idx, self.p)
            out.append(c)
        return tuple(reversed(out))

    # -- raw tuple arithmetic ---------------------------------------------------

    def _add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _neg(self, a: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((-x) % p for x in a)

    def _sub(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _mul_direct(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        conv = [0] * (2 * k - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    conv[i + j] += ca * cb
        out = [c % p for c in conv[:k]]
        for j in range(k - 1):
            hi = conv[k + j] % p
            if hi:
                row = self._reduction_rows[j]
                for t in range(k):
                    out[t] = (out[t] + hi * row[t]) % p
        return tuple(out)

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        log = self._log
        if log is None and self.order <= _EXPLOG_MAX_ORDER:
            self._build_exp_log()
            log = self._log
        if log is not None:
            la = log.get(a)
            lb = log.get(b)
            if la is None or lb is None:
                return (0,) * self.k
            return self._exp[(la + lb) % (self.order - 1)]
        return self._mul_direct(a, b)

    def _inv(self, a: tuple[int, ...]) -> tuple[int, ...]:
        if not any(a):
            raise ZeroDivisionError("inverse of zero field element")
        if self._log is None and self.order <= _EXPLOG_MAX_ORDER:
            self._build_exp_log()
        if self._log is not None:
            la = self._log[a]
            return self._exp[(-la) % (self.order - 1)]
        return self._pow_direct(a, self.order - 2)

    def _pow_direct(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        result = (1,) + (0,) * (self.k - 1)
        base = a
        while e:
            if e & 1:
                result = self._mul_direct(result, base)
            base = self._mul_direct(base, base)
            e >>= 1
        return result

    def _pow(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        if e < 0:
            return self._pow(self._inv(a), -e)
        result = (1,) + (0,) * (self.k - 1)
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- multiplication tables ---------------------------------------------------

    def _build_exp_log(self):
        g = self._find_generator()
        exp = []
        cur = (1,) + (0,) * (self.k - 1)
        for _ in range(self.order - 1):
            exp.append(cur)
            cur = self._mul_direct(cur, g)
        self._exp = exp
        self._log = {t: i for i, t in enumerate(exp)}

    def _find_generator(self) -> tuple[int, ...]:
        n = self.order - 1
        prime_factors = []
        m, f = n, 2
        while f * f <= m:
            if m % f == 0:
                prime_factors.append(f)
                while m % f == 0:
                    m //= f
            f += 1
        if m > 1:
            prime_factors.append(m)
        for cand in self._tuples():
            if not any(cand):
                continue
            if all(
                self._pow_direct(cand, n // r) != (1,) + (0,) * (self.k - 1)
                for r in prime_factors
            ):
                return cand
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def numpy_tables(self):
        """Flat (order*order,) int32 add and mul tables, or None if too large."""
        if self.order > _NUMPY_TABLE_MAX_ORDER:
            return None
        if self._np_tables is None:
            import numpy as np

            n = self.order
            if self._log is None:
                self._build_exp_log()
            log = np.full(n, -1, dtype=np.int64)
            for t, i in self._log.items():
                log[self.index_of(t)] = i
            exp = np.array([self.index_of(t) for t in self._exp], dtype=np.int64)
            mul = exp[(log[:, None] + log[None, :]) % (n - 1)]
            mul[log < 0, :] = 0
            mul[:, log < 0] = 0

            place = np.array(
                [self.p ** (self.k - 1 - j) for j in range(self.k)], dtype=np.int64
            )
            idx = np.arange(n, dtype=np.int64)
            add = np.zeros((n, n), dtype=np.int64)
            for j in range(self.k):
                digit = (idx // place[j]) % self.p
                add += ((digit[:, None] + digit[None, :]) % self.p) * place[j]
            self._np_tables = (
                add.reshape(-1).astype(np.int32),
                mul.reshape(-1).astype(np.int32),
            )
        return self._np_tables

    # -- misc ---------------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtensionField", self.p, self.k, self.modulus))

    def __repr__(self):
        return f"ExtensionField(p={self.p}, k={self.k}, modulus={self.modulus})"


class FieldElement:
    """An element of an ExtensionField, stored as a reduced coefficient vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise MixedFieldsError(
                f"elements of {self.field} and {other.field} cannot be combined"
            )
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field, self.field._mul(self.coeffs, self.field._inv(other.coeffs))
        )

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.coeffs))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field._pow(self.coeffs, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.field.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coeffs))

    def __repr__(self):
        return f"FieldElement({self.coeffs!r} over F_{self.field.p}^{self.field.k})"


@lru_cache(maxsize=None)
def make_extension(p: int, k: int) -> ExtensionField:
    """F_{p^k} with the lexicographically smallest monic irreducible modulus."""
    base = PrimeField(p)
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree must be a positive integer, got {k!r}")
    return ExtensionField(base, k, _smallest_irreducible(p, k))


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_neg(a: FieldElement) -> FieldElement:
    return -a


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def enumerate_elements(field: ExtensionField):
    """Deterministic stream of all p^k elements, lexicographic coefficient order."""
    return field.elements()
