"""Varieties as explicit polynomial systems, counted by exhaustive enumeration.

A variety is described by polynomial equations over F_q (q = p^k) in an
affine or projective ambient space.  Counting over F_{q^n} enumerates every
candidate point and tests all equations; projective points are enumerated as
normalized representatives whose first nonzero coordinate is 1, so no orbit
bookkeeping is needed.

The enumeration order is fixed: representatives are grouped by the position
of the leading 1 (ascending), and free coordinates run through the field in
lexicographic element order, last coordinate fastest.  count_points accepts a
``span`` of positions in this order, so a caller may partition the domain
into disjoint blocks, count them independently (e.g. on separate workers),
and sum the results.

Two interchangeable evaluation backends exist: a pure-Python reference path,
and a vectorized path using the field's flat numpy add/mul tables when the
field is small enough.  Both are exact integer computations and return
identical counts; the backend is chosen per call based on domain size.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import BudgetExceededError, MalformedSpecError
from .fields import ExtensionField, make_extension

DEFAULT_BUDGET = 10**8

_NUMPY_MIN_POINTS = 1 << 13
_CHUNK = 1 << 17

Term = tuple[tuple[int, ...], tuple[int, ...]]  # (coefficient vector, exponents)


@dataclass(frozen=True)
class Ambient:
    kind: str  # "affine" | "projective"
    dim: int

    def __post_init__(self):
        if self.kind not in ("affine", "projective"):
            raise MalformedSpecError(f"unknown ambient type {self.kind!r}")
        if not isinstance(self.dim, int) or self.dim < 0:
            raise MalformedSpecError(f"ambient dimension must be >= 0, got {self.dim!r}")

    @property
    def nvars(self) -> int:
        return self.dim + 1 if self.kind == "projective" else self.dim


@dataclass(frozen=True)
class VarietySpec:
    """Equations over F_{p^k} cutting out a closed subset of the ambient space."""

    label: str
    p: int
    k: int
    ambient: Ambient
    equations: tuple[tuple[Term, ...], ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    @staticmethod
    def from_dict(data: dict) -> "VarietySpec":
        try:
            label = data["label"]
            p = data["p"]
            k = data["k"]
            ambient_raw = data["ambient"]
            equations_raw = data["equations"]
        except (KeyError, TypeError) as exc:
            raise MalformedSpecError(f"missing field in variety spec: {exc}") from None
        if not isinstance(label, str):
            raise MalformedSpecError("label must be a string")
        if not isinstance(p, int) or not isinstance(k, int) or k < 1:
            raise MalformedSpecError("p must be an int and k a positive int")
        make_extension(p, k)  # validates primality of p
        ambient = Ambient(ambient_raw.get("type"), ambient_raw.get("dim"))
        nvars = ambient.nvars
        equations = []
        for eq_idx, eq in enumerate(equations_raw):
            terms = []
            for term in eq:
                try:
                    coeff_raw, exps_raw = term
                except (TypeError, ValueError):
                    raise MalformedSpecError(
                        f"equation {eq_idx}: each term must be [coeff, exponents]"
                    ) from None
                if k == 1:
                    if not isinstance(coeff_raw, int):
                        raise MalformedSpecError(
                            f"equation {eq_idx}: coefficient must be an int when k=1"
                        )
                    coeff = (coeff_raw % p,)
                else:
                    if not isinstance(coeff_raw, list) or len(coeff_raw) != k:
                        raise MalformedSpecError(
                            f"equation {eq_idx}: coefficient must be a length-{k} list"
                        )
                    coeff = tuple(int(c) % p for c in coeff_raw)
                if not isinstance(exps_raw, list) or len(exps_raw) != nvars:
                    raise MalformedSpecError(
                        f"equation {eq_idx}: exponent vector must have length {nvars}"
                    )
                if any(not isinstance(e, int) or e < 0 for e in exps_raw):
                    raise MalformedSpecError(
                        f"equation {eq_idx}: exponents must be nonnegative integers"
                    )
                if any(coeff):
                    terms.append((coeff, tuple(exps_raw)))
            if ambient.kind == "projective" and terms:
                degrees = {sum(exps) for _, exps in terms}
                if len(degrees) > 1:
                    raise MalformedSpecError(
                        f"equation {eq_idx} is not homogeneous: degrees {sorted(degrees)}"
                    )
            equations.append(tuple(terms))
        return VarietySpec(label, p, k, ambient, tuple(equations))

    def to_dict(self) -> dict:
        eqs = []
        for eq in self.equations:
            terms = []
            for coeff, exps in eq:
                c = coeff[0] if self.k == 1 else list(coeff)
                terms.append([c, list(exps)])
            eqs.append(terms)
        return {
            "label": self.label,
            "p": self.p,
            "k": self.k,
            "ambient": {"type": self.ambient.kind, "dim": self.ambient.dim},
            "equations": eqs,
        }


def load_spec(path) -> VarietySpec:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedSpecError(f"invalid JSON in {path}: {exc}") from None
    return VarietySpec.from_dict(data)


@dataclass(frozen=True)
class PointCountSeries:
    """The sequence N_n = #X(F_{q^n}) for n = 1..B."""

    q: int
    counts: tuple[int, ...]


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------


def domain_size(spec: VarietySpec, n: int) -> int:
    """Number of candidate points enumerated over F_{q^n}."""
    qn = spec.q**n
    m = spec.ambient.dim
    if spec.ambient.kind == "affine":
        return qn**m
    return (qn ** (m + 1) - 1) // (qn - 1) if qn > 1 else m + 1


def count_points(
    spec: VarietySpec,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    span: tuple[int, int] | None = None,
) -> int:
    """Exact number of F_{q^n}-points (restricted to ``span`` if given)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    size = domain_size(spec, n)
    required = max(size, spec.p ** (spec.k * n) if spec.k > 1 else 0)
    if required > budget:
        raise BudgetExceededError(
            f"enumeration of {required} points exceeds budget {budget}",
            required=required,
            budget=budget,
        )
    field = make_extension(spec.p, spec.k * n)
    equations = _embedded_equations(spec, field)
    lo, hi = span if span is not None else (0, size)
    lo, hi = max(lo, 0), min(hi, size)
    if lo >= hi:
        return 0

    tables = field.numpy_tables() if hi - lo >= _NUMPY_MIN_POINTS else None
    if tables is not None:
        return _count_numpy(spec, field, equations, lo, hi, tables)
    return _count_pure(spec, field, equations, lo, hi)


def count_series(
    spec: VarietySpec, terms: int, *, budget: int = DEFAULT_BUDGET
) -> PointCountSeries:
    """N_1..N_B by repeated counting; budget failures name the offending n."""
    counts = []
    for n in range(1, terms + 1):
        try:
            counts.append(count_points(spec, n, budget=budget))
        except BudgetExceededError as exc:
            raise BudgetExceededError(
                f"term n={n}: {exc}", required=exc.required, budget=exc.budget
            ) from None
    return PointCountSeries(spec.q, tuple(counts))


def _embedded_equations(spec: VarietySpec, field: ExtensionField):
    """Equations with coefficients mapped into the counting field."""
    embed = _make_embedding(spec, field)
    return tuple(
        tuple((embed(coeff), exps) for coeff, exps in eq) for eq in spec.equations
    )


def _make_embedding(spec: VarietySpec, field: ExtensionField):
    k = spec.k
    if k == 1:
        pad = (0,) * (field.k - 1)
        return lambda coeff: (coeff[0],) + pad
    base = make_extension(spec.p, k)
    if field.k == k:
        return lambda coeff: coeff
    # Map the base generator to the lexicographically first root of the base
    # modulus in the larger field; a root exists because k divides field.k.
    root = None
    for cand in field._tuples():
        acc = (0,) * field.k
        for c in reversed(base.modulus):
            acc = field._add(field._mul(acc, cand), field.element(c).coeffs)
        if not any(acc):
            root = cand
            break
    if root is None:
        raise AssertionError("base modulus has no root in the extension")
    powers = [(1,) + (0,) * (field.k - 1)]
    for _ in range(k - 1):
        powers.append(field._mul(powers[-1], root))

    def embed(coeff):
        acc = (0,) * field.k
        for c, pw in zip(coeff, powers):
            if c:
                acc = field._add(acc, field._mul(field.element(c).coeffs, pw))
        return acc

    return embed


def _blocks(spec: VarietySpec, field: ExtensionField):
    """(start, size, fixed_prefix, n_free) for each enumeration block.

    Affine space is one block with all coordinates free.  Projective space
    has one block per position of the leading 1: coordinates before it are
    0, the position itself is 1, later coordinates are free.
    """
    q = field.order
    m = spec.ambient.dim
    zero = (0,) * field.k
    one = (1,) + (0,) * (field.k - 1)
    if spec.ambient.kind == "affine":
        yield 0, q**m, (), m
        return
    start = 0
    for j in range(m + 1):
        size = q ** (m - j)
        yield start, size, (zero,) * j + (one,), m - j
        start += size


def _count_pure(spec, field, equations, lo, hi) -> int:
    max_exp = [0] * spec.ambient.nvars
    for eq in equations:
        for _, exps in eq:
            for i, e in enumerate(exps):
                max_exp[i] = max(max_exp[i], e)
    one = (1,) + (0,) * (field.k - 1)
    elems = None
    count = 0
    for start, size, prefix, n_free in _blocks(spec, field):
        if start + size <= lo or start >= hi:
            continue
        block_lo, block_hi = max(lo - start, 0), min(hi - start, size)
        if n_free <= 1:
            # One free coordinate may range over a huge field; stay lazy.
            points = ((t,) for t in field._tuples()) if n_free else iter([()])
        else:
            # q**n_free <= budget bounds the field order here, so the
            # materialized element list needed by product() is small.
            if elems is None:
                elems = list(field._tuples())
            points = itertools.product(elems, repeat=n_free)
        points = itertools.islice(points, block_lo, block_hi)
        for free in points:
            coords = prefix + free
            powers = [None] * len(coords)
            ok = True
            for eq in equations:
                acc = None
                for coeff, exps in eq:
                    v = coeff
                    for i, e in enumerate(exps):
                        if not e:
                            continue
                        if powers[i] is None:
                            ps = [one]
                            for _ in range(max_exp[i]):
                                ps.append(field._mul(ps[-1], coords[i]))
                            powers[i] = ps
                        v = field._mul(v, powers[i][e])
                    acc = v if acc is None else field._add(acc, v)
                if acc is not None and any(acc):
                    ok = False
                    break
            if ok:
                count += 1
    return count


def _count_numpy(spec, field, equations, lo, hi, tables) -> int:
    import numpy as np

    add_flat, mul_flat = tables
    q = field.order
    one_idx = field.index_of((1,) + (0,) * (field.k - 1))

    def mul_arr(a, b):
        return mul_flat[a.astype(np.int64) * q + b]

    count = 0
    for start, size, prefix, n_free in _blocks(spec, field):
        if start + size <= lo or start >= hi:
            continue
        block_lo, block_hi = max(lo - start, 0), min(hi - start, size)
        prefix_idx = [0 if not any(t) else one_idx for t in prefix]
        for c0 in range(block_lo, block_hi, _CHUNK):
            c1 = min(c0 + _CHUNK, block_hi)
            offs = np.arange(c0, c1, dtype=np.int64)
            coords = []
            for t in range(n_free):
                stride = q ** (n_free - 1 - t)
                coords.append(((offs // stride) % q).astype(np.int64))
            alive = np.ones(c1 - c0, dtype=bool)
            for eq in equations:
                acc = np.zeros(c1 - c0, dtype=np.int64)
                pow_cache: dict[tuple[int, int], np.ndarray] = {}
                for coeff, exps in eq:
                    scalar = coeff
                    vec = None
                    for i, e in enumerate(exps):
                        if not e:
                            continue
                        if i < len(prefix):
                            scalar = field._mul(
                                scalar, field._pow(field.tuple_at(prefix_idx[i]), e)
                            )
                            continue
                        key = (i, e)
                        if key not in pow_cache:
                            base = coords[i - len(prefix)]
                            pw = base
                            for _ in range(e - 1):
                                pw = mul_arr(pw, base)
                            pow_cache[key] = pw
                        factor = pow_cache[key]
                        vec = factor if vec is None else mul_arr(vec, factor)
                    scalar_idx = field.index_of(scalar)
                    if vec is None:
                        term = np.full(c1 - c0, scalar_idx, dtype=np.int64)
                    elif scalar_idx == one_idx:
                        term = vec.astype(np.int64)
                    else:
                        term = mul_flat[np.int64(scalar_idx) * q + vec].astype(np.int64)
                    acc = add_flat[acc * q + term].astype(np.int64)
                alive &= acc == 0
                if not alive.any():
                    break
            count += int(alive.sum())
    return count
