"""Which Frobenius-trace equalities between two varieties are forced?

For smooth projective X and Y of dimension d over F_q that are derived
equivalent, the comparison of their cohomologies yields homogeneous linear
constraints on the per-degree trace differences

    D_i = Tr(Frob | H^i of X) - Tr(Frob | H^i of Y),      0 <= i <= 2d.

Working with differences is valid because every constraint is linear with
identical coefficients on both sides.  The rows, over the field Q(q):

* EVEN_MUKAI:   sum_{i=0..d} q^(-i) D_{2i} = 0
* ODD_MUKAI:    sum_{i=1..d} q^(-i) D_{2i-1} = 0
* HL(i), i < d: D_{2d-i} - q^(d-i) D_i = 0        (hard Lefschetz pairing)
* TRIVIAL(i):   D_i = 0 for i in {0, 2d}          (connectedness)
* ALBANESE:     D_1 = 0                           (isogenous Albanese varieties)

solve_forced row-reduces the system over Q(q) and reports which D_i vanish
in every solution ("forced": the zeta-relevant traces agree for every prime
power q at once), plus one explicit relation per unforced pivot.  Columns are
eliminated from degree 2d down to 0, so free parameters sit in the lowest
unforced degrees and residual relations express higher traces in terms of
lower ones.

instantiate_at_q specializes the system at a rational q0 > 1, and
solve_forced_numeric re-derives the forced set there by an independent
rank-comparison elimination, serving as an oracle for the symbolic result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg, polys
from .errors import DegenerateQError, DimensionMismatchError
from .ratfunc import ONE, RationalFunctionQ, render_int_poly
from .zeta import TraceVector


@dataclass(frozen=True)
class SolverFlags:
    albanese: bool = True
    hard_lefschetz: bool = True
    trivial: bool = True

    def to_dict(self) -> dict:
        return {
            "albanese": self.albanese,
            "hard_lefschetz": self.hard_lefschetz,
            "trivial": self.trivial,
        }


def unknown_names(d: int) -> tuple[str, ...]:
    """The 2d+1 unknowns D_0..D_{2d}; D_i is the degree-i trace difference."""
    return tuple(f"D_{i}" for i in range(2 * d + 1))


@dataclass(frozen=True)
class ConstraintRow:
    label: str
    coeffs: tuple[RationalFunctionQ, ...]


@dataclass(frozen=True)
class TraceConstraintSystem:
    d: int
    rows: tuple[ConstraintRow, ...]
    flags: SolverFlags

    @property
    def unknowns(self) -> int:
        return 2 * self.d + 1


@dataclass(frozen=True)
class NumericTraceSystem:
    d: int
    q0: Fraction
    labels: tuple[str, ...]
    rows: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Relation:
    """A linear relation sum_i coeff_i * D_i = 0 with integer-poly coefficients."""

    coeffs: tuple[tuple[int, tuple[int, ...]], ...]  # ((degree, poly in q), ...)

    def to_dict(self) -> dict:
        return {
            "coeffs": {
                f"D_{i}": f"{render_int_poly(poly)}/1" for i, poly in self.coeffs
            }
        }

    def __str__(self):
        parts = []
        for i, poly in self.coeffs:
            s = render_int_poly(poly)
            if s == "1":
                term = f"D_{i}"
            elif s == "-1":
                term = f"-D_{i}"
            elif s.startswith("-") or " " in s:
                term = f"({s})*D_{i}"
            else:
                term = f"{s}*D_{i}"
            parts.append(term)
        return " + ".join(parts) + " = 0"


@dataclass(frozen=True)
class ForcedReport:
    d: int
    flags: SolverFlags
    forced: tuple[int, ...]
    residual: tuple[Relation, ...]
    q0: Fraction | None = None

    @property
    def fully_forced(self) -> bool:
        return self.forced == tuple(range(2 * self.d + 1))

    def to_dict(self) -> dict:
        out = {
            "d": self.d,
            "flags": self.flags.to_dict(),
            "forced": list(self.forced),
            "residual_relations": [r.to_dict() for r in self.residual],
        }
        if self.q0 is not None:
            out["q0"] = f"{self.q0.numerator}/{self.q0.denominator}"
        return out


def build_constraint_system(
    d: int,
    *,
    include_albanese: bool = True,
    include_hard_lefschetz: bool = True,
    include_trivial: bool = True,
) -> TraceConstraintSystem:
    """The homogeneous constraint rows on D_0..D_{2d} for dimension d."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    n = 2 * d + 1
    zero = RationalFunctionQ((0,))
    rows = []

    even = [zero] * n
    for i in range(d + 1):
        even[2 * i] = RationalFunctionQ.q_power(-i)
    rows.append(ConstraintRow("EVEN_MUKAI", tuple(even)))

    odd = [zero] * n
    for i in range(1, d + 1):
        odd[2 * i - 1] = RationalFunctionQ.q_power(-i)
    rows.append(ConstraintRow("ODD_MUKAI", tuple(odd)))

    if include_hard_lefschetz:
        for i in range(d):
            row = [zero] * n
            row[2 * d - i] = ONE
            row[i] = -RationalFunctionQ.q_power(d - i)
            rows.append(ConstraintRow(f"HL({i})", tuple(row)))

    if include_trivial:
        for i in (0, 2 * d):
            row = [zero] * n
            row[i] = ONE
            rows.append(ConstraintRow(f"TRIVIAL({i})", tuple(row)))

    if include_albanese:
        row = [zero] * n
        row[1] = ONE
        rows.append(ConstraintRow("ALBANESE", tuple(row)))

    return TraceConstraintSystem(
        d,
        tuple(rows),
        SolverFlags(include_albanese, include_hard_lefschetz, include_trivial),
    )


def _clear_rows(system: TraceConstraintSystem):
    """Scale each row by its denominator lcm so entries are polynomial in q.

    Multiplying a row by a nonzero element of Q(q) does not change the
    solution set; it keeps the elimination free of nested fractions.
    """
    cleared = []
    for row in system.rows:
        common = polys.ONE
        for c in row.coeffs:
            g = polys.gcd(common, c.den)
            common = polys.div_mod(polys.mul(common, c.den), g)[0]
        scale = RationalFunctionQ(common)
        if not scale:
            raise DegenerateQError(f"row {row.label} cleared to zero")
        cleared.append([c * scale for c in row.coeffs])
    return cleared


def _relation_from_row(row, pivot_col: int) -> Relation:
    """Integer-cleared form of a nonzero RREF row, pivot coefficient positive."""
    entries = [(i, c) for i, c in enumerate(row) if c]
    common_den = polys.ONE
    for _, c in entries:
        g = polys.gcd(common_den, c.den)
        common_den = polys.div_mod(polys.mul(common_den, c.den), g)[0]
    cleared = []
    for i, c in entries:
        multiplier = polys.div_mod(common_den, c.den)[0]
        cleared.append((i, polys.mul(c.num, multiplier)))
    # One integer scaling across all coefficients keeps the relation primitive.
    flat_num = []
    splits = []
    for _, poly in cleared:
        splits.append((len(flat_num), len(poly)))
        flat_num.extend(poly)
    ints, _ = polys.clear_integer_pair(tuple(flat_num), ())
    padded = list(ints) + [0] * (len(flat_num) - len(ints))
    out = []
    for (i, _), (ofs, ln) in zip(cleared, splits):
        out.append((i, polys.normalize(padded[ofs : ofs + ln])))
    pivot_poly = dict(out)[pivot_col]
    if pivot_poly and pivot_poly[-1] < 0:
        out = [(i, tuple(-c for c in poly)) for i, poly in out]
    return Relation(tuple(sorted(out)))


def solve_forced(system: TraceConstraintSystem) -> ForcedReport:
    """Row-reduce over Q(q); degree i is forced iff D_i = 0 in every solution."""
    n = system.unknowns
    matrix = _clear_rows(system)
    col_order = list(range(n - 1, -1, -1))
    rows, pivots = linalg.rref(matrix, col_order=col_order)
    forced = []
    residual = []
    for r, col in pivots:
        support = [i for i, c in enumerate(rows[r]) if c]
        if support == [col]:
            forced.append(col)
        else:
            residual.append(_relation_from_row(rows[r], col))
    return ForcedReport(
        system.d, system.flags, tuple(sorted(forced)), tuple(residual)
    )


def instantiate_at_q(system: TraceConstraintSystem, q0) -> NumericTraceSystem:
    """Specialize the symbolic system at a rational q0 > 1."""
    q0 = Fraction(q0)
    if q0 <= 1:
        raise ValueError(f"q0 must exceed 1, got {q0}")
    rows = tuple(
        tuple(c.evaluate(q0) for c in row.coeffs) for row in system.rows
    )
    return NumericTraceSystem(
        system.d, q0, tuple(r.label for r in system.rows), rows
    )


def _rank(rows: list[list[Fraction]]) -> int:
    """Forward elimination only; independent of linalg.rref."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pr = mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                f = mat[i][col] / pr[col]
                mat[i] = [a - f * b for a, b in zip(mat[i], pr)]
        rank += 1
    return rank


def solve_forced_numeric(nsys: NumericTraceSystem) -> ForcedReport:
    """Forced set at a fixed q0, by rank comparison.

    D_i vanishes on the whole solution space iff appending the row D_i = 0
    does not raise the rank.  This route shares no elimination code with
    solve_forced, so agreement between the two is a meaningful check.
    """
    n = 2 * nsys.d + 1
    base = [list(r) for r in nsys.rows]
    base_rank = _rank(base)
    forced = []
    for i in range(n):
        extra = [Fraction(0)] * n
        extra[i] = Fraction(1)
        if _rank(base + [extra]) == base_rank:
            forced.append(i)
    # Residual relations are presentation only; reuse the shared RREF.
    sym_rows = [[RationalFunctionQ((c,)) for c in row] for row in nsys.rows]
    rows, pivots = linalg.rref(sym_rows, col_order=range(n - 1, -1, -1))
    residual = []
    for r, col in pivots:
        support = [j for j, c in enumerate(rows[r]) if c]
        if support != [col]:
            residual.append(_relation_from_row(rows[r], col))
    flags = SolverFlags(
        "ALBANESE" in nsys.labels,
        any(lbl.startswith("HL(") for lbl in nsys.labels),
        any(lbl.startswith("TRIVIAL(") for lbl in nsys.labels),
    )
    return ForcedReport(nsys.d, flags, tuple(forced), tuple(residual), q0=nsys.q0)


@dataclass(frozen=True)
class RowCheck:
    label: str
    n: int
    value: Fraction
    ok: bool


@dataclass(frozen=True)
class TraceCheckReport:
    q: int
    depth: int
    checks: tuple[RowCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[RowCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def verify_traces_against_system(
    tx: TraceVector, ty: TraceVector, system: TraceConstraintSystem
) -> TraceCheckReport:
    """Substitute D_i = tx_i - ty_i and check every row exactly, per power n.

    The identities for the n-th power Frobenius are the base identities with
    q replaced by q^n (a Tate twist scales n-th power eigenvalues by q^(-in)),
    so row coefficients are evaluated at q0 = q^n.
    """
    if tx.q != ty.q:
        raise DimensionMismatchError(f"trace vectors over q={tx.q} and q={ty.q}")
    if tx.d != ty.d or tx.d != system.d:
        raise DimensionMismatchError(
            f"dimensions differ: tx d={tx.d}, ty d={ty.d}, system d={system.d}"
        )
    if tx.depth != ty.depth:
        raise DimensionMismatchError(
            f"trace depths differ: {tx.depth} vs {ty.depth}"
        )
    checks = []
    for n in range(1, tx.depth + 1):
        qn = Fraction(tx.q) ** n
        diffs = [tx.trace(i, n) - ty.trace(i, n) for i in range(2 * tx.d + 1)]
        for row in system.rows:
            value = sum(
                (c.evaluate(qn) * d for c, d in zip(row.coeffs, diffs)),
                Fraction(0),
            )
            checks.append(RowCheck(row.label, n, value, value == 0))
    return TraceCheckReport(tx.q, tx.depth, tuple(checks))
