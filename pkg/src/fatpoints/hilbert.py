"""Hilbert functions of fat point schemes via vanishing-conditions matrices.

For a scheme Z = m1*P1 + ... + ms*Ps in P^n and a degree t, the conditions
matrix has one column per degree-t monomial in n+1 variables and one row
per pair (point, derivative multi-index alpha with |alpha| <= m_i - 1).
The entry in row (i, alpha) and column beta is the divided-power
derivative value

    C(beta, alpha) * P_i^(beta - alpha),   C(beta, alpha) = prod_j C(beta_j, alpha_j),

which is zero whenever some beta_j < alpha_j.  Divided powers differ from
raw derivatives by the per-row factor alpha!, so in characteristic zero
the nullspace is exactly the degree-t part of the defining ideal, while
the integers involved stay smaller.  Consequently

    H(t)          = rank(conditions matrix),
    dim (I_Z)_t   = C(t+n, n) - H(t),

and the regularity index is the first t where H(t) reaches the
multiplicity of the scheme.

Monomials of a fixed degree are listed in graded-lexicographic order with
X_0 > X_1 > ... > X_n, i.e. exponent vectors in descending lexicographic
order, so matrices, nullspace bases and JSON dumps are byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegreeOutOfRange, InternalBoundViolation, ResourceLimit
from .exactlinalg import Matrix, binomial, _rank_of_int_rows
from .scheme import FatPointScheme, TruncatedScheme, UnitIdeal, multiplicity

__all__ = [
    "COLUMN_CAP",
    "MonomialBasis",
    "ConditionsMatrix",
    "HilbertTable",
    "monomial_basis",
    "conditions_matrix",
    "ideal_dim",
    "hilbert_function",
    "regularity_index",
    "hilbert_table",
]

# Degrees whose monomial count exceeds this cap are refused with
# ResourceLimit instead of attempting an unbounded exact elimination.
# The CLI overrides it from the FATPOINTS_COLUMN_CAP environment variable.
COLUMN_CAP = 20_000


@dataclass(frozen=True)
class MonomialBasis:
    """All exponent vectors of one total degree, in a fixed order."""

    num_vars: int
    degree: int
    exponents: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ConditionsMatrix:
    """Vanishing-conditions matrix plus its row and column labels.

    row_index[k] is the pair (component position, derivative multi-index)
    that produced row k; columns follow ``basis.exponents``.
    """

    matrix: Matrix
    row_index: tuple[tuple[int, tuple[int, ...]], ...]
    basis: MonomialBasis


@dataclass(frozen=True)
class HilbertTable:
    """Values H(0), ..., H(reg) together with reg and the multiplicity."""

    values: tuple[int, ...]
    reg: int
    multiplicity: int


@lru_cache(maxsize=None)
def _exponent_tuples(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    if num_vars == 1:
        return ((degree,),)
    out = []
    for d in range(degree, -1, -1):
        for rest in _exponent_tuples(num_vars - 1, degree - d):
            out.append((d,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _column_index(num_vars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {beta: k for k, beta in enumerate(_exponent_tuples(num_vars, degree))}


def monomial_basis(num_vars: int, degree: int) -> MonomialBasis:
    """Degree-``degree`` monomials in ``num_vars`` variables, graded-lex order."""
    if num_vars < 1 or degree < 0:
        raise ValueError("need at least one variable and a nonnegative degree")
    return MonomialBasis(num_vars, degree, _exponent_tuples(num_vars, degree))


def _derivative_indices(num_vars: int, order_bound: int):
    """Multi-indices alpha with |alpha| < order_bound, grades ascending."""
    for g in range(order_bound):
        yield from _exponent_tuples(num_vars, g)


def _condition_row(coords, pows, alpha, degree, col_index) -> dict:
    """One sparse conditions row: entries C(alpha+delta, alpha) * P^delta.

    ``coords`` supplies zero tests and ``pows[j][e]`` the e-th power of
    coordinate j, so the same code serves exact Fraction rows and
    integer-rescaled rows.  Branches over zero coordinates are pruned,
    which is what keeps rows of embedded schemes sparse.
    """
    remaining = degree - sum(alpha)
    if remaining < 0:
        return {}
    last = len(coords) - 1
    row: dict = {}
    comb = math.comb

    def walk(j, rem, val, beta):
        aj = alpha[j]
        if j == last:
            if rem and coords[j] == 0:
                return
            row[col_index[beta + (aj + rem,)]] = val * comb(aj + rem, aj) * pows[j][rem]
            return
        if coords[j] == 0:
            walk(j + 1, rem, val, beta + (aj,))
            return
        for d in range(rem + 1):
            walk(j + 1, rem - d, val * comb(aj + d, aj) * pows[j][d], beta + (aj + d,))

    walk(0, remaining, 1, ())
    return row


def _int_coords(point) -> tuple[int, ...]:
    den = math.lcm(*(c.denominator for c in point.coords))
    return tuple(int(c * den) for c in point.coords)


def _power_table(coords, degree) -> list[list]:
    table = []
    for c in coords:
        pows = [1]
        for _ in range(degree):
            pows.append(pows[-1] * c)
        table.append(pows)
    return table


def _conditions_int_rows(scheme: FatPointScheme, t: int):
    """Sparse integer rows of the conditions matrix (per-row rescaled).

    Each point is replaced by an integer representative, which rescales
    every row by a positive factor and so changes neither rank nor kernel.
    """
    nvars = scheme.ambient_dim + 1
    index = _column_index(nvars, t)
    rows = []
    for point, mult in scheme.components:
        coords = _int_coords(point)
        pows = _power_table(coords, t)
        for alpha in _derivative_indices(nvars, mult):
            rows.append(_condition_row(coords, pows, alpha, t, index))
    return rows, len(index)


def _cap_check(ambient_dim: int, t: int) -> None:
    if t < 0:
        raise DegreeOutOfRange(f"degree must be nonnegative, got {t}")
    cols = binomial(t + ambient_dim, ambient_dim)
    if cols > COLUMN_CAP:
        raise ResourceLimit(
            f"degree {t} in P^{ambient_dim} needs {cols} monomial columns "
            f"(cap {COLUMN_CAP})"
        )


def conditions_matrix(scheme: FatPointScheme, t: int) -> ConditionsMatrix:
    """Exact conditions matrix of the scheme in degree t.

    Rows are ordered by component, then by the derivative multi-index in
    graded-lex order; entries use the normalized point coordinates.
    """
    _cap_check(scheme.ambient_dim, t)
    nvars = scheme.ambient_dim + 1
    basis = monomial_basis(nvars, t)
    index = _column_index(nvars, t)
    zero = Fraction(0)
    dense_rows = []
    labels = []
    for ci, (point, mult) in enumerate(scheme.components):
        pows = _power_table(point.coords, t)
        for alpha in _derivative_indices(nvars, mult):
            sparse = _condition_row(point.coords, pows, alpha, t, index)
            row = [zero] * len(basis.exponents)
            for c, v in sparse.items():
                row[c] = Fraction(v)
            dense_rows.append(row)
            labels.append((ci, alpha))
    matrix = Matrix.from_rows(dense_rows, cols=len(basis.exponents))
    return ConditionsMatrix(matrix, tuple(labels), basis)


@lru_cache(maxsize=None)
def _rank_at_degree(scheme: FatPointScheme, t: int) -> int:
    rows, ncols = _conditions_int_rows(scheme, t)
    return _rank_of_int_rows(rows, ncols)


def hilbert_function(scheme: TruncatedScheme, t: int) -> int:
    """H(t): independent conditions the scheme imposes on degree-t forms."""
    _cap_check(scheme.ambient_dim, t)
    if isinstance(scheme, UnitIdeal):
        return 0
    return _rank_at_degree(scheme, t)


def ideal_dim(scheme: TruncatedScheme, t: int) -> int:
    """Dimension of the degree-t part of the defining ideal."""
    n = scheme.ambient_dim
    return binomial(t + n, n) - hilbert_function(scheme, t)


def regularity_index(scheme: FatPointScheme) -> int:
    """Least t with H(t) equal to the multiplicity, by ascending scan.

    The scan is capped at sum(m_i) - 1, the classical worst case attained
    by collinear points; exceeding it means the Hilbert computation itself
    is broken, so that raises InternalBoundViolation rather than looping.
    """
    if isinstance(scheme, UnitIdeal):
        raise ValueError("the regularity index needs a nonempty scheme")
    target = multiplicity(scheme)
    bound = scheme.total_multiplicity() - 1
    for t in range(bound + 1):
        if hilbert_function(scheme, t) == target:
            return t
    raise InternalBoundViolation(
        f"H(t) did not reach {target} for any t <= {bound}"
    )


def hilbert_table(scheme: FatPointScheme) -> HilbertTable:
    """Hilbert values up to the regularity index, with built-in self-tests.

    Checks that the values start at 1, increase strictly, end at the
    multiplicity and stay there one degree further; a violation indicates
    a bug and raises InternalBoundViolation.
    """
    reg = regularity_index(scheme)
    values = tuple(hilbert_function(scheme, t) for t in range(reg + 1))
    e = multiplicity(scheme)
    ok = (
        values[0] == 1
        and all(a < b for a, b in zip(values, values[1:]))
        and values[-1] == e
        and hilbert_function(scheme, reg + 1) == e
    )
    if not ok:
        raise InternalBoundViolation(f"malformed Hilbert table {values} for e = {e}")
    return HilbertTable(values, reg, e)
