import random
from fractions import Fraction

import pytest

import fatpoints.hilbert as hilbert_mod
from fatpoints.errors import DegreeOutOfRange, ResourceLimit
from fatpoints.hilbert import (
    conditions_matrix,
    hilbert_function,
    hilbert_table,
    ideal_dim,
    monomial_basis,
    regularity_index,
)
from fatpoints.exactlinalg import Matrix, binomial, rank
from fatpoints.scheme import UnitIdeal, gen_random, make_scheme, multiplicity

from oracles import naive_hilbert, single_point_hilbert


def _single(n, m, coords=None):
    if coords is None:
        coords = tuple([1] + [0] * n)
    return make_scheme(n, [(coords, m)])


def test_monomial_basis_size_and_order():
    basis = monomial_basis(2, 2)
    assert basis.exponents == ((2, 0), (1, 1), (0, 2))
    basis = monomial_basis(3, 2)
    assert len(basis.exponents) == binomial(2 + 2, 2)
    assert basis.exponents[0] == (2, 0, 0)
    assert basis.exponents[-1] == (0, 0, 2)
    # descending lexicographic within the fixed degree
    assert list(basis.exponents) == sorted(basis.exponents, reverse=True)


def test_conditions_matrix_simple_point_line():
    z = _single(1, 1)
    cm = conditions_matrix(z, 1)
    assert cm.matrix.to_rows() == [[1, 0]]
    assert cm.row_index == ((0, (0, 0)),)


def test_conditions_matrix_double_point_line():
    z = _single(1, 2)
    cm = conditions_matrix(z, 1)
    assert cm.matrix.to_rows() == [[1, 0], [1, 0], [0, 1]]
    assert [alpha for _, alpha in cm.row_index] == [(0, 0), (1, 0), (0, 1)]
    assert rank(cm.matrix) == 2


def test_conditions_matrix_point_all_ones():
    z = make_scheme(2, [((1, 1, 1), 1)])
    cm = conditions_matrix(z, 1)
    assert cm.matrix.to_rows() == [[1, 1, 1]]


def test_conditions_matrix_shape():
    z = make_scheme(2, [((1, 2, 3), 3), ((0, 1, 1), 2)])
    cm = conditions_matrix(z, 4)
    assert cm.matrix.cols == binomial(4 + 2, 2)
    # one row per derivative multi-index of order below the multiplicity
    assert cm.matrix.rows == len(cm.row_index) == binomial(2 + 3, 3) + binomial(1 + 3, 3)


def test_conditions_matrix_nullspace_is_ideal():
    # nullspace dimension must equal the ideal dimension at every degree
    z = make_scheme(2, [((1, 0, 0), 2), ((1, 1, 1), 1)])
    from fatpoints.exactlinalg import nullspace_basis

    for t in range(4):
        cm = conditions_matrix(z, t)
        assert len(nullspace_basis(cm.matrix)) == ideal_dim(z, t)


def test_ideal_dim_examples():
    assert ideal_dim(_single(1, 2), 1) == 0
    assert ideal_dim(_single(1, 1), 1) == 1
    assert ideal_dim(UnitIdeal(2), 2) == 6


def test_hilbert_function_examples():
    z = _single(2, 2)
    assert hilbert_function(z, 0) == 1
    assert hilbert_function(z, 1) == 3
    two = make_scheme(1, [((1, 0), 1), ((0, 1), 1)])
    assert hilbert_function(two, 1) == 2
    assert hilbert_function(UnitIdeal(3), 5) == 0


def test_hilbert_first_value_is_one():
    for z in (
        _single(3, 2),
        make_scheme(2, [((1, 4, -2), 3), ((1, 0, 0), 1)]),
    ):
        assert hilbert_function(z, 0) == 1


def test_hilbert_rejects_negative_degree():
    with pytest.raises(DegreeOutOfRange):
        hilbert_function(_single(1, 1), -1)


def test_hilbert_matches_naive_oracle():
    schemes = [
        make_scheme(1, [((1, Fraction(1, 2)), 3), ((0, 1), 1)]),
        make_scheme(2, [((1, 2, 3), 2), ((0, 1, 1), 2), ((1, 0, 0), 1)]),
        make_scheme(3, [((1, 1, 0, 2), 2), ((0, 0, 1, Fraction(3, 4)), 1)]),
    ]
    for z in schemes:
        for t in range(5):
            assert hilbert_function(z, t) == naive_hilbert(z, t)


def test_single_fat_point_closed_form():
    rng = random.Random(12)
    for n in (1, 2, 3):
        for m in (1, 2, 3, 4):
            coords = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n + 1))
            if all(c == 0 for c in coords):
                coords = tuple([1] + [0] * n)
            z = _single(n, m, coords)
            for t in range(m + 2):
                assert hilbert_function(z, t) == single_point_hilbert(n, m, t)


def test_hilbert_invariant_under_coordinate_change():
    rng = random.Random(99)

    def random_invertible(k):
        while True:
            mat = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(k)]
            if rank(Matrix.from_rows(mat)) == k:
                return mat

    for n in (1, 2):
        z = gen_random(n, 3, [2, 1, 1], config="generic", seed=17)
        mat = random_invertible(n + 1)
        moved = make_scheme(
            n,
            [
                (
                    tuple(
                        sum(mat[i][j] * p.coords[j] for j in range(n + 1))
                        for i in range(n + 1)
                    ),
                    m,
                )
                for p, m in z.components
            ],
        )
        for t in range(regularity_index(z) + 2):
            assert hilbert_function(z, t) == hilbert_function(moved, t)
        assert regularity_index(z) == regularity_index(moved)


def test_regularity_single_fat_point():
    for n in (1, 2, 3):
        for m in (1, 2, 3, 4):
            assert regularity_index(_single(n, m)) == m - 1


def test_regularity_two_simple_points():
    for n in (1, 2, 3):
        coords_a = tuple([1] + [0] * n)
        coords_b = tuple([0] * n + [1])
        z = make_scheme(n, [(coords_a, 1), (coords_b, 1)])
        assert regularity_index(z) == 1


def test_regularity_three_collinear_simple_points():
    z = make_scheme(2, [((1, 0, 0), 1), ((0, 1, 0), 1), ((1, 1, 0), 1)])
    assert hilbert_function(z, 1) == 2
    assert hilbert_function(z, 2) == 3
    assert regularity_index(z) == 2


def test_regularity_lower_bound_two_largest_multiplicities():
    rng = random.Random(31)
    for seed in range(10):
        mults = [rng.randint(1, 3) for _ in range(rng.randint(2, 4))]
        z = gen_random(2, len(mults), mults, config="generic", seed=seed)
        top = sorted(mults, reverse=True)
        assert regularity_index(z) >= top[0] + top[1] - 1


def test_hilbert_table_examples():
    assert hilbert_table(_single(1, 2)).values == (1, 2)
    assert hilbert_table(_single(1, 2)).reg == 1
    table = hilbert_table(_single(1, 3))
    assert table.values == (1, 2, 3)
    assert table.reg == 2
    assert hilbert_table(_single(3, 1)).values == (1,)


def test_hilbert_table_shape_on_random_schemes():
    for seed in range(6):
        z = gen_random(2, 3, [2, 2, 1], config="generic", seed=seed)
        table = hilbert_table(z)
        e = multiplicity(z)
        assert table.values[0] == 1
        assert all(a < b for a, b in zip(table.values, table.values[1:]))
        assert table.values[-1] == table.multiplicity == e
        for t in (table.reg, table.reg + 1, table.reg + 2):
            assert hilbert_function(z, t) == e
        assert all(hilbert_function(z, t) <= binomial(t + 2, 2) for t in range(table.reg + 1))
        assert all(v <= e for v in table.values)


def test_rank_row_incremental_consistency():
    # rank of the first k rows is nondecreasing and ends at the full rank
    z = make_scheme(2, [((1, 2, -1), 2), ((0, 1, 3), 2)])
    cm = conditions_matrix(z, 3)
    rows = cm.matrix.to_rows()
    previous = 0
    for k in range(1, len(rows) + 1):
        partial = rank(Matrix.from_rows(rows[:k]))
        assert partial in (previous, previous + 1)
        previous = partial
    assert previous == rank(cm.matrix) == hilbert_function(z, 3)


def test_column_cap_enforced(monkeypatch):
    z = _single(2, 1)
    monkeypatch.setattr(hilbert_mod, "COLUMN_CAP", 5)
    with pytest.raises(ResourceLimit):
        hilbert_function(z, 3)  # needs C(5,2) = 10 columns
    with pytest.raises(ResourceLimit):
        conditions_matrix(z, 3)
    assert hilbert_function(z, 1) == 1  # small degrees still fine


def test_unit_ideal_regularity_rejected():
    with pytest.raises(ValueError):
        regularity_index(UnitIdeal(2))


def test_safety_cap_flags_broken_hilbert_values(monkeypatch):
    from fatpoints.errors import InternalBoundViolation

    # a Hilbert function that never reaches the multiplicity must trip the
    # scan bound instead of looping
    monkeypatch.setattr(hilbert_mod, "_rank_at_degree", lambda scheme, t: 0)
    with pytest.raises(InternalBoundViolation):
        regularity_index(_single(2, 2))
