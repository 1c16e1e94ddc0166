from hypothesis import given, strategies as st

from affschur.lattice import (
    AffineMatrix,
    add_unit,
    canonicalize,
    col_sum,
    diag,
    lower_row,
    lower_slice,
    row_sum,
    sigma,
    sigma_vec,
    split_pm,
    sub_unit,
    transpose,
    unit_matrix,
    upper_column,
    upper_slice,
)


def M(n, *entries):
    return AffineMatrix(n, entries)


def test_canonicalize_examples():
    assert canonicalize(3, 5, 2) == (1, 3)
    assert canonicalize(0, 0, 2) == (2, 2)
    assert canonicalize(1, 7, 3) == (1, 7)


def test_unit_matrix_periodicity():
    assert unit_matrix(1, 2, 2).key == ((1, 2, 1),)
    assert unit_matrix(3, 4, 2) == unit_matrix(1, 2, 2)
    assert unit_matrix(2, 2, 2) == diag((0, 1))


def test_row_and_column_sums():
    A = M(2, (1, 2, 1), (2, 1, 1))
    assert row_sum(A) == (1, 1) and col_sum(A) == (1, 1)
    loop = M(2, (1, 5, 1))
    assert row_sum(loop) == (1, 0) and col_sum(loop) == (1, 0)
    assert row_sum(diag((2, 3))) == col_sum(diag((2, 3))) == (2, 3)


def test_sigma():
    assert sigma(M(2)) == 0
    assert sigma(M(2, (1, 2, 1), (1, 1, 1))) == 2
    assert sigma(M(2, (1, 3, 2))) == 2


def _sigma_vec_by_definition(A, window=20):
    # sigma_i = a_ii + sum_{j<i} (a_ij + a_ji), summed over an explicit window
    return tuple(
        A[i, i] + sum(A[i, j] + A[j, i] for j in range(i - window, i))
        for i in range(1, A.n + 1)
    )


def test_sigma_vec_examples():
    assert sigma_vec(M(2, (1, 2, 1))) == (0, 1)
    assert sigma_vec(M(2, (1, 3, 1))) == (1, 0)
    assert sigma_vec(diag((3, 1))) == (3, 1)


def test_add_sub_unit():
    assert sub_unit(diag((1, 1)), 2, 2) == diag((1, 0))
    assert sub_unit(diag((1, 0)), 2, 2) is None
    assert add_unit(unit_matrix(1, 2, 2), 3, 4) == M(2, (1, 2, 2))


def test_split_pm_examples():
    up, d, lo = split_pm(M(2, (1, 2, 1), (2, 1, 1), (1, 1, 1), (2, 2, 1)))
    assert (up, d, lo) == (unit_matrix(1, 2, 2), (1, 1), unit_matrix(2, 1, 2))
    up, d, lo = split_pm(unit_matrix(1, 3, 2))
    assert up == unit_matrix(1, 3, 2) and d == (0, 0) and lo.is_zero()
    up, d, lo = split_pm(unit_matrix(1, -1, 2))
    assert up.is_zero() and lo == unit_matrix(1, -1, 2)


def test_column_slices():
    A = M(2, (1, 2, 1), (1, 4, 1))
    assert upper_slice(A, 1, 2) == A
    assert upper_column(M(2), 1).is_zero()
    assert upper_column(M(2, (1, 2, 1), (2, 3, 1)), 1) == unit_matrix(2, 3, 2)


def test_json_round_trip():
    A = M(3, (3, 1, 2), (1, 5, 1))
    obj = A.to_json()
    assert obj == {"n": 3, "entries": [[1, 5, 1], [3, 1, 2]]}
    assert AffineMatrix.from_json(obj) == A


# -- properties ---------------------------------------------------------------

periods = st.integers(2, 4)


@st.composite
def matrices(draw, n=None):
    n = n or draw(periods)
    entries = draw(st.lists(st.tuples(st.integers(-6, 6), st.integers(-9, 9), st.integers(1, 3)), max_size=6))
    return AffineMatrix(n, entries)


@given(st.integers(-30, 30), st.integers(-30, 30), periods, st.integers(-5, 5))
def test_canonicalize_idempotent_and_class_constant(i, j, n, k):
    c = canonicalize(i, j, n)
    assert 1 <= c[0] <= n
    assert canonicalize(*c, n) == c
    assert canonicalize(i + k * n, j + k * n, n) == c


@given(matrices())
def test_weights_agree(A):
    s = sigma(A)
    assert sum(row_sum(A)) == s == sum(col_sum(A)) == sum(sigma_vec(A))


@given(matrices())
def test_sigma_vec_matches_definition(A):
    assert sigma_vec(A) == _sigma_vec_by_definition(A)


@given(matrices())
def test_split_resums(A):
    up, d, lo = split_pm(A)
    assert up + diag(d) + lo == A
    assert all(i < j for i, j, _ in up) and all(i > j for i, j, _ in lo)


@given(matrices())
def test_slices_resum(A):
    n = A.n
    up, _, lo = split_pm(A)
    cols = [upper_column(A, j) for j in range(1, n + 1)]
    assert sum(cols[1:], cols[0]) == up
    for j in range(1, n + 1):
        parts = [upper_slice(A, i, j) for i in range(1, n + 1)]
        assert sum(parts[1:], parts[0]) == cols[j - 1]
    rows = [lower_row(A, j) for j in range(1, n + 1)]
    assert sum(rows[1:], rows[0]) == lo
    for j in range(1, n + 1):
        parts = [lower_slice(A, j, i) for i in range(1, n + 1)]
        assert sum(parts[1:], parts[0]) == rows[j - 1]


@given(matrices())
def test_transpose_involution(A):
    assert transpose(transpose(A)) == A
    assert row_sum(transpose(A)) == col_sum(A)
