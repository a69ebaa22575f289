import random

from hypothesis import given, settings, strategies as st

from slcob.intmat import (HNFSolver, IntMatrix, diagonal_of,
                          hermite_column_form, kernel_basis, rank,
                          same_column_span, smith_normal_form, solve_int)


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    if rows == 0:
        return IntMatrix.zero(0, cols)
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def is_unimodular(m):
    return all(x == 1 for x in diagonal_of(smith_normal_form(m)[1]))


def test_snf_zero_matrix():
    m = IntMatrix.zero(3, 2)
    _, d, _ = smith_normal_form(m)
    assert all(x == 0 for row in d.entries for x in row)


def test_snf_hand_example():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    u, d, v = smith_normal_form(m)
    assert diagonal_of(d) == [1, 6]
    assert (u * m * v).entries == d.entries


def test_snf_identity():
    m = IntMatrix.identity(4)
    _, d, _ = smith_normal_form(m)
    assert diagonal_of(d) == [1, 1, 1, 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 10 ** 6))
def test_snf_properties(rows, cols, seed):
    rng = random.Random(seed)
    m = random_matrix(rng, rows, cols)
    u, d, v = smith_normal_form(m)
    assert (u * m * v).entries == d.entries
    diag = diagonal_of(d)
    nz = [x for x in diag if x]
    assert all(x >= 0 for x in diag)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert is_unimodular(u) and is_unimodular(v)


def test_kernel_examples():
    assert kernel_basis(IntMatrix.identity(3)).cols == 0
    k = kernel_basis(IntMatrix.zero(1, 3))
    assert k.cols == 3
    k = kernel_basis(IntMatrix.from_rows([[1, 1]]))
    assert k.cols == 1
    col = [k.entries[0][0], k.entries[1][0]]
    assert sorted(col) == [-1, 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10 ** 6))
def test_kernel_properties(rows, cols, seed):
    rng = random.Random(seed)
    m = random_matrix(rng, rows, cols)
    k = kernel_basis(m)
    for j in range(k.cols):
        assert all(x == 0 for x in m.apply(list(k.column(j))))
    assert k.cols == cols - rank(m)


def test_solve_int():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert solve_int(m, [4, 9]) == [2, 3]
    assert solve_int(m, [1, 0]) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10 ** 6))
def test_hnf_solver_agrees_with_snf_solver(rows, cols, seed):
    rng = random.Random(seed)
    m = random_matrix(rng, rows, cols)
    solver = HNFSolver(m)
    for _ in range(4):
        x = [rng.randint(-5, 5) for _ in range(cols)]
        target = m.apply(x)
        sol = solver.solve(target)
        assert sol is not None
        assert m.apply(sol) == target
    # an unsolvable target should be rejected by both paths
    target = [rng.randint(-20, 20) for _ in range(rows)]
    assert (solver.solve(target) is None) == (solve_int(m, target) is None)


def test_hermite_form_canonical():
    a = IntMatrix.from_rows([[2, 4], [0, 2]])
    b = IntMatrix.from_rows([[4, 2], [2, 0]])  # same column span
    assert same_column_span(a, b)
    c = IntMatrix.from_rows([[2, 4], [0, 4]])
    assert not same_column_span(a, c)
    h = hermite_column_form(IntMatrix.from_rows([[6, 4]]))
    assert h.entries == ((2,),)
