import random
from fractions import Fraction

import pytest

from hankelforge.algebra import LaurentPoly, binom, factorial, z
from hankelforge.hankel import (
    ExactMatrix,
    apply_B,
    b_as_tensor,
    build_Ds,
    build_Ls,
    build_Ms,
    build_Ns,
    coeffs_a,
    factored_solve,
    lowest_rhs,
    matrix_window,
    pascal_lower,
    pascal_lower_inv,
    pascal_upper,
    pascal_upper_inv,
    solve_for_a,
)
from hankelforge.sections import HALF, HalfWeight, Section, Sl2, act_sl2
from hankelforge.tensor_rep import DomainError, TensorElt, apply_tensor, lowest_weight, oj_tensor, tensor_act


def half(p):
    return Section(HALF, p)


def gauss_solve(rows, rhs):
    """Plain Gauss-Jordan elimination over Fractions, independent of the Pascal route."""
    n = len(rows)
    A = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [v / pv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


def test_coeffs_a_examples():
    assert coeffs_a(0) == [1]
    assert coeffs_a(1) == [1, 2]
    assert coeffs_a(2) == [Fraction(1, 2), 3, 3]


def test_build_Ls_examples():
    assert build_Ls(1, z(3)).coeffs == (z(2, 3), z(3, 2))
    assert build_Ls(0, z(1)).coeffs == (z(1),)
    assert build_Ls(2, z(5)).coeffs == (z(3, 10), z(4, 15), z(5, 3))
    with pytest.raises(DomainError, match="holomorphic"):
        build_Ls(1, z(-1))


def test_apply_B_examples():
    assert apply_B(1, z(3), half(z(-2))) == half(z(0, -1))
    assert apply_B(1, z(4), half(z(-1))) == half(z(2, 2))
    for n in (1, 2, 3):
        assert apply_B(1, z(2), half(z(-n))).is_zero()
    with pytest.raises(DomainError):
        apply_B(1, z(3), half(z(1)))


# The s=1 matrix as drawn: rows listed top to bottom, x_j the coefficient of z^{j+1}.
def paper_B2(x2, x3, x4, x5, x6=0):
    return [
        [5 * x6, 0, 0, 0, 0],
        [4 * x5, 3 * x6, 0, 0, 0],
        [3 * x4, 2 * x5, x6, 0, 0],
        [2 * x3, x4, 0, -x6, 0],
        [x2, 0, -x4, -2 * x5, -3 * x6],
        [0, -x2, -2 * x3, -3 * x4, -4 * x5],
    ]


@pytest.mark.parametrize("xs", [(1, 1, 1, 1), (1, 1, 1, 0), (2, -3, 5, Fraction(1, 7))])
def test_window_reproduces_drawn_B2(xs):
    x = LaurentPoly({j + 1: c for j, c in zip(range(2, 6), xs)})
    w = matrix_window(1, x, 6, 5)
    assert [list(r) for r in w.paper_orientation()] == paper_B2(*xs)


def test_window_examples():
    w = matrix_window(0, LaurentPoly({1: 1, 2: 2, 3: 3}), 3, 3)
    assert w.entries == ((1, 2, 3), (2, 3, 0), (3, 0, 0))
    w = matrix_window(1, z(3), 2, 3)
    assert w.entries == ((0, -1, 0), (1, 0, 0))
    assert all(v == 0 for r in matrix_window(1, LaurentPoly(), 4, 4).entries for v in r)


def test_window_entries_match_apply_B():
    x = LaurentPoly({3: 2, 5: -1, 6: Fraction(1, 3), 8: 4})
    for s in range(0, 4):
        w = matrix_window(s, x, 7, 6)
        for n in range(6):
            col = apply_B(s, x, half(z(-(n + 1))))
            assert [w.entries[m][n] for m in range(7)] == [col.coeff.coeff(m) for m in range(7)]


def test_s0_window_is_classical_hankel():
    rng = random.Random(3)
    for _ in range(5):
        x = LaurentPoly({k: rng.randint(-9, 9) for k in range(1, 12)})
        w = matrix_window(0, x, 6, 6)
        for m in range(6):
            for n in range(6):
                assert w.entries[m][n] == x.coeff(m + n + 1)


def test_small_matrices():
    assert build_Ms(1) == ExactMatrix([[3, -1], [3, -2]])
    assert build_Ns(1) == ExactMatrix([[1, 1], [1, 2]])
    assert build_Ds(1) == ExactMatrix.diag([3, -1])
    assert build_Ms(0) == ExactMatrix([[1]])
    assert pascal_lower(1) == ExactMatrix([[1, 0], [1, 1]])
    assert pascal_upper(1) == ExactMatrix([[1, 1], [0, 1]])
    assert pascal_lower(1) @ pascal_upper(1) == build_Ns(1)
    assert pascal_upper_inv(1) == ExactMatrix([[1, -1], [0, 1]])
    assert pascal_lower(2) @ pascal_lower_inv(2) == ExactMatrix.identity(3)


@pytest.mark.parametrize("s", [0, 1, 2, 3, 7, 15])
def test_factorisation(s):
    M = ExactMatrix.from_rule(
        s + 1,
        lambda i, j: (-1) ** j * Fraction(factorial(i + j), factorial(i)) * Fraction(factorial(2 * s + 1), factorial(s + j + 1)),
    )
    assert build_Ms(s) == M
    assert build_Ns(s) @ build_Ds(s) == M
    assert pascal_lower(s) @ pascal_upper(s) == build_Ns(s)
    I = ExactMatrix.identity(s + 1)
    assert pascal_lower_inv(s) @ pascal_lower(s) == I
    assert pascal_upper(s) @ pascal_upper_inv(s) == I


@pytest.mark.parametrize("s", range(0, 13))
def test_solve_matches_elimination_and_closed_form(s):
    a = solve_for_a(s)
    assert a == coeffs_a(s)
    assert a == gauss_solve(build_Ms(s).rows, lowest_rhs(s))
    assert build_Ms(s) @ a == lowest_rhs(s)


def test_solve_examples_and_intermediates():
    assert solve_for_a(1) == [1, 2]
    assert build_Ms(1) @ [1, 2] == [1, -1]
    assert solve_for_a(2) == [Fraction(1, 2), 3, 3]
    assert solve_for_a(0) == [1]
    sol = factored_solve(3)
    assert list(sol.after_lower) == [1, -4, 10, -20]
    assert list(sol.after_upper) == [(-1) ** j * binom(3 + j, j) * binom(7, 4 + j) for j in range(4)]


def test_b_as_tensor_examples():
    assert b_as_tensor(1, z(3)) == lowest_weight(1)
    assert b_as_tensor(1, z(3)) == TensorElt({(1, 0): 1, (0, 1): -1})
    for s in range(1, 6):
        assert b_as_tensor(s, z(s + 1)).is_zero()


@pytest.mark.parametrize("s", range(0, 13))
def test_lowest_weight_condition(s):
    assert b_as_tensor(s, z(2 * s + 1)) == lowest_weight(s)


def test_b_as_tensor_is_linear():
    x1, x2 = LaurentPoly({5: 2, 7: -1}), LaurentPoly({6: Fraction(1, 2), 9: 3})
    assert b_as_tensor(2, x1 + x2) == b_as_tensor(2, x1) + b_as_tensor(2, x2)


@pytest.mark.parametrize("s", range(0, 5))
def test_operator_and_tensor_agree(s):
    for k in range(0, 2 * s + 9):
        t = b_as_tensor(s, z(k))
        for n in range(1, k + 2):
            assert apply_B(s, z(k), half(z(-n))) == apply_tensor(t, half(z(-n)))


@pytest.mark.parametrize("s", range(0, 5))
def test_kernel(s):
    for k in range(0, 2 * s + 1):
        for n in range(1, 2 * s + 5):
            assert apply_B(s, z(k), half(z(-n))).is_zero()


@pytest.mark.parametrize("s", range(0, 5))
@pytest.mark.parametrize("X", list(Sl2))
def test_equivariance(s, X):
    for k in range(2 * s + 1, 2 * s + 9):
        image = act_sl2(X, Section(HalfWeight(-2 * s), z(k)))
        assert b_as_tensor(s, image.coeff) == tensor_act(X, b_as_tensor(s, z(k)))


def test_exact_matrix_rejects_non_square():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]])
