from fractions import Fraction

from kgraphck.simplex import solve_lp

F = Fraction


def test_simple_max():
    # max x + y s.t. x + y + s = 1  ->  1
    res = solve_lp([1, 1, 0], [[1, 1, 1]], [1])
    assert res.status == "optimal"
    assert res.objective == 1


def test_degenerate_equalities():
    # x = y, x + y = 1  ->  x = y = 1/2
    res = solve_lp([1, 0], [[1, -1], [1, 1]], [0, 1])
    assert res.status == "optimal"
    assert res.objective == F(1, 2)
    assert res.solution[0] == F(1, 2) and res.solution[1] == F(1, 2)


def test_exactness_no_rounding():
    # badly scaled rationals stay exact
    res = solve_lp([F(1, 3)], [[F(7, 11)]], [F(5, 13)])
    assert res.status == "optimal"
    assert res.objective == F(1, 3) * F(5, 13) * F(11, 7)


def test_infeasible_with_farkas_replay():
    # x = 2x and x = 1 cannot hold with x >= 0
    A = [[1, -2], [1, 0]]  # columns: x, x2 with row1: x - 2 x2 = 0 (x=x2 forced elsewhere)
    # simpler: -x = 0 and x = 1
    A = [[-1], [1]]
    b = [0, 1]
    res = solve_lp([0], A, b)
    assert res.status == "infeasible"
    y = res.farkas
    dot_b = sum(yi * Fraction(bi) for yi, bi in zip(y, b))
    assert dot_b > 0
    for j in range(1):
        col = sum(y[i] * Fraction(A[i][j]) for i in range(2))
        assert col <= 0


def test_redundant_rows():
    res = solve_lp([1, 0], [[1, 1], [1, 1], [2, 2]], [1, 1, 2])
    assert res.status == "optimal"
    assert res.objective == 1
