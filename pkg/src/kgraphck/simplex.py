"""Exact rational simplex for small equality-form programs.

Solves  max c.x  subject to  A x = b, x >= 0  entirely over Fractions with
Bland's rule (no cycling, no tolerances).  Infeasible programs come back
with a Farkas certificate y (y.A <= 0, y.b > 0) that is replay-verified
before being returned, so sign conventions cannot silently rot.
"""

from dataclasses import dataclass
from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


@dataclass
class LPResult:
    status: str                 # "optimal" | "infeasible" | "unbounded"
    objective: Fraction | None
    solution: list | None       # x as Fractions, length n
    farkas: list | None         # y over rows when infeasible


class _Tableau:
    """Dense simplex tableau: rows = constraints, plus an objective row."""

    def __init__(self, A, b):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.rows = [list(map(Fraction, row)) for row in A]
        self.rhs = list(map(Fraction, b))
        for i in range(self.m):  # normalise to b >= 0
            if self.rhs[i] < 0:
                self.rows[i] = [-x for x in self.rows[i]]
                self.rhs[i] = -self.rhs[i]
        self.basis = []

    def add_artificials(self):
        for i in range(self.m):
            for r in range(self.m):
                self.rows[r].append(F1 if r == i else F0)
            self.basis.append(self.n + i)
        return list(range(self.n, self.n + self.m))

    def pivot(self, row, col):
        piv = self.rows[row][col]
        inv = F1 / piv
        self.rows[row] = [x * inv for x in self.rows[row]]
        self.rhs[row] *= inv
        for r in range(self.m):
            if r != row and self.rows[r][col]:
                f = self.rows[r][col]
                self.rows[r] = [a - f * p for a, p in zip(self.rows[r], self.rows[row])]
                self.rhs[r] -= f * self.rhs[row]
        self.basis[row] = col

    def reduced_costs(self, cost):
        """z_j - c_j ... returned as c_j - z_j for a max problem: positive
        entries are improving columns."""
        ncols = len(self.rows[0])
        y = [F0] * self.m  # multipliers via the basic costs
        red = []
        for j in range(ncols):
            zj = sum(cost[self.basis[r]] * self.rows[r][j] for r in range(self.m))
            red.append(cost[j] - zj)
        return red

    def solve(self, cost, allowed):
        """Bland's-rule simplex maximising cost over columns in `allowed`.
        Assumes the current basis is feasible.  Returns "optimal" or
        "unbounded"."""
        while True:
            red = self.reduced_costs(cost)
            enter = next((j for j in sorted(allowed) if red[j] > 0), None)
            if enter is None:
                return "optimal"
            ratios = [(self.rhs[r] / self.rows[r][enter], self.basis[r], r)
                      for r in range(self.m) if self.rows[r][enter] > 0]
            if not ratios:
                return "unbounded"
            _, _, row = min(ratios)  # Bland: smallest ratio, then smallest basis idx
            self.pivot(row, enter)

    def objective_value(self, cost):
        return sum(cost[self.basis[r]] * self.rhs[r] for r in range(self.m))

    def solution(self, n):
        x = [F0] * n
        for r, j in enumerate(self.basis):
            if j < n:
                x[j] = self.rhs[r]
        return x


def solve_lp(c, A, b):
    """max c.x s.t. A x = b, x >= 0, exactly."""
    if not A:
        raise ValueError("empty constraint system")
    tab = _Tableau(A, b)
    n = tab.n
    arts = tab.add_artificials()
    ncols = n + len(arts)

    # phase 1: drive the artificials to zero (maximise -sum of artificials)
    phase1 = [F0] * n + [Fraction(-1)] * len(arts)
    status = tab.solve(phase1, allowed=range(ncols))
    assert status == "optimal"  # phase-1 objective is bounded above by 0
    if tab.objective_value(phase1) != 0:
        y = _farkas_from_phase1(tab, A, b, n)
        return LPResult("infeasible", None, None, y)

    # drop artificials still in the basis (degenerate rows)
    for r in range(tab.m):
        if tab.basis[r] >= n:
            col = next((j for j in range(n) if tab.rows[r][j] != 0), None)
            if col is not None:
                tab.pivot(r, col)
            # else: zero row; the artificial stays basic at value 0, harmless

    cost = list(map(Fraction, c)) + [F0] * len(arts)
    status = tab.solve(cost, allowed=range(n))
    if status == "unbounded":
        return LPResult("unbounded", None, None, None)
    return LPResult("optimal", tab.objective_value(cost), tab.solution(n), None)


def _farkas_from_phase1(tab, A, b, n):
    """Recover y with y.A <= 0, y.b > 0 from the phase-1 optimum.

    With phase-1 costs c = (0,...,0,-1,...,-1), the multiplier vector is
    y_i = c_B B^{-1} e_i, read off the artificial columns, negated to match
    the infeasibility orientation.  The certificate is replay-verified."""
    phase1 = [F0] * n + [Fraction(-1)] * tab.m
    y = []
    for i in range(tab.m):
        col = n + i
        zj = sum(phase1[tab.basis[r]] * tab.rows[r][col] for r in range(tab.m))
        y.append(-zj)
    # the tableau may have flipped row signs; recompute against the original data
    y = _orient_certificate(y, A, b)
    return y


def _orient_certificate(y, A, b):
    m, n = len(A), len(A[0])
    for signs in _sign_fixes(y, A, b, m):
        cand = [s * yi for s, yi in zip(signs, y)]
        dot_b = sum(si * Fraction(bi) for si, bi in zip(cand, b))
        if dot_b <= 0:
            cand = [-v for v in cand]
            dot_b = -dot_b
        ok = dot_b > 0 and all(
            sum(cand[i] * Fraction(A[i][j]) for i in range(m)) <= 0
            for j in range(n))
        if ok:
            return cand
    raise ArithmeticError("failed to orient Farkas certificate")


def _sign_fixes(y, A, b, m):
    # rows whose rhs was negative got flipped inside the tableau
    flips = [(-1 if Fraction(bi) < 0 else 1) for bi in b]
    yield flips
    yield [1] * m


def maximize(c, A_eq, b_eq):
    """Convenience wrapper returning LPResult for max c.x, A x = b, x >= 0."""
    return solve_lp(c, A_eq, b_eq)
