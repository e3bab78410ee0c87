"""Degree vectors.

Degrees live in N^k (tuples of nonnegative ints); graded components of the
algebra are indexed by signed differences in Z^k.  The componentwise order,
meet and join make N^k a lattice with m∧n ≤ m,n ≤ m∨n.
"""

from itertools import product

Degree = tuple  # tuple[int, ...]; nonnegative for path degrees, signed for grades


def zero(k):
    return (0,) * k


def basis(k, i):
    """e_i with 1-based colour index i."""
    return tuple(1 if j == i - 1 else 0 for j in range(k))


def add(m, n):
    return tuple(a + b for a, b in zip(m, n))


def sub(m, n):
    return tuple(a - b for a, b in zip(m, n))


def neg(m):
    return tuple(-a for a in m)


def meet(m, n):
    return tuple(min(a, b) for a, b in zip(m, n))


def join(m, n):
    return tuple(max(a, b) for a, b in zip(m, n))


def leq(m, n):
    return all(a <= b for a, b in zip(m, n))


def is_nonneg(m):
    return all(a >= 0 for a in m)


def total(m):
    return sum(m)


def pos_part(m):
    return tuple(max(a, 0) for a in m)


def neg_part(m):
    """n∧0, so that m = pos_part(m) + neg_part(m)."""
    return tuple(min(a, 0) for a in m)


def box(upper):
    """All degrees 0 ≤ d ≤ upper, in lexicographic order."""
    return [d for d in product(*(range(u + 1) for u in upper))]
