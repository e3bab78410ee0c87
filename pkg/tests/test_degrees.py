from hypothesis import given
from hypothesis import strategies as st

from kgraphck import degrees as dg

vecs = st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))


@given(vecs, vecs)
def test_meet_join_are_lattice_bounds(m, n):
    lo, hi = dg.meet(m, n), dg.join(m, n)
    assert dg.leq(lo, m) and dg.leq(lo, n)
    assert dg.leq(m, hi) and dg.leq(n, hi)
    assert dg.add(lo, hi) == dg.add(m, n)  # meet + join = sum, componentwise


@given(vecs)
def test_pos_neg_parts_split(m):
    signed = tuple(x - 3 for x in m)
    assert dg.add(dg.pos_part(signed), dg.neg_part(signed)) == signed


def test_box_enumeration():
    assert dg.box((1, 2)) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    assert dg.box(()) == [()]


def test_basis_and_total():
    assert dg.basis(3, 2) == (0, 1, 0)
    assert dg.total((2, 3)) == 5
