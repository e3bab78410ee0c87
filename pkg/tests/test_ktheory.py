import pytest

import kgraphck as kg
from kgraphck.algebra import AlgebraElement as A
from kgraphck.errors import SufficientConditionUnmet
from kgraphck.ktheory import (
    core_multiplicity,
    end_group,
    k_theory,
    lambda_n_core_multiplicity,
    lattice_rank,
    torus_rank,
)
from kgraphck.skeleton import Edge, FactorizationRegime, Skeleton
from kgraphck.traces import find_ends


def solid_cycle_2graph(n):
    """A rank-2 graph whose skeleton is a single solid cycle (no dashed
    edges at all); its ends are infinite in one direction only."""
    verts = tuple(f"c{i}" for i in range(1, n + 1))
    edges = tuple(Edge(f"s{i}", 1, f"c{i}", f"c{n if i == 1 else i - 1}")
                  for i in range(1, n + 1))
    return kg.validate(Skeleton(2, verts, edges), FactorizationRegime(()))


def test_end_group_lambda(lambda3):
    d = find_ends(lambda3)[0]
    eg = end_group(lambda3, d)
    assert eg.rank == 2
    assert all((a + b) % 3 == 0 for a, b in eg.generators)
    # determinant of the basis is the sublattice index
    (a, b), (c, e) = eg.hermite_basis
    assert abs(a * e - b * c) == 3


def test_end_group_rank_zero(omega11):
    d = find_ends(omega11)[0]
    assert end_group(omega11, d).rank == 0


def test_end_group_one_dimensional():
    g = kg.build_cycle_1graph(4)
    eg = end_group(g, find_ends(g)[0])
    assert eg.rank == 1
    assert eg.hermite_basis == [(4,)]


def test_torus_and_lattice_ranks():
    assert lattice_rank([(1, 1), (0, 5)], 2) == 2
    assert lattice_rank([(2, 0)], 2) == 1
    assert lattice_rank([(0, 0)], 2) == 0
    g = kg.build_lambda_n(2, 0)
    assert torus_rank(end_group(g, find_ends(g)[0])) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 5])
@pytest.mark.parametrize("tail", [0, 2])
def test_k_theory_lambda_family(n, tail):
    s = k_theory(kg.build_lambda_n(n, tail))
    assert len(s.classes) == 1
    assert s.classes[0]["rank"] == 2
    assert s.K0_rank == 2 and s.K1_rank == 2
    assert s.morita == "K⊗C(T^2)"


def test_k_theory_omega(omega11):
    s = k_theory(omega11)
    assert s.K0_rank == 1 and s.K1_rank == 0
    assert s.classes[0]["rank"] == 0


def test_k_theory_mixed_ranks():
    g = kg.disjoint_union(kg.build_lambda_n(2, 0), solid_cycle_2graph(3))
    s = k_theory(g)
    assert sorted(c["rank"] for c in s.classes) == [1, 2]
    assert s.K0_rank == 3 and s.K1_rank == 3


def test_k_theory_requires_sufficiency(figure2):
    with pytest.raises(SufficientConditionUnmet):
        k_theory(figure2)


def test_k_theory_additivity():
    a = k_theory(kg.build_lambda_n(2, 0))
    b = k_theory(kg.build_lambda_n(3, 1))
    ab = k_theory(kg.disjoint_union(kg.build_lambda_n(2, 0),
                                    kg.build_lambda_n(3, 1)))
    assert ab.K0_rank == a.K0_rank + b.K0_rank
    assert ab.K1_rank == a.K1_rank + b.K1_rank


def test_core_multiplicity_structural():
    assert [lambda_n_core_multiplicity(n) for n in (1, 2, 3, 5)] == [1, 2, 3, 5]
    # invariant under the tail length
    assert all(lambda_n_core_multiplicity(3, t) == 3 for t in (0, 1, 3))
    assert core_multiplicity(kg.build_cycle_1graph(4)) == 4


def test_matrix_unit_relations_symbolically():
    """The solid-path partial isometries behave as matrix units on the
    cycle-with-tail: with theta_{i,j} = (ascending solid path i -> j)* the
    products compose as E_{ij} E_{pq} = delta_{jp} E_{iq}."""
    g = kg.build_lambda_n(3, 3)

    def ascending(i, j):
        # the unique solid path with source v_i and range v_j (i < j, no wrap)
        path = g.edge_path(f"e{i + 1}")
        for t in range(i + 2, j + 1):
            path = g.compose(g.edge_path(f"e{t}"), path)
        return path

    def theta(i, j):
        if i == j:
            return A.vertex_projection(g, f"v{i}")
        if i < j:
            return A.isometry(g, ascending(i, j)).adjoint()
        return A.isometry(g, ascending(j, i))

    t12, t23, t13 = theta(1, 2), theta(2, 3), theta(1, 3)
    assert (t12 * t23).equals(t13)
    assert (t12 * theta(2, 1)).equals(theta(1, 1))
    assert (theta(3, 2) * theta(2, 4)).equals(theta(3, 4))
    assert (t12 * theta(3, 4)).is_zero()   # mismatched inner indices
    assert (theta(2, 1) * t12).equals(theta(2, 2))
