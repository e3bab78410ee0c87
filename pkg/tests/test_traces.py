from fractions import Fraction

import pytest

import kgraphck as kg
from kgraphck.errors import MissingVertexValue, NotLocallyConvex
from kgraphck.skeleton import Edge, FactorizationRegime, Skeleton
from kgraphck.traces import (
    GraphTrace,
    check_sufficient_condition,
    detect_loop_with_entrance,
    end_classes,
    find_ends,
    find_faithful_graph_trace,
    is_graph_trace,
    trace_from_end_assignment,
)


def test_is_graph_trace_modes(lambda3):
    ones = {v: 1 for v in lambda3.vertices}
    assert is_graph_trace(ones, lambda3)
    assert is_graph_trace(ones, lambda3, mode="full", upto=(2, 2))
    zero = {v: 0 for v in lambda3.vertices}
    assert is_graph_trace(zero, lambda3)
    with pytest.raises(MissingVertexValue):
        is_graph_trace({"v1": 1}, lambda3)


def test_figure2_weighting_fails(figure2):
    ones = {v: 1 for v in figure2.vertices}
    assert not is_graph_trace(ones, figure2)


def test_faithful_trace_on_cycles(lambda3, lambda3_t2):
    for g in (lambda3, lambda3_t2):
        tr = find_faithful_graph_trace(g)
        assert isinstance(tr, GraphTrace) and tr.faithful and tr.verified
        # constant on the cycle
        assert tr.values["v1"] == tr.values["v2"] == tr.values["v3"]
        assert sum(tr.values.values()) == 1
        assert is_graph_trace(tr.values, g, mode="full", upto=(2, 2))


def test_single_vertex_graph_trace():
    g = kg.validate(Skeleton(1, ("v",), ()), FactorizationRegime(()))
    tr = find_faithful_graph_trace(g)
    assert isinstance(tr, GraphTrace)
    assert tr.values["v"] == 1


def test_figure2_forced_zero(figure2):
    rep = find_faithful_graph_trace(figure2)
    assert not isinstance(rep, GraphTrace)
    assert rep.kind == "ForcedZeroVertex"
    assert "w" in rep.forced_zero and "v" in rep.forced_zero
    # the normalised system is empty, so a replayable certificate comes along
    assert rep.farkas is not None


def test_forced_zero_partial():
    # two-loop vertex feeding a tail vertex: the loop vertex is forced to 0
    # but an isolated vertex keeps the system feasible
    skel = Skeleton(1, ("a", "b"), (
        Edge("l1", 1, "a", "a"),
        Edge("l2", 1, "a", "a"),
    ))
    g = kg.validate(skel, FactorizationRegime(()))
    rep = find_faithful_graph_trace(g)
    assert rep.kind == "ForcedZeroVertex"
    assert rep.forced_zero == ("a",)
    assert rep.farkas is None  # feasible: all mass on b


def test_not_locally_convex_raises():
    # broken corner: e's source receives no dashed edge while its range does;
    # no bicoloured pair is composable, so the empty regime is allowable
    skel = Skeleton(2, ("x", "y", "z"), (
        Edge("e", 1, "x", "y"),
        Edge("g", 2, "x", "z"),
    ))
    g = kg.validate(skel, FactorizationRegime(()))
    assert not g.locally_convex
    with pytest.raises(NotLocallyConvex):
        find_faithful_graph_trace(g)


def test_loop_with_entrance_witness():
    skel = Skeleton(1, ("v", "w"), (
        Edge("loop", 1, "v", "v"),
        Edge("in", 1, "v", "w"),
    ))
    g = kg.validate(skel, FactorizationRegime(()))
    rep = detect_loop_with_entrance(g)
    assert rep is not None
    assert rep.loop.loop_edges == ("loop",)
    assert rep.loop.entrance == "in"
    # witness replays: the loop really is a loop and the entrance differs
    lam = g.edge_path(rep.loop.loop_edges[0])
    assert lam.range == lam.source
    assert rep.loop.entrance != rep.loop.loop_edges[0]
    # and a loop with an entrance rules out any faithful trace
    assert not isinstance(find_faithful_graph_trace(g), GraphTrace)


def test_no_loop_witness_on_corpus(omega11, omega21, omega111, lambda3):
    for g in (omega11, omega21, omega111, lambda3):
        assert detect_loop_with_entrance(g) is None


def test_find_ends_lambda(lambda3, lambda3_t2):
    ends = find_ends(lambda3)
    assert len(ends) == 1
    assert set(ends[0].image) == {"v1", "v2", "v3"}
    assert ends[0].direction_bounds == (None, None)
    classes = end_classes(find_ends(lambda3_t2))
    assert len(classes) == 1


def test_find_ends_omega(omega11):
    ends = find_ends(omega11)
    classes = end_classes(ends)
    assert len(classes) == 1
    covered = set().union(*(set(d.image) for d in ends))
    assert covered == set(omega11.vertices)


def test_figure2_has_no_ends(figure2):
    assert find_ends(figure2) == []


def test_two_cycles_two_classes():
    g = kg.disjoint_union(kg.build_lambda_n(2, 0), kg.build_lambda_n(3, 0))
    classes = end_classes(find_ends(g))
    assert len(classes) == 2


def test_sufficient_condition(lambda3_t2, figure2):
    n_map, unreached = check_sufficient_condition(lambda3_t2)
    assert not unreached
    assert all(n == (0, 0) for n in n_map.values())  # every vertex on an end
    n_map2, unreached2 = check_sufficient_condition(figure2)
    assert set(unreached2) == set(figure2.vertices)


def test_trace_from_end_assignment(lambda3_t2):
    n_map, _ = check_sufficient_condition(lambda3_t2)
    tr = trace_from_end_assignment(lambda3_t2, n_map, {0: 1})
    assert tr.faithful and tr.verified
    assert set(tr.values.values()) == {Fraction(1)}
    tr3 = trace_from_end_assignment(lambda3_t2, n_map, {0: 3})
    assert all(tr3.values[v] == 3 * tr.values[v] for v in lambda3_t2.vertices)
    # agrees with the linear-programming trace up to scaling
    lp = find_faithful_graph_trace(lambda3_t2)
    ratio = lp.values["v1"] / tr.values["v1"]
    assert all(lp.values[v] == ratio * tr.values[v] for v in lambda3_t2.vertices)


def test_two_class_weights():
    g = kg.disjoint_union(kg.build_lambda_n(2, 0), kg.build_lambda_n(2, 1))
    n_map, unreached = check_sufficient_condition(g)
    assert not unreached
    tr = trace_from_end_assignment(g, n_map, {0: 1, 1: 2})
    values = set(tr.values.values())
    assert values == {Fraction(1), Fraction(2)}


def test_orthogonal_family_growth():
    """On the ladder the number of mutually orthogonal paths from the cell
    boundary back to v doubles with each cell: the heuristic signal that no
    weighting can stay positive."""
    counts = []
    for width in (1, 2, 3):
        g = kg.build_figure2("A", width=width)
        deepest = g.vertices[width]  # the cap vertex
        counts.append(kg.orthogonal_family_count(
            g, deepest, "v", degree_bound=(width, width)))
    assert counts == [2, 4, 8]
    # single-path situations report 1
    lam = kg.build_lambda_n(3, 1)
    assert kg.orthogonal_family_count(lam, "v3", "v4", (1, 1)) >= 1


def test_traces_constant_on_end_images(corpus):
    for g in corpus.values():
        result = find_faithful_graph_trace(g)
        if not isinstance(result, GraphTrace):
            continue
        for d in find_ends(g):
            vals = {result.values[v] for v in d.image}
            assert len(vals) == 1
