import random

import pytest

import kgraphck as kg
from kgraphck import degrees as dg
from kgraphck.errors import (
    AssociativityFailure,
    DegreeOutOfRange,
    DuplicateSquare,
    MismatchedEndpoints,
    MissingSquare,
    NotComposable,
    UnknownVertex,
)
from kgraphck.skeleton import Edge, FactorizationRegime, Skeleton

from conftest import omega_path


# --- validation --------------------------------------------------------------


def _two_vertex_skeleton():
    # two vertices with solid edges e, k from v to u (range u), a solid g
    # back from u to v, and dashed loops f at u and h at v: the smallest
    # skeleton carrying two distinct allowable regimes
    verts = ("u", "v")
    edges = (
        Edge("e", 1, "u", "v"),
        Edge("k", 1, "u", "v"),
        Edge("g", 1, "v", "u"),
        Edge("f", 2, "u", "u"),
        Edge("h", 2, "v", "v"),
    )
    return Skeleton(2, verts, edges)


def _regime_a():
    return FactorizationRegime.from_pairs([
        (("e", "h"), ("f", "e")),
        (("k", "h"), ("f", "k")),
        (("g", "f"), ("h", "g")),
    ])


def test_validate_two_regimes():
    skel = _two_vertex_skeleton()
    g = kg.validate(skel, _regime_a())
    assert g.locally_convex and g.no_sinks and g.no_sources
    crossed = FactorizationRegime.from_pairs([
        (("e", "h"), ("f", "k")),
        (("k", "h"), ("f", "e")),
        (("g", "f"), ("h", "g")),
    ])
    kg.validate(skel, crossed)  # the second allowable regime also validates


def test_validate_missing_square():
    skel = _two_vertex_skeleton()
    partial = FactorizationRegime.from_pairs([
        (("e", "h"), ("f", "e")),
        (("g", "f"), ("h", "g")),
    ])
    with pytest.raises(MissingSquare):
        kg.validate(skel, partial)


def test_validate_duplicate_square():
    skel = _two_vertex_skeleton()
    doubled = FactorizationRegime.from_pairs([
        (("e", "h"), ("f", "e")),
        (("e", "h"), ("f", "k")),
        (("g", "f"), ("h", "g")),
    ])
    with pytest.raises(DuplicateSquare):
        kg.validate(skel, doubled)


def test_validate_mismatched_endpoints():
    skel = _two_vertex_skeleton()
    bad = FactorizationRegime.from_pairs([
        (("e", "h"), ("h", "e")),   # inner pair has wrong colours/endpoints
        (("k", "h"), ("f", "k")),
        (("g", "f"), ("h", "g")),
    ])
    with pytest.raises(MismatchedEndpoints):
        kg.validate(skel, bad)


def test_associativity_failure_witness():
    # one vertex, two loops per colour; each colour pair is allowable on its
    # own but the a/b swap shifts b by a's index while the a/c swap shifts a,
    # so the two routes around a cube land on different b loops
    verts = ("v",)
    edges = tuple(Edge(f"{c}{i}", ci, "v", "v")
                  for ci, c in ((1, "a"), (2, "b"), (3, "c")) for i in (0, 1))
    pairs = []
    for i in (0, 1):
        for j in (0, 1):
            pairs.append(((f"a{i}", f"b{j}"), (f"b{(j + i) % 2}", f"a{i}")))
            pairs.append(((f"a{i}", f"c{j}"), (f"c{j}", f"a{(i + 1) % 2}")))
            pairs.append(((f"b{i}", f"c{j}"), (f"c{j}", f"b{i}")))
    skel = Skeleton(3, verts, edges)
    with pytest.raises(AssociativityFailure) as err:
        kg.validate(skel, FactorizationRegime.from_pairs(pairs))
    assert err.value.triple is not None


def test_omega3_passes_cube_check(omega111):
    assert omega111.k == 3  # construction already went through validate


# --- composition and factorisation ----------------------------------------------


def test_compose_identity(omega21):
    v = kg.omega_vertex((0, 0))
    lam = omega_path(omega21, (0, 0), (2, 1))
    assert omega21.compose(omega21.vertex_path(v), lam) == lam
    assert omega21.compose(lam, omega21.vertex_path(lam.source)) == lam


def test_compose_endpoint_oracle(omega11):
    a = omega_path(omega11, (0, 0), (1, 0))
    b = omega_path(omega11, (1, 0), (1, 1))
    assert omega11.compose(a, b) == omega_path(omega11, (0, 0), (1, 1))


def test_compose_not_composable(omega11):
    a = omega_path(omega11, (0, 0), (1, 0))
    with pytest.raises(NotComposable):
        omega11.compose(a, a)


def test_figure1_style_square_equality():
    g = kg.validate(_two_vertex_skeleton(), _regime_a())
    e = g.edge_path("e")
    h = g.edge_path("h")
    f = g.edge_path("f")
    assert g.compose(e, h) == g.compose(f, e)  # the square e.h = f.e


def test_factor_endpoints(omega111):
    lam = omega_path(omega111, (0, 0, 0), (1, 1, 1))
    seg = omega111.factor(lam, (1, 0, 0), (1, 1, 0))
    assert seg == omega_path(omega111, (1, 0, 0), (1, 1, 0))
    assert omega111.factor(lam, (0, 0, 0), (0, 0, 0)) == \
        omega111.vertex_path(lam.range)
    assert omega111.factor(lam, (0, 0, 0), lam.degree) == lam


def test_factor_out_of_range(omega11):
    lam = omega_path(omega11, (0, 0), (1, 1))
    with pytest.raises(DegreeOutOfRange):
        omega11.factor(lam, (0, 2), (1, 1))


def test_factor_round_trip(corpus):
    rng = random.Random(11)
    for g in corpus.values():
        paths = [p for v in g.vertices for n in dg.box((2,) * g.k)
                 for p in g.paths_with_range(v, n)]
        for _ in range(60):
            lam = rng.choice(paths)
            m = tuple(rng.randint(0, d) for d in lam.degree)
            n = tuple(rng.randint(m[i], lam.degree[i]) for i in range(g.k))
            head = g.factor(lam, dg.zero(g.k), m)
            mid = g.factor(lam, m, n)
            tail = g.factor(lam, n, lam.degree)
            assert g.compose(head, g.compose(mid, tail)) == lam


def test_normal_form_confluence(corpus):
    """Composing the edge factors of a path in any admissible order gives
    back the same normal form."""
    rng = random.Random(5)
    for g in corpus.values():
        paths = [p for v in g.vertices for n in dg.box((2,) * g.k)
                 for p in g.paths_with_range(v, n) if dg.total(n) >= 2]
        for _ in range(40):
            lam = rng.choice(paths)
            # peel single edges in a random colour order
            rest, parts = lam, []
            while not rest.is_vertex:
                colors = [i + 1 for i in range(g.k) if rest.degree[i] > 0]
                c = rng.choice(colors)
                e = g.factor(rest, dg.zero(g.k), dg.basis(g.k, c))
                rest = g.factor(rest, dg.basis(g.k, c), rest.degree)
                parts.append(e)
            out = parts[0]
            for p in parts[1:]:
                out = g.compose(out, p)
            assert out == lam


# --- enumeration ------------------------------------------------------------------


def test_paths_with_range_counts(omega21):
    # unique morphism between comparable vertices
    assert len(omega21.paths_with_range(kg.omega_vertex((0, 0)), (1, 1))) == 1
    assert len(omega21.paths_with_range(kg.omega_vertex((0, 0)), (2, 1))) == 1
    assert omega21.paths_with_range(kg.omega_vertex((1, 1)), (2, 0)) == ()


def test_segment_category_path_uniqueness(omega21, omega111):
    """The endpoint-pair oracle: in a segment category the morphisms p -> q
    are in bijection with pairs p <= q, so every nonempty path set is a
    singleton."""
    for g, m in ((omega21, (2, 1)), (omega111, (1, 1, 1))):
        for p in dg.box(m):
            for n in dg.box(tuple(mi - pi for mi, pi in zip(m, p))):
                paths = g.paths_with_range(kg.omega_vertex(p), n)
                assert len(paths) == 1
                assert paths[0].source == kg.omega_vertex(dg.add(p, n))


def test_paths_with_source(omega21):
    v = kg.omega_vertex((2, 1))
    assert len(omega21.paths_with_source(v, (2, 1))) == 1
    assert len(omega21.paths_with_source(v, (1, 0))) == 1


def test_unknown_vertex(omega11):
    with pytest.raises(UnknownVertex):
        omega11.paths_with_range("nope", (0, 0))
    with pytest.raises(UnknownVertex):
        omega11.lambda_le("nope", (1, 1))


def test_figure2_cell_counts(figure2):
    assert len(figure2.in_edges("v", 1)) == 2
    assert len(figure2.in_edges("v", 2)) == 1


def test_lambda_le_examples(omega11, lambda3):
    v = kg.omega_vertex((0, 0))
    out = omega11.lambda_le(v, (2, 0))
    assert [p.degree for p in out] == [(1, 0)]
    # no-sources graph: lambda_le is plain degree enumeration
    for w in lambda3.vertices:
        assert set(lambda3.lambda_le(w, (2, 1))) == \
            set(lambda3.paths_with_range(w, (2, 1)))
    # end vertex: singleton at every degree bound
    for n in dg.box((3, 3)):
        assert len(lambda3.lambda_le("v1", n)) == 1


def test_lambda_le_edge_matches_literal(corpus):
    for g in corpus.values():
        for v in g.vertices:
            for n in dg.box((3,) * g.k):
                edge = set(g.lambda_le(v, n, mode="edge"))
                literal = set(g.lambda_le(v, n, mode="literal"))
                assert edge == literal


# --- builders ----------------------------------------------------------------------


def test_build_omega_counts():
    g = kg.build_omega(2, (1, 1))
    assert len(g.vertices) == 4 and len(g.skeleton.edges) == 4
    line = kg.build_omega(1, (3,))
    assert len(line.vertices) == 4 and len(line.skeleton.edges) == 3
    g3 = kg.build_omega(3, (1, 1, 1))
    assert len(g3.vertices) == 8


def test_build_lambda_n_shape():
    g = kg.build_lambda_n(3, 0)
    assert len(g.vertices) == 3 and len(g.skeleton.edges) == 6
    assert g.locally_convex and g.no_sinks
    g1 = kg.build_lambda_n(1, 0)
    assert len(g1.vertices) == 1 and len(g1.skeleton.edges) == 2
    g5 = kg.build_lambda_n(3, 2)
    assert len(g5.vertices) == 5
    # the truncation vertex is the unique vertex without outgoing edges
    dead_ends = [v for v in g5.vertices
                 if not g5.out_edges(v, 1) and not g5.out_edges(v, 2)]
    assert dead_ends == ["v5"]
    assert g5.no_sources  # every vertex still receives one edge per colour


def test_build_figure2_is_locally_convex_but_cyclic(figure2):
    assert figure2.locally_convex
    assert figure2.has_cycle()  # the cap loops; a convex finite truncation needs them
    kg.build_figure2("B", width=3)  # the crossed regime validates too


def test_figure2_rejects_corrupted_squares(figure2):
    doc = kg.skeleton_to_dict(figure2.skeleton, figure2.regime)
    skel, regime = kg.skeleton_from_dict(doc)

    dropped = FactorizationRegime(regime.squares[1:])
    with pytest.raises(MissingSquare):
        kg.validate(skel, dropped)

    doubled = FactorizationRegime(regime.squares + (regime.squares[0],))
    with pytest.raises(DuplicateSquare):
        kg.validate(skel, doubled)

    (outer, inner) = regime.squares[0]
    twisted = FactorizationRegime(((outer, (inner[1], inner[0])),)
                                  + regime.squares[1:])
    with pytest.raises(MismatchedEndpoints):
        kg.validate(skel, twisted)


def test_omega_acyclic_lambda_cyclic(omega21, lambda3):
    assert not omega21.has_cycle()
    assert lambda3.has_cycle()


def test_from_builder_spec_roundtrip():
    g = kg.from_builder_spec("omega:2,1,1")
    assert len(g.vertices) == 4
    with pytest.raises(ValueError):
        kg.from_builder_spec("omega:2,1")
    with pytest.raises(ValueError):
        kg.from_builder_spec("mystery:1")


def test_skeleton_json_roundtrip(tmp_path, lambda3_t2):
    doc = kg.skeleton_to_dict(lambda3_t2.skeleton, lambda3_t2.regime)
    path = tmp_path / "g.json"
    import json

    path.write_text(json.dumps(doc))
    skel, regime = kg.load_skeleton(path)
    g = kg.validate(skel, regime)
    assert g.vertices == lambda3_t2.vertices
    assert g.locally_convex == lambda3_t2.locally_convex
