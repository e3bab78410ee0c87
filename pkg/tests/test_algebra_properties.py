"""Structural properties of the symbolic engine that cross-validate the
common-minimal-extension product against the defect-relation rewriting:
associativity, *-anti-multiplicativity, invariance of the expectations and
functionals under rewriting, and the bimodule law for the gauge
expectation."""

import random

import pytest

import kgraphck as kg
from kgraphck import degrees as dg
from kgraphck.algebra import tau_g
from kgraphck.suites import generator_pairs_upto, graph_trace_for, random_element


@pytest.fixture(scope="module", params=["omega_2_11", "omega_2_21",
                                        "omega_3_111", "lambda_3_t2",
                                        "figure2_A"])
def graph(request, corpus):
    return corpus[request.param]


def _rng(graph):
    return random.Random(hash(len(graph.vertices)) % 1000 + 99)


def test_product_associative(graph):
    rng = _rng(graph)
    cap = (1,) * graph.k
    pairs = generator_pairs_upto(graph, cap)
    for _ in range(25):
        a = random_element(graph, rng, pairs, 2)
        b = random_element(graph, rng, pairs, 2)
        c = random_element(graph, rng, pairs, 2)
        assert ((a * b) * c).equals(a * (b * c))


def test_adjoint_anti_multiplicative(graph):
    rng = _rng(graph)
    pairs = generator_pairs_upto(graph, (1,) * graph.k)
    for _ in range(25):
        a = random_element(graph, rng, pairs, 2)
        b = random_element(graph, rng, pairs, 2)
        assert (a * b).adjoint().equals(b.adjoint() * a.adjoint())


def test_rewriting_preserves_everything(graph):
    """Expanding an element by the defect relation changes its term dict but
    not its value; all derived quantities must agree on both forms."""
    rng = _rng(graph)
    pairs = generator_pairs_upto(graph, (1,) * graph.k)
    trace = graph_trace_for(graph)
    zero = dg.zero(graph.k)
    for _ in range(15):
        a = random_element(graph, rng, pairs, 2)
        level = tuple(rng.randint(0, 1) for _ in range(graph.k))
        b = a.ck4_expand(level)
        assert b.equals(a)
        assert b.diagonal_expectation().equals(a.diagonal_expectation())
        assert b.gauge_expectation().equals(a.gauge_expectation())
        for n in set(a.grades()) | {zero}:
            assert b.graded_part(n).equals(a.graded_part(n))
        assert tau_g(b, trace) == tau_g(a, trace)


def test_gauge_expectation_bimodule_law(graph):
    """Phi(f a g) = f Phi(a) g for gauge-invariant f, g: the expectation is
    a conditional expectation onto the invariant subalgebra."""
    rng = _rng(graph)
    pairs = generator_pairs_upto(graph, (1,) * graph.k)
    inv_pairs = [(m, n) for m, n in pairs if m.degree == n.degree]
    for _ in range(15):
        a = random_element(graph, rng, pairs, 2)
        f = random_element(graph, rng, inv_pairs, 2)
        g = random_element(graph, rng, inv_pairs, 2)
        lhs = (f * a * g).gauge_expectation()
        rhs = f * a.gauge_expectation() * g
        assert lhs.equals(rhs)


def test_diagonal_expectation_positivity(graph):
    """Psi(a* a) has nonnegative trace (it is the diagonal compression of a
    positive element)."""
    rng = _rng(graph)
    pairs = generator_pairs_upto(graph, (1,) * graph.k)
    trace = graph_trace_for(graph)
    for _ in range(15):
        a = random_element(graph, rng, pairs, 2)
        val = tau_g((a.adjoint() * a).diagonal_expectation(), trace)
        assert val.im == 0 and val.re >= 0
