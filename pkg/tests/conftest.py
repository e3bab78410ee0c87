import pytest

import kgraphck as kg


@pytest.fixture(scope="session")
def omega11():
    return kg.build_omega(2, (1, 1))


@pytest.fixture(scope="session")
def omega21():
    return kg.build_omega(2, (2, 1))


@pytest.fixture(scope="session")
def omega111():
    return kg.build_omega(3, (1, 1, 1))


@pytest.fixture(scope="session")
def lambda3():
    return kg.build_lambda_n(3, 0)


@pytest.fixture(scope="session")
def lambda3_t2():
    return kg.build_lambda_n(3, 2)


@pytest.fixture(scope="session")
def figure2():
    return kg.build_figure2("A", width=2)


@pytest.fixture(scope="session")
def corpus(omega11, omega21, omega111, lambda3_t2, figure2):
    return {
        "omega_2_11": omega11,
        "omega_2_21": omega21,
        "omega_3_111": omega111,
        "lambda_3_t2": lambda3_t2,
        "figure2_A": figure2,
    }


def omega_path(graph, p, q):
    """The unique morphism (p, q) of a segment category, via the oracle that
    paths there are exactly their endpoint pairs."""
    matches = [path for path in graph.paths_with_range(
        kg.omega_vertex(p), tuple(b - a for a, b in zip(p, q)))
        if path.source == kg.omega_vertex(q)]
    assert len(matches) == 1
    return matches[0]
