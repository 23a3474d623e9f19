import logging

import pytest

import helpers

# erasure warnings are expected on the heavy-tailed test ensembles; keep
# the suite output readable (the warning itself is covered by a caplog test)
logging.getLogger("medusa.ensemble").setLevel(logging.ERROR)


def small_graph_zoo():
    """Named deterministic graphs reused by invariant tests."""
    from medusa.graph import Graph

    zoo = {
        "triangle": helpers.complete_graph(3),
        "k5": helpers.complete_graph(5),
        "k4_pendant": Graph.from_edges(
            [(i, j) for i in range(4) for j in range(i + 1, 4)] + [(0, "p")]
        ),
        "star7": helpers.star_graph(6),
        "path4": helpers.path_graph("abcd"),
        "c5": helpers.cycle_graph(5),
        "c6": helpers.cycle_graph(6),
        "c8": helpers.cycle_graph(8),
        "two_comp": Graph.from_edges([(0, 1), (1, 2), (2, 0), (3, 4)]),
        "medusa": helpers.medusa_example_graph(),
        "medusa_full": helpers.medusa_example_graph(with_multilink=True, with_pair=True),
    }
    for s in (0, 1, 2):
        zoo[f"er{s}"] = helpers.er_graph(30, 0.12, seed=s)
        zoo[f"tree{s}"] = helpers.random_tree(25, seed=s)
        zoo[f"config{s}"] = helpers.small_config_graph(24, seed=s)
    return zoo


@pytest.fixture(scope="session")
def zoo():
    return small_graph_zoo()


@pytest.fixture(scope="session")
def k4_pendant(zoo):
    return zoo["k4_pendant"]
