import pytest

from cyclecover.generators import complete_graph, petersen_graph
from cyclecover.graph import Graph
from cyclecover.selection import (
    RuleTag,
    coupled_satellites,
    estimate_vector,
    select,
    shortest_cycle_through,
)


def prism():
    # two triangles joined by a matching; 3-regular, girth 3
    return Graph.from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def test_estimate_vector_regular_examples():
    cubic = petersen_graph()
    assert estimate_vector(cubic, 0) == (2, 4)
    k5 = complete_graph(5)  # degree 4, neighbor degrees 4 each
    assert estimate_vector(k5, 0) == (3, 9)
    star_plus = Graph.from_edges(
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6)]
    )
    # degree 4, every neighbor degree 3: exclude estimate 12 - 8 + 1 = 5
    assert estimate_vector(star_plus, 0) == (3, 5)
    wheel = Graph.from_edges(
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    )
    assert estimate_vector(wheel, 0) == (4, 6)


def test_estimate_vector_degree_floor():
    with pytest.raises(ValueError):
        estimate_vector(Graph.from_edges([(0, 1), (0, 2)]), 0)


def test_high_degree_wins():
    g = complete_graph(6)
    plan = select(g)
    assert plan.rule_tag is RuleTag.HIGH_DEGREE
    assert plan.vertex == 0
    assert plan.satellites == frozenset()


def test_degree4_prefers_a_coupled_partner():
    g = Graph.from_edges(
        [(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (6, 4), (6, 1), (6, 2), (3, 4)]
    )
    plan = select(g)
    assert plan.rule_tag is RuleTag.DEGREE4
    assert plan.vertex == 0
    assert plan.satellites == frozenset({5, 6})


def test_coupling_needs_near_hub_degree():
    # partner of degree 2 under a degree-4 hub mirrors incorrectly; must be filtered
    g = Graph.from_edges([(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2)])
    assert coupled_satellites(g, 0) == frozenset()
    strong = Graph.from_edges([(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3)])
    assert coupled_satellites(strong, 0) == frozenset({5})


def test_shortest_cycle_lengths():
    assert shortest_cycle_through(prism(), 0) == 3
    for v in range(10):
        assert shortest_cycle_through(petersen_graph(), v) == 5
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert shortest_cycle_through(g, 1) == 3


def test_cubic_rule_picks_smallest_girth_vertex():
    g = petersen_graph()
    plan = select(g)
    assert plan.rule_tag is RuleTag.DEGREE3_REGULAR
    assert plan.vertex == 0
    assert plan.est_vector == (2, 4)
    # disjoint union: the prism's triangle vertices beat the Petersen girth
    both = Graph()
    for u, v in g.edges():
        both.add_edge(u, v)
    for u, v in prism().edges():
        both.add_edge(10 + u, 10 + v)
    plan = select(both)
    assert plan.vertex == 10


def test_select_rejects_unreduced_input():
    with pytest.raises(ValueError):
        select(Graph())
    with pytest.raises(ValueError):
        select(Graph.from_edges([(0, 1), (1, 2)]))
