"""Graph construction, parsing, neighborhoods, and components."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bridgevax.graphs import (
    Graph,
    GraphParseError,
    connected_components,
    neighborhood_graph,
    parse_edge_list,
    serialize_edge_list,
)

from conftest import complete_graph, cycle_graph, path_graph, random_graph, star_graph


# ---------------------------------------------------------------- parsing

def test_parse_two_edge_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.node_count == 3
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_parse_drops_self_loops_and_duplicates():
    g = parse_edge_list("0 0\n0 1\n1 0")
    assert g.node_count == 2
    assert list(g.edges()) == [(0, 1)]


def test_parse_gap_id_creates_isolated_node():
    g = parse_edge_list("# comment\n0 2")
    assert g.node_count == 3
    assert g.degree(1) == 0
    assert list(g.edges()) == [(0, 2)]


def test_parse_percent_comments_and_blank_lines():
    g = parse_edge_list("% header\n\n0 1\n\n% tail\n")
    assert g.node_count == 2
    assert g.edge_count == 1


def test_parse_empty_input_is_empty_graph():
    g = parse_edge_list("")
    assert g.node_count == 0
    assert g.edge_count == 0


@pytest.mark.parametrize(
    "text,line",
    [
        ("0 1\n1 x", 2),
        ("0", 1),
        ("0 1 2", 1),
        ("0 1\n\n-1 2", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line_number == line


def test_parse_serialize_round_trip_on_fixture():
    g = parse_edge_list("3 7\n0 1\n1 0\n2 2\n5 3")
    again = parse_edge_list(serialize_edge_list(g))
    assert again == g


@st.composite
def random_graph_text(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    pairs = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=30,
    ))
    lines = [f"{u} {v}" for u, v in pairs] + [f"{n - 1} {n - 1}"]
    return "\n".join(lines)


@given(random_graph_text())
def test_round_trip_idempotence(text):
    g = parse_edge_list(text)
    canonical = serialize_edge_list(g)
    again = parse_edge_list(canonical)
    assert again == g
    assert serialize_edge_list(again) == canonical


# ---------------------------------------------------------- construction

def test_from_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(-1, [])


def test_adjacency_is_sorted_and_symmetric():
    g = Graph.from_edges(5, [(4, 0), (2, 0), (0, 3)])
    assert g.adjacency[0] == (2, 3, 4)
    for u in range(5):
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]


def test_degree_examples():
    assert complete_graph(4).degree(2) == 3
    assert Graph.from_edges(1, []).degree(0) == 0
    assert star_graph(4).degree(0) == 4
    with pytest.raises(ValueError):
        star_graph(4).degree(5)


def test_degree_sum_is_twice_edge_count():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, 10)
        assert sum(g.degree(v) for v in range(g.node_count)) == 2 * g.edge_count


# --------------------------------------------------------- neighborhoods

def test_neighborhood_of_star_center_is_edgeless():
    ng = neighborhood_graph(star_graph(4), 0)
    assert ng.node_count == 4
    assert ng.edge_count == 0


def test_neighborhood_in_complete_graph():
    for v in range(4):
        ng = neighborhood_graph(complete_graph(4), v)
        assert ng.node_count == 3
        assert ng.edge_count == 3


def brute_force_neighborhood(g: Graph, v: int) -> set[tuple[int, int]]:
    """Induced-subgraph edges by direct definition, in relabeled IDs."""
    nbrs = sorted(g.adjacency[v])
    relabel = {w: i for i, w in enumerate(nbrs)}
    return {
        (relabel[a], relabel[b])
        for a in nbrs
        for b in nbrs
        if a < b and b in g.adjacency[a]
    }


def test_neighborhood_in_cycle_matches_oracle():
    c5 = cycle_graph(5)
    for v in range(5):
        ng = neighborhood_graph(c5, v)
        assert ng.node_count == 2
        assert set(ng.edges()) == brute_force_neighborhood(c5, v) == set()


def test_neighborhood_matches_oracle_on_random_graphs():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, 9)
        for v in range(g.node_count):
            ng = neighborhood_graph(g, v)
            assert ng.node_count == g.degree(v)
            assert set(ng.edges()) == brute_force_neighborhood(g, v)


def test_neighborhood_rejects_out_of_range():
    with pytest.raises(ValueError):
        neighborhood_graph(path_graph(3), 3)


# ------------------------------------------------------------ components

def test_components_edgeless():
    labeling = connected_components(Graph.from_edges(4, []))
    assert labeling.component_count == 4
    assert labeling.labels == (0, 1, 2, 3)


def test_components_path_is_single():
    labeling = connected_components(path_graph(3))
    assert labeling.component_count == 1
    assert labeling.labels == (0, 0, 0)


def test_components_two_pairs():
    labeling = connected_components(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert labeling.component_count == 2
    assert labeling.labels == (0, 0, 1, 1)


def test_components_empty_graph():
    labeling = connected_components(Graph.from_edges(0, []))
    assert labeling.component_count == 0
    assert labeling.labels == ()


def brute_force_components(g: Graph) -> list[int]:
    """Transitive-closure reachability, label = order of first unseen root."""
    n = g.node_count
    reach = [[u == v or v in g.adjacency[u] for v in range(n)] for u in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if reach[i][k] and reach[k][j]:
                    reach[i][j] = True
    labels = [-1] * n
    count = 0
    for v in range(n):
        if labels[v] == -1:
            for w in range(n):
                if reach[v][w]:
                    labels[w] = count
            count += 1
    return labels


def test_components_match_transitive_closure_oracle():
    rng = random.Random(2025)
    checked = 0
    while checked < 200:
        g = random_graph(rng, 8, edge_prob=rng.random())
        labeling = connected_components(g)
        oracle = brute_force_components(g)
        assert list(labeling.labels) == oracle
        assert labeling.component_count == (max(oracle) + 1 if oracle else 0)
        checked += 1
