"""Graph construction, predicates, and serialization."""

import pytest

from edgespectra.graphs import (
    Graph,
    build_complete_bipartite,
    build_cycle,
    build_path,
    chromatic_index,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_linear_forest,
    kmn_edge_index,
    x_vertex,
    y_vertex,
)


class TestBuilders:
    def test_complete_bipartite_layout(self):
        g = build_complete_bipartite(3, 2)
        assert g.vertex_count == 5
        assert g.edge_count == 6
        assert g.part("X") == frozenset({0, 1})
        assert g.part("Y") == frozenset({2, 3, 4})
        assert g.name == "K_{3,2}"
        # edge (x_i, y_j) sits at (i-1)*m + (j-1)
        for i in (1, 2):
            for j in (1, 2, 3):
                k = kmn_edge_index(3, 2, i, j)
                assert g.edges[k] == (x_vertex(2, i), y_vertex(2, j))

    def test_edge_index_bounds(self):
        with pytest.raises(ValueError):
            kmn_edge_index(3, 2, 3, 1)
        with pytest.raises(ValueError):
            kmn_edge_index(3, 2, 1, 4)

    def test_star_and_single_edge(self):
        star = build_complete_bipartite(4, 1)
        assert star.degrees() == [4, 1, 1, 1, 1]
        single = build_complete_bipartite(1, 1)
        assert single.edges == ((0, 1),)

    def test_reject_empty_part(self):
        with pytest.raises(ValueError):
            build_complete_bipartite(0, 2)
        with pytest.raises(ValueError):
            build_complete_bipartite(3, 0)

    def test_cycle_and_path(self):
        c = build_cycle(5)
        assert c.edge_count == 5
        assert all(d == 2 for d in c.degrees())
        p = build_path(4)
        assert p.edge_count == 3
        assert sorted(p.degrees()) == [1, 1, 2, 2]
        with pytest.raises(ValueError):
            build_cycle(2)
        with pytest.raises(ValueError):
            build_path(1)


class TestGraphInvariants:
    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 0),))

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError):
            Graph(3, ((0, 1), (1, 0)))

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 2),))

    def test_rejects_same_part_edge(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 1),), ("X", "X"))

    def test_rejects_label_length_mismatch(self):
        with pytest.raises(ValueError):
            Graph(3, ((0, 1),), ("X", "Y"))

    def test_incident_edges_in_edge_order(self):
        g = build_complete_bipartite(2, 2)
        assert g.incident_edges() == [[0, 1], [2, 3], [0, 2], [1, 3]]


class TestPredicates:
    def test_connectivity(self):
        assert is_connected(build_path(5))
        two_paths = induced_subgraph(build_path(5), {0, 1, 3, 4})
        assert not is_connected(two_paths)

    def test_bipartiteness(self):
        assert is_bipartite(build_cycle(4))
        assert not is_bipartite(build_cycle(5))
        assert is_bipartite(build_complete_bipartite(4, 3))

    def test_linear_forest(self):
        assert is_linear_forest(build_path(6))
        assert not is_linear_forest(build_cycle(4))
        assert not is_linear_forest(build_complete_bipartite(3, 1))  # degree 3 hub
        two_paths = induced_subgraph(build_path(5), {0, 1, 3, 4})
        assert is_linear_forest(two_paths)
        assert is_linear_forest(Graph(3, ()))  # isolated vertices are trivial paths

    def test_induced_subgraph_reindexes(self):
        g = build_complete_bipartite(3, 2)
        sub = induced_subgraph(g, {1, 2, 4})
        assert sub.vertex_count == 3
        assert set(sub.edges) == {(0, 1), (0, 2)}
        assert sub.part_labels == ("X", "Y", "Y")

    def test_induced_subgraph_empty(self):
        sub = induced_subgraph(build_cycle(4), set())
        assert sub.vertex_count == 0
        assert sub.edges == ()


class TestChromaticIndex:
    def test_bipartite_equals_max_degree(self):
        assert chromatic_index(build_complete_bipartite(3, 2)) == 3
        assert chromatic_index(build_path(4)) == 2
        assert chromatic_index(build_complete_bipartite(5, 1)) == 5

    def test_even_cycle(self):
        assert chromatic_index(build_cycle(6)) == 2

    def test_odd_cycle_needs_extra_color(self):
        assert chromatic_index(build_cycle(5)) == 3
        assert chromatic_index(build_cycle(3)) == 3


class TestJson:
    def test_round_trip_with_parts(self):
        g = build_complete_bipartite(3, 2)
        doc = graph_to_json(g)
        back = graph_from_json(doc)
        assert back.edges == g.edges
        assert back.part_labels == g.part_labels

    def test_round_trip_unlabeled(self):
        g = build_cycle(5)
        assert graph_from_json(graph_to_json(g)).edges == g.edges

    def test_rejects_overlapping_parts(self):
        doc = {"vertex_count": 2, "edges": [[0, 1]], "parts": {"X": [0, 1], "Y": [1]}}
        with pytest.raises(ValueError):
            graph_from_json(doc)

    def test_rejects_non_covering_parts(self):
        doc = {"vertex_count": 3, "edges": [[0, 1], [1, 2]],
               "parts": {"X": [0], "Y": [1]}}
        with pytest.raises(ValueError):
            graph_from_json(doc)

    def test_rejects_disconnected(self):
        doc = {"vertex_count": 4, "edges": [[0, 1], [2, 3]]}
        with pytest.raises(ValueError):
            graph_from_json(doc)

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            graph_from_json({"edges": [[0, 1]]})
        with pytest.raises(ValueError):
            graph_from_json({"vertex_count": 2, "edges": [[0]]})
