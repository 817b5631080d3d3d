import random

import pytest
from hypothesis import given, settings

from models.graph import Graph
from tests.conftest import graphs
from tests.oracles import (
    flood_fill_components,
    has_disjoint_p3s,
    is_induced_p3,
    random_graph,
    triple_scan_p3s,
)
from utils.errors import GraphError, ValidationSkipped


def test_rejects_self_loops_and_out_of_range_edges():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


def test_parallel_edges_collapse():
    graph = Graph(2, [(0, 1), (1, 0), (0, 1)])
    assert graph.edge_count == 1
    assert graph.neighbors(0) == (1,)


def test_empty_graph_is_legal_everywhere():
    graph = Graph(0)
    assert graph.connected_components() == []
    assert graph.is_p3_free()
    assert graph.find_induced_p3() is None
    assert graph.find_disjoint_induced_p3s(1) is None


class TestInducedSubgraph:

    def test_triangle_restricted_to_two_vertices(self):
        sub, mapping = Graph.complete(3).induced_subgraph([0, 1])
        assert sub.n == 2
        assert sub.edges() == [(0, 1)]
        assert mapping == {0: 0, 1: 1}

    def test_whole_vertex_set_is_identity(self):
        graph = random_graph(random.Random(3), 9, 0.4)
        sub, mapping = graph.induced_subgraph(range(graph.n))
        assert sub == graph
        assert mapping == {v: v for v in range(graph.n)}
        assert sub.edge_count == graph.edge_count

    def test_out_of_range_vertex_is_an_input_error(self):
        with pytest.raises(GraphError):
            Graph.path(3).induced_subgraph([0, 5])

    @pytest.mark.parametrize("seed", range(20))
    def test_edges_match_pairwise_filter(self, seed):
        rng = random.Random(seed)
        graph = random_graph(rng, 10, 0.3)
        kept = sorted(rng.sample(range(10), 5))
        sub, mapping = graph.induced_subgraph(kept)
        expected = {(mapping[u], mapping[v]) for u in kept for v in kept if u < v and graph.has_edge(u, v)}
        assert set(sub.edges()) == expected


class TestComponents:

    def test_edgeless_graph_gives_singletons(self):
        assert Graph(4).connected_components() == [(0,), (1,), (2,), (3,)]

    def test_path_is_one_component(self):
        assert Graph.path(3).connected_components() == [(0, 1, 2)]

    @pytest.mark.parametrize("seed", range(30))
    def test_matches_flood_fill(self, seed):
        graph = random_graph(random.Random(seed), 12, 0.1)
        assert graph.connected_components() == flood_fill_components(graph)

    @given(graphs())
    def test_components_partition_the_vertices(self, graph):
        components = graph.connected_components()
        flat = [v for component in components for v in component]
        assert sorted(flat) == list(range(graph.n))
        assert [c[0] for c in components] == sorted(c[0] for c in components)

    def test_components_within_ignores_outside_vertices(self):
        graph = Graph.path(5)
        assert graph.components_within([0, 1, 3, 4]) == [(0, 1), (3, 4)]


class TestCliques:

    def test_complete_graph_is_clique(self):
        assert Graph.complete(4).is_clique([0, 1, 2, 3])

    def test_path_is_not_clique(self):
        assert not Graph.path(3).is_clique([0, 1, 2])

    @pytest.mark.parametrize("seed", range(20))
    def test_agrees_with_pair_check(self, seed):
        rng = random.Random(seed)
        graph = random_graph(rng, 10, 0.7)
        subset = rng.sample(range(10), rng.randint(0, 6))
        expected = all(graph.has_edge(u, v) for u in subset for v in subset if u != v)
        assert graph.is_clique(subset) == expected


class TestP3Queries:

    def test_cluster_graph_is_p3_free(self):
        graph = Graph.disjoint_union(Graph.complete(3), Graph.complete(2), Graph.complete(1))
        assert graph.is_p3_free()

    def test_path_is_not_p3_free(self):
        assert not Graph.path(3).is_p3_free()

    def test_find_on_path_and_triangle(self):
        assert Graph.path(3).find_induced_p3() == (0, 1, 2)
        assert Graph.complete(3).find_induced_p3() is None

    def test_lexicographically_least_by_middle(self):
        # star centered at 2 plus the path 0-1-2
        graph = Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
        assert graph.find_induced_p3() == (0, 1, 2)
        assert list(graph.iter_induced_p3s())[1:] == [(1, 2, 3), (1, 2, 4), (3, 2, 4)]

    @pytest.mark.parametrize("seed", range(40))
    def test_random_graphs_against_triple_scan(self, seed):
        rng = random.Random(seed)
        graph = random_graph(rng, 9, rng.choice([0.2, 0.4, 0.7]))
        scanned = triple_scan_p3s(graph)
        found = graph.find_induced_p3()
        if found is None:
            assert not scanned
        else:
            assert is_induced_p3(graph, found)
            assert found == min(scanned, key=lambda t: (t[1], t[0], t[2]))
        assert graph.is_p3_free() == (not scanned)

    @given(graphs())
    def test_p3_free_characterizations_agree(self, graph):
        every_component_clique = all(graph.is_clique(c) for c in graph.connected_components())
        assert graph.is_p3_free() == (graph.find_induced_p3() is None) == every_component_clique

    @given(graphs())
    def test_queries_are_deterministic(self, graph):
        assert graph.find_induced_p3() == graph.find_induced_p3()
        assert graph.connected_components() == graph.connected_components()


class TestDisjointP3Packing:

    def test_two_disjoint_paths(self):
        graph = Graph.disjoint_union(Graph.path(3), Graph.path(3))
        assert graph.find_disjoint_induced_p3s(2) == [(0, 1, 2), (3, 4, 5)]

    def test_complete_graph_has_none(self):
        assert Graph.complete(10).find_disjoint_induced_p3s(1) is None

    def test_refuses_above_cap(self):
        with pytest.raises(ValidationSkipped):
            Graph(61).find_disjoint_induced_p3s(2, cap=60)

    def test_star_has_only_one_disjoint_p3(self):
        star = Graph(7, [(0, v) for v in range(1, 7)])
        assert star.find_disjoint_induced_p3s(1) is not None
        assert star.find_disjoint_induced_p3s(2) is None

    @pytest.mark.parametrize("seed", range(25))
    def test_agrees_with_exhaustive_pairs(self, seed):
        graph = random_graph(random.Random(seed), 12, 0.3)
        witness = graph.find_disjoint_induced_p3s(2)
        assert (witness is not None) == has_disjoint_p3s(graph, 2)
        if witness is not None:
            assert all(is_induced_p3(graph, triple) for triple in witness)
            assert len({v for triple in witness for v in triple}) == 6

    @given(graphs(max_nodes=9))
    @settings(max_examples=60)
    def test_r_equal_one_matches_p3_freeness(self, graph):
        assert (graph.find_disjoint_induced_p3s(1) is None) == graph.is_p3_free()


def test_relabel_preserves_structure():
    rng = random.Random(11)
    graph = random_graph(rng, 8, 0.4)
    perm = list(range(8))
    rng.shuffle(perm)
    relabeled = graph.relabel(perm)
    assert relabeled.edge_count == graph.edge_count
    assert all(relabeled.has_edge(perm[u], perm[v]) for u, v in graph.edges())


def test_fingerprint_tracks_edges():
    assert Graph.path(3).fingerprint == Graph(3, [(1, 2), (0, 1)]).fingerprint
    assert Graph.path(3).fingerprint != Graph.complete(3).fingerprint
