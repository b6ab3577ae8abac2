import pytest
from hypothesis import given, settings as hsettings

from app.core.exceptions import GraphError, NotAnEdgeError, OrderOverflowError
from app.models.graph import Graph, members, vertex_set
from app.services.family_service import family_service

from conftest import graphs


class TestBuild:
    def test_triangle(self, k3):
        assert Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]) == k3
        assert k3.size == 3

    def test_edgeless(self):
        graph = Graph.from_edges(4, [])
        assert graph.size == 0
        assert graph == Graph.edgeless(4)

    def test_duplicate_edges_collapse(self):
        assert Graph.from_edges(2, [(0, 1), (1, 0)]).size == 1

    def test_endpoint_out_of_range(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 3)])

    def test_self_loop(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(1, 1)])

    def test_order_cap(self):
        with pytest.raises(OrderOverflowError):
            Graph.from_edges(65, [])
        assert Graph.edgeless(64).n == 64

    def test_validation_rejects_asymmetric_masks(self):
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0))

    def test_edges_sorted(self):
        graph = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
        assert graph.edges() == [(0, 1), (0, 2), (2, 3)]


class TestOperations:
    def test_disjoint_union(self, k2):
        union = k2.disjoint_union(k2)
        assert (union.n, union.size) == (4, 2)
        assert len(union.connected_components()) == 2

    def test_union_with_empty_is_identity(self, p4):
        assert p4.disjoint_union(Graph.edgeless(0)) == p4

    def test_three_matching_edges(self, k2):
        assert k2.disjoint_union(k2).disjoint_union(k2) == family_service.matching(3, 0)

    def test_union_overflow(self):
        with pytest.raises(OrderOverflowError):
            Graph.edgeless(40).disjoint_union(Graph.edgeless(30))

    def test_join_of_cycle_and_vertex_is_wheel(self, code):
        assert code(family_service.cycle(4).join(Graph.edgeless(1))) == code(family_service.wheel(5))

    def test_join_of_independent_sets(self):
        assert Graph.edgeless(1).join(Graph.edgeless(3)) == family_service.star(4)

    def test_join_of_two_vertices(self, k2):
        assert Graph.edgeless(1).join(Graph.edgeless(1)) == k2

    def test_complement(self, p3, k3):
        assert family_service.complete(4).complement() == Graph.edgeless(4)
        assert Graph.edgeless(3).complement() == k3
        assert p3.complement() == Graph.from_edges(3, [(0, 2)])

    def test_delete_star_center(self):
        assert family_service.star(5).delete_vertices(1 << 0) == Graph.edgeless(4)

    def test_delete_path_endpoint(self, p3, p4):
        assert p4.delete_vertices(1 << 3) == p3
        assert p4.delete_vertices(1 << 0) == p3

    def test_delete_closed_neighborhood_of_hub(self):
        graph = family_service.unicyclic_star(6)
        hub = max(range(graph.n), key=graph.degree)
        assert graph.delete_vertices(graph.closed_neighborhood(hub)).n == 0

    def test_delete_nothing(self, p4):
        assert p4.delete_vertices(0) is p4

    def test_delete_compacts_labels(self):
        graph = Graph.from_edges(5, [(0, 4), (2, 4)])
        assert graph.delete_vertices(vertex_set([1, 3])) == Graph.from_edges(3, [(0, 2), (1, 2)])

    def test_delete_edge(self, p4, k2):
        assert p4.delete_edge(1, 2) == k2.disjoint_union(k2)
        with pytest.raises(NotAnEdgeError):
            p4.delete_edge(0, 2)

    def test_permute(self, p3):
        assert p3.permute([1, 0, 2]) == Graph.from_edges(3, [(0, 1), (0, 2)])
        with pytest.raises(GraphError):
            p3.permute([0, 0, 1])


class TestNeighborhoods:
    def test_star_center(self):
        assert family_service.star(4).closed_neighborhood(0) == 0b1111

    def test_isolated_vertex(self):
        assert Graph.edgeless(3).closed_neighborhood(2) == 0b100

    def test_path_endpoint(self, p4):
        assert p4.closed_neighborhood(0) == 0b11

    def test_out_of_range(self, p4):
        with pytest.raises(GraphError):
            p4.closed_neighborhood(4)

    def test_members_ascending(self):
        assert list(members(0b101001)) == [0, 3, 5]


class TestComponents:
    def test_matching(self):
        components = family_service.matching(3, 0).connected_components()
        assert components == [0b11, 0b1100, 0b110000]

    def test_path_is_connected(self):
        graph = family_service.path(5)
        assert len(graph.connected_components()) == 1
        assert graph.is_connected

    def test_edgeless(self):
        assert Graph.edgeless(4).connected_components() == [1, 2, 4, 8]

    def test_empty_graph_is_not_connected(self):
        assert not Graph.edgeless(0).is_connected
        assert Graph.edgeless(0).connected_components() == []


@pytest.mark.property_based
class TestProperties:
    @hsettings(max_examples=200, deadline=None)
    @given(graphs(max_n=8), graphs(max_n=8))
    def test_join_edge_count(self, first, second):
        joined = first.join(second)
        assert joined.size == first.size + second.size + first.n * second.n

    @hsettings(max_examples=200, deadline=None)
    @given(graphs(max_n=12))
    def test_complement_is_involution(self, graph):
        assert graph.complement().complement() == graph
        assert graph.size + graph.complement().size == graph.n * (graph.n - 1) // 2

    @hsettings(max_examples=100, deadline=None)
    @given(graphs(max_n=5), graphs(max_n=5), graphs(max_n=5))
    def test_union_associative(self, a, b, c):
        assert a.disjoint_union(b).disjoint_union(c) == a.disjoint_union(b.disjoint_union(c))

    @hsettings(max_examples=200, deadline=None)
    @given(graphs(max_n=12))
    def test_components_partition_vertices(self, graph):
        components = graph.connected_components()
        union = 0
        for component in components:
            assert union & component == 0
            union |= component
        assert union == graph.vertices
