import networkx as nx
import pytest

from app.core.exceptions import GuardExceededError
from app.models.graph import Graph
from app.services.canonical_service import canonical_service, encode_code
from app.services.family_service import family_service
from app.services.graph6_service import to_networkx

from conftest import random_graph


def test_relabeled_path_has_same_code(p4, code):
    relabeled = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert code(p4) == code(relabeled)


def test_different_sizes_differ(k3, p3, code):
    assert code(k3) != code(p3)


def test_different_degree_sequences_differ(code):
    assert code(family_service.cycle(4)) != code(family_service.star(4))


def test_regular_graphs_of_same_degree(code):
    # C6 and 2K3 are both 2-regular on six vertices
    two_triangles = family_service.complete(3).disjoint_union(family_service.complete(3))
    assert code(family_service.cycle(6)) != code(two_triangles)


def test_code_layout():
    assert encode_code(3, 0b111) == bytes([3, 0b111])
    assert canonical_service.canonical_code(Graph.edgeless(0)) == bytes([0])
    assert len(canonical_service.canonical_code(family_service.cycle(8))) == 1 + 4


def test_canonical_form_is_fixed_point():
    graph = family_service.tadpole(7, 3)
    form = canonical_service.canonical_form(graph)
    assert canonical_service.canonical_form(form) == form
    assert canonical_service.canonical_code(form) == canonical_service.canonical_code(graph)


def test_refine_orders_cells_by_structure():
    cells = canonical_service.refine(family_service.star(5))
    assert sorted(cell.bit_count() for cell in cells) == [1, 4]
    cells = canonical_service.refine(family_service.path(5))
    assert len(cells) == 3


def test_guard():
    with pytest.raises(GuardExceededError):
        canonical_service.canonical_code(Graph.edgeless(11))


@pytest.mark.property_based
def test_permutation_invariance(rng):
    for _ in range(300):
        n = rng.randint(1, 8)
        graph = random_graph(rng, n, rng.random())
        order = list(range(n))
        rng.shuffle(order)
        permuted = graph.permute(order)
        assert canonical_service.canonical_code(permuted) == canonical_service.canonical_code(graph)
        assert canonical_service.canonical_form(permuted) == canonical_service.canonical_form(graph)


@pytest.mark.property_based
def test_agrees_with_networkx_isomorphism(rng):
    for _ in range(400):
        n = rng.randint(1, 7)
        m = rng.randint(0, n * (n - 1) // 2)
        first = nx.gnm_random_graph(n, m, seed=rng.randrange(1 << 30))
        second = nx.gnm_random_graph(n, m, seed=rng.randrange(1 << 30))
        g = Graph.from_edges(n, first.edges())
        h = Graph.from_edges(n, second.edges())
        same_code = canonical_service.canonical_code(g) == canonical_service.canonical_code(h)
        assert same_code == nx.is_isomorphic(first, second)
        assert canonical_service.are_isomorphic(g, h) == same_code


@pytest.mark.property_based
def test_vertex_transitive_graphs():
    petersen = nx.petersen_graph()
    graph = Graph.from_edges(10, petersen.edges())
    relabeled = graph.permute([3, 7, 1, 9, 0, 5, 2, 8, 6, 4])
    assert canonical_service.canonical_code(graph) == canonical_service.canonical_code(relabeled)
    assert nx.is_isomorphic(to_networkx(canonical_service.canonical_form(graph)), petersen)
