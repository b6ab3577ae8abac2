from collections import Counter

import networkx as nx
import pytest

from app.core.config import settings
from app.core.exceptions import GuardExceededError
from app.models.graph import Graph
from app.models.schemas import DistributionFilter, FilterKind
from app.services.canonical_service import canonical_service
from app.services.enumeration_service import EnumerationService, enumeration_service
from app.services.graph6_service import from_networkx

ALL_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

CONNECTED = DistributionFilter(kind=FilterKind.CONNECTED)


def atlas_codes(n: int, connected: bool = False) -> Counter:
    """Canonical codes of the networkx graph atlas (all graphs up to 7 vertices)"""
    codes = Counter()
    for nx_graph in nx.graph_atlas_g():
        if nx_graph.number_of_nodes() != n:
            continue
        if connected and not nx.is_connected(nx_graph):
            continue
        codes[canonical_service.canonical_code(from_networkx(nx_graph))] += 1
    return codes


@pytest.mark.parametrize("n", range(0, 7))
def test_counts_by_mask_scan(n):
    assert enumeration_service.count(n) == ALL_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_connected_counts(n):
    assert enumeration_service.count(n, CONNECTED) == CONNECTED_COUNTS[n]


def test_no_connected_graph_on_zero_vertices():
    assert enumeration_service.count(0, CONNECTED) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_graph_atlas(n):
    ours = Counter(code for code, _ in enumeration_service.enumerate_classes(n))
    assert ours == atlas_codes(n)


def test_size_filter():
    graphs = enumeration_service.enumerate_graphs(4, DistributionFilter.parse("size:3"))
    assert len(graphs) == 3
    assert all(graph.size == 3 for graph in graphs)


def test_order_and_representatives():
    classes = enumeration_service.enumerate_classes(5)
    codes = [code for code, _ in classes]
    assert codes == sorted(codes)
    for code, graph in classes:
        assert canonical_service.canonical_form(graph) == graph
        assert canonical_service.canonical_code(graph) == code


def test_guards():
    with pytest.raises(GuardExceededError):
        enumeration_service.enumerate_graphs(settings.ENUMERATE_ALL_MAX_N + 1)
    with pytest.raises(GuardExceededError):
        enumeration_service.enumerate_graphs(settings.ENUMERATE_CONNECTED_MAX_N + 1, CONNECTED)


class TestOrderlyGeneration:
    """Lower the mask-scan threshold so small orders go through the extension step"""

    @pytest.fixture
    def service(self, monkeypatch):
        monkeypatch.setattr(settings, "MASK_ENUMERATION_MAX_N", 3)
        return EnumerationService()

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_all_graphs(self, service, n):
        assert len(service.enumerate_graphs(n)) == ALL_COUNTS[n]
        assert service.enumerate_classes(n) == enumeration_service.enumerate_classes(n)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_connected_graphs(self, service, n):
        assert service.enumerate_classes(n, CONNECTED) == enumeration_service.enumerate_classes(n, CONNECTED)

    def test_workers_do_not_change_result(self, service):
        parallel = EnumerationService()
        assert parallel.enumerate_classes(6, jobs=2) == service.enumerate_classes(6, jobs=1)
        assert parallel.enumerate_classes(6, CONNECTED, jobs=3) == service.enumerate_classes(6, CONNECTED)


@pytest.mark.slow
def test_order_seven_matches_atlas():
    ours = Counter(code for code, _ in enumeration_service.enumerate_classes(7))
    assert sum(ours.values()) == ALL_COUNTS[7]
    assert ours == atlas_codes(7)
    assert enumeration_service.count(7, CONNECTED) == CONNECTED_COUNTS[7]


@pytest.mark.slow
def test_order_eight_count():
    assert enumeration_service.count(8) == ALL_COUNTS[8]
    assert enumeration_service.count(8, DistributionFilter.parse("size:4")) == 11


@pytest.mark.slow
def test_order_seven_parallel_is_deterministic():
    assert EnumerationService().enumerate_classes(7, jobs=2) == enumeration_service.enumerate_classes(7)


def test_empty_graph_representative():
    assert enumeration_service.enumerate_graphs(0) == [Graph.edgeless(0)]
