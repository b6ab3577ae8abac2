"""
Good edges, good graphs and the join closure that generates them
"""
from collections import deque
from typing import Dict, List, Set
import logging

from app.core.config import settings
from app.core.counting import ensure_within
from app.core.exceptions import NotAnEdgeError
from app.models.graph import Graph
from app.models.schemas import DistributionFilter, FilterKind, GoodnessReport, HCharacterizationResult
from app.services.canonical_service import CanonicalCode, canonical_service
from app.services.enumeration_service import enumeration_service
from app.services.graph6_service import graph6_service

logger = logging.getLogger(__name__)


class GoodGraphService:
    """Predicates for good graphs and the closure that builds them"""

    def is_good_edge(self, graph: Graph, u: int, v: int) -> bool:
        """
        N[u] ∪ N[v] = V

        Raises:
            NotAnEdgeError: uv is not an edge of graph
        """
        if not graph.has_edge(u, v):
            raise NotAnEdgeError(f"({u}, {v}) is not an edge")
        return graph.closed_neighborhood(u) | graph.closed_neighborhood(v) == graph.vertices

    def goodness(self, graph: Graph) -> GoodnessReport:
        bad_edges = [(u, v) for u, v in graph.edges() if not self.is_good_edge(graph, u, v)]
        connected = graph.is_connected
        return GoodnessReport(
            graph=graph,
            bad_edges=bad_edges,
            is_connected=connected,
            is_good=connected and not bad_edges,
        )

    def is_good(self, graph: Graph) -> bool:
        return self.goodness(graph).is_good

    def generate_H(self, max_order: int) -> Dict[CanonicalCode, Graph]:
        """
        Join closure of K1 and every K_{r,s}, up to max_order vertices

        Seeds are K1 and K_{r,s} with 1 <= r <= s, r + s <= max_order. The
        closure adds G + H for members G, H and G + (edgeless ℓ) for
        1 <= ℓ <= max_order - |G|, breadth-first until nothing new appears.

        Returns:
            Canonical code -> canonical representative

        Raises:
            GuardExceededError: max_order above H_GENERATE_MAX_ORDER
        """
        ensure_within("good-graph closure order", max_order, settings.H_GENERATE_MAX_ORDER, "H_GENERATE_MAX_ORDER")
        members: Dict[CanonicalCode, Graph] = {}
        frontier: deque = deque()

        def admit(graph: Graph) -> None:
            code = canonical_service.canonical_code(graph)
            if code not in members:
                members[code] = canonical_service.canonical_form(graph)
                frontier.append(members[code])

        if max_order >= 1:
            admit(Graph.edgeless(1))
        for r in range(1, max_order // 2 + 1):
            for s in range(r, max_order - r + 1):
                admit(Graph.edgeless(r).join(Graph.edgeless(s)))

        while frontier:
            graph = frontier.popleft()
            for ell in range(1, max_order - graph.n + 1):
                admit(graph.join(Graph.edgeless(ell)))
            for other in list(members.values()):
                if graph.n + other.n <= max_order:
                    admit(graph.join(other))

        logger.info(f"Good-graph closure up to order {max_order}: {len(members)} members")
        return members

    def good_graphs(self, max_order: int) -> Dict[CanonicalCode, Graph]:
        """Good graphs of order 1..max_order found by filtering the connected enumeration"""
        found: Dict[CanonicalCode, Graph] = {}
        connected = DistributionFilter(kind=FilterKind.CONNECTED)
        for n in range(1, max_order + 1):
            for code, graph in enumeration_service.enumerate_classes(n, connected):
                if self.is_good(graph):
                    found[code] = graph
        return found

    def verify_H_characterization(self, max_order: int) -> HCharacterizationResult:
        """
        Compare the join closure with the exhaustively filtered good graphs

        Raises:
            GuardExceededError: max_order above H_VERIFY_MAX_ORDER
        """
        ensure_within("characterization order", max_order, settings.H_VERIFY_MAX_ORDER, "H_VERIFY_MAX_ORDER")
        closure = self.generate_H(max_order)
        good = self.good_graphs(max_order)
        closure_codes: Set[CanonicalCode] = set(closure)
        good_codes: Set[CanonicalCode] = set(good)

        missing = [graph6_service.emit(good[code]) for code in sorted(good_codes - closure_codes)]
        extra = [graph6_service.emit(closure[code]) for code in sorted(closure_codes - good_codes)]
        result = HCharacterizationResult(
            max_order=max_order,
            equal=not missing and not extra,
            closure_size=len(closure_codes),
            good_size=len(good_codes),
            missing_from_closure=missing,
            extra_in_closure=extra,
        )
        if result.equal:
            logger.info(f"Closure matches {result.good_size} good graphs up to order {max_order}")
        else:
            logger.warning(
                f"Closure mismatch up to order {max_order}: "
                f"{len(missing)} missing, {len(extra)} extra"
            )
        return result

    def members_as_list(self, max_order: int) -> List[Graph]:
        closure = self.generate_H(max_order)
        return [closure[code] for code in sorted(closure)]


# Global instance
good_graph_service = GoodGraphService()
