"""
Isomorph-free enumeration of small graphs

Orders up to MASK_ENUMERATION_MAX_N scan every upper-triangle edge mask and
keep one graph per canonical code. Larger orders extend the canonical
representatives of order n-1 by one vertex in every possible way and keep a
child only when deleting its canonical deletion vertex gives back the parent.
"""
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple
import logging
import threading

from app.core.config import settings
from app.core.counting import ensure_within
from app.models.graph import Graph
from app.models.schemas import DistributionFilter, FilterKind
from app.services.canonical_service import CanonicalCode, canonical_service, encode_code

logger = logging.getLogger(__name__)

# (canonical code, canonical representative)
GraphClass = Tuple[CanonicalCode, Graph]
# Picklable form exchanged with worker processes
_Parent = Tuple[int, Tuple[int, ...]]
_Child = Tuple[CanonicalCode, Tuple[int, ...]]


def _deletion_vertex(child: Graph, order: Sequence[int], connected: bool) -> int:
    """Last canonical vertex, or the last one that is not a cut vertex"""
    if not connected:
        return order[-1]
    for v in reversed(order):
        if child.delete_vertices(1 << v).is_connected:
            return v
    return order[-1]


def _extend_parents(n: int, parents: Sequence[_Parent], connected: bool) -> List[_Child]:
    """
    Accepted children of order n + 1 for a batch of parents

    Module-level so a process pool can run it.
    """
    accepted: List[_Child] = []
    x = n
    first_subset = 1 if connected else 0
    for parent_code, parent_adj in parents:
        for subset in range(first_subset, 1 << n):
            adj = tuple(row | ((subset >> v & 1) << x) for v, row in enumerate(parent_adj)) + (subset,)
            child = Graph._trusted(n + 1, adj)
            if not connected and not canonical_service.refine(child)[-1] >> x & 1:
                continue
            code, order = canonical_service.search(child)
            deleted = _deletion_vertex(child, order, connected)
            if deleted != x:
                reduced_code, _ = canonical_service.search(child.delete_vertices(1 << deleted))
                if reduced_code != parent_code:
                    continue
            accepted.append((encode_code(n + 1, code), child.permute(order).adj))
    return accepted


class EnumerationService:
    """One representative per isomorphism class, ordered by canonical code"""

    def __init__(self):
        self._cache: Dict[Tuple[int, bool], Tuple[GraphClass, ...]] = {}
        self._lock = threading.Lock()

    def enumerate_graphs(
        self,
        n: int,
        graph_filter: Optional[DistributionFilter] = None,
        jobs: Optional[int] = None
    ) -> List[Graph]:
        """
        Canonical representatives of every class of order n passing the filter

        Raises:
            GuardExceededError: n above ENUMERATE_ALL_MAX_N (all, size) or
                ENUMERATE_CONNECTED_MAX_N (connected)
        """
        return [graph for _, graph in self.enumerate_classes(n, graph_filter, jobs)]

    def enumerate_classes(
        self,
        n: int,
        graph_filter: Optional[DistributionFilter] = None,
        jobs: Optional[int] = None
    ) -> List[GraphClass]:
        """(canonical code, representative) pairs in canonical code order"""
        graph_filter = graph_filter or DistributionFilter()
        connected = graph_filter.kind == FilterKind.CONNECTED
        if connected:
            ensure_within("connected enumeration order", n, settings.ENUMERATE_CONNECTED_MAX_N, "ENUMERATE_CONNECTED_MAX_N")
        else:
            ensure_within("enumeration order", n, settings.ENUMERATE_ALL_MAX_N, "ENUMERATE_ALL_MAX_N")
        classes = self._classes(n, connected, jobs or settings.JOBS)
        return [(code, graph) for code, graph in classes if graph_filter.accepts(graph)]

    def count(self, n: int, graph_filter: Optional[DistributionFilter] = None) -> int:
        return len(self.enumerate_classes(n, graph_filter))

    def clear_cache(self) -> None:
        with self._lock:
            self._cache.clear()

    # ==================== Internals ====================

    def _classes(self, n: int, connected: bool, jobs: int) -> Tuple[GraphClass, ...]:
        key = (n, connected)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached

        if n < 0:
            classes: Tuple[GraphClass, ...] = ()
        elif n <= settings.MASK_ENUMERATION_MAX_N or n <= 1:
            classes = self._scan_masks(n, connected)
        else:
            parents = self._classes(n - 1, connected, jobs)
            classes = self._extend(n - 1, parents, connected, jobs)

        logger.info(
            f"Enumerated {len(classes)} {'connected ' if connected else ''}graphs of order {n}"
        )
        with self._lock:
            self._cache[key] = classes
        return classes

    def _scan_masks(self, n: int, connected: bool) -> Tuple[GraphClass, ...]:
        pairs = list(combinations(range(n), 2))
        found: Dict[CanonicalCode, Graph] = {}
        for mask in range(1 << len(pairs)):
            adj = [0] * n
            for bit, (u, v) in enumerate(pairs):
                if mask >> bit & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            graph = Graph._trusted(n, tuple(adj))
            if connected and not graph.is_connected:
                continue
            code, order = canonical_service.search(graph)
            key = encode_code(n, code)
            if key not in found:
                found[key] = graph.permute(order)
        return tuple(sorted(found.items()))

    def _extend(self, n: int, parents: Sequence[GraphClass], connected: bool, jobs: int) -> Tuple[GraphClass, ...]:
        payload: List[_Parent] = [
            (canonical_service.search(graph)[0], graph.adj) for _, graph in parents
        ]
        if jobs > 1 and len(payload) > 1:
            batches = [payload[i::jobs] for i in range(jobs)]
            logger.debug(f"Extending {len(payload)} parents of order {n} across {jobs} workers")
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                results = list(executor.map(
                    _extend_parents,
                    [n] * len(batches),
                    batches,
                    [connected] * len(batches),
                ))
        else:
            results = [_extend_parents(n, payload, connected)]

        found: Dict[CanonicalCode, Graph] = {}
        for batch in results:
            for code, adj in batch:
                found.setdefault(code, Graph._trusted(n + 1, adj))
        return tuple(sorted(found.items()))


# Global instance
enumeration_service = EnumerationService()
