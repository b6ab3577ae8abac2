"""
Service computing σ_k: the subset-enumeration oracle for every k and the
memoized vertex-deletion recursion for σ0 and σ1
"""
from typing import Callable, Dict, List, Optional, Tuple
import logging
import threading

import numpy as np

from app.core.config import settings
from app.core.counting import Count, checked_count, ensure_within
from app.core.exceptions import GraphError
from app.models.graph import Graph, members
from app.models.schemas import ComputeResult, EdgeRemovalEffect
from app.services.graph6_service import graph6_service

logger = logging.getLogger(__name__)

PivotRule = Callable[[Graph], int]
SigmaPair = Tuple[int, int]


def max_degree_pivot(graph: Graph) -> int:
    """Vertex of maximum degree, lowest label on ties"""
    best, best_degree = 0, -1
    for v, row in enumerate(graph.adj):
        degree = row.bit_count()
        if degree > best_degree:
            best, best_degree = v, degree
    return best


class MemoTable:
    """Thread-safe map from compacted graph encoding to (σ0, σ1)"""

    def __init__(self):
        self._values: Dict[Tuple[int, Tuple[int, ...]], SigmaPair] = {}
        self._lock = threading.Lock()

    def get(self, graph: Graph) -> Optional[SigmaPair]:
        with self._lock:
            return self._values.get((graph.n, graph.adj))

    def put(self, graph: Graph, value: SigmaPair) -> None:
        with self._lock:
            self._values[(graph.n, graph.adj)] = value

    def clear(self) -> None:
        with self._lock:
            self._values.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._values)


class SigmaService:
    """Counts k-nearly independent vertex subsets"""

    def __init__(self, pivot_rule: PivotRule = max_degree_pivot, memo: Optional[MemoTable] = None):
        self.pivot_rule = pivot_rule
        self.memo = memo if memo is not None else MemoTable()

    # ==================== Oracle ====================

    def sigma_profile(self, graph: Graph) -> List[Count]:
        """
        (σ0, σ1, ..., σm) by enumerating every vertex subset once

        Induced edge counts are built over the subset lattice by doubling:
        e(S ∪ {v}) = e(S) + |N(v) ∩ S| for S below v.

        Raises:
            GuardExceededError: order above BRUTE_FORCE_MAX_N
        """
        n = graph.n
        ensure_within("subset enumeration order", n, settings.BRUTE_FORCE_MAX_N, "BRUTE_FORCE_MAX_N")
        if n == 0:
            return [1]

        total = 1 << n
        subsets = np.arange(total, dtype=np.uint32)
        ones = np.zeros(total, dtype=np.uint8)
        induced = np.zeros(total, dtype=np.uint16)
        for v in range(n):
            half = 1 << v
            ones[half:2 * half] = ones[:half] + 1
            lower_neighbors = graph.adj[v] & (half - 1)
            induced[half:2 * half] = induced[:half] + ones[subsets[:half] & lower_neighbors]

        profile = np.bincount(induced, minlength=graph.size + 1)
        return [checked_count(int(c)) for c in profile]

    def sigma_k_brute(self, graph: Graph, k: int) -> Count:
        """Number of vertex subsets inducing exactly k edges"""
        if k < 0:
            raise GraphError(f"k must be non-negative, got {k}")
        profile = self.sigma_profile(graph)
        return profile[k] if k < len(profile) else 0

    # ==================== Recursion ====================

    def sigma_pair(self, graph: Graph) -> SigmaPair:
        """(σ0, σ1) from the memoized recursion"""
        s0, s1 = self._pair(graph)
        return checked_count(s0), checked_count(s1)

    def sigma0(self, graph: Graph) -> Count:
        return self.sigma_pair(graph)[0]

    def sigma1(self, graph: Graph) -> Count:
        return self.sigma_pair(graph)[1]

    def sigma_k(self, graph: Graph, k: int) -> Count:
        """Recursion for k <= 1, oracle otherwise"""
        if k == 0:
            return self.sigma0(graph)
        if k == 1:
            return self.sigma1(graph)
        return self.sigma_k_brute(graph, k)

    def compute(self, source: str, graph: Graph, k: int) -> ComputeResult:
        """σ_k of one input graph, packaged with its graph6 and size"""
        return ComputeResult(
            source=source,
            graph6=graph6_service.emit(graph),
            n=graph.n,
            m=graph.size,
            k=k,
            value=self.sigma_k(graph, k),
        )

    def sigma1_union(self, first: Graph, second: Graph) -> Count:
        """σ1(G ⊎ H) = σ1(G)σ0(H) + σ0(G)σ1(H)"""
        g0, g1 = self._pair(first)
        h0, h1 = self._pair(second)
        return checked_count(g1 * h0 + g0 * h1)

    def _pair(self, graph: Graph) -> SigmaPair:
        if graph.n == 0:
            return 1, 0
        cached = self.memo.get(graph)
        if cached is not None:
            return cached

        components = graph.connected_components()
        if len(components) > 1:
            s0, s1 = 1, 0
            for component in components:
                c0, c1 = self._pair(graph.induced_subgraph(component))
                s0, s1 = s0 * c0, s1 * c0 + s0 * c1
        else:
            s0, s1 = self._connected_pair(graph)

        self.memo.put(graph, (s0, s1))
        return s0, s1

    def _connected_pair(self, graph: Graph) -> SigmaPair:
        if graph.n == 1:
            return 2, 0
        v = self.pivot_rule(graph)
        closed_v = graph.closed_neighborhood(v)

        without_v = self._pair(graph.delete_vertices(1 << v))
        v_isolated = self._pair(graph.delete_vertices(closed_v))
        s0 = without_v[0] + v_isolated[0]
        s1 = without_v[1] + v_isolated[1]
        # v together with exactly one neighbor u forms the single edge
        for u in members(graph.adj[v]):
            s1 += self._pair(graph.delete_vertices(closed_v | graph.closed_neighborhood(u)))[0]
        return s0, s1

    # ==================== Edge removal ====================

    def edge_removal_effect(self, graph: Graph, u: int, v: int) -> Tuple[EdgeRemovalEffect, Count, Count]:
        """
        Compare σ1 before and after deleting edge uv

        Returns:
            (effect, σ1(G), σ1(G - uv))
        """
        before = self.sigma1(graph)
        after = self.sigma1(graph.delete_edge(u, v))
        if after < before:
            effect = EdgeRemovalEffect.DECREASE
        elif after > before:
            effect = EdgeRemovalEffect.INCREASE
        else:
            effect = EdgeRemovalEffect.UNCHANGED
        return effect, before, after

    def clear_memo(self) -> None:
        size = len(self.memo)
        self.memo.clear()
        logger.debug(f"Cleared {size} memoized subgraphs")


# Global instance
sigma_service = SigmaService()
