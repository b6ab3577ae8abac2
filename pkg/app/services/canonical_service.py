"""
Canonical labeling for small graphs

The canonical code is the lexicographically smallest column-major
upper-triangle adjacency code over every labeling that respects the ordered
equitable degree partition. The partition is label-invariant, so the minimum
is an isomorphism invariant, and equal codes mean equal adjacency matrices.
"""
from typing import List, Optional, Tuple
import logging

from app.core.config import settings
from app.core.counting import ensure_within
from app.models.graph import Graph, VertexSet, members

logger = logging.getLogger(__name__)

CanonicalCode = bytes


def code_bits(n: int) -> int:
    return n * (n - 1) // 2


def encode_code(n: int, code: int) -> CanonicalCode:
    """Order byte followed by the big-endian adjacency code"""
    return bytes([n]) + code.to_bytes((code_bits(n) + 7) // 8, "big")


def _are_twins(graph: Graph, u: int, w: int) -> bool:
    # Swapping twins is an automorphism.
    return graph.adj[u] & ~(1 << w) == graph.adj[w] & ~(1 << u)


class CanonicalService:
    """Canonical codes and canonical representatives"""

    def refine(self, graph: Graph) -> List[VertexSet]:
        """
        Ordered equitable partition by iterated neighbor counts

        Cells are ordered by their signature (previous cell, counts into
        every cell), which depends on structure only.
        """
        n = graph.n
        color = [0] * n
        count = 1 if n else 0
        while True:
            cells = [0] * count
            for v in range(n):
                cells[color[v]] |= 1 << v
            signatures = [
                (color[v],) + tuple((graph.adj[v] & cell).bit_count() for cell in cells)
                for v in range(n)
            ]
            distinct = sorted(set(signatures))
            if len(distinct) == count:
                return cells
            rank = {signature: i for i, signature in enumerate(distinct)}
            color = [rank[signature] for signature in signatures]
            count = len(distinct)

    def search(self, graph: Graph) -> Tuple[int, List[int]]:
        """
        (minimal code, labeling reaching it)

        The labeling lists old vertices in canonical position order.

        Raises:
            GuardExceededError: order above CANONICAL_MAX_N
        """
        n = graph.n
        ensure_within("canonical labeling order", n, settings.CANONICAL_MAX_N, "CANONICAL_MAX_N")
        if n == 0:
            return 0, []

        slot_cells: List[VertexSet] = []
        for cell in self.refine(graph):
            slot_cells.extend([cell] * cell.bit_count())

        adj = graph.adj
        best_trail: Optional[List[int]] = None
        best_order: List[int] = []

        def descend(depth: int, order: List[int], unplaced: VertexSet, column: List[int], trail: List[int]):
            nonlocal best_trail, best_order
            code = trail[-1]
            if best_trail is not None and code > best_trail[depth]:
                return
            if depth == n:
                if best_trail is None or code < best_trail[n]:
                    best_trail, best_order = list(trail), list(order)
                return

            candidates = list(members(slot_cells[depth] & unplaced))
            low = min(column[v] for v in candidates)
            tried: List[int] = []
            for v in candidates:
                if column[v] != low or any(_are_twins(graph, v, w) for w in tried):
                    continue
                tried.append(v)
                row = adj[v]
                next_column = [(c << 1) | (row >> u & 1) for u, c in enumerate(column)]
                order.append(v)
                trail.append((code << depth) | low)
                descend(depth + 1, order, unplaced & ~(1 << v), next_column, trail)
                trail.pop()
                order.pop()

        # trail[d] is the code prefix once d vertices are placed
        descend(0, [], graph.vertices, [0] * n, [0])
        return best_trail[n], best_order

    def canonical_code(self, graph: Graph) -> CanonicalCode:
        code, _ = self.search(graph)
        return encode_code(graph.n, code)

    def canonical_labeling(self, graph: Graph) -> List[int]:
        """Old vertex placed at each canonical position"""
        return self.search(graph)[1]

    def canonical_form(self, graph: Graph) -> Graph:
        """Canonical representative: the graph relabeled by its canonical labeling"""
        return graph.permute(self.canonical_labeling(graph))

    def are_isomorphic(self, first: Graph, second: Graph) -> bool:
        if first.n != second.n or first.size != second.size:
            return False
        if first.degree_sequence() != second.degree_sequence():
            return False
        return self.canonical_code(first) == self.canonical_code(second)


# Global instance
canonical_service = CanonicalService()
