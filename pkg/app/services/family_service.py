"""
Service constructing the named graph families
"""
from itertools import product
from typing import Callable, Dict, Iterator, List, Tuple
import logging

from app.models.graph import Graph
from app.models.schemas import FAMILY_PARAMETERS, FamilySpec, GraphFamily

logger = logging.getLogger(__name__)


def _path_edges(start: int, length: int) -> List[Tuple[int, int]]:
    return [(start + i, start + i + 1) for i in range(length - 1)]


class FamilyService:
    """Builds Graph instances from FamilySpec"""

    def __init__(self):
        self._builders: Dict[GraphFamily, Callable[..., Graph]] = {
            GraphFamily.PATH: self.path,
            GraphFamily.CYCLE: self.cycle,
            GraphFamily.COMPLETE: self.complete,
            GraphFamily.STAR: self.star,
            GraphFamily.COMPLETE_BIPARTITE: self.complete_bipartite,
            GraphFamily.WHEEL: self.wheel,
            GraphFamily.BROOM: self.broom,
            GraphFamily.LOLLIPOP: self.lollipop,
            GraphFamily.TADPOLE: self.tadpole,
            GraphFamily.UNICYCLIC_STAR: self.unicyclic_star,
            GraphFamily.MATCHING: self.matching,
            GraphFamily.EDGELESS: Graph.edgeless,
        }

    def construct(self, spec: FamilySpec) -> Graph:
        """
        Build the graph a spec names

        Args:
            spec: validated family spec

        Returns:
            Graph on vertices 0..order-1
        """
        graph = self._builders[spec.family](*spec.params)
        logger.debug(f"Constructed {spec}: n={graph.n}, m={graph.size}")
        return graph

    def instances(self, max_order: int) -> Iterator[FamilySpec]:
        """Every valid spec of every family with order <= max_order"""
        for family, names in FAMILY_PARAMETERS.items():
            for params in product(range(max_order + 1), repeat=len(names)):
                try:
                    spec = FamilySpec.of(family, *params)
                except ValueError:
                    continue
                if spec.order <= max_order:
                    yield spec

    def path(self, n: int) -> Graph:
        return Graph.from_edges(n, _path_edges(0, n))

    def cycle(self, n: int) -> Graph:
        return Graph.from_edges(n, _path_edges(0, n) + [(n - 1, 0)])

    def complete(self, n: int) -> Graph:
        return Graph.edgeless(n).complement()

    def star(self, n: int) -> Graph:
        """K_{1,n-1} with center 0"""
        return Graph.from_edges(n, [(0, v) for v in range(1, n)])

    def complete_bipartite(self, r: int, s: int) -> Graph:
        return Graph.edgeless(r).join(Graph.edgeless(s))

    def wheel(self, n: int) -> Graph:
        """W_n = C_{n-1} + K_1"""
        return self.cycle(n - 1).join(Graph.edgeless(1))

    def broom(self, n: int, k: int) -> Graph:
        """Path 0..k-1 with n-k pendant vertices on vertex k-1"""
        edges = _path_edges(0, k) + [(k - 1, v) for v in range(k, n)]
        return Graph.from_edges(n, edges)

    def lollipop(self, n: int, k: int) -> Graph:
        """Path 0..k-1 with a clique on k..n-1 fully joined to vertex k-1"""
        clique = [(u, v) for u in range(k, n) for v in range(u + 1, n)]
        edges = _path_edges(0, k) + clique + [(k - 1, v) for v in range(k, n)]
        return Graph.from_edges(n, edges)

    def tadpole(self, n: int, k: int) -> Graph:
        """Path 0..k-1 plus a path k..n-1 whose two ends both attach to vertex k-1"""
        edges = _path_edges(0, k) + _path_edges(k, n - k) + [(k - 1, k), (k - 1, n - 1)]
        return Graph.from_edges(n, edges)

    def unicyclic_star(self, n: int) -> Graph:
        """K_{1,n-1} plus the edge between the two lowest leaves"""
        return Graph.from_edges(n, [(0, v) for v in range(1, n)] + [(1, 2)])

    def matching(self, m: int, r: int) -> Graph:
        """mK_2 ∪ rK_1"""
        return Graph.from_edges(2 * m + r, [(2 * i, 2 * i + 1) for i in range(m)])

    def edgeless(self, n: int) -> Graph:
        return Graph.edgeless(n)


# Global instance
family_service = FamilyService()
