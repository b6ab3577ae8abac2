"""
Immutable simple undirected graph on vertices 0..n-1

Adjacency is stored as one neighbor bitmask per vertex and vertex subsets are
plain int bitmasks (VertexSet), so unions, intersections and popcounts are
single machine-word operations for every supported order.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from app.core.exceptions import GraphError, NotAnEdgeError, OrderOverflowError

MAX_ORDER = 64

VertexSet = int
Edge = Tuple[int, int]


# ==================== VertexSet helpers ====================

def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Bitmask with the given vertices set"""
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def members(bits: VertexSet) -> Iterator[int]:
    """Vertices of a bitmask in ascending order"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def popcount(bits: VertexSet) -> int:
    return bits.bit_count()


# ==================== Graph ====================

@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; adj[v] is the neighbor bitmask of v"""
    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Order must be non-negative, got {self.n}")
        if self.n > MAX_ORDER:
            raise OrderOverflowError(f"Order {self.n} exceeds the {MAX_ORDER}-vertex cap")
        if len(self.adj) != self.n:
            raise GraphError(f"Expected {self.n} adjacency masks, got {len(self.adj)}")
        mask = full_set(self.n)
        for v, row in enumerate(self.adj):
            if row & ~mask:
                raise GraphError(f"Vertex {v} has neighbors outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"Self-loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"Adjacency is not symmetric for pair ({v}, {u})")

    @classmethod
    def _trusted(cls, n: int, adj: Tuple[int, ...]) -> "Graph":
        # Skips validation; callers guarantee the invariants.
        graph = object.__new__(cls)
        object.__setattr__(graph, "n", n)
        object.__setattr__(graph, "adj", adj)
        return graph

    # ---------- constructors ----------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """
        Build a graph from an edge list

        Duplicate pairs (in either orientation) collapse to one edge.

        Raises:
            OrderOverflowError: n > 64
            GraphError: endpoint out of range or self-loop
        """
        if n > MAX_ORDER:
            raise OrderOverflowError(f"Order {n} exceeds the {MAX_ORDER}-vertex cap")
        if n < 0:
            raise GraphError(f"Order must be non-negative, got {n}")
        adj = [0] * n
        for edge in edges:
            u, v = edge
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"Self-loop ({u}, {v}) is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        if n > MAX_ORDER:
            raise OrderOverflowError(f"Order {n} exceeds the {MAX_ORDER}-vertex cap")
        return cls._trusted(n, (0,) * n)

    # ---------- basic queries ----------

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    @property
    def size(self) -> int:
        """Number of edges m"""
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v in lexicographic order"""
        return [
            (u, v)
            for u in range(self.n)
            for v in members(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def degree_sequence(self) -> List[int]:
        """Degrees sorted in non-increasing order"""
        return sorted((row.bit_count() for row in self.adj), reverse=True)

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> VertexSet:
        """N[v] = N(v) ∪ {v}"""
        if not 0 <= v < self.n:
            raise GraphError(f"Vertex {v} is not in 0..{self.n - 1}")
        return self.adj[v] | (1 << v)

    def induced_edge_count(self, subset: VertexSet) -> int:
        """Number of edges of the subgraph induced by subset"""
        return sum((self.adj[v] & subset).bit_count() for v in members(subset)) // 2

    # ---------- connectivity ----------

    def connected_components(self) -> List[VertexSet]:
        """Maximal connected vertex sets ordered by smallest member"""
        components = []
        remaining = self.vertices
        adj = self.adj
        while remaining:
            component = frontier = remaining & -remaining
            while frontier:
                reached = 0
                for v in members(frontier):
                    reached |= adj[v]
                frontier = reached & ~component
                component |= frontier
            components.append(component)
            remaining &= ~component
        return components

    @property
    def is_connected(self) -> bool:
        """The empty graph counts as disconnected"""
        return self.n > 0 and len(self.connected_components()) == 1

    # ---------- derived graphs ----------

    def delete_vertices(self, removed: VertexSet) -> "Graph":
        """
        Induced subgraph on V(G) minus removed

        Remaining vertices are relabeled 0..n-|removed|-1 keeping their order.
        """
        keep = self.vertices & ~removed
        if keep == self.vertices:
            return self
        kept = list(members(keep))
        position = {v: i for i, v in enumerate(kept)}
        adj = tuple(
            sum(1 << position[u] for u in members(self.adj[v] & keep))
            for v in kept
        )
        return Graph._trusted(len(kept), adj)

    def induced_subgraph(self, subset: VertexSet) -> "Graph":
        return self.delete_vertices(self.vertices & ~subset)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise NotAnEdgeError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def complement(self) -> "Graph":
        mask = self.vertices
        return Graph._trusted(
            self.n,
            tuple(~row & mask & ~(1 << v) for v, row in enumerate(self.adj))
        )

    def disjoint_union(self, other: "Graph") -> "Graph":
        """G ⊎ H with the vertices of H shifted by |V(G)|"""
        order = self.n + other.n
        if order > MAX_ORDER:
            raise OrderOverflowError(f"Union order {order} exceeds the {MAX_ORDER}-vertex cap")
        return Graph._trusted(order, self.adj + tuple(row << self.n for row in other.adj))

    def join(self, other: "Graph") -> "Graph":
        """G + H: disjoint union plus every edge between V(G) and V(H)"""
        order = self.n + other.n
        if order > MAX_ORDER:
            raise OrderOverflowError(f"Join order {order} exceeds the {MAX_ORDER}-vertex cap")
        left = self.vertices
        right = other.vertices << self.n
        return Graph._trusted(
            order,
            tuple(row | right for row in self.adj)
            + tuple((row << self.n) | left for row in other.adj)
        )

    def permute(self, order: Sequence[int]) -> "Graph":
        """Relabel so that new vertex i is old vertex order[i]"""
        if sorted(order) != list(range(self.n)):
            raise GraphError(f"{list(order)} is not a permutation of 0..{self.n - 1}")
        position = [0] * self.n
        for new, old in enumerate(order):
            position[old] = new
        return Graph._trusted(
            self.n,
            tuple(
                sum(1 << position[u] for u in members(self.adj[old]))
                for old in order
            )
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size}, edges={self.edges()})"
