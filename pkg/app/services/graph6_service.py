"""
graph6 interchange: parse and emit through networkx's codec
"""
from typing import IO, Iterator, List
import logging

import networkx as nx
from networkx.readwrite.graph6 import data_to_n

from app.core.exceptions import Graph6FormatError, OrderOverflowError
from app.models.graph import MAX_ORDER, Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


def strip_graph6_header(text: str) -> str:
    """
    Remove optional '>>graph6<<' header and whitespace.
    """
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.n))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Convert a simple networkx graph; vertices are numbered in node order"""
    if isinstance(nx_graph, (nx.DiGraph, nx.MultiGraph)):
        nx_graph = nx.Graph(nx_graph)
    index = {node: i for i, node in enumerate(nx_graph.nodes())}
    return Graph.from_edges(
        len(index),
        [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
    )


class Graph6Service:
    """Reads and writes graphs in graph6 format"""

    def parse(self, text: str) -> Graph:
        """
        Parse one graph6 string

        Raises:
            Graph6FormatError: empty text, characters outside 63..126, bad length
            OrderOverflowError: encoded order above 64
        """
        s = strip_graph6_header(text)
        if not s:
            raise Graph6FormatError("Empty graph6 string")
        raw = s.encode("ascii") if s.isascii() else b""
        if not raw or any(c < 63 or c > 126 for c in raw):
            raise Graph6FormatError(f"graph6 characters must be in range 63..126: {s!r}")

        try:
            n, _ = data_to_n([c - 63 for c in raw])
        except IndexError:
            raise Graph6FormatError(f"Truncated graph6 header: {s!r}")
        if n > MAX_ORDER:
            raise OrderOverflowError(f"graph6 order {n} exceeds the {MAX_ORDER}-vertex cap")

        try:
            nx_graph = nx.from_graph6_bytes(raw)
        except (nx.NetworkXError, ValueError, IndexError) as e:
            raise Graph6FormatError(f"Invalid graph6 {s!r}: {e}")
        return from_networkx(nx_graph)

    def emit(self, graph: Graph) -> str:
        """graph6 string without header or newline"""
        data = nx.to_graph6_bytes(to_networkx(graph), nodes=range(graph.n), header=False)
        return data.decode("ascii").strip()

    def read_lines(self, stream: IO[str]) -> Iterator[Graph]:
        """Parse newline-delimited graph6, skipping blank lines"""
        for number, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                yield self.parse(line)
            except Graph6FormatError as e:
                raise Graph6FormatError(f"line {number}: {e}")

    def read_file(self, path: str) -> List[Graph]:
        with open(path, "r", encoding="ascii") as f:
            graphs = list(self.read_lines(f))
        logger.info(f"Read {len(graphs)} graphs from {path}")
        return graphs


# Global instance
graph6_service = Graph6Service()
