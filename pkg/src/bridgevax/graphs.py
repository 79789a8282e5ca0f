"""Immutable simple undirected graphs with dense 0-based node IDs.

Edge-list text format: one ``u v`` pair of nonnegative integers per
line, whitespace-separated; lines starting with ``#`` or ``%`` are
comments.  Self-loops are dropped and duplicate edges collapsed at
ingestion.  Node count is one past the largest ID seen, so gaps in the
input IDs become isolated nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator


class GraphParseError(ValueError):
    """Malformed edge-list input (carries the 1-based line number)."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adjacency lists are strictly ascending."""

    adjacency: tuple[tuple[int, ...], ...]
    name: str | None = None

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: Iterable[tuple[int, int]],
        name: str | None = None,
    ) -> Graph:
        """Build a graph from an edge iterable.

        Self-loops are dropped, duplicates collapsed, direction ignored.
        Endpoints must lie in ``[0, node_count)``.
        """
        if node_count < 0:
            raise ValueError(f"node_count must be >= 0, got {node_count}")
        neighbor_sets: list[set[int]] = [set() for _ in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(
                    f"edge ({u}, {v}) out of range for {node_count} nodes"
                )
            if u == v:
                continue
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
        return cls(adjacency=adjacency, name=name)

    def degree(self, v: int) -> int:
        """Number of neighbors of ``v``."""
        self._check_node(v)
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return self.adjacency[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in (u, v) order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def _check_node(self, v: int) -> None:
        if not (0 <= v < len(self.adjacency)):
            raise ValueError(
                f"node {v} out of range for {len(self.adjacency)} nodes"
            )


@dataclass(frozen=True)
class ComponentLabeling:
    """Connected-component labels, dense and 0-based.

    The component containing the lowest unlabeled node ID gets the next
    label, so labelings are deterministic.
    """

    labels: tuple[int, ...]
    component_count: int = field(default=0)


def parse_edge_list(text: str, name: str | None = None) -> Graph:
    """Parse edge-list text into a :class:`Graph`.

    Empty input yields the empty graph.  A malformed line (token count
    other than two, non-integer token, negative ID) raises
    :class:`GraphParseError` with the line number.
    """
    edges: list[tuple[int, int]] = []
    max_id = -1
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in "#%":
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise GraphParseError(
                line_number, f"expected two node IDs, got {len(tokens)} tokens"
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(
                line_number, f"non-integer node ID in {stripped!r}"
            ) from None
        if u < 0 or v < 0:
            raise GraphParseError(line_number, f"negative node ID in {stripped!r}")
        edges.append((u, v))
        if u > max_id:
            max_id = u
        if v > max_id:
            max_id = v
    return Graph.from_edges(max_id + 1, edges, name=name)


def load_edge_list(path, name: str | None = None) -> Graph:
    """Read and parse an edge-list file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_edge_list(text, name=name)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: ``u v`` with u < v, sorted by (u, v)."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def write_edge_list(g: Graph, dest: IO[str]) -> None:
    dest.write(serialize_edge_list(g))


def neighborhood_graph(g: Graph, v: int) -> Graph:
    """Subgraph induced on the neighbors of ``v``.

    ``v`` itself and its incident edges are excluded; the neighbors are
    relabeled 0..deg(v)-1 in ascending original-ID order.
    """
    nbrs = g.neighbors(v)
    index = {w: i for i, w in enumerate(nbrs)}
    nbr_set = set(nbrs)
    edges = [
        (index[u], index[w])
        for u in nbrs
        for w in g.adjacency[u]
        if w in nbr_set and u < w
    ]
    return Graph.from_edges(len(nbrs), edges)


def connected_components(g: Graph) -> ComponentLabeling:
    """Label connected components by breadth-first traversal."""
    n = g.node_count
    labels = [-1] * n
    count = 0
    for start in range(n):
        if labels[start] != -1:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if labels[w] == -1:
                    labels[w] = count
                    queue.append(w)
        count += 1
    return ComponentLabeling(labels=tuple(labels), component_count=count)
