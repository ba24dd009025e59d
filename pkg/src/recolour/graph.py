"""Undirected simple graphs on contiguous 0-indexed vertices.

The Graph value is immutable and hashable; every algorithm in the package
treats it as read-only, so values can be shared freely across threads.
Adjacency is stored as a tuple of sorted neighbour tuples; hot loops convert
to per-vertex bitmasks via :func:`adjacency_masks`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import PreconditionError


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph with vertices 0 .. vertex_count-1."""

    vertex_count: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise PreconditionError("vertex_count must be non-negative")
        if len(self.adj) != self.vertex_count:
            raise PreconditionError("adjacency length does not match vertex_count")
        for u, nbrs in enumerate(self.adj):
            prev = -1
            for v in nbrs:
                if not 0 <= v < self.vertex_count:
                    raise PreconditionError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise PreconditionError(f"self-loop at {u}")
                if v <= prev:
                    raise PreconditionError(f"adjacency of {u} not sorted/distinct")
                prev = v
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u not in self.adj[v]:
                    raise PreconditionError(f"asymmetric edge {u}-{v}")

    @staticmethod
    def from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list; rejects self-loops and duplicates."""
        if vertex_count < 0:
            raise PreconditionError("vertex_count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise PreconditionError(f"edge ({u},{v}) out of range")
            if u == v:
                raise PreconditionError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise PreconditionError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)


def adjacency_masks(g: Graph) -> list[int]:
    """Per-vertex neighbour bitmasks (bit v set iff v is a neighbour)."""
    masks = []
    for nbrs in g.adj:
        m = 0
        for v in nbrs:
            m |= 1 << v
        masks.append(m)
    return masks


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complement(g: Graph) -> Graph:
    """The graph with the same vertices and exactly the missing edges."""
    n = g.vertex_count
    full = (1 << n) - 1
    adj = []
    for u, m in enumerate(adjacency_masks(g)):
        adj.append(tuple(iter_bits(full & ~m & ~(1 << u))))
    return Graph(n, tuple(adj))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep``, plus the order-preserving old->new id map."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.vertex_count:
            raise PreconditionError(f"vertex {v} out of range")
    remap = {old: new for new, old in enumerate(kept)}
    adj = tuple(
        tuple(remap[w] for w in g.adj[old] if w in remap) for old in kept
    )
    return Graph(len(kept), adj), remap


def substitute(g: Graph, v: int, h: Graph) -> Graph:
    """Replace vertex ``v`` of ``g`` by the whole graph ``h``.

    Every vertex of ``h`` becomes adjacent to exactly the former neighbours
    of ``v``.  Vertex order: the vertices of ``g - v`` keep their relative
    order (ids above ``v`` shift down by one), then ``h``'s vertices are
    appended in order.
    """
    if not 0 <= v < g.vertex_count:
        raise PreconditionError(f"vertex {v} out of range")
    if h.vertex_count == 0:
        raise PreconditionError("substituted graph must be nonempty")
    base = g.vertex_count - 1

    def old_id(u: int) -> int:
        return u if u < v else u - 1

    edges: list[tuple[int, int]] = []
    for a, b in g.edges():
        if v in (a, b):
            continue
        edges.append((old_id(a), old_id(b)))
    for a, b in h.edges():
        edges.append((base + a, base + b))
    for w in g.adj[v]:
        for j in range(h.vertex_count):
            edges.append((old_id(w), base + j))
    return Graph.from_edges(base + h.vertex_count, edges)
