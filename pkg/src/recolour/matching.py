"""Maximum matching in general graphs, and the optimal-colouring reduction.

A 3K1-free graph has stable sets of size at most two, so its colour classes
are single vertices or non-adjacent pairs; an optimal colouring is therefore
a maximum matching of the complement (pairs) padded with singletons, using
|V| - |matching| colours.

The matching routine is the classic alternating-BFS search with blossom
contraction.  Roots, queue order, and neighbour scans all follow ascending
vertex order, so the returned pairs are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .colouring import Colouring
from .errors import PreconditionError
from .graph import Graph, complement
from .holes import require_3k1_free


@dataclass(frozen=True)
class Matching:
    """Disjoint edges, each stored as (u, v) with u < v, sorted."""

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def validate_for(self, g: Graph) -> None:
        seen: set[int] = set()
        for u, v in self.pairs:
            if not g.has_edge(u, v):
                raise PreconditionError(f"pair ({u},{v}) is not an edge")
            if u in seen or v in seen:
                raise PreconditionError(f"vertex reused in pair ({u},{v})")
            seen.update((u, v))


def max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of ``g``."""
    n = g.vertex_count
    match = [-1] * n

    def find_augmenting(root: int) -> bool:
        p = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            hit = [False] * n
            x = a
            while True:
                x = base[x]
                hit[x] = True
                if match[x] == -1:
                    break
                x = p[match[x]]
            y = b
            while True:
                y = base[y]
                if hit[y]:
                    return y
                y = p[match[y]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = True
                in_blossom[base[match[v]]] = True
                p[v] = child
                child = match[v]
                v = p[match[v]]

        while queue:
            v = queue.popleft()
            for to in g.adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # Odd cycle through the root's tree: contract the blossom.
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        # Exposed vertex reached: flip the alternating path.
                        u = to
                        while u != -1:
                            pv = p[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)

    pairs = sorted((u, match[u]) for u in range(n) if match[u] > u)
    return Matching(tuple(pairs))


def optimal_colouring_3k1(g: Graph) -> Colouring:
    """A chi(g)-colouring of a 3K1-free graph via matching in the complement."""
    require_3k1_free(g)
    paired = max_matching(complement(g))
    n = g.vertex_count
    partner = {}
    for u, v in paired.pairs:
        partner[u] = v
        partner[v] = u
    colours = [0] * n
    k = 0
    for v in range(n):
        if colours[v]:
            continue
        k += 1
        colours[v] = k
        if v in partner:
            colours[partner[v]] = k
    return Colouring(k, tuple(colours))
