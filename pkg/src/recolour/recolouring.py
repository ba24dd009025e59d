"""The recolouring graph R_k(G) and walks inside it.

Vertices of R_k(G) are the proper k-colourings of G; two are adjacent when
they differ on exactly one vertex.  Everything here works on the implicit
graph: states are canonically encoded as fixed-radix integers (vertex-major,
colour-1 digits) for dedup, successors are generated on demand, and all
scan orders are fixed so runs are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .colouring import Colouring, is_proper
from .errors import PreconditionError, ResourceLimitError
from .graph import Graph

COLOURING_LIMIT = 2_000_000
DIAMETER_LIMIT = 20_000


class RecolouringStep(NamedTuple):
    vertex: int
    new_colour: int


@dataclass(frozen=True)
class RecolouringSequence:
    """A start colouring plus ordered single-vertex steps: a walk in R_k(G)."""

    start: Colouring
    steps: tuple[RecolouringStep, ...]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class RecolouringGraphSummary:
    colouring_count: int
    component_count: int
    component_sizes: tuple[int, ...]
    frozen_count: int
    diameter_per_component: tuple[int | None, ...]
    is_mixing: bool


def enumerate_colourings(g: Graph, k: int, limit: int = COLOURING_LIMIT) -> list[Colouring]:
    """All proper k-colourings in lexicographic order of the colour vector.

    Raises ResourceLimitError (carrying the partial count) if more than
    ``limit`` colourings would be produced.
    """
    n = g.vertex_count
    earlier = [tuple(u for u in g.adj[v] if u < v) for v in range(n)]
    out: list[Colouring] = []
    colours = [0] * n

    def place(v: int) -> None:
        if v == n:
            if len(out) >= limit:
                raise ResourceLimitError(
                    f"more than {limit} colourings", partial_count=len(out), limit=limit
                )
            out.append(Colouring(k, tuple(colours)))
            return
        for c in range(1, k + 1):
            if all(colours[u] != c for u in earlier[v]):
                colours[v] = c
                place(v + 1)
        colours[v] = 0

    place(0)
    return out


def recolouring_neighbours(g: Graph, colouring: Colouring) -> Iterator[tuple[RecolouringStep, Colouring]]:
    """Proper single-vertex changes of a proper colouring, in scan order."""
    cs = colouring.colours
    k = colouring.k
    for v in range(g.vertex_count):
        blocked = {cs[u] for u in g.adj[v]}
        cur = cs[v]
        for c in range(1, k + 1):
            if c != cur and c not in blocked:
                yield RecolouringStep(v, c), colouring.recoloured(v, c)


def _encode(colours: tuple[int, ...], k: int) -> int:
    code = 0
    for c in reversed(colours):
        code = code * k + (c - 1)
    return code


def _check_state(g: Graph, k: int, colouring: Colouring, name: str) -> None:
    if colouring.k != k:
        raise PreconditionError(f"{name} has palette {colouring.k}, expected {k}")
    if not is_proper(g, colouring):
        raise PreconditionError(f"{name} is not a proper colouring")


def recolouring_graph(
    g: Graph,
    k: int,
    max_colourings: int = COLOURING_LIMIT,
    diameter_limit: int = DIAMETER_LIMIT,
) -> RecolouringGraphSummary:
    """Explore all of R_k(g): components, frozen colourings, diameters.

    Per-component diameters are computed by BFS from every state while the
    component has at most ``diameter_limit`` states, and reported as None
    beyond that.
    """
    states = enumerate_colourings(g, k, max_colourings)
    index = {_encode(c.colours, k): i for i, c in enumerate(states)}
    n = g.vertex_count
    adj_local = g.adj
    weights = [k**v for v in range(n)]

    def neighbour_indices(i: int) -> list[int]:
        cs = states[i].colours
        code = _encode(cs, k)
        out = []
        for v in range(n):
            cur = cs[v]
            blocked = {cs[u] for u in adj_local[v]}
            base = code - (cur - 1) * weights[v]
            for c in range(1, k + 1):
                if c != cur and c not in blocked:
                    out.append(index[base + (c - 1) * weights[v]])
        return out

    comp_of = [-1] * len(states)
    component_sizes: list[int] = []
    diameters: list[int | None] = []
    frozen_count = 0
    for start in range(len(states)):
        if comp_of[start] != -1:
            continue
        comp_id = len(component_sizes)
        members = [start]
        comp_of[start] = comp_id
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in neighbour_indices(i):
                if comp_of[j] == -1:
                    comp_of[j] = comp_id
                    members.append(j)
                    queue.append(j)
        component_sizes.append(len(members))
        if len(members) == 1:
            # A size-1 component has no moves at all: a frozen colouring.
            frozen_count += 1
        if len(members) <= diameter_limit:
            diameters.append(_component_diameter(members, neighbour_indices))
        else:
            diameters.append(None)

    return RecolouringGraphSummary(
        colouring_count=len(states),
        component_count=len(component_sizes),
        component_sizes=tuple(component_sizes),
        frozen_count=frozen_count,
        diameter_per_component=tuple(diameters),
        is_mixing=len(component_sizes) <= 1,
    )


def _component_diameter(members, neighbour_indices) -> int:
    local = {i: pos for pos, i in enumerate(members)}
    nbrs = [[local[j] for j in neighbour_indices(i)] for i in members]
    size = len(members)
    diameter = 0
    for src in range(size):
        dist = [-1] * size
        dist[src] = 0
        queue = deque([src])
        far = 0
        while queue:
            x = queue.popleft()
            far = dist[x]
            for y in nbrs[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        diameter = max(diameter, far)
    return diameter


def bfs_distance(
    g: Graph,
    k: int,
    a: Colouring,
    b: Colouring,
    max_states: int = COLOURING_LIMIT,
) -> int | None:
    """Shortest walk length from ``a`` to ``b`` in R_k(g); None if separated."""
    _check_state(g, k, a, "start colouring")
    _check_state(g, k, b, "goal colouring")
    if a.colours == b.colours:
        return 0
    n = g.vertex_count
    adj_local = g.adj
    goal = b.colours
    seen = {a.colours}
    frontier = [a.colours]
    dist = 0
    while frontier:
        dist += 1
        nxt = []
        for cs in frontier:
            for v in range(n):
                cur = cs[v]
                blocked = {cs[u] for u in adj_local[v]}
                for c in range(1, k + 1):
                    if c == cur or c in blocked:
                        continue
                    child = cs[:v] + (c,) + cs[v + 1 :]
                    if child in seen:
                        continue
                    if child == goal:
                        return dist
                    if len(seen) >= max_states:
                        raise ResourceLimitError(
                            f"more than {max_states} states explored",
                            states=len(seen),
                            limit=max_states,
                        )
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
    return None


def apply_sequence(
    g: Graph, start: Colouring, steps: list[RecolouringStep] | tuple[RecolouringStep, ...]
) -> tuple[Colouring, list[int]]:
    """Validate and apply a walk; returns the final colouring and per-vertex counts.

    Every intermediate colouring must be proper and every step must change
    its vertex's colour; violations report the failing step index.
    """
    if not is_proper(g, start):
        raise PreconditionError("start colouring is not proper")
    n = g.vertex_count
    k = start.k
    colours = list(start.colours)
    counts = [0] * n
    for idx, (v, c) in enumerate(steps):
        if not 0 <= v < n:
            raise PreconditionError(f"step {idx}: vertex {v} out of range")
        if not 1 <= c <= k:
            raise PreconditionError(f"step {idx}: colour {c} outside palette 1..{k}")
        if colours[v] == c:
            raise PreconditionError(f"step {idx}: no-op recolouring of vertex {v}")
        for u in g.adj[v]:
            if colours[u] == c:
                raise PreconditionError(
                    f"step {idx}: recolouring vertex {v} to {c} clashes with {u}"
                )
        colours[v] = c
        counts[v] += 1
    return Colouring(k, tuple(colours)), counts
