"""Exact desk-scale solvers: maximum clique and chromatic number.

Both are exponential-time searches guarded by a vertex limit.  Search
order is fixed (ascending vertex ids, ascending colours) so results are
reproducible run to run.
"""

from __future__ import annotations

from .colouring import Colouring
from .errors import ResourceLimitError
from .graph import Graph, adjacency_masks, iter_bits

EXACT_VERTEX_LIMIT = 64


def _check_limit(g: Graph, limit: int, what: str) -> None:
    if g.vertex_count > limit:
        raise ResourceLimitError(
            f"{what} needs {g.vertex_count} vertices, limit is {limit}",
            vertices=g.vertex_count,
            limit=limit,
        )


def _greedy_bound(masks: list[int], cand: int) -> int:
    """Greedy colouring of the candidate set; an upper bound on its clique size."""
    colour_masks: list[int] = []
    for v in iter_bits(cand):
        bit = 1 << v
        for i, cm in enumerate(colour_masks):
            if not masks[v] & cm:
                colour_masks[i] = cm | bit
                break
        else:
            colour_masks.append(bit)
    return len(colour_masks)


def max_clique(g: Graph, limit: int = EXACT_VERTEX_LIMIT) -> tuple[int, ...]:
    """A maximum clique, found by branch and bound with a colouring bound."""
    _check_limit(g, limit, "exact clique search")
    n = g.vertex_count
    if n == 0:
        return ()
    masks = adjacency_masks(g)
    best: list[int] = []

    def extend(current: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(current) > len(best):
                best = current[:]
            return
        if len(current) + _greedy_bound(masks, cand) <= len(best):
            return
        while cand:
            if len(current) + bin(cand).count("1") <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            current.append(v)
            extend(current, cand & masks[v])
            current.pop()

    extend([], (1 << n) - 1)
    return tuple(best)


def _colourable_with(masks: list[int], order: list[int], k: int) -> list[int] | None:
    """Backtracking k-colourability along ``order`` with symmetry breaking."""
    n = len(order)
    assign = [0] * n  # colour per position, 0 = unset
    pos_of = {v: i for i, v in enumerate(order)}

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = 0
        for w in iter_bits(masks[v]):
            j = pos_of[w]
            if j < i:
                forbidden |= 1 << assign[j]
        top = min(k, used + 1)  # first use of a new colour: only the next one
        for c in range(1, top + 1):
            if forbidden & (1 << c):
                continue
            assign[i] = c
            if place(i + 1, max(used, c)):
                return True
        assign[i] = 0
        return False

    return assign if place(0, 0) else None


def chromatic_number_exact(
    g: Graph, limit: int = EXACT_VERTEX_LIMIT
) -> tuple[int, Colouring]:
    """chi(g) and a witness colouring, by iterative deepening from the clique bound."""
    _check_limit(g, limit, "exact chromatic search")
    n = g.vertex_count
    if n == 0:
        return 0, Colouring(0, ())
    masks = adjacency_masks(g)
    clique = max_clique(g, limit)
    # Searching with clique vertices first forces their colours immediately,
    # which prunes hard; remaining vertices follow in ascending order.
    order = list(clique) + [v for v in range(n) if v not in set(clique)]
    k = max(len(clique), 1)
    while True:
        assign = _colourable_with(masks, order, k)
        if assign is not None:
            colours = [0] * n
            for i, v in enumerate(order):
                colours[v] = assign[i]
            return k, Colouring(k, tuple(colours))
        k += 1
