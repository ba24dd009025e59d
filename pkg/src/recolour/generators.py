"""Seeded random instance generators for tests and the CLI.

All generators take an explicit integer seed and are deterministic for a
fixed seed, standard library hash behaviour notwithstanding (only
``random.Random`` is used, never set iteration order).
"""

from __future__ import annotations

import random
from itertools import combinations

from .colouring import Colouring
from .errors import PreconditionError
from .graph import Graph, complement


def random_3k1_free(n: int, edge_bias: float = 0.5, seed: int = 0) -> Graph:
    """Complement of a seeded random triangle-free graph.

    Candidate pairs are visited in a seeded random order and inserted with
    probability ``edge_bias`` unless they would close a triangle, so the
    complement has no stable set of three vertices.
    """
    if n < 1:
        raise PreconditionError("need at least one vertex")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    masks = [0] * n
    edges = []
    for u, v in pairs:
        if rng.random() < edge_bias and not masks[u] & masks[v]:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            edges.append((u, v))
    return complement(Graph.from_edges(n, edges))


def random_chordal(n: int, density: float = 0.5, seed: int = 0) -> Graph:
    """A random chordal graph grown backwards from an elimination ordering.

    Vertices join in reverse order; each new vertex is connected to a clique
    of the existing graph grown greedily with probability ``density`` per
    vertex, so the identity order is a perfect elimination ordering.
    """
    if n < 1:
        raise PreconditionError("need at least one vertex")
    rng = random.Random(seed)
    adj = [set() for _ in range(n)]
    for v in range(n - 2, -1, -1):
        candidates = set(range(v + 1, n))
        while candidates and rng.random() < density:
            u = rng.choice(sorted(candidates))
            adj[v].add(u)
            adj[u].add(v)
            candidates = (candidates - {u}) & adj[u]
    return Graph(n, tuple(tuple(sorted(s)) for s in adj))


def random_colouring(g: Graph, k: int, seed: int = 0) -> Colouring:
    """A random proper k-colouring, by backtracking over shuffled colours."""
    rng = random.Random(seed)
    n = g.vertex_count
    colours = [0] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        order = list(range(1, k + 1))
        rng.shuffle(order)
        blocked = {colours[u] for u in g.adj[v] if u < v}
        for c in order:
            if c not in blocked:
                colours[v] = c
                if place(v + 1):
                    return True
        colours[v] = 0
        return False

    if not place(0):
        raise PreconditionError(f"graph has no proper {k}-colouring")
    return Colouring(k, tuple(colours))
