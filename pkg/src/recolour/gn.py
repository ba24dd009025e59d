"""The recursive family G_n: weakly chordal, chi = 2n+1, frozen at 3n+1 colours.

G_1 is a fixed 8-vertex graph: four "hub" vertices w, x, y, z joined in the
4-cycle wx, xz, zy, yw (wz and xy are non-edges), and four single-vertex
"blobs" B_w, B_x, B_y, B_z where each hub is complete to the three blobs
other than its own and anticomplete to its own.  G_n substitutes a copy of
G_{n-1} for each blob, keeping that adjacency pattern; blobs are pairwise
anticomplete.  Vertex counts follow |V_n| = 4 + 4|V_{n-1}|, i.e.
(7*4^n - 4)/3.

Two labellings exist for the base graph: build_g1 keeps the original
drawing's order (hubs at 0, 2, 4, 7), while build_gn(1) uses the canonical
order w, x, y, z, B_w, B_x, B_y, B_z used by the recursion.  The two are
isomorphic via [0, 2, 4, 7, 6, 5, 1, 3].
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import Colouring, is_frozen, is_proper
from .errors import PreconditionError, ResourceLimitError
from .graph import Graph
from .holes import WC_VERTEX_LIMIT, is_weakly_chordal

GN_VERTEX_LIMIT = 9556  # G_6

_G1_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (1, 7),
    (2, 3), (2, 6), (2, 7),
    (3, 4),
    (4, 5), (4, 6), (4, 7),
    (5, 7),
    (6, 7),
)

# Canonical order -> build_g1 order (w, x, y, z, B_w, B_x, B_y, B_z).
G1_CANONICAL_TO_ORIGINAL = (0, 2, 4, 7, 6, 5, 1, 3)


@dataclass(frozen=True)
class Blob:
    """One substituted copy: its global vertex ids and its own structure."""

    vertices: tuple[int, ...]
    inner: GnStructure | None  # None for the single-vertex blobs of G_1


@dataclass(frozen=True)
class GnStructure:
    n: int
    graph: Graph
    hubs: tuple[int, int, int, int]  # (w, x, y, z)
    blobs: tuple[Blob, Blob, Blob, Blob]  # (B_w, B_x, B_y, B_z)


def gn_vertex_count(n: int) -> int:
    if n < 1:
        raise PreconditionError("level must be >= 1")
    return (7 * 4**n - 4) // 3


def build_g1() -> GnStructure:
    """The base graph in its original labelling: 8 vertices, 16 edges."""
    graph = Graph.from_edges(8, _G1_EDGES)
    blobs = tuple(Blob((v,), None) for v in (6, 5, 1, 3))
    return GnStructure(1, graph, (0, 2, 4, 7), blobs)


def _check_size(n: int, vertex_limit: int) -> None:
    size = gn_vertex_count(n)
    if size > vertex_limit:
        raise ResourceLimitError(
            f"G_{n} has {size} vertices, limit is {vertex_limit}",
            vertices=size,
            limit=vertex_limit,
        )


def build_gn(n: int, vertex_limit: int = GN_VERTEX_LIMIT) -> GnStructure:
    """G_n in canonical vertex order: w, x, y, z, then blobs B_w..B_z recursively."""
    _check_size(n, vertex_limit)

    def build(level: int) -> GnStructure:
        hub_edges = [(0, 1), (1, 3), (2, 3), (0, 2)]  # wx, xz, zy, yw
        if level == 1:
            edges = list(hub_edges)
            for blob_i, v in enumerate((4, 5, 6, 7)):
                edges.extend((hub, v) for hub in range(4) if hub != blob_i)
            blobs = tuple(Blob((v,), None) for v in (4, 5, 6, 7))
            return GnStructure(1, Graph.from_edges(8, edges), (0, 1, 2, 3), blobs)
        inner = build(level - 1)
        s = inner.graph.vertex_count
        edges = list(hub_edges)
        blobs = []
        for blob_i in range(4):
            off = 4 + blob_i * s
            edges.extend((off + u, off + v) for u, v in inner.graph.edges())
            for hub in range(4):
                if hub != blob_i:
                    edges.extend((hub, off + j) for j in range(s))
            blobs.append(Blob(tuple(range(off, off + s)), inner))
        graph = Graph.from_edges(4 + 4 * s, edges)
        return GnStructure(level, graph, (0, 1, 2, 3), tuple(blobs))

    return build(n)


def _low_colour_vector(n: int) -> list[int]:
    # Level 0 stands for the single vertex inside a base blob.
    if n == 0:
        return [1]
    inner = _low_colour_vector(n - 1)
    return [2 * n, 2 * n + 1, 2 * n + 1, 2 * n] + inner * 4


def colour_gn(n: int, vertex_limit: int = GN_VERTEX_LIMIT) -> Colouring:
    """The canonical proper (2n+1)-colouring of build_gn(n).

    All four blobs are coloured identically by colour_gn(n-1); hubs w, z get
    colour 2n and x, y get 2n+1 (wz and xy are non-edges, so this is proper).
    """
    _check_size(n, vertex_limit)
    return Colouring(2 * n + 1, tuple(_low_colour_vector(n)))


def _frozen_vector(n: int) -> list[int]:
    if n == 0:
        return [1]
    inner = _frozen_vector(n - 1)
    top = 3 * (n - 1) + 1
    hubs = [3 * n - 2, 3 * n - 1, 3 * n, 3 * n + 1]
    out = list(hubs)
    for hub_colour in hubs:
        # Each blob reuses the recursive frozen colouring with its top colour
        # renamed to the colour of the blob's own (anticomplete) hub.
        out.extend(hub_colour if c == top else c for c in inner)
    return out


def frozen_colouring_gn(n: int, vertex_limit: int = GN_VERTEX_LIMIT) -> Colouring:
    """The frozen (3n+1)-colouring of build_gn(n).

    Hubs get colours (3n-2, 3n-1, 3n, 3n+1); blob B_v carries the recursive
    frozen colouring on 3n-2 colours with its top colour renamed to v's hub
    colour, so every closed neighbourhood sees all 3n+1 colours.
    """
    _check_size(n, vertex_limit)
    return Colouring(3 * n + 1, tuple(_frozen_vector(n)))


def clique_gn(n: int, vertex_limit: int = GN_VERTEX_LIMIT) -> tuple[int, ...]:
    """A clique of size 2n+1 in build_gn(n): hubs w, x plus a clique of B_z."""
    _check_size(n, vertex_limit)

    def pick(level: int) -> tuple[int, ...]:
        if level == 1:
            return (0, 1, 7)  # w, x, and the B_z vertex (adjacent to both)
        off = 4 + 3 * gn_vertex_count(level - 1)
        return (0, 1) + tuple(off + v for v in pick(level - 1))

    return pick(n)


def g1_three_colouring() -> Colouring:
    """The 3-colouring of build_g1 in its original labelling."""
    return Colouring(3, (2, 1, 3, 1, 3, 1, 1, 2))


def g1_frozen_colouring() -> Colouring:
    """The frozen 4-colouring of build_g1 in its original labelling."""
    return Colouring(4, (1, 4, 2, 3, 4, 2, 1, 3))


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str


@dataclass(frozen=True)
class CounterexampleReport:
    n: int
    k: int
    palette: int
    vertex_count: int
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


def verify_counterexample(
    n: int,
    wc_limit: int = WC_VERTEX_LIMIT,
    vertex_limit: int = GN_VERTEX_LIMIT,
) -> CounterexampleReport:
    """Certify that G_n is (2n+1)-chromatic yet not (3n+1)-mixing.

    The checks: the canonical colouring is a proper (2n+1)-colouring, the
    witness clique has 2n+1 pairwise-adjacent vertices (so chi = omega),
    the (3n+1)-colouring is proper and frozen, and a second (3n+1)-colouring
    exists, which makes the recolouring graph at 3n+1 colours disconnected.
    The weakly-chordal check runs only within ``wc_limit`` vertices and is
    reported as skipped otherwise.
    """
    structure = build_gn(n, vertex_limit)
    g = structure.graph
    k = 2 * n + 1
    palette = 3 * n + 1
    checks: list[CheckResult] = []

    def record(name: str, ok: bool, detail: str) -> None:
        checks.append(CheckResult(name, "pass" if ok else "fail", detail))

    low = colour_gn(n, vertex_limit)
    ok = is_proper(g, low) and set(low.colours) == set(range(1, k + 1))
    record("proper-k-colouring", ok, f"canonical colouring uses {k} colours")

    clique = clique_gn(n, vertex_limit)
    ok = len(set(clique)) == k and all(
        g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :]
    )
    record("clique-of-size-k", ok, f"witness clique {clique[:6]}{'...' if k > 6 else ''}")

    frozen = frozen_colouring_gn(n, vertex_limit)
    ok = is_proper(g, frozen) and frozen.k == palette and is_frozen(g, frozen)
    record("frozen-colouring", ok, f"frozen at {palette} colours")

    swapped = Colouring(
        palette, tuple(2 if c == 1 else 1 if c == 2 else c for c in frozen.colours)
    )
    ok = is_proper(g, swapped) and swapped.colours != frozen.colours
    record(
        "another-colouring-exists",
        ok,
        "a colour transposition gives a second colouring, so the "
        f"{palette}-recolouring graph is disconnected",
    )

    if g.vertex_count <= wc_limit:
        verdict = is_weakly_chordal(g, wc_limit)
        record("weakly-chordal", verdict.is_weakly_chordal, "hole/antihole scan clean")
    else:
        checks.append(
            CheckResult(
                "weakly-chordal",
                "skipped",
                f"{g.vertex_count} vertices exceed the {wc_limit}-vertex scan limit",
            )
        )

    return CounterexampleReport(n, k, palette, g.vertex_count, tuple(checks))
