"""Colourings and colour-class partitions.

Colours are 1-indexed (1..k) to match the usual drawing convention;
vertices are 0-indexed.  A Colouring is total: every vertex gets a colour.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph


@dataclass(frozen=True)
class Colouring:
    """A palette size ``k`` and a total vertex -> colour assignment."""

    k: int
    colours: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise PreconditionError("palette size must be non-negative")
        for v, c in enumerate(self.colours):
            if not 1 <= c <= self.k:
                raise PreconditionError(
                    f"vertex {v} has colour {c} outside palette 1..{self.k}"
                )

    def colour_of(self, v: int) -> int:
        return self.colours[v]

    def recoloured(self, v: int, colour: int) -> Colouring:
        """Copy with vertex ``v`` set to ``colour``."""
        if not 1 <= colour <= self.k:
            raise PreconditionError(f"colour {colour} outside palette 1..{self.k}")
        cs = list(self.colours)
        cs[v] = colour
        return Colouring(self.k, tuple(cs))


@dataclass(frozen=True)
class Partition:
    """Colour classes with names forgotten, ordered by least member."""

    classes: tuple[frozenset[int], ...]

    @staticmethod
    def of(colouring: Colouring) -> Partition:
        by_colour: dict[int, set[int]] = {}
        for v, c in enumerate(colouring.colours):
            by_colour.setdefault(c, set()).add(v)
        classes = sorted((frozenset(s) for s in by_colour.values()), key=min)
        return Partition(tuple(classes))

    def __len__(self) -> int:
        return len(self.classes)

    def class_containing(self, v: int) -> frozenset[int]:
        for cls in self.classes:
            if v in cls:
                return cls
        raise PreconditionError(f"vertex {v} not covered by partition")

    def as_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(self.classes)

    def validate_for(self, g: Graph) -> None:
        """Require disjoint stable classes covering V(g) exactly."""
        seen: set[int] = set()
        for cls in self.classes:
            for v in cls:
                if not 0 <= v < g.vertex_count:
                    raise PreconditionError(f"vertex {v} out of range")
                if v in seen:
                    raise PreconditionError(f"vertex {v} in two classes")
                seen.add(v)
            members = sorted(cls)
            for i, u in enumerate(members):
                for w in members[i + 1 :]:
                    if g.has_edge(u, w):
                        raise PreconditionError(
                            f"class {members} is not stable: edge {u}-{w}"
                        )
        if len(seen) != g.vertex_count:
            raise PreconditionError("partition does not cover all vertices")


def is_proper(g: Graph, colouring: Colouring) -> bool:
    """True iff no edge is monochromatic."""
    if len(colouring.colours) != g.vertex_count:
        raise PreconditionError("assignment does not cover all vertices")
    cs = colouring.colours
    for u, v in g.edges():
        if cs[u] == cs[v]:
            return False
    return True


def is_frozen(g: Graph, colouring: Colouring) -> bool:
    """True iff every closed neighbourhood sees all k colours.

    Equivalently: no single vertex can be properly recoloured, i.e. the
    colouring is an isolated vertex of the recolouring graph.
    """
    if not is_proper(g, colouring):
        raise PreconditionError("is_frozen requires a proper colouring")
    cs = colouring.colours
    k = colouring.k
    for v in range(g.vertex_count):
        seen = {cs[v]}
        for u in g.adj[v]:
            seen.add(cs[u])
        if len(seen) != k:
            return False
    return True
