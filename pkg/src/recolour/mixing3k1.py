"""Constructive (k+1)-mixing for 3K1-free graphs.

Given two proper colourings of a k-colourable 3K1-free graph on a shared
palette of at least chi+1 colours, recolour_path_3k1 builds an explicit walk
between them of length at most 4|V|:

  1. normalize both endpoints onto the colour classes of one optimal
     colouring (at most one recolouring per vertex each, peeling one class
     per round via a rare colour: a palette colour used at most once, which
     always exists because stable sets have at most two vertices);
  2. rename the first normalized colouring into the second (same classes,
     different names; at most two recolourings per vertex, using one spare
     colour to break renaming cycles);
  3. replay the second normalization backwards.

Tie-breaking is least-colour / least-class / least-vertex throughout, so
the produced walk is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import Colouring, Partition, is_proper
from .errors import PreconditionError
from .graph import Graph, complement
from .holes import require_3k1_free
from .matching import max_matching, optimal_colouring_3k1
from .recolouring import RecolouringSequence, RecolouringStep, apply_sequence


@dataclass(frozen=True)
class RareColourVerdict:
    colour: int
    multiplicity: int  # 0 or 1
    vertex: int | None  # set iff multiplicity is 1


@dataclass(frozen=True)
class NormalizationTrace:
    steps: tuple[RecolouringStep, ...]
    per_vertex_counts: tuple[int, ...]


def _rare_in(
    colours: list[int], vertices: set[int], palette: set[int]
) -> tuple[int, int, int | None]:
    """Least unused palette colour, else least used exactly once (with its vertex)."""
    count: dict[int, int] = {c: 0 for c in palette}
    holder: dict[int, int] = {}
    for v in vertices:
        c = colours[v]
        count[c] += 1
        holder[c] = v if c not in holder else min(holder[c], v)
    for c in sorted(palette):
        if count[c] == 0:
            return c, 0, None
    for c in sorted(palette):
        if count[c] == 1:
            return c, 1, holder[c]
    raise PreconditionError(
        "no rare colour: palette must exceed the chromatic number of a 3K1-free graph"
    )


def rare_colour(g: Graph, colouring: Colouring) -> RareColourVerdict:
    """A palette colour used at most once, preferring unused, then least.

    Guaranteed to exist when ``g`` is 3K1-free and the palette has more than
    chi(g) colours; raises PreconditionError otherwise.
    """
    if len(colouring.colours) != g.vertex_count:
        raise PreconditionError("assignment does not cover all vertices")
    if not is_proper(g, colouring):
        raise PreconditionError("rare_colour requires a proper colouring")
    c, mult, v = _rare_in(
        list(colouring.colours),
        set(range(g.vertex_count)),
        set(range(1, colouring.k + 1)),
    )
    return RareColourVerdict(c, mult, v)


def normalize_to_partition(
    g: Graph, start: Colouring, target: Partition
) -> NormalizationTrace:
    """Recolour ``start`` until its colour classes are exactly ``target``.

    ``target`` must be the class partition of an optimal colouring of the
    3K1-free graph ``g`` (all classes stable with at most two vertices) and
    the palette must have at least one colour to spare.  Each round finds a
    rare colour, settles the target class of its holder (or of the least
    vertex in a non-target class when the colour is unused), then recurses
    on the remaining classes without that colour.  No vertex moves twice.
    """
    target.validate_for(g)
    for cls in target.classes:
        if len(cls) > 2:
            raise PreconditionError(f"target class {sorted(cls)} has more than 2 vertices")
    require_3k1_free(g)
    chi = g.vertex_count - len(max_matching(complement(g)))
    if len(target) != chi:
        raise PreconditionError(
            f"target has {len(target)} classes but chi(g) = {chi}; not optimal"
        )
    if not is_proper(g, start):
        raise PreconditionError("start colouring is not proper")
    if start.k < len(target) + 1:
        raise PreconditionError(
            f"palette {start.k} too small for {len(target)} classes plus a spare"
        )

    n = g.vertex_count
    colours = list(start.colours)
    counts = [0] * n
    steps: list[RecolouringStep] = []
    active = set(range(n))
    palette = set(range(1, start.k + 1))
    remaining = set(target.classes)
    target_of = {v: cls for cls in target.classes for v in cls}

    def emit(v: int, c: int) -> None:
        for u in g.adj[v]:
            if colours[u] == c:
                raise AssertionError(f"internal: recolouring {v}->{c} clashes with {u}")
        colours[v] = c
        counts[v] += 1
        steps.append(RecolouringStep(v, c))

    while active:
        by_colour: dict[int, set[int]] = {}
        for v in active:
            by_colour.setdefault(colours[v], set()).add(v)
        current = {frozenset(s) for s in by_colour.values()}
        if current == remaining:
            break
        c, mult, u = _rare_in(colours, active, palette)
        if mult == 0:
            # Unused colour: pull the least vertex of the least misplaced class.
            for col in sorted(by_colour):
                cls = frozenset(by_colour[col])
                if cls not in remaining:
                    u = min(cls)
                    break
            emit(u, c)
        cls = target_of[u]
        for v in cls:
            if v != u:
                emit(v, c)
        active -= cls
        palette.discard(c)
        remaining.discard(cls)

    final = Colouring(start.k, tuple(colours))
    if Partition.of(final).as_sets() != target.as_sets():
        raise AssertionError("internal: normalization missed the target partition")
    return NormalizationTrace(tuple(steps), tuple(counts))


def rename_partition(
    g: Graph, start: Colouring, target: Colouring
) -> list[RecolouringStep]:
    """Steps turning ``start`` into ``target`` when both induce the same classes.

    Whole classes move one vertex at a time; a class moves directly once its
    target colour is free, and renaming cycles are broken by parking their
    least class on a spare palette colour first.  Needs strictly more
    palette colours than classes; each vertex moves at most twice.
    """
    if start.k != target.k:
        raise PreconditionError("palette sizes differ")
    if len(start.colours) != g.vertex_count or len(target.colours) != g.vertex_count:
        raise PreconditionError("assignment does not cover all vertices")
    if not is_proper(g, start) or not is_proper(g, target):
        raise PreconditionError("both colourings must be proper")
    part = Partition.of(start)
    if part.as_sets() != Partition.of(target).as_sets():
        raise PreconditionError("colourings induce different partitions")

    classes = part.classes
    cur = [start.colours[min(cls)] for cls in classes]
    tgt = [target.colours[min(cls)] for cls in classes]
    used = set(cur)
    colours = list(start.colours)
    steps: list[RecolouringStep] = []

    def move(i: int, c: int) -> None:
        for v in sorted(classes[i]):
            for u in g.adj[v]:
                if colours[u] == c:
                    raise AssertionError(f"internal: moving class to used colour {c}")
            colours[v] = c
            steps.append(RecolouringStep(v, c))
        used.discard(cur[i])
        used.add(c)
        cur[i] = c

    while True:
        moved = True
        while moved:
            moved = False
            for i in range(len(classes)):
                if cur[i] != tgt[i] and tgt[i] not in used:
                    move(i, tgt[i])
                    moved = True
                    break
        stuck = [i for i in range(len(classes)) if cur[i] != tgt[i]]
        if not stuck:
            return steps
        spare = next((c for c in range(1, start.k + 1) if c not in used), None)
        if spare is None:
            raise PreconditionError(
                "palette exhausted: renaming needs fewer classes than colours"
            )
        move(stuck[0], spare)


def recolour_path_3k1(g: Graph, start: Colouring, goal: Colouring) -> RecolouringSequence:
    """A walk from ``start`` to ``goal`` in R_{k+1}(g), length at most 4|V(g)|.

    Both colourings must be proper on the same palette, the palette must
    exceed chi(g), and ``g`` must be 3K1-free.  Precondition failures are
    reported with the stage that detected them.
    """
    if start.k != goal.k:
        raise PreconditionError(f"[input] palettes differ: {start.k} vs {goal.k}")
    if len(start.colours) != g.vertex_count or len(goal.colours) != g.vertex_count:
        raise PreconditionError("[input] assignment does not cover all vertices")
    if not is_proper(g, start):
        raise PreconditionError("[input] start colouring is not proper")
    if not is_proper(g, goal):
        raise PreconditionError("[input] goal colouring is not proper")
    try:
        canonical = optimal_colouring_3k1(g)
    except PreconditionError as exc:
        raise PreconditionError(f"[optimal-colouring] {exc}") from exc
    if start.k < canonical.k + 1:
        raise PreconditionError(
            f"[input] palette {start.k} does not exceed chi(g) = {canonical.k}"
        )
    if start.colours == goal.colours:
        return RecolouringSequence(start, ())

    classes = Partition.of(canonical)
    try:
        trace_start = normalize_to_partition(g, start, classes)
        trace_goal = normalize_to_partition(g, goal, classes)
    except PreconditionError as exc:
        raise PreconditionError(f"[normalize] {exc}") from exc

    start_norm, _ = apply_sequence(g, start, trace_start.steps)
    goal_norm, _ = apply_sequence(g, goal, trace_goal.steps)
    try:
        mid = rename_partition(g, start_norm, goal_norm)
    except PreconditionError as exc:
        raise PreconditionError(f"[rename] {exc}") from exc

    # Replay the goal normalization backwards, recomputing each step's
    # pre-state colour so the reversed walk is validated, not assumed.
    colours = list(goal.colours)
    pre_colours = []
    for v, c in trace_goal.steps:
        pre_colours.append(colours[v])
        colours[v] = c
    reversed_steps = [
        RecolouringStep(v, pre)
        for (v, _), pre in zip(reversed(trace_goal.steps), reversed(pre_colours))
    ]

    all_steps = tuple(trace_start.steps) + tuple(mid) + tuple(reversed_steps)
    final, counts = apply_sequence(g, start, all_steps)
    if final.colours != goal.colours:
        raise AssertionError("internal: composed walk missed the goal colouring")
    if any(c > 4 for c in counts) or len(all_steps) > 4 * g.vertex_count:
        raise AssertionError("internal: walk exceeds the 4|V| budget")
    return RecolouringSequence(start, all_steps)
