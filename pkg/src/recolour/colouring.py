"""Colourings, vertex-freedom predicates, path classes and recolouring sequences.

Colours are the integers ``1..k``; a colouring is total.  Properness is always
checked, never assumed.  With respect to a colouring of a graph with maximum
degree D:

* a vertex is *locked* when D distinct colours appear on its neighbours;
* a non-locked vertex is *free*;
* a free vertex is *superfree* when some colour other than D+1 is absent from
  the vertex and its whole neighbourhood (those colours are the witness).

A colouring is *frozen* when every vertex already sees all k-1 other colours
on its neighbourhood, i.e. no single vertex can be recoloured at all.  A
colouring with palette D+1 is in *reduced form* when every vertex carrying
colour D+1 is locked and so are all its neighbours; two D+1-coloured vertices
are then always at distance at least 3.

A recolouring sequence is an ordered list of single-vertex colour changes;
applied to a start colouring every intermediate colouring must be proper and
every step must actually change a colour.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator

from .errors import (
    ColouringParseError,
    ImproperInputError,
    ImproperIntermediateError,
    NoOpStepError,
    SequenceParseError,
)
from .graph import Graph


@dataclass(frozen=True)
class Colouring:
    """Total assignment of colours ``1..k`` to vertices ``0..n-1``."""

    k: int
    colours: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("palette size must be at least 1")
        for v, c in enumerate(self.colours):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has colour {c} outside 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.colours)

    def of(self, v: int) -> int:
        return self.colours[v]

    def with_colour(self, v: int, colour: int) -> "Colouring":
        cols = list(self.colours)
        cols[v] = colour
        return Colouring(self.k, tuple(cols))

    def uses(self, colour: int) -> bool:
        return colour in self.colours

    def used_colours(self) -> set[int]:
        return set(self.colours)


def is_proper(g: Graph, c: Colouring) -> bool:
    """True iff no edge is monochromatic."""
    if c.n != g.n:
        raise ValueError(f"colouring covers {c.n} vertices, graph has {g.n}")
    return all(c.colours[u] != c.colours[v] for u, v in g.edges)


def require_proper(g: Graph, c: Colouring, role: str = "colouring") -> None:
    if not is_proper(g, c):
        raise ImproperInputError(f"{role} is not proper")


def _neighbour_colours(g: Graph, c: Colouring, v: int) -> set[int]:
    return {c.colours[u] for u in g.adjacency[v]}


@dataclass(frozen=True)
class VertexState:
    """Freedom classification of one vertex; ``witness`` lists the colours
    below the scratch colour that are absent from the closed neighbourhood."""

    locked: bool
    witness: tuple[int, ...]

    @property
    def free(self) -> bool:
        return not self.locked

    @property
    def superfree(self) -> bool:
        return bool(self.witness)


def vertex_state(g: Graph, c: Colouring, v: int) -> VertexState:
    """Locked / free / superfree state of ``v`` under a proper colouring.

    Locked takes precedence: a locked vertex reports no witness even when the
    palette is larger than max_degree + 1 and spare colours exist.
    """
    require_proper(g, c)
    delta = g.max_degree
    nb = _neighbour_colours(g, c, v)
    if len(nb) == delta:
        return VertexState(True, ())
    closed = nb | {c.colours[v]}
    witness = tuple(
        col for col in range(1, c.k + 1) if col != delta + 1 and col not in closed
    )
    return VertexState(False, witness)


def is_frozen(g: Graph, c: Colouring) -> bool:
    """True iff every vertex sees all k-1 other colours on its neighbours."""
    require_proper(g, c)
    return all(len(_neighbour_colours(g, c, v)) == c.k - 1 for v in range(g.n))


def is_reduced_form(g: Graph, c: Colouring) -> bool:
    """True iff every vertex coloured D+1 is locked along with its neighbours.

    Palette must be exactly max_degree + 1.  When true, any two D+1-coloured
    vertices are at distance >= 3; that consequence is asserted.
    """
    require_proper(g, c)
    delta = g.max_degree
    if c.k != delta + 1:
        raise ValueError(f"reduced form needs palette {delta + 1}, got {c.k}")
    top = [v for v in range(g.n) if c.colours[v] == delta + 1]
    locked = [len(_neighbour_colours(g, c, v)) == delta for v in range(g.n)]
    for v in top:
        if not locked[v] or not all(locked[u] for u in g.adjacency[v]):
            return False
    for v in top:
        assert not any(
            u in top for nb in g.adjacency[v] for u in g.adjacency[nb] if u != v
        ), "reduced form implies top-coloured vertices at distance >= 3"
    return True


class PathClass(Enum):
    NONE = "none"
    NEARLY_LOCKED = "nearly-locked"
    FULLY_LOCKED = "fully-locked"
    NICE = "nice"


def classify_path(
    g: Graph, c: Colouring, path: list[int], locked_scope: str = "path"
) -> PathClass:
    """Strongest class of ``path``: fully locked > nice > nearly locked > none.

    A path is nearly locked when both endvertices are locked and carry colour
    D+1; fully locked adds that every path vertex is locked; nice instead
    requires at least one free vertex while the endvertices and their
    neighbours are the only locked vertices on the path.  ``locked_scope``
    picks the reading of "their neighbours": ``"path"`` admits only the path
    neighbours of the endvertices, ``"graph"`` admits any path vertex adjacent
    to an endvertex in the graph.
    """
    require_proper(g, c)
    if locked_scope not in ("path", "graph"):
        raise ValueError("locked_scope must be 'path' or 'graph'")
    if not path:
        raise ValueError("path must contain at least one vertex")
    if len(set(path)) != len(path):
        raise ValueError("path vertices must be distinct")
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise ValueError(f"path is not connected in the graph at ({u}, {v})")

    delta = g.max_degree
    if c.k != delta + 1:
        raise ValueError(f"path classes need palette {delta + 1}, got {c.k}")
    locked = {v: len(_neighbour_colours(g, c, v)) == delta for v in path}
    ends = (path[0], path[-1])
    nearly = all(locked[e] and c.colours[e] == delta + 1 for e in ends)
    if not nearly:
        return PathClass.NONE
    if all(locked[v] for v in path):
        return PathClass.FULLY_LOCKED

    if locked_scope == "path":
        allowed = set(ends)
        if len(path) >= 2:
            allowed.update((path[1], path[-2]))
    else:
        allowed = {
            v
            for v in path
            if v in ends or any(g.has_edge(v, e) for e in ends)
        }
    nice = any(not locked[v] for v in path) and all(
        v in allowed for v in path if locked[v]
    )
    return PathClass.NICE if nice else PathClass.NEARLY_LOCKED


@dataclass(frozen=True)
class RecolouringSequence:
    """Ordered ``(vertex, new_colour)`` steps; a walk in the space of colourings."""

    steps: tuple[tuple[int, int], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.steps)

    def __add__(self, other: "RecolouringSequence") -> "RecolouringSequence":
        return RecolouringSequence(self.steps + other.steps)

    @cached_property
    def recolour_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for v, _ in self.steps:
            counts[v] = counts.get(v, 0) + 1
        return counts


def apply_sequence(g: Graph, start: Colouring, seq: RecolouringSequence) -> Colouring:
    """Apply ``seq`` to ``start``, validating every intermediate colouring.

    Raises NoOpStepError when a step does not change a colour and
    ImproperIntermediateError when a step creates a monochromatic edge; both
    carry the 0-based step index.
    """
    require_proper(g, start, "start colouring")
    cols = list(start.colours)
    for i, (v, colour) in enumerate(seq):
        if not 0 <= v < g.n:
            raise ValueError(f"step {i}: vertex {v} out of range")
        if not 1 <= colour <= start.k:
            raise ValueError(f"step {i}: colour {colour} outside 1..{start.k}")
        if cols[v] == colour:
            raise NoOpStepError(i)
        for u in g.adjacency[v]:
            if cols[u] == colour:
                raise ImproperIntermediateError(i, f"edge ({u}, {v}) becomes monochromatic")
        cols[v] = colour
    return Colouring(start.k, tuple(cols))


def colouring_to_text(c: Colouring) -> str:
    """Colouring file format: line ``k``, then one line of space-separated colours."""
    return f"{c.k}\n{' '.join(str(col) for col in c.colours)}\n"


def colouring_from_text(text: str) -> Colouring:
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 2:
        raise ColouringParseError("expected two lines: palette size, then colours")
    try:
        k = int(lines[0])
    except ValueError:
        raise ColouringParseError(f"palette line is not an integer: {lines[0]!r}") from None
    try:
        cols = tuple(int(tok) for tok in lines[1].split())
    except ValueError:
        raise ColouringParseError("colour line must be space-separated integers") from None
    try:
        return Colouring(k, cols)
    except ValueError as exc:
        raise ColouringParseError(str(exc)) from None


def sequence_to_text(seq: RecolouringSequence) -> str:
    """Sequence file format: header ``steps: N``, then ``N`` lines ``v c``."""
    lines = [f"steps: {len(seq)}"]
    lines.extend(f"{v} {c}" for v, c in seq)
    return "\n".join(lines) + "\n"


def sequence_from_text(text: str) -> RecolouringSequence:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("steps:"):
        raise SequenceParseError("expected header 'steps: N'")
    try:
        count = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise SequenceParseError(f"bad step count in header: {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != count:
        raise SequenceParseError(f"header promised {count} steps, found {len(body)}")
    steps = []
    for i, raw in enumerate(body):
        parts = raw.split()
        if len(parts) != 2:
            raise SequenceParseError(f"step {i}: expected 'v c', got {raw!r}")
        try:
            steps.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise SequenceParseError(f"step {i}: expected integers, got {raw!r}") from None
    return RecolouringSequence(tuple(steps))


