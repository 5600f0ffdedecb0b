"""Constructive recolouring: scratch swaps, top-colour elimination, and
quadratic-length walks between colourings.

Three layers build on each other.

* A *scratch swap* exchanges two colours i, j on a maximal connected
  component of the {i, j}-coloured subgraph in three phases (j to scratch,
  i to j, scratch to i), which keeps every intermediate colouring proper as
  long as the scratch colour is absent from the component's closed
  neighbourhood.

* *Top-colour elimination* removes the largest palette colour from a proper
  colouring of a graph whose degeneracy is at most k-2 (palette k, maximum
  degree at most k-1).  One round walks from the earliest top-coloured vertex
  of a degeneracy ordering to ever-later vertices, each hop moving to the
  neighbour latest in the ordering, until a vertex with a spare colour is
  found; replaying the walk backwards recolours each visited vertex once and
  frees the starting vertex from the top colour.  The earliest top-coloured
  position strictly increases between rounds, so at most n rounds and n^2
  steps are ever needed and no vertex is recoloured more than n times.

* The *path construction* connects two colourings that avoid the top colour:
  split the graph into a maximal independent set and a remainder of smaller
  degeneracy, park the independent set on the scratch colour from both ends,
  eliminate the next colour down on the remainder, and recurse with a
  one-smaller palette.  The remainder has smaller maximum degree because
  every one of its vertices has a parked neighbour.  At palette 3 the graph
  is a disjoint union of paths and the two 2-colourings of each component are
  exchanged directly by walking a travelling scratch down the path.

The public pipeline glues these together for a connected non-regular graph
with maximum degree at least 3: eliminate the top colour from both input
colourings, connect the two results, and replay the second elimination
backwards.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import (
    Colouring,
    RecolouringSequence,
    apply_sequence,
    require_proper,
)
from .degeneracy import (
    augment_to_maximal_independent,
    degeneracy,
    degeneracy_ordering,
    degenerate_partition,
)
from .errors import (
    ComponentNotMaximalError,
    DegeneracyTooHighError,
    GraphDisconnectedError,
    GraphIsRegularError,
    MaxDegreeTooSmallError,
    NoOpStepError,
    NotDeltaColouringError,
    ScratchColourInUseError,
)
from .graph import Graph, connected_components

Step = tuple[int, int]


# ---------------------------------------------------------------------------
# Scratch swap on a two-coloured component


@dataclass(frozen=True)
class KempeComponent:
    """Maximal connected component of the subgraph on colours i and j."""

    colour_i: int
    colour_j: int
    vertices: tuple[int, ...]


def kempe_component(g: Graph, c: Colouring, anchor: int, i: int, j: int) -> KempeComponent:
    """The two-coloured component containing ``anchor``."""
    require_proper(g, c)
    if i == j or not (1 <= i <= c.k and 1 <= j <= c.k):
        raise ValueError(f"need two distinct palette colours, got {i}, {j}")
    if c.colours[anchor] not in (i, j):
        raise ValueError(f"anchor {anchor} is coloured {c.colours[anchor]}, not {i} or {j}")
    comp = {anchor}
    stack = [anchor]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if u not in comp and c.colours[u] in (i, j):
                comp.add(u)
                stack.append(u)
    return KempeComponent(i, j, tuple(sorted(comp)))


def kempe_swap_via_scratch(g: Graph, c: Colouring, comp: KempeComponent) -> RecolouringSequence:
    """Exchange colours i and j on ``comp`` using the top palette colour.

    The scratch is colour ``c.k``; it must not appear on the component or on
    any neighbour of the component, and the component must be a maximal
    connected piece of the {i, j}-coloured subgraph.  The result has exactly
    2*|j-coloured| + |i-coloured| steps and fixes every other vertex.
    """
    require_proper(g, c)
    i, j = comp.colour_i, comp.colour_j
    scratch = c.k
    if i == j or scratch in (i, j):
        raise ValueError("swap colours must be distinct and differ from the scratch colour")
    if not comp.vertices:
        return RecolouringSequence()

    members = set(comp.vertices)
    for v in comp.vertices:
        if c.colours[v] not in (i, j):
            raise ValueError(f"component vertex {v} is coloured {c.colours[v]}")

    reached = {comp.vertices[0]}
    stack = [comp.vertices[0]]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if u in members and u not in reached:
                reached.add(u)
                stack.append(u)
    if reached != members:
        raise ComponentNotMaximalError("component is not connected in the two-colour subgraph")
    for v in comp.vertices:
        for u in g.adjacency[v]:
            if u not in members:
                if c.colours[u] in (i, j):
                    raise ComponentNotMaximalError(
                        f"vertex {u} outside the component is coloured {c.colours[u]}"
                    )
                if c.colours[u] == scratch:
                    raise ScratchColourInUseError(
                        f"neighbour {u} of the component uses the scratch colour {scratch}"
                    )

    j_side = [v for v in comp.vertices if c.colours[v] == j]
    i_side = [v for v in comp.vertices if c.colours[v] == i]
    steps = [(v, scratch) for v in j_side]
    steps += [(v, j) for v in i_side]
    steps += [(v, i) for v in j_side]
    return RecolouringSequence(tuple(steps))


# ---------------------------------------------------------------------------
# Top-colour elimination


@dataclass(frozen=True)
class EliminationPlan:
    """One round of elimination: ``h`` is the position in the degeneracy
    ordering of the earliest top-coloured vertex, ``pairs`` the walk of
    (vertex, replacement colour) entries, applied from the last pair back."""

    h: int
    pairs: tuple[Step, ...]


class _ColourUsage:
    """Per-vertex multiset of the colours on the closed neighbourhood."""

    __slots__ = ("counts", "adjacency", "k")

    def __init__(self, g: Graph, cols: list[int], k: int):
        self.k = k
        self.adjacency = g.adjacency
        counts = []
        for v in range(g.n):
            row = [0] * (k + 1)
            row[cols[v]] += 1
            for u in g.adjacency[v]:
                row[cols[u]] += 1
            counts.append(row)
        self.counts = counts

    def recolour(self, v: int, old: int, new: int) -> None:
        self.counts[v][old] -= 1
        self.counts[v][new] += 1
        for u in self.adjacency[v]:
            self.counts[u][old] -= 1
            self.counts[u][new] += 1

    def smallest_absent(self, v: int) -> int | None:
        row = self.counts[v]
        for colour in range(1, self.k + 1):
            if row[colour] == 0:
                return colour
        return None


def _build_plan(order, position, latest_nb, usage, cols, k) -> EliminationPlan | None:
    h = None
    for idx, v in enumerate(order):
        if cols[v] == k:
            h = idx
            break
    if h is None:
        return None
    w = order[h]
    pairs: list[Step] = []
    last_pos = -1
    while True:
        pos_w = position[w]
        if pos_w <= last_pos:
            raise AssertionError("elimination walk failed to advance in the ordering")
        last_pos = pos_w
        spare = usage.smallest_absent(w)
        if spare is not None:
            pairs.append((w, spare))
            break
        # all k colours on the closed neighbourhood forces degree k-1 with
        # all-distinct neighbour colours, so a later neighbour exists
        nxt = latest_nb[w]
        pairs.append((w, cols[nxt]))
        w = nxt
    return EliminationPlan(h, tuple(pairs))


def _elimination_setup(g: Graph, k: int):
    ordering = degeneracy_ordering(g)
    if ordering.degeneracy > k - 2:
        raise DegeneracyTooHighError(
            f"degeneracy {ordering.degeneracy} exceeds {k - 2}; cannot eliminate colour {k}"
        )
    if g.max_degree > k - 1:
        raise ValueError(f"palette {k} is too small for maximum degree {g.max_degree}")
    position = {v: idx for idx, v in enumerate(ordering.order)}
    latest_nb = [
        max(g.adjacency[v], key=position.__getitem__) if g.adjacency[v] else None
        for v in range(g.n)
    ]
    return ordering, position, latest_nb


def elimination_plan(g: Graph, c: Colouring) -> EliminationPlan | None:
    """The next elimination round for ``c``, or None if the top colour is unused."""
    require_proper(g, c)
    ordering, position, latest_nb = _elimination_setup(g, c.k)
    cols = list(c.colours)
    usage = _ColourUsage(g, cols, c.k)
    return _build_plan(ordering.order, position, latest_nb, usage, cols, c.k)


def _eliminate(g: Graph, cols: list[int], k: int) -> tuple[list[Step], list[int]]:
    """Remove colour ``k`` from a proper colouring; returns (steps, final)."""
    ordering, position, latest_nb = _elimination_setup(g, k)
    cols = list(cols)
    usage = _ColourUsage(g, cols, k)
    steps: list[Step] = []
    rounds = 0
    prev_h = -1
    while True:
        plan = _build_plan(ordering.order, position, latest_nb, usage, cols, k)
        if plan is None:
            break
        rounds += 1
        if rounds > g.n or plan.h <= prev_h:
            raise AssertionError("elimination did not make progress")
        prev_h = plan.h
        for v, colour in reversed(plan.pairs):
            for u in g.adjacency[v]:
                if cols[u] == colour:
                    raise AssertionError("elimination step would be improper")
            usage.recolour(v, cols[v], colour)
            cols[v] = colour
            steps.append((v, colour))
    return steps, cols


def eliminate_top_colour(g: Graph, c: Colouring) -> tuple[RecolouringSequence, Colouring]:
    """Walk from ``c`` to a colouring that avoids the top palette colour.

    Requires degeneracy at most k-2 and maximum degree at most k-1 (with
    palette k = D+1 this is exactly degeneracy D-1).  The sequence has at
    most n^2 steps and recolours no vertex more than n times.
    """
    require_proper(g, c)
    steps, cols = _eliminate(g, list(c.colours), c.k)
    return RecolouringSequence(tuple(steps)), Colouring(c.k, tuple(cols))


# ---------------------------------------------------------------------------
# Paths between colourings that avoid the top colour


def _reverse_raw(cols: list[int], steps: list[Step]) -> list[Step]:
    """Reversal of ``steps`` as applied from ``cols``."""
    cur = list(cols)
    rev: list[Step] = []
    for v, colour in steps:
        rev.append((v, cur[v]))
        cur[v] = colour
    rev.reverse()
    return rev


def _flip_path_components(g: Graph, a: list[int], b: list[int]) -> list[Step]:
    """Palette-3 base case: disjoint paths, both inputs 2-coloured.

    Components where the colourings differ are alternating flips of each
    other; a travelling scratch walks down the path from the lower-numbered
    end, freeing two vertices at a time.
    """
    steps: list[Step] = []
    for comp in connected_components(g):
        if all(a[v] == b[v] for v in comp):
            continue
        if len(comp) == 1:
            steps.append((comp[0], b[comp[0]]))
            continue
        ends = [v for v in comp if len(g.adjacency[v]) == 1]
        assert len(ends) == 2, "palette-3 components must be paths"
        path = [min(ends)]
        prev = None
        while True:
            nxt = [u for u in g.adjacency[path[-1]] if u != prev]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])
        assert len(path) == len(comp)
        assert all(a[v] != b[v] for v in path), (
            "distinct 2-colourings of a path differ everywhere"
        )
        m = len(path)
        steps.append((path[0], 3))
        t = 0
        while t <= m - 3:
            steps.append((path[t + 2], 3))
            steps.append((path[t + 1], b[path[t + 1]]))
            steps.append((path[t], b[path[t]]))
            t += 2
        if t == m - 2:
            steps.append((path[m - 1], b[path[m - 1]]))
            steps.append((path[t], b[path[t]]))
        else:
            steps.append((path[t], b[path[t]]))
    return steps


def _path_with_scratch(g: Graph, a: list[int], b: list[int], k: int) -> list[Step]:
    """Steps from ``a`` to ``b`` inside palette ``k``, both avoiding colour k.

    Requires maximum degree <= k-1 and degeneracy <= k-2.
    """
    if a == b:
        return []
    assert g.max_degree <= k - 1
    assert max(a, default=1) < k and max(b, default=1) < k
    if k <= 2:
        raise AssertionError("distinct inputs are impossible below palette 3")
    if k == 3:
        return _flip_path_components(g, a, b)

    partition = degenerate_partition(g, k - 2, (0, k - 3))
    partition = augment_to_maximal_independent(g, partition)
    s1, s2 = partition.parts

    park_a = [(v, k) for v in s1]
    sub, labels = g.induced_subgraph(s2)
    a_sub = [a[orig] for orig in labels]
    b_sub = [b[orig] for orig in labels]

    elim_a, a_low = _eliminate(sub, a_sub, k - 1)
    elim_b, b_low = _eliminate(sub, b_sub, k - 1)
    mid = _path_with_scratch(sub, a_low, b_low, k - 1)

    def lift(raw: list[Step]) -> list[Step]:
        return [(labels[v], colour) for v, colour in raw]

    out = list(park_a)
    out += lift(elim_a)
    out += lift(mid)
    out += lift(_reverse_raw(b_sub, elim_b))
    out += [(v, b[v]) for v in reversed(s1)]
    return out


def path_between_delta_colourings(
    g: Graph, c1: Colouring, c2: Colouring
) -> RecolouringSequence:
    """Walk between two colourings that use only colours 1..max_degree.

    The graph must have degeneracy at most max_degree - 1.  Intermediate
    colourings live in the palette max_degree + 1; the result is validated
    step by step before being returned.
    """
    if g.n == 0:
        return RecolouringSequence()
    delta = g.max_degree
    require_proper(g, c1, "first colouring")
    require_proper(g, c2, "second colouring")
    for c in (c1, c2):
        worst = max(c.colours)
        if worst > delta:
            raise NotDeltaColouringError(
                f"colouring uses colour {worst}, above max degree {delta}"
            )
    if degeneracy(g) > delta - 1:
        raise DegeneracyTooHighError(
            f"degeneracy {degeneracy(g)} is not below max degree {delta}"
        )
    steps = _path_with_scratch(g, list(c1.colours), list(c2.colours), delta + 1)
    seq = RecolouringSequence(tuple(steps))
    final = apply_sequence(g, Colouring(delta + 1, c1.colours), seq)
    if final.colours != c2.colours:
        raise AssertionError("constructed walk does not end at the target colouring")
    return seq


def find_path_non_regular(g: Graph, a: Colouring, b: Colouring) -> RecolouringSequence:
    """Walk between any two palette-(D+1) colourings of a connected
    non-regular graph with maximum degree D >= 3.

    Pipeline: eliminate the top colour from both sides, connect the two
    top-colour-free colourings, replay the second elimination backwards.
    Total length is O(n^2); the sequence is validated before returning.
    """
    if not g.is_connected():
        raise GraphDisconnectedError("path construction requires a connected graph")
    if g.is_regular():
        raise GraphIsRegularError("graph is regular; constructive route unavailable")
    delta = g.max_degree
    if delta < 3:
        raise MaxDegreeTooSmallError(f"max degree {delta} < 3")
    if a.k != delta + 1 or b.k != delta + 1:
        raise ValueError(f"colourings must use palette {delta + 1}")
    require_proper(g, a, "first colouring")
    require_proper(g, b, "second colouring")
    if a.colours == b.colours:
        return RecolouringSequence()

    seq_a, low_a = eliminate_top_colour(g, a)
    seq_b, low_b = eliminate_top_colour(g, b)
    mid = path_between_delta_colourings(g, low_a, low_b)
    back = _reverse_raw(list(b.colours), list(seq_b.steps))
    seq = RecolouringSequence(seq_a.steps + mid.steps + tuple(back))
    final = apply_sequence(g, a, seq)
    if final.colours != b.colours:
        raise AssertionError("pipeline did not end at the target colouring")
    return seq


def reverse_sequence(start: Colouring, seq: RecolouringSequence) -> RecolouringSequence:
    """The step-by-step reversal of ``seq`` as applied from ``start``.

    Applying the result to the final colouring of ``seq`` restores ``start``.
    """
    cols = list(start.colours)
    rev: list[Step] = []
    for idx, (v, colour) in enumerate(seq):
        if not 0 <= v < len(cols):
            raise ValueError(f"step {idx}: vertex {v} out of range")
        if not 1 <= colour <= start.k:
            raise ValueError(f"step {idx}: colour {colour} outside 1..{start.k}")
        if cols[v] == colour:
            raise NoOpStepError(idx)
        rev.append((v, cols[v]))
        cols[v] = colour
    rev.reverse()
    return RecolouringSequence(tuple(rev))
