"""Degeneracy orderings and partitions into parts of prescribed degeneracy.

A graph is d-degenerate when every induced subgraph has a vertex of degree at
most d; the degeneracy is the least such d.  It is witnessed by an ordering
v_1..v_n in which every vertex has at most d neighbours earlier in the order.
The ordering here is the classic one: repeatedly take a minimum-degree vertex
(lowest index on ties) as the *last* remaining position.  Everything runs in
O(n^2) adjacency scans.

Two facts drive the recolouring algorithms built on top of this module:

* a connected non-regular graph with maximum degree D is (D-1)-degenerate;
* a k-degenerate graph splits into parts V_1..V_r with G[V_t] p_t-degenerate
  for any non-negative budgets with sum(p_t) = k - r + 1, by inserting each
  vertex of the ordering into the first part where it has at most p_t
  already-placed neighbours (a pigeonhole argument shows one always exists).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import (
    BudgetSumMismatchError,
    GraphDisconnectedError,
    GraphIsRegularError,
    NotKDegenerateError,
    PartNotIndependentError,
)
from .graph import Graph


@dataclass(frozen=True)
class DegeneracyOrdering:
    """Vertex permutation plus, per position, the count of earlier neighbours."""

    order: tuple[int, ...]
    back_degree: tuple[int, ...]

    @property
    def degeneracy(self) -> int:
        return max(self.back_degree, default=0)

    def position(self, v: int) -> int:
        return self._positions[v]

    @cached_property
    def _positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Minimum-degree-removal ordering; ties broken by lowest vertex index."""
    n = g.n
    deg = list(g.degree)
    alive = [True] * n
    order = [0] * n
    for i in range(n - 1, -1, -1):
        v = min((u for u in range(n) if alive[u]), key=lambda u: (deg[u], u))
        order[i] = v
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
    pos = {v: i for i, v in enumerate(order)}
    back = tuple(
        sum(1 for u in g.adjacency[v] if pos[u] < i) for i, v in enumerate(order)
    )
    return DegeneracyOrdering(tuple(order), back)


def degeneracy(g: Graph) -> int:
    return degeneracy_ordering(g).degeneracy


def brute_force_degeneracy(g: Graph) -> int:
    """Independent oracle: max over induced subgraphs of their minimum degree.

    Exponential; guarded to small graphs.  Used to cross-check the ordering
    implementation, never by the algorithms themselves.
    """
    if g.n > 16:
        raise ValueError("brute-force degeneracy is limited to n <= 16")
    best = 0
    vertices = range(g.n)
    adj_sets = [set(a) for a in g.adjacency]
    for size in range(1, g.n + 1):
        for subset in combinations(vertices, size):
            inside = set(subset)
            min_deg = min(len(adj_sets[v] & inside) for v in subset)
            best = max(best, min_deg)
    return best


def check_non_regular_degeneracy(g: Graph) -> int:
    """Degeneracy of a connected non-regular graph; always at most D-1."""
    if not g.is_connected():
        raise GraphDisconnectedError("degeneracy bound requires a connected graph")
    if g.is_regular():
        raise GraphIsRegularError("graph is regular")
    d = degeneracy(g)
    assert d <= g.max_degree - 1, "connected non-regular graph must be (D-1)-degenerate"
    return d


@dataclass(frozen=True)
class DegeneratePartition:
    """Partition of the vertices with per-part degeneracy budgets.

    ``witness`` records, in insertion order, each vertex's part and how many
    of its neighbours were already in that part at insertion time.
    """

    parts: tuple[tuple[int, ...], ...]
    budgets: tuple[int, ...]
    witness: tuple[tuple[int, int, int], ...] = field(default=(), compare=False)

    @property
    def r(self) -> int:
        return len(self.parts)


def _validate_parts(g: Graph, parts, budgets):
    covered = sorted(v for part in parts for v in part)
    assert covered == list(range(g.n)), "parts must partition the vertex set"
    for part, budget in zip(parts, budgets):
        sub, _ = g.induced_subgraph(part)
        assert degeneracy(sub) <= budget, (
            f"part {part} has degeneracy {degeneracy(sub)} > budget {budget}"
        )


def degenerate_partition(g: Graph, k: int, budgets: tuple[int, ...]) -> DegeneratePartition:
    """Split a k-degenerate graph into parts of degeneracy at most p_1..p_r.

    Requires sum(budgets) == k - r + 1 and verifies the degeneracy bound
    instead of trusting the caller.
    """
    budgets = tuple(budgets)
    r = len(budgets)
    if r < 1:
        raise ValueError("need at least one part")
    if any(p < 0 for p in budgets):
        raise ValueError("budgets must be non-negative")
    if sum(budgets) != k - r + 1:
        raise BudgetSumMismatchError(
            f"budgets sum to {sum(budgets)}, need k - r + 1 = {k - r + 1}"
        )
    actual = degeneracy(g)
    if actual > k:
        raise NotKDegenerateError(f"graph has degeneracy {actual} > {k}")

    ordering = degeneracy_ordering(g)
    part_of = [-1] * g.n
    placed_neighbours = [[0] * g.n for _ in range(r)]  # per part, per vertex
    parts: list[list[int]] = [[] for _ in range(r)]
    witness: list[tuple[int, int, int]] = []
    for v in ordering.order:
        for q in range(r):
            if placed_neighbours[q][v] <= budgets[q]:
                break
        else:
            raise AssertionError(
                "no admissible part; contradicts the back-degree bound"
            )
        parts[q].append(v)
        part_of[v] = q
        witness.append((v, q, placed_neighbours[q][v]))
        for u in g.adjacency[v]:
            placed_neighbours[q][u] += 1

    result = tuple(tuple(sorted(p)) for p in parts)
    _validate_parts(g, result, budgets)
    return DegeneratePartition(result, budgets, tuple(witness))


def augment_to_maximal_independent(g: Graph, partition: DegeneratePartition) -> DegeneratePartition:
    """Grow part 1 into a maximal independent set by pulling vertices over.

    One ascending pass suffices: a vertex left outside had a neighbour inside
    at the time it was examined, and part 1 only grows.  The other parts only
    shrink, so their degeneracies cannot increase.
    """
    if partition.budgets[0] != 0:
        raise PartNotIndependentError("part 1 must have budget 0")
    s1 = set(partition.parts[0])
    for v in s1:
        if any(u in s1 for u in g.adjacency[v]):
            raise PartNotIndependentError(f"part 1 contains adjacent vertices near {v}")

    others = [set(p) for p in partition.parts[1:]]
    for v in range(g.n):
        if v in s1:
            continue
        if not any(u in s1 for u in g.adjacency[v]):
            s1.add(v)
            for part in others:
                part.discard(v)

    assert all(
        any(u in s1 for u in g.adjacency[v]) for v in range(g.n) if v not in s1
    ), "part 1 must be maximal after augmentation"
    parts = (tuple(sorted(s1)),) + tuple(tuple(sorted(p)) for p in others)
    _validate_parts(g, parts, partition.budgets)
    return DegeneratePartition(parts, partition.budgets)
