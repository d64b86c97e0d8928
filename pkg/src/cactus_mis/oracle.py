"""Exhaustive enumeration of maximal independent sets, tabulated by size.

This is the project's ground truth: an ordered branch-and-prune search that
decides each vertex in or out. A branch dies as soon as some excluded vertex
can no longer acquire a neighbor in the set (it could then be added, so no
extension is maximal). Counts are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional

from .graphs import Graph

DEFAULT_VERTEX_LIMIT = 64


class VertexLimitExceeded(Exception):
    """Raised when a graph is larger than the configured enumeration limit."""

    def __init__(self, vertex_count: int, limit: int):
        super().__init__(
            f"graph has {vertex_count} vertices, above the enumeration limit of "
            f"{limit}; raise the limit explicitly to proceed"
        )
        self.vertex_count = vertex_count
        self.limit = limit


@dataclass(frozen=True)
class SizeDistribution:
    """Exact map from set size k to the number of maximal independent sets."""

    counts: Mapping[int, int]

    def __post_init__(self):
        frozen = {int(k): int(v) for k, v in self.counts.items() if v}
        if any(k < 0 or v < 0 for k, v in frozen.items()):
            raise ValueError("sizes and counts must be nonnegative")
        object.__setattr__(self, "counts", frozen)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, SizeDistribution):
            return self.counts == other.counts
        if isinstance(other, dict):
            return self.counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.counts.items()))

    def items(self):
        return sorted(self.counts.items())

    def shifted(self, dk: int) -> "SizeDistribution":
        """Same counts with every size increased by dk."""
        return SizeDistribution({k + dk: v for k, v in self.counts.items()})

    def scaled(self, c: int) -> "SizeDistribution":
        return SizeDistribution({k: c * v for k, v in self.counts.items()})

    def __add__(self, other: "SizeDistribution") -> "SizeDistribution":
        out = dict(self.counts)
        for k, v in other.counts.items():
            out[k] = out.get(k, 0) + v
        return SizeDistribution(out)

    def convolve(self, other: "SizeDistribution") -> "SizeDistribution":
        """Distribution of a disjoint union: sizes add, counts multiply."""
        out: dict[int, int] = {}
        for ka, va in self.counts.items():
            for kb, vb in other.counts.items():
                out[ka + kb] = out.get(ka + kb, 0) + va * vb
        return SizeDistribution(out)

    def as_dict(self) -> dict[int, int]:
        return dict(sorted(self.counts.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self.items())
        return "{" + inner + "}"


def enumerate_mis(
    g: Graph,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
    on_set: Optional[Callable[[int], None]] = None,
) -> SizeDistribution:
    """Count all maximal independent sets of g by cardinality.

    The empty graph has exactly one maximal independent set, the empty set.
    `on_set`, used by tests only, receives each maximal set as a bitmask.

    Raises VertexLimitExceeded for graphs above `vertex_limit` vertices.
    """
    n = g.vertex_count
    if n > vertex_limit:
        raise VertexLimitExceeded(n, vertex_limit)
    if n == 0:
        if on_set is not None:
            on_set(0)
        return SizeDistribution({0: 1})

    nb = g.neighbor_masks()
    full = (1 << n) - 1
    # no_future[v]: vertices with every neighbor below v; once the search is
    # at v, such a vertex can never gain a set neighbor later.
    no_future = []
    for v in range(n + 1):
        future = full ^ ((1 << v) - 1)
        mask = 0
        for u in range(n):
            if nb[u] & future == 0:
                mask |= 1 << u
        no_future.append(mask)

    counts: dict[int, int] = {}
    bit_count = int.bit_count if hasattr(int, "bit_count") else lambda x: bin(x).count("1")

    def walk(v: int, chosen: int, dominated: int, open_excluded: int) -> None:
        # open_excluded: excluded vertices with no set neighbor yet
        if open_excluded & no_future[v]:
            return
        if v == n:
            if open_excluded == 0:
                k = bit_count(chosen)
                counts[k] = counts.get(k, 0) + 1
                if on_set is not None:
                    on_set(chosen)
            return
        bit = 1 << v
        if nb[v] & chosen == 0:
            closure = nb[v] | bit
            walk(v + 1, chosen | bit, dominated | closure, open_excluded & ~closure)
        if dominated & bit:
            walk(v + 1, chosen, dominated, open_excluded)
        else:
            walk(v + 1, chosen, dominated, open_excluded | bit)

    walk(0, 0, 0, 0)
    return SizeDistribution(counts)


def mis_count(g: Graph, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> int:
    """Total number of maximal independent sets of g."""
    return enumerate_mis(g, vertex_limit=vertex_limit).total


def is_maximal_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff `vertices` is independent and no outside vertex can be added."""
    s = set(vertices)
    for v in s:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    for v in s:
        if any(w in s for w in g.adjacency[v]):
            return False
    for v in range(g.vertex_count):
        if v not in s and not any(w in s for w in g.adjacency[v]):
            return False
    return True
