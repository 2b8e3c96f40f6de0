"""Uniform hypergraphs over bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``i`` marks vertex ``i``.  Vertex
indices live in ``0..63``.  Hypergraphs are immutable and keep their edges in
ascending bitmask order, which doubles as the canonical order used for
membership search, golden files and "first witness" selection.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 64

VertexSet = int


class HypergraphError(ValueError):
    """Malformed hypergraph input or a contract violation."""


def vset(indices: Iterable[int]) -> VertexSet:
    bits = 0
    for i in indices:
        if not 0 <= i < MAX_VERTICES:
            raise HypergraphError(f"vertex index {i} outside 0..{MAX_VERTICES - 1}")
        bits |= 1 << i
    return bits


def members(s: VertexSet) -> list[int]:
    """Indices of the set bits of ``s``, ascending."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def size(s: VertexSet) -> int:
    return s.bit_count()


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def _deposit(x: int, positions: list[int]) -> VertexSet:
    out = 0
    i = 0
    while x:
        if x & 1:
            out |= 1 << positions[i]
        x >>= 1
        i += 1
    return out


def k_subsets(ground: VertexSet, k: int) -> Iterator[VertexSet]:
    """Yield every ``k``-subset of ``ground`` in ascending bitmask order.

    Uses Gosper's hack over the compressed index space and scatters each
    pattern back onto the ground positions; the scatter is monotone, so the
    output order is ascending in the original space too.
    """
    positions = members(ground)
    m = len(positions)
    if not 0 <= k <= m:
        raise HypergraphError(f"k={k} outside 0..{m}")
    if k == 0:
        yield 0
        return
    contiguous = ground == full_set(m)
    x = (1 << k) - 1
    limit = 1 << m
    while x < limit:
        yield x if contiguous else _deposit(x, positions)
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def k_subsets_of_range(n: int, k: int) -> Iterator[VertexSet]:
    return k_subsets(full_set(n), k)


@dataclass(frozen=True)
class Hypergraph:
    """An ``r``-uniform hypergraph on vertices ``0..n-1``.

    ``edges`` is normalised to a sorted tuple on construction; duplicates,
    wrong-size edges and out-of-range vertices are rejected.
    """

    n: int
    r: int
    edges: tuple[VertexSet, ...]
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise HypergraphError(f"n={self.n} outside 0..{MAX_VERTICES}")
        if self.r < 1:
            raise HypergraphError(f"uniformity r={self.r} must be positive")
        edges = tuple(sorted(self.edges))
        limit = full_set(self.n)
        for i, e in enumerate(edges):
            if e.bit_count() != self.r:
                raise HypergraphError(f"edge {members(e)} has size {e.bit_count()}, expected {self.r}")
            if e & ~limit:
                raise HypergraphError(f"edge {members(e)} has a vertex outside 0..{self.n - 1}")
            if i and edges[i - 1] == e:
                raise HypergraphError(f"duplicate edge {members(e)}")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_edge_set", frozenset(edges))

    @classmethod
    def from_lists(cls, n: int, r: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n, r, tuple(vset(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    def __contains__(self, e: VertexSet) -> bool:
        return e in self._edge_set

    def edge_lists(self) -> list[list[int]]:
        return [members(e) for e in self.edges]


def contains_edge(h: Hypergraph, e: VertexSet) -> bool:
    """Binary-search membership of ``e`` in ``h``.

    Raises ``HypergraphError`` for a query of the wrong size or with a
    vertex outside the hypergraph; a well-formed absent edge gives False.
    """
    if e.bit_count() != h.r:
        raise HypergraphError(f"query {members(e)} has size {e.bit_count()}, expected {h.r}")
    if e & ~h.vertices:
        raise HypergraphError(f"vertex out of range in query {members(e)}")
    i = bisect.bisect_left(h.edges, e)
    return i < len(h.edges) and h.edges[i] == e


def link(h: Hypergraph, a: int) -> Hypergraph:
    """Neighbourhood hypergraph of ``a``: edges through ``a`` with ``a`` removed."""
    if not 0 <= a < h.n:
        raise HypergraphError(f"vertex {a} outside 0..{h.n - 1}")
    bit = 1 << a
    return Hypergraph(h.n, h.r - 1, tuple(e ^ bit for e in h.edges if e & bit))


def degree_profile(h: Hypergraph, k: int) -> dict[VertexSet, int]:
    """Number of edges containing each ``k``-subset of the vertex set, zeros included."""
    if not 1 <= k < h.r:
        raise HypergraphError(f"degree profile needs 1 <= k < r, got k={k}, r={h.r}")
    profile = dict.fromkeys(k_subsets_of_range(h.n, k), 0)
    for e in h.edges:
        for t in k_subsets(e, k):
            profile[t] += 1
    return profile


def degree(h: Hypergraph, t: VertexSet) -> int:
    return sum(1 for e in h.edges if e & t == t)


def relabel(h: Hypergraph, perm: list[int]) -> Hypergraph:
    """Image of ``h`` under the vertex map ``i -> perm[i]``."""
    return Hypergraph(h.n, h.r, tuple(apply_perm(e, perm) for e in h.edges))


def apply_perm(s: VertexSet, perm: list[int]) -> VertexSet:
    out = 0
    for i in members(s):
        out |= 1 << perm[i]
    return out


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r, tuple(k_subsets_of_range(n, r)))
