"""Friendship hypergraph families: complete, universal, cube and truncated-Steiner."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .decomposition import Decomposition
from .hypergraph import Hypergraph, HypergraphError, VertexSet, full_set, k_subsets, k_subsets_of_range, members
from .steiner import SteinerSystem, SystemUnavailable, available_system


class StructuralError(HypergraphError):
    """A construction produced an object violating its structural promise."""


@dataclass(frozen=True)
class ConstructionRecipe:
    kind: str
    parameters: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "parameters": self.parameters}


def complete(r: int) -> Hypergraph:
    """K_{r+1}^r: all r-subsets of r+1 vertices."""
    if r < 2:
        raise HypergraphError(f"complete(r) needs r >= 2, got {r}")
    return Hypergraph(r + 1, r, tuple(k_subsets_of_range(r + 1, r)))


def universal(system: SteinerSystem) -> Hypergraph:
    """U_r(S) for an S(r-1, r, n-1); the added vertex gets index S.n."""
    r = system.k
    if system.t != r - 1:
        raise HypergraphError(f"universal construction needs t = k - 1, got S({system.t},{system.k},{system.n})")
    if system.n + 1 > 64:
        raise HypergraphError("universal construction would exceed 64 vertices")
    u = 1 << system.n
    cone = tuple(a | u for a in k_subsets(full_set(system.n), r - 1))
    return Hypergraph(system.n + 1, r, system.blocks + cone)


def universal_edge_count(n: int, r: int) -> Fraction:
    return Fraction(r + 1, r) * math.comb(n - 1, r - 1)


def _all_equal_coordinate(x: int, y: int, z: int, mask: int) -> bool:
    return bool(((x & y & z) | (~x & ~y & ~z)) & mask)


def cube_predicate_bits(x: int, y: int, z: int, k: int) -> bool:
    return not _all_equal_coordinate(x, y, z, (1 << k) - 1)


def cube_predicate_l1(x: int, y: int, z: int, k: int) -> bool:
    dist = (x ^ y).bit_count() + (y ^ z).bit_count() + (z ^ x).bit_count()
    return dist == 2 * k


def cube(k: int) -> Hypergraph:
    """Triples of {0,1}^k with no coordinate where all three bits agree."""
    if not 3 <= k <= 6:
        raise HypergraphError(f"cube(k) supports 3 <= k <= 6, got {k}")
    n = 1 << k
    mask = n - 1
    edges = []
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                if not _all_equal_coordinate(x, y, z, mask):
                    edges.append((1 << x) | (1 << y) | (1 << z))
    return Hypergraph(n, 3, tuple(edges))


def cube_edge_count(k: int) -> int:
    return 2 ** (k - 1) * (3 ** (k - 1) - 1)


@dataclass(frozen=True)
class TruncatedConstruction:
    decomposition: Decomposition
    hypergraph: Hypergraph
    # original point of S for each compacted vertex index
    vertex_map: tuple[int, ...]
    recipe: ConstructionRecipe


def truncated_count(r: int) -> tuple[Fraction, Fraction]:
    """Inclusion-exclusion and closed-form member counts of the truncated construction."""
    if r < 2:
        raise ValueError(f"truncated_count needs r >= 2, got {r}")
    inclusion_exclusion = (
        Fraction(math.comb(2 * r + 3, r), r + 1)
        - 2 * Fraction(math.comb(2 * r + 2, r - 1), r)
        + Fraction(math.comb(2 * r + 1, r - 2), r - 1)
    )
    closed = Fraction(math.comb(2 * r + 1, r), r + 3)
    if inclusion_exclusion != closed:
        raise ArithmeticError(f"truncated counts disagree at r={r}: {inclusion_exclusion} != {closed}")
    return inclusion_exclusion, closed


def truncated_system(r: int) -> SteinerSystem:
    """The bundled S(r+1, r+2, 2r+4), when one ships with the package."""
    try:
        return available_system(r + 1, r + 2, 2 * r + 4)
    except SystemUnavailable:
        raise SystemUnavailable(f"no S({r + 1},{r + 2},{2 * r + 4}) available for the truncated construction (r={r})") from None


def truncated(system: SteinerSystem, abc: tuple[int, int, int] | None = None) -> TruncatedConstruction:
    """Truncate an S(r+1, r+2, 2r+4) at three points a, b, c.

    Members are B minus a over the blocks B through a that avoid both b and
    c; they live on the remaining 2r+1 points, relabelled 0..2r in ascending
    order.  Defaults to the three highest-indexed points.
    """
    r = system.k - 2
    if r < 2 or system.t != r + 1 or system.n != 2 * r + 4:
        raise HypergraphError(
            f"truncated construction needs an S(r+1, r+2, 2r+4), got S({system.t},{system.k},{system.n})"
        )
    if abc is None:
        abc = (system.n - 3, system.n - 2, system.n - 1)
    a, b, c = abc
    if len({a, b, c}) != 3 or not all(0 <= p < system.n for p in abc):
        raise HypergraphError(f"a, b, c must be distinct points of the system, got {abc}")

    bit_a, bit_bc = 1 << a, (1 << b) | (1 << c)
    kept = [p for p in range(system.n) if p not in abc]
    index = {p: i for i, p in enumerate(kept)}

    def compact(s: VertexSet) -> VertexSet:
        out = 0
        for p in members(s):
            out |= 1 << index[p]
        return out

    cliques = sorted(compact(blk ^ bit_a) for blk in system.blocks if blk & bit_a and not blk & bit_bc)
    expected = Fraction(math.comb(2 * r + 1, r), r + 3)
    if len(cliques) != expected:
        raise StructuralError(f"truncated construction produced {len(cliques)} members, expected {expected}")

    owner: dict[VertexSet, int] = {}
    for i, q in enumerate(cliques):
        for e in k_subsets(q, r):
            if e in owner:
                raise StructuralError(
                    f"members {members(cliques[owner[e]])} and {members(q)} share the edge {members(e)}"
                )
            owner[e] = i
    n = 2 * r + 1
    h = Hypergraph(n, r, tuple(owner))
    decomp = Decomposition(n, r, tuple(cliques), {e: owner[e] for e in h.edges})
    recipe = ConstructionRecipe("truncated", {"r": r, "steiner": [system.t, system.k, system.n], "a": a, "b": b, "c": c})
    return TruncatedConstruction(decomp, h, tuple(kept), recipe)
