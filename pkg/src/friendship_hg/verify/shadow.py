"""Per-clique shadow bound on neighbouring cliques."""

from __future__ import annotations

from ..certificate import FAIL, PASS, Certificate
from ..decomposition import Decomposition
from ..hypergraph import members


def shadow_bound(r: int) -> int:
    return (r + 1) * (3 * r - 4) // 6


def shadow_check(d: Decomposition, n: int | None = None) -> Certificate:
    """For every clique q and vertex z outside it, count cliques through z meeting q in r-1 points."""
    n = d.n if n is None else n
    r = d.r
    if r < 3:
        raise ValueError(f"shadow check needs r >= 3, got {r}")
    bound = shadow_bound(r)
    worst = 0
    stats = {"n": n, "r": r, "cliques": len(d.cliques), "bound": bound}
    for q in d.cliques:
        adjacent = [p for p in d.cliques if (p & q).bit_count() == r - 1]
        for z in range(n):
            bit = 1 << z
            if q & bit:
                continue
            hits = [p for p in adjacent if p & bit]
            worst = max(worst, len(hits))
            if len(hits) > bound:
                stats["max_count"] = worst
                witness = {"clique": members(q), "z": z, "count": len(hits), "cliques": [members(p) for p in hits]}
                return Certificate("shadow", FAIL, witness, stats)
    stats["max_count"] = worst
    return Certificate("shadow", PASS, None, stats)
