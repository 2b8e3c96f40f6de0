"""Exhaustive checks of the two small graph lemmas behind the shadow bound."""

from __future__ import annotations

import itertools

import numpy as np

from ..certificate import FAIL, PASS, Certificate
from . import enumeration
from .shadow import shadow_bound


def _pairs(n: int) -> list[tuple[int, int]]:
    # canonical (colex) order of 2-sets, matching k_subsets
    return sorted(itertools.combinations(range(n), 2), key=lambda p: (p[1], p[0]))


def _edge_list(g: int, pairs) -> list[list[int]]:
    return [list(p) for i, p in enumerate(pairs) if g >> i & 1]


def path_minimum(n: int):
    """Fewest edges among graphs with min degree >= 1 and no two adjacent degree-1 vertices."""
    pairs = _pairs(n)
    best = None
    witness = None
    for g in enumeration.chunks(len(pairs)):
        deg = enumeration.vertex_degrees(g, pairs, n)
        ok = (deg >= 1).all(axis=0)
        for i, (u, v) in enumerate(pairs):
            has = ((g >> np.uint64(i)) & np.uint64(1)).astype(bool)
            ok &= ~(has & (deg[u] == 1) & (deg[v] == 1))
        if not ok.any():
            continue
        good = g[ok]
        sizes = np.bitwise_count(good)
        low = int(sizes.min())
        if best is None or low < best:
            best = low
            witness = int(good[np.argmax(sizes == low)])
    return best, (None if witness is None else _edge_list(witness, pairs))


def lemma_lab_path(n_max: int) -> Certificate:
    if not 1 <= n_max <= 8:
        raise ValueError(f"n_max must lie in 1..8, got {n_max}")
    per_n = []
    verdict = PASS
    witness = None
    for n in range(1, n_max + 1):
        low, example = path_minimum(n)
        target = -(-2 * n // 3)
        per_n.append({"n": n, "min_edges": low, "bound": target, "example": example})
        if low is not None and low < target and verdict == PASS:
            verdict = FAIL
            witness = {"n": n, "edges": example}
    return Certificate("lemma-path", verdict, witness, {"n_max": n_max, "per_n": per_n})


def complement_maximum(r: int):
    """Most edges on r+1 vertices with max degree <= r-1 and degree-(r-1) vertices pairwise adjacent."""
    n = r + 1
    pairs = _pairs(n)
    best = None
    witness = None
    for g in enumeration.chunks(len(pairs)):
        deg = enumeration.vertex_degrees(g, pairs, n)
        ok = (deg <= r - 1).all(axis=0)
        top = deg == r - 1
        for i, (u, v) in enumerate(pairs):
            has = ((g >> np.uint64(i)) & np.uint64(1)).astype(bool)
            ok &= has | ~(top[u] & top[v])
        if not ok.any():
            continue
        good = g[ok]
        sizes = np.bitwise_count(good)
        high = int(sizes.max())
        if best is None or high > best:
            best = high
            witness = int(good[np.argmax(sizes == high)])
    return best, _edge_list(witness, pairs)


def lemma_lab_complement(r_max: int) -> Certificate:
    if not 3 <= r_max <= 7:
        raise ValueError(f"r_max must lie in 3..7, got {r_max}")
    per_r = []
    verdict = PASS
    witness = None
    for r in range(3, r_max + 1):
        high, example = complement_maximum(r)
        target = shadow_bound(r)
        per_r.append({"r": r, "max_edges": high, "bound": target, "example": example})
        if high != target and verdict == PASS:
            verdict = FAIL
            witness = {"r": r, "max_edges": high, "edges": example}
    return Certificate("lemma-complement", verdict, witness, {"r_max": r_max, "per_r": per_r})
