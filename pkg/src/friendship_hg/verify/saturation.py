"""K_{k+l}^k saturation: the extremal family M(n, k, l) and its checks."""

from __future__ import annotations

import itertools
import math

import numpy as np

from ..certificate import FAIL, PASS, Certificate
from ..hgio import content_hash
from ..hypergraph import Hypergraph, HypergraphError, full_set, k_subsets, k_subsets_of_range, members
from . import enumeration


def build_M(n: int, k: int, l: int) -> Hypergraph:
    """All k-subsets of 0..n-1 meeting the distinguished set {0, ..., l-1}."""
    if k + l > n:
        raise HypergraphError(f"M(n,k,l) needs k + l <= n, got n={n} k={k} l={l}")
    core = full_set(l)
    return Hypergraph(n, k, tuple(e for e in k_subsets_of_range(n, k) if e & core))


def m_size(n: int, k: int, l: int) -> int:
    return math.comb(n, k) - math.comb(n - l, k)


def verify_saturated(g: Hypergraph, l: int) -> Certificate:
    """PASS iff ``g`` has no K_{k+l}^k but every missing k-set would create one through it."""
    k = g.r
    if k + l > g.n:
        raise HypergraphError(f"saturation check needs k + l <= n, got n={g.n} k={k} l={l}")
    stats = {"n": g.n, "k": k, "l": l, "edges": g.m}
    sha = content_hash(g)
    completable = set()
    for q in k_subsets_of_range(g.n, k + l):
        missing = [e for e in k_subsets(q, k) if e not in g]
        if not missing:
            return Certificate("saturated", FAIL, {"reason": "contains clique", "clique": members(q)}, stats, sha)
        if len(missing) == 1:
            completable.add(missing[0])
    for e in k_subsets_of_range(g.n, k):
        if e not in g and e not in completable:
            return Certificate("saturated", FAIL, {"reason": "non-edge creates no clique", "non_edge": members(e)}, stats, sha)
    return Certificate("saturated", PASS, None, stats, sha)


def saturated_census(n: int, k: int, l: int):
    """Every labeled k-graph on n vertices, classified for K_{k+l}^k saturation.

    Returns ``(min_edges, extremal, ksets)``: ``extremal`` lists the saturated
    graphs of minimum size as bitmasks over the indices of ``ksets``.
    """
    ksets = list(k_subsets_of_range(n, k))
    pos = {e: i for i, e in enumerate(ksets)}
    cliques = [sum(1 << pos[e] for e in k_subsets(q, k)) for q in k_subsets_of_range(n, k + l)]
    through = [[c for c in cliques if c >> i & 1] for i in range(len(ksets))]

    best = None
    extremal: list[int] = []
    for g in enumeration.chunks(len(ksets)):
        has_clique = np.zeros(g.shape, dtype=bool)
        for c in cliques:
            c = np.uint64(c)
            has_clique |= (g & c) == c
        ok = ~has_clique
        for i, cs in enumerate(through):
            bit = np.uint64(1 << i)
            gi = g | bit
            covered = (g & bit) != 0
            for c in cs:
                c = np.uint64(c)
                covered |= (gi & c) == c
            ok &= covered
        if not ok.any():
            continue
        sizes = np.bitwise_count(g[ok])
        low = int(sizes.min())
        hits = [int(x) for x in g[ok][sizes == low]]
        if best is None or low < best:
            best, extremal = low, hits
        elif low == best:
            extremal.extend(hits)
    return best, extremal, ksets


def orbit(h: Hypergraph) -> set[frozenset]:
    """All labeled images of ``h`` under the symmetric group; only for tiny n."""
    out = set()
    for perm in itertools.permutations(range(h.n)):
        out.add(frozenset(sum(1 << perm[i] for i in members(e)) for e in h.edges))
    return out


def saturation_bound_check(n: int, k: int, l: int) -> Certificate:
    """Exhaustive saturation bound with its equality clause on n vertices."""
    bound = m_size(n, k, l)
    best, extremal, ksets = saturated_census(n, k, l)
    family = orbit(build_M(n, k, l))
    stats = {"n": n, "k": k, "l": l, "bound": bound, "min_saturated_edges": best, "extremal_graphs": len(extremal)}
    if best is None or best < bound:
        return Certificate("saturation-bound", FAIL, {"reason": "saturated graph below bound", "min_edges": best}, stats)
    for g in extremal:
        edges = frozenset(ksets[i] for i in range(len(ksets)) if g >> i & 1)
        if best == bound and edges not in family:
            return Certificate("saturation-bound", FAIL, {"reason": "extremal graph not isomorphic to M", "edges": [members(e) for e in sorted(edges)]}, stats)
    stats["tight"] = best == bound
    stats["m_orbit_size"] = len(family)
    return Certificate("saturation-bound", PASS, None, stats)
