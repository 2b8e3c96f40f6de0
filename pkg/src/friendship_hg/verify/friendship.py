"""Friendship, decomposition, universality and sociable-set checks."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..certificate import ERROR, FAIL, PASS, Certificate
from ..decomposition import Decomposition
from ..hgio import content_hash
from ..hypergraph import (
    Hypergraph,
    HypergraphError,
    VertexSet,
    degree_profile,
    full_set,
    k_subsets,
    k_subsets_of_range,
    members,
)
from ..steiner import SteinerSystem, verify_steiner


class DecompositionError(HypergraphError):
    def __init__(self, certificate: Certificate):
        super().__init__(f"hypergraph has no K_(r+1)^r decomposition: {certificate.witness}")
        self.certificate = certificate


def friends_of(h: Hypergraph, a: VertexSet) -> list[int]:
    """Vertices u outside ``a`` such that B + u is an edge for every (r-1)-subset B of ``a``."""
    if a.bit_count() < h.r - 1:
        raise HypergraphError(f"friends_of needs |A| >= r-1 = {h.r - 1}, got {a.bit_count()}")
    subsets = list(k_subsets(a, h.r - 1))
    out = []
    for u in range(h.n):
        bit = 1 << u
        if a & bit:
            continue
        if all((b | bit) in h for b in subsets):
            out.append(u)
    return out


def friends_via_cliques(d: Decomposition, a: VertexSet) -> list[int]:
    """Friends of ``a`` read off the clique list alone, without an edge lookup.

    A set B + u is an edge exactly when some clique contains it, so u is a
    friend when every (r-1)-subset B of ``a`` shares a clique with u.
    """
    need = {b: i for i, b in enumerate(k_subsets(a, d.r - 1))}
    seen: dict[int, int] = {}
    for q in d.cliques:
        inside = q & a
        if inside.bit_count() < d.r - 1:
            continue
        outside = members(q & ~a)
        for b in k_subsets(inside, d.r - 1):
            flag = 1 << need[b]
            for u in outside:
                seen[u] = seen.get(u, 0) | flag
    full = (1 << len(need)) - 1
    return sorted(u for u, mask in seen.items() if mask == full)


def neighbour_masks(h: Hypergraph) -> dict[VertexSet, int]:
    """For each (r-1)-set B, the bitmask of vertices u with B + u an edge."""
    nbr: dict[VertexSet, int] = {}
    for e in h.edges:
        rest = e
        while rest:
            low = rest & -rest
            b = e ^ low
            nbr[b] = nbr.get(b, 0) | low
            rest ^= low
    return nbr


def _friend_mask(nbr: dict[VertexSet, int], rset: VertexSet, full: int) -> int:
    mask = full & ~rset
    rest = rset
    while rest and mask:
        low = rest & -rest
        mask &= nbr.get(rset ^ low, 0)
        rest ^= low
    return mask


def _scan_range(h: Hypergraph, start: int, stop: int) -> tuple[int, VertexSet, int] | None:
    """First r-set with index in [start, stop) lacking a unique friend."""
    nbr = neighbour_masks(h)
    full = full_set(h.n)
    for idx, rset in enumerate(k_subsets_of_range(h.n, h.r)):
        if idx < start:
            continue
        if idx >= stop:
            break
        mask = _friend_mask(nbr, rset, full)
        if mask.bit_count() != 1:
            return idx, rset, mask
    return None


def verify_friendship(h: Hypergraph, jobs: int = 1) -> Certificate:
    """Every r-set has exactly one friend.

    With ``jobs > 1`` the r-set range is split into contiguous chunks checked
    in worker processes; the earliest failure is kept, so the certificate does
    not depend on the worker count.
    """
    total = math.comb(h.n, h.r)
    stats = {"n": h.n, "r": h.r, "edges": h.m, "rsets_total": total}
    sha = content_hash(h)
    if h.n <= h.r:
        return Certificate("friendship", ERROR, {"reason": f"need n >= r+1, got n={h.n}, r={h.r}"}, stats, sha)

    if jobs <= 1 or total < 2 * jobs:
        found = _scan_range(h, 0, total)
    else:
        step = -(-total // jobs)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_range, [h] * len(bounds), *zip(*bounds)))
        hits = [r for r in results if r is not None]
        found = min(hits) if hits else None

    if found is None:
        stats["rsets_examined"] = total
        return Certificate("friendship", PASS, None, stats, sha)
    idx, rset, mask = found
    stats["rsets_examined"] = idx + 1
    return Certificate("friendship", FAIL, {"rset": members(rset), "friends": members(mask)}, stats, sha)


def is_friendship(h: Hypergraph) -> bool:
    return verify_friendship(h).verdict == PASS


def decompose(h: Hypergraph) -> Certificate:
    """Find, for every edge, the unique vertex completing it to a K_{r+1}^r.

    PASS carries the :class:`Decomposition` as ``payload``.  FAIL names the
    first edge with zero or several completions.
    """
    nbr = neighbour_masks(h)
    full = full_set(h.n)
    sha = content_hash(h)
    stats = {"n": h.n, "r": h.r, "edges": h.m}
    owner: dict[VertexSet, VertexSet] = {}
    for e in h.edges:
        comp = _friend_mask(nbr, e, full)
        if comp.bit_count() != 1:
            witness = {"edge": members(e), "completions": members(comp)}
            return Certificate("decompose", FAIL, witness, stats, sha)
        owner[e] = e | comp

    cliques = sorted(set(owner.values()))
    index = {q: i for i, q in enumerate(cliques)}
    for q in cliques:
        for e in k_subsets(q, h.r):
            if owner.get(e) != q:
                witness = {"edge": members(e), "cliques": [members(q), members(owner.get(e, 0))]}
                return Certificate("decompose", FAIL, witness, stats, sha)
    assignment = {e: index[q] for e, q in owner.items()}
    decomp = Decomposition(h.n, h.r, tuple(cliques), assignment)
    if h.m != (h.r + 1) * len(cliques):
        raise AssertionError("decomposition does not partition the edges")
    stats["cliques"] = len(cliques)
    cert = Certificate("decompose", PASS, None, stats, sha)
    cert.payload = decomp
    return cert


def decomposition(h: Hypergraph) -> Decomposition:
    """Like :func:`decompose` but raising :class:`DecompositionError` on failure."""
    cert = decompose(h)
    if not cert.passed:
        raise DecompositionError(cert)
    return cert.payload


def _compact(s: VertexSet, u: int) -> VertexSet:
    low = s & ((1 << u) - 1)
    return low | ((s >> (u + 1)) << u)


def is_universal(h: Hypergraph) -> Certificate:
    """Look for a vertex u over every (r-1)-set whose removal leaves an S(r-1, r, n-1).

    On PASS the witness names u and ``payload`` holds the extracted system,
    relabelled onto 0..n-2 by closing the gap left by u.
    """
    sha = content_hash(h)
    r, n = h.r, h.n
    stats = {"n": n, "r": r, "edges": h.m}
    per_vertex = []
    cone_size = math.comb(n - 1, r - 1)
    for u in range(n):
        bit = 1 << u
        through = {e for e in h.edges if e & bit}
        if len(through) != cone_size:
            missing = next(b for b in k_subsets(full_set(n) & ~bit, r - 1) if (b | bit) not in through)
            per_vertex.append({"u": u, "missing_cone_set": members(missing)})
            continue
        inner = [_compact(e, u) for e in h.edges if not e & bit]
        cert = verify_steiner(r - 1, r, n - 1, inner)
        if cert.passed:
            out = Certificate("universal", PASS, {"universal_vertex": u}, stats, sha)
            out.payload = SteinerSystem(r - 1, r, n - 1, tuple(inner))
            return out
        per_vertex.append({"u": u, "steiner_witness": cert.witness})
    return Certificate("universal", FAIL, {"per_vertex": per_vertex}, stats, sha)


@dataclass(frozen=True)
class SociableReport:
    sociable: tuple[VertexSet, ...]
    unsociable: tuple[VertexSet, ...]
    uncovered: tuple[VertexSet, ...]
    degrees: dict[VertexSet, int]

    def to_dict(self) -> dict:
        return {
            "sociable": [members(t) for t in self.sociable],
            "unsociable_count": len(self.unsociable),
            "uncovered": [members(t) for t in self.uncovered],
            "sociable_degrees": sorted({self.degrees[t] for t in self.sociable}),
        }


def sociable_report(d: Decomposition, n: int | None = None) -> SociableReport:
    """Classify every (r-1)-set by how many cliques contain it.

    Sets in no clique are listed under ``uncovered`` rather than raising;
    for a friendship hypergraph that list is empty.
    """
    n = d.n if n is None else n
    h_prime = Hypergraph(n, d.r + 1, d.cliques)
    degrees = degree_profile(h_prime, d.r - 1)
    soc = tuple(t for t, c in degrees.items() if c >= 2)
    unsoc = tuple(t for t, c in degrees.items() if c == 1)
    zero = tuple(t for t, c in degrees.items() if c == 0)
    return SociableReport(soc, unsoc, zero, degrees)


def star_center(sets, n: int, k: int) -> int | None:
    """Vertex u such that ``sets`` is exactly the k-sets through u (a copy of M(n, k, 1))."""
    family = set(sets)
    if len(family) != math.comb(n - 1, k - 1):
        return None
    for u in range(n):
        bit = 1 << u
        if all(t & bit for t in family):
            return u
    return None
