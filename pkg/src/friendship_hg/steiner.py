"""Steiner systems S(t, k, n): generators and the exact-once verifier.

Every generator here runs its output through :func:`verify_steiner` before
returning it.  Labelings are fixed so serialised output is byte-stable:

* Bose STS(6m+3): point (i, j) of Z_{2m+1} x Z_3 gets index 3i + j.
* Skolem STS(6m+1): point (i, j) of Z_{2m} x Z_3 gets index 3i + j and the
  extra point gets index 6m.
* Code-based systems: coordinate positions in natural order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .certificate import ERROR, FAIL, PASS, Certificate
from .hgio import content_hash
from .hypergraph import Hypergraph, HypergraphError, VertexSet, full_set, k_subsets, members, vset


class SteinerError(ValueError):
    """Requested Steiner system does not exist or cannot be produced here."""


class SystemUnavailable(SteinerError):
    """The system may exist but no generator for it ships with this package."""


@dataclass(frozen=True)
class SteinerSystem:
    t: int
    k: int
    n: int
    blocks: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks)))

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.k, self.blocks)

    @classmethod
    def from_hypergraph(cls, h: Hypergraph, t: int) -> "SteinerSystem":
        return cls(t, h.r, h.n, h.edges)

    @property
    def expected_blocks(self) -> int:
        return math.comb(self.n, self.t) // math.comb(self.k, self.t)


def verify_steiner(t: int, k: int, n: int, blocks) -> Certificate:
    """Check that every ``t``-subset of ``0..n-1`` lies in exactly one block.

    Malformed input (wrong block size, out-of-range point, bad parameters)
    yields an ERROR certificate; a coverage defect yields FAIL carrying the
    first offending ``t``-set in canonical order and the blocks covering it.
    """
    blocks = sorted(blocks)
    stats = {"t": t, "k": k, "n": n, "blocks": len(blocks)}
    if not (0 <= t <= k <= n <= 64):
        return Certificate("steiner", ERROR, {"reason": f"need 0 <= t <= k <= n <= 64, got t={t} k={k} n={n}"}, stats)
    limit = full_set(n)
    for b in blocks:
        if b.bit_count() != k or b & ~limit:
            return Certificate("steiner", ERROR, {"reason": "malformed block", "block": members(b)}, stats)

    cover: dict[VertexSet, list[VertexSet]] = {}
    for b in blocks:
        for s in k_subsets(b, t):
            cover.setdefault(s, []).append(b)
    examined = 0
    for s in k_subsets(limit, t):
        examined += 1
        covering = cover.get(s, [])
        if len(covering) != 1:
            stats["tsets_examined"] = examined
            witness = {"tset": members(s), "times_covered": len(covering), "blocks": [members(b) for b in covering[:2]]}
            return Certificate("steiner", FAIL, witness, stats)
    stats["tsets_examined"] = examined
    return Certificate("steiner", PASS, None, stats)


def _gated(system: SteinerSystem) -> SteinerSystem:
    cert = verify_steiner(system.t, system.k, system.n, system.blocks)
    if not cert.passed:
        raise AssertionError(f"generated S({system.t},{system.k},{system.n}) failed verification: {cert.witness}")
    return system


def certify(system: SteinerSystem) -> Certificate:
    cert = verify_steiner(system.t, system.k, system.n, system.blocks)
    if cert.verdict != ERROR:
        cert.input_sha256 = content_hash(system.as_hypergraph())
    return cert


def _bose(n: int) -> SteinerSystem:
    q = n // 3  # odd order of the idempotent commutative quasigroup
    half = (q + 1) // 2

    def pt(i: int, j: int) -> int:
        return 3 * i + j % 3

    def op(x: int, y: int) -> int:
        return ((x + y) * half) % q

    blocks = [vset((pt(x, 0), pt(x, 1), pt(x, 2))) for x in range(q)]
    for x, y in itertools.combinations(range(q), 2):
        for j in range(3):
            blocks.append(vset((pt(x, j), pt(y, j), pt(op(x, y), j + 1))))
    return SteinerSystem(2, 3, n, tuple(blocks))


def _skolem(n: int) -> SteinerSystem:
    m = (n - 1) // 6
    q = 2 * m
    inf = 6 * m

    def pt(i: int, j: int) -> int:
        return 3 * i + j % 3

    def op(x: int, y: int) -> int:
        # addition mod 2m with symbols renamed 2a -> a, 2a+1 -> m+a: half-idempotent
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else m + s // 2

    blocks = [vset((pt(x, 0), pt(x, 1), pt(x, 2))) for x in range(m)]
    for x in range(m):
        for j in range(3):
            blocks.append(vset((inf, pt(x + m, j), pt(x, j + 1))))
    for x, y in itertools.combinations(range(q), 2):
        for j in range(3):
            blocks.append(vset((pt(x, j), pt(y, j), pt(op(x, y), j + 1))))
    return SteinerSystem(2, 3, n, tuple(blocks))


def steiner_triple_system(n: int) -> SteinerSystem:
    """An S(2, 3, n): Bose construction for n = 3 mod 6, Skolem for n = 1 mod 6."""
    if n < 3 or n % 6 not in (1, 3):
        raise SteinerError(f"no Steiner triple system exists on {n} points (need n = 1 or 3 mod 6, n >= 3)")
    if n > 64:
        raise SteinerError(f"n={n} exceeds the 64-vertex limit")
    return _gated(_bose(n) if n % 6 == 3 else _skolem(n))


def _codeword_supports(generator: list[list[int]], q: int, weight: int) -> tuple[list[VertexSet], int]:
    rows = len(generator)
    length = len(generator[0])
    supports = set()
    count = 0
    for coeffs in itertools.product(range(q), repeat=rows):
        word = [sum(c * g[i] for c, g in zip(coeffs, generator)) % q for i in range(length)]
        if sum(1 for x in word if x) == weight:
            count += 1
            supports.add(vset(i for i, x in enumerate(word) if x))
    return sorted(supports), count


# Extended binary Hamming [8,4,4] code.
_HAMMING8 = [
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 1, 1, 0],
]

# Extended ternary Golay [12,6,6] code, standard form [I | A].
_GOLAY12 = [
    [1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1],
    [0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2],
    [0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2],
    [0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1],
    [0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0],
]


def sqs8() -> SteinerSystem:
    """S(3, 4, 8) from the weight-4 words of the extended Hamming code."""
    blocks, _ = _codeword_supports(_HAMMING8, 2, 4)
    return _gated(SteinerSystem(3, 4, 8, tuple(blocks)))


def golay_weight6_count() -> int:
    return _codeword_supports(_GOLAY12, 3, 6)[1]


def s_5_6_12() -> SteinerSystem:
    """S(5, 6, 12) from the supports of the weight-6 ternary Golay codewords."""
    blocks, _ = _codeword_supports(_GOLAY12, 3, 6)
    return _gated(SteinerSystem(5, 6, 12, tuple(blocks)))


def available_system(t: int, k: int, n: int) -> SteinerSystem:
    """Look up a generator by parameters; raises SystemUnavailable otherwise."""
    if (t, k) == (2, 3):
        return steiner_triple_system(n)
    if (t, k, n) == (3, 4, 8):
        return sqs8()
    if (t, k, n) == (5, 6, 12):
        return s_5_6_12()
    if t == k:
        return _gated(SteinerSystem(t, k, n, tuple(k_subsets(full_set(n), k))))
    if k == n:
        return _gated(SteinerSystem(t, k, n, (full_set(n),)))
    raise SystemUnavailable(f"no generator for S({t},{k},{n}) in this package")


def check_shape(system: SteinerSystem, *, t: int | None = None, k: int | None = None, n: int | None = None) -> None:
    for name, want in (("t", t), ("k", k), ("n", n)):
        if want is not None and getattr(system, name) != want:
            raise HypergraphError(f"expected a Steiner system with {name}={want}, got S({system.t},{system.k},{system.n})")
