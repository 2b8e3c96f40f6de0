"""Backtracking enumeration of friendship r-hypergraphs on tiny vertex sets.

The search runs over K_{r+1}^r-decompositions: a state is a set of chosen
(r+1)-sets ("cliques"), whose r-subsets are the edges.  Friendship of an
r-set R is monotone in the edge set, so once any R has two friends the
branch is dead.  Per (r+1)-set Q we keep the number of its r-subsets that
are edges; Q hands out friends when that count reaches r (to its one
missing subset) and r+1 (to all others).

Branching picks the tightest unmet requirement, either an (r-1)-set in no
clique or an r-set with no friend, and splits on the candidates that could
meet it: include the i-th and exclude the earlier ones.  That split is a
partition, so every solution is produced exactly once.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .certificate import ERROR, FAIL, PASS, Certificate
from .decomposition import Decomposition
from .hypergraph import full_set, k_subsets, k_subsets_of_range, members
from .verify.friendship import verify_friendship

DEFAULT_NODE_BUDGET = 10**8
MAX_CANDIDATES = 210  # C(10, 4): the r = 3, n = 10 ceiling


class SearchConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    n: int
    r: int
    max_solutions: int | None = None
    node_budget: int = DEFAULT_NODE_BUDGET
    symmetry_breaking: bool = True

    def __post_init__(self) -> None:
        if self.r < 3:
            raise SearchConfigError(f"search needs r >= 3, got {self.r}")
        if self.n < self.r + 1:
            raise SearchConfigError(f"search needs n >= r+1, got n={self.n}, r={self.r}")
        if self.r == 3 and self.n > 10:
            raise SearchConfigError(f"r=3 search is capped at n <= 10, got {self.n}")
        if math.comb(self.n, self.r + 1) > MAX_CANDIDATES:
            raise SearchConfigError(f"C({self.n},{self.r + 1}) candidate cliques exceeds the cap of {MAX_CANDIDATES}")
        if self.node_budget < 1:
            raise SearchConfigError("node_budget must be positive")
        if self.max_solutions is not None and self.max_solutions < 1:
            raise SearchConfigError("max_solutions must be positive when given")


@dataclass
class SearchOutcome:
    config: SearchConfig
    solutions: list[Decomposition] = field(default_factory=list)
    exhausted: bool = False
    nodes_visited: int = 0

    def to_dict(self) -> dict:
        from .hgio import content_hash

        sols = []
        for d in self.solutions:
            h = d.expand()
            sols.append({"cliques": [members(q) for q in d.cliques], "edges": h.m, "sha256": content_hash(h)})
        c = self.config
        return {
            "n": c.n,
            "r": c.r,
            "max_solutions": c.max_solutions,
            "node_budget": c.node_budget,
            "symmetry_breaking": c.symmetry_breaking,
            "exhausted": self.exhausted,
            "nodes_visited": self.nodes_visited,
            "solution_count": len(self.solutions),
            "solutions": sols,
        }


class _Stop(Exception):
    pass


class _Searcher:
    def __init__(self, n: int, r: int):
        self.n, self.r = n, r
        self.cands = list(k_subsets_of_range(n, r + 1))
        self.rsets = list(k_subsets_of_range(n, r))
        self.tsets = list(k_subsets_of_range(n, r - 1))
        cand_ix = {q: i for i, q in enumerate(self.cands)}
        rset_ix = {s: i for i, s in enumerate(self.rsets)}
        tset_ix = {t: i for i, t in enumerate(self.tsets)}
        self.cand_ix = cand_ix

        # r-set indices of each candidate, and candidates above each r-set / (r-1)-set
        self.cand_rsets = [[rset_ix[s] for s in k_subsets(q, r)] for q in self.cands]
        self.cand_tsets = [[tset_ix[t] for t in k_subsets(q, r - 1)] for q in self.cands]
        self.rset_sup = [0] * len(self.rsets)
        self.rset_sup_list: list[list[int]] = [[] for _ in self.rsets]
        self.tset_sup = [0] * len(self.tsets)
        for ci, q in enumerate(self.cands):
            for si in self.cand_rsets[ci]:
                self.rset_sup[si] |= 1 << ci
                self.rset_sup_list[si].append(ci)
            for ti in self.cand_tsets[ci]:
                self.tset_sup[ti] |= 1 << ci
        # for r-set R: the (Q, other r-subsets of Q) pairs that could befriend it
        self.rset_sources = []
        for si, s in enumerate(self.rsets):
            srcs = []
            for ci in self.rset_sup_list[si]:
                srcs.append((ci, [x for x in self.cand_rsets[ci] if x != si]))
            self.rset_sources.append(srcs)

        self.present = [False] * len(self.rsets)
        self.count = [0] * len(self.cands)
        self.friends = [0] * len(self.rsets)
        self.tdeg = [0] * len(self.tsets)
        self.chosen: list[int] = []
        self.allowed = (1 << len(self.cands)) - 1

    # -- state changes -------------------------------------------------

    def add(self, ci: int) -> bool:
        """Add candidate ``ci``; record undo info.  False if some r-set now has two friends."""
        befriended: list[int] = []
        ok = True
        for si in self.cand_rsets[ci]:
            self.present[si] = True
            for qi in self.rset_sup_list[si]:
                self.count[qi] += 1
                c = self.count[qi]
                if c == self.r:
                    missing = next(x for x in self.cand_rsets[qi] if not self.present[x])
                    befriended.append(missing)
                elif c == self.r + 1:
                    befriended.extend(x for x in self.cand_rsets[qi] if x != si)
        for x in befriended:
            self.friends[x] += 1
            if self.friends[x] > 1:
                ok = False
        for ti in self.cand_tsets[ci]:
            self.tdeg[ti] += 1
        self.chosen.append(ci)
        self._undo.append(befriended)
        if ok:
            dead = 0
            for x in befriended:
                dead |= self.rset_sup[x]
            self.allowed &= ~dead & ~(1 << ci)
        return ok

    def remove(self) -> None:
        ci = self.chosen.pop()
        befriended = self._undo.pop()
        for x in befriended:
            self.friends[x] -= 1
        for ti in self.cand_tsets[ci]:
            self.tdeg[ti] -= 1
        for si in reversed(self.cand_rsets[ci]):
            for qi in self.rset_sup_list[si]:
                self.count[qi] -= 1
            self.present[si] = False

    # -- branching -----------------------------------------------------

    def pick(self) -> int | None:
        """Mask of candidates for the tightest unmet requirement; None at a solution."""
        allowed = self.allowed
        best = None
        best_size = None
        for ti, deg in enumerate(self.tdeg):
            if deg == 0:
                opts = allowed & self.tset_sup[ti]
                size = opts.bit_count()
                if size == 0:
                    return 0
                if best_size is None or size < best_size:
                    best, best_size = opts, size
        present = self.present
        for si, fr in enumerate(self.friends):
            if fr:
                continue
            opts = 0
            for qi, others in self.rset_sources[si]:
                need = 0
                viable = True
                for x in others:
                    if not present[x]:
                        o = allowed & self.rset_sup[x]
                        if not o:
                            viable = False
                            break
                        need |= o
                if viable:
                    opts |= need
            size = opts.bit_count()
            if size == 0:
                return 0
            if best_size is None or size < best_size:
                best, best_size = opts, size
        return best

    def branches(self, opts: int) -> list[tuple[int, int]]:
        """(candidate, mask of earlier candidates to exclude) for each branch."""
        out = []
        earlier = 0
        while opts:
            low = opts & -opts
            out.append((low.bit_length() - 1, earlier))
            earlier |= low
            opts ^= low
        return out

    def decomposition(self) -> Decomposition:
        return Decomposition.from_cliques(self.n, self.r, [self.cands[c] for c in self.chosen])

    # -- driver --------------------------------------------------------

    def run(self, budget: int, quota: int | None):
        """Depth-first search from the current state.

        Returns (solutions as (decomposition, node index) pairs, nodes, aborted).
        """
        self._undo = getattr(self, "_undo", [])
        self.nodes = 0
        self.found: list[tuple[Decomposition, int]] = []
        self.aborted = False
        self.budget, self.quota = budget, quota
        try:
            self._dfs()
        except _Stop:
            pass
        return self.found, self.nodes, self.aborted

    def _dfs(self) -> None:
        if self.nodes >= self.budget:
            self.aborted = True
            raise _Stop
        self.nodes += 1
        opts = self.pick()
        if opts is None:
            self.found.append((self.decomposition(), self.nodes))
            if self.quota is not None and len(self.found) >= self.quota:
                raise _Stop
            return
        saved = self.allowed
        for ci, earlier in self.branches(opts):
            self.allowed = saved & ~earlier
            if self.add(ci):
                self._dfs()
            self.remove()
        self.allowed = saved


def _prepare(cfg: SearchConfig) -> tuple[_Searcher, bool]:
    s = _Searcher(cfg.n, cfg.r)
    s._undo = []
    ok = True
    if cfg.symmetry_breaking:
        ok = s.add(0)  # candidate 0 is {0, ..., r}
    return s, ok


def _run_branch(cfg: SearchConfig, ci: int, earlier: int, saved_allowed: int, budget: int):
    s, _ = _prepare(cfg)
    s.allowed = saved_allowed & ~earlier
    if not s.add(ci):
        return [], 0, False
    found, nodes, aborted = s.run(budget, cfg.max_solutions)
    return found, nodes, aborted


def enumerate_friendship(cfg: SearchConfig, jobs: int = 1) -> SearchOutcome:
    """Enumerate friendship hypergraphs by their decompositions.

    With symmetry breaking on, the first clique is fixed to {0, ..., r}
    (every friendship hypergraph has a clique, so this loses nothing up to
    relabelling).  ``jobs > 1`` splits the root's branches across processes
    and merges them so the outcome matches the single-process run exactly.
    """
    s, ok = _prepare(cfg)
    outcome = SearchOutcome(cfg)
    if not ok:
        outcome.exhausted = True
        return outcome

    if jobs <= 1:
        found, nodes, aborted = s.run(cfg.node_budget, cfg.max_solutions)
        quota_hit = cfg.max_solutions is not None and len(found) >= cfg.max_solutions
        outcome.nodes_visited = nodes
        outcome.exhausted = not aborted and not quota_hit
        sols = [d for d, _ in found]
    else:
        sols, outcome.nodes_visited, outcome.exhausted = _parallel(cfg, s, jobs)

    for d in sols:
        if not verify_friendship(d.expand()).passed:
            raise AssertionError(f"search emitted a non-friendship hypergraph: {[members(q) for q in d.cliques]}")
    outcome.solutions = sols
    return outcome


def _parallel(cfg: SearchConfig, s: _Searcher, jobs: int):
    budget, quota = cfg.node_budget, cfg.max_solutions
    # the root node, visited in-process exactly as the sequential driver would
    s.nodes = 1
    opts = s.pick()
    if opts is None:
        return [s.decomposition()], 1, quota is None or quota > 1
    branches = s.branches(opts)
    saved = s.allowed
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run_branch, cfg, ci, earlier, saved, budget) for ci, earlier in branches]
        results = [f.result() for f in futures]

    total = 1
    sols: list[Decomposition] = []
    for found, nodes, _aborted in results:
        remaining = budget - total
        for d, idx in found:
            if idx > remaining:
                return sols, budget, False
            sols.append(d)
            if quota is not None and len(sols) >= quota:
                return sols, total + idx, False
        if nodes > remaining:
            return sols, budget, False
        total += nodes
    return sols, total, True


KNOWN_CENSUS = {(4, 3): 1, (5, 3): 0, (6, 3): 0, (7, 3): 0}


def verify_solution_census(n: int, r: int, solutions, exhausted: bool = True) -> Certificate:
    """Compare an exhausted census with the recorded small cases."""
    stats = {"n": n, "r": r, "solutions": len(solutions), "exhausted": exhausted}
    if not exhausted:
        return Certificate("census", ERROR, {"reason": "search was not exhausted"}, stats)
    if (n, r) not in KNOWN_CENSUS:
        return Certificate("census", ERROR, {"reason": f"no recorded census for n={n}, r={r}"}, stats)
    want = KNOWN_CENSUS[(n, r)]
    if len(solutions) != want:
        return Certificate("census", FAIL, {"expected": want, "found": len(solutions)}, stats)
    if (n, r) == (4, 3) and tuple(solutions[0].cliques) != (full_set(4),):
        return Certificate("census", FAIL, {"expected": "K_4^3", "found": [members(q) for q in solutions[0].cliques]}, stats)
    return Certificate("census", PASS, None, stats)
