"""K_{r+1}^r-decompositions: the clique hypergraph H' of an r-graph H."""

from __future__ import annotations

from dataclasses import dataclass, field

from .hypergraph import Hypergraph, VertexSet, k_subsets


@dataclass(frozen=True)
class Decomposition:
    """Cliques of size r+1 partitioning the edges of an r-uniform hypergraph.

    ``assignment`` maps every edge to the index of the clique containing it.
    """

    n: int
    r: int
    cliques: tuple[VertexSet, ...]
    assignment: dict[VertexSet, int] = field(default_factory=dict, compare=False)

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.r + 1, self.cliques)

    def expand(self) -> Hypergraph:
        return Hypergraph(self.n, self.r, tuple(e for q in self.cliques for e in k_subsets(q, self.r)))

    @classmethod
    def from_cliques(cls, n: int, r: int, cliques) -> "Decomposition":
        cliques = tuple(sorted(cliques))
        assignment = {}
        for i, q in enumerate(cliques):
            for e in k_subsets(q, r):
                if e in assignment:
                    raise ValueError("cliques share an edge")
                assignment[e] = i
        return cls(n, r, cliques, assignment)

    def __len__(self) -> int:
        return len(self.cliques)
