"""Vectorised enumeration of all labeled k-graphs on a handful of vertices.

A graph is an integer whose bit ``i`` says whether the ``i``-th k-set (in
canonical order) is an edge; all ``2**N`` graphs are streamed as numpy
``uint64`` blocks.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

CHUNK = 1 << 22


def chunks(num_sets: int, chunk: int = CHUNK) -> Iterator[np.ndarray]:
    total = 1 << num_sets
    for start in range(0, total, chunk):
        yield np.arange(start, min(start + chunk, total), dtype=np.uint64)


def vertex_degrees(g: np.ndarray, pairs: list[tuple[int, int]], n: int) -> np.ndarray:
    """Degree of each vertex for a block of graphs; shape ``(n, len(g))``."""
    deg = np.zeros((n, g.shape[0]), dtype=np.uint8)
    for i, (u, v) in enumerate(pairs):
        bit = ((g >> np.uint64(i)) & np.uint64(1)).astype(np.uint8)
        deg[u] += bit
        deg[v] += bit
    return deg
