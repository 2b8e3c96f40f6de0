"""Reading and writing the ``.hg`` text format.

::

    n r m
    # steiner t=<t>        (optional, Steiner systems only)
    v1 v2 ... vr           (m lines, indices strictly increasing)

Edge lines appear in canonical (ascending bitmask) order.
"""

from __future__ import annotations

import hashlib
import re
from pathlib import Path

from .hypergraph import Hypergraph, HypergraphError, members

_STEINER_RE = re.compile(r"#\s*steiner\s+t=(\d+)\s*$")


class HGFormatError(HypergraphError):
    pass


def dumps(h: Hypergraph, steiner_t: int | None = None) -> str:
    lines = [f"{h.n} {h.r} {h.m}"]
    if steiner_t is not None:
        lines.append(f"# steiner t={steiner_t}")
    lines.extend(" ".join(map(str, members(e))) for e in h.edges)
    return "\n".join(lines) + "\n"


def loads(text: str) -> tuple[Hypergraph, int | None]:
    """Parse ``.hg`` text; returns the hypergraph and the steiner ``t`` if declared."""
    lines = text.splitlines()
    if not lines:
        raise HGFormatError("empty input")
    header = lines[0].split()
    if len(header) != 3 or not all(tok.isdigit() for tok in header):
        raise HGFormatError(f"line 1: expected 'n r m', got {lines[0]!r}")
    n, r, m = map(int, header)
    body = lines[1:]
    steiner_t = None
    if body and body[0].startswith("#"):
        match = _STEINER_RE.match(body[0])
        if not match:
            raise HGFormatError(f"line 2: unrecognised comment {body[0]!r}")
        steiner_t = int(match.group(1))
        body = body[1:]
    offset = len(lines) - len(body) + 1
    while body and not body[-1].strip():
        body.pop()
    if len(body) != m:
        raise HGFormatError(f"header declares {m} edges, found {len(body)} lines")

    edges = []
    prev = -1
    for lineno, line in enumerate(body, start=offset):
        toks = line.split(" ")
        if not all(tok.isdigit() for tok in toks):
            raise HGFormatError(f"line {lineno}: non-integer token in {line!r}")
        idx = [int(tok) for tok in toks]
        if len(idx) != r:
            raise HGFormatError(f"line {lineno}: {len(idx)} vertices, expected {r}")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise HGFormatError(f"line {lineno}: indices not strictly increasing")
        if idx[-1] >= n:
            raise HGFormatError(f"line {lineno}: vertex {idx[-1]} out of range 0..{n - 1}")
        e = 0
        for i in idx:
            e |= 1 << i
        if e == prev:
            raise HGFormatError(f"line {lineno}: duplicate edge")
        if e < prev:
            raise HGFormatError(f"line {lineno}: edges not in canonical order")
        prev = e
        edges.append(e)
    return Hypergraph(n, r, tuple(edges)), steiner_t


def read(path: str | Path) -> tuple[Hypergraph, int | None]:
    return loads(Path(path).read_text())


def write(path: str | Path, h: Hypergraph, steiner_t: int | None = None) -> None:
    Path(path).write_text(dumps(h, steiner_t))


def sha256_hex(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()


def content_hash(h: Hypergraph) -> str:
    return sha256_hex(dumps(h))
