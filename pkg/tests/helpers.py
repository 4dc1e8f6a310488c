"""Shared helpers for the test suite: small independent oracles."""

from __future__ import annotations

import itertools
from typing import Iterator

from sigmacycles import SigmaHypergraph, is_edge


def partitions_of(r: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of r into non-increasing positive parts."""
    if r == 0:
        yield ()
        return
    cap = r if max_part is None else min(r, max_part)
    for first in range(cap, 0, -1):
        for rest in partitions_of(r - first, first):
            yield (first,) + rest


def exhaustive_edge_count(H: SigmaHypergraph) -> int:
    """Count edges by testing every r-subset of the vertex grid."""
    verts = list(H.vertices())
    return sum(1 for combo in itertools.combinations(verts, H.r) if is_edge(H, combo))


def exhaustive_edges(H: SigmaHypergraph) -> list[frozenset]:
    verts = list(H.vertices())
    return [
        frozenset(combo)
        for combo in itertools.combinations(verts, H.r)
        if is_edge(H, combo)
    ]
