"""Certificate and matching value types shared by constructors and verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Edge, GridVertex, SigmaHypergraph

KIND_BERGE = "berge"
KIND_SHARP = "sharp"
KIND_K_INTERSECTING = "k-intersecting"
KINDS = (KIND_BERGE, KIND_SHARP, KIND_K_INTERSECTING)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges (disjointness not enforced
    here; see verify.verify_matching)."""

    edges: tuple[Edge, ...]

    @property
    def covered(self) -> frozenset[GridVertex]:
        return frozenset(v for e in self.edges for v in e.vertices)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SharpnessProfile:
    """Measured consecutive-intersection sizes around a cycle.

    uniform_t / uniform_z are set when the sizes alternate (t, z, t, z, ...)
    over an even-length cycle.
    """

    pair_sizes: tuple[int, ...]
    uniform_t: Optional[int] = None
    uniform_z: Optional[int] = None

    @property
    def t_sharp(self) -> bool:
        return self.uniform_t is not None and self.uniform_t == self.uniform_z

    @classmethod
    def from_sizes(cls, pair_sizes: tuple[int, ...]) -> "SharpnessProfile":
        p = len(pair_sizes)
        if p >= 2 and p % 2 == 0:
            t, z = pair_sizes[0], pair_sizes[1]
            if all(pair_sizes[i] == (t if i % 2 == 0 else z) for i in range(p)):
                return cls(pair_sizes, t, z)
        return cls(pair_sizes)


@dataclass(frozen=True)
class CycleCertificate:
    """An ordered edge sequence with a claimed cycle kind.

    Berge certificates additionally carry the vertex sequence; sharp ones
    the split index used by the constructor; k-intersecting ones carry k.
    Claims are untrusted until checked by the matching verifier.
    """

    hypergraph: SigmaHypergraph
    kind: str
    edges: tuple[Edge, ...]
    k: Optional[int] = None
    split_index: Optional[int] = None
    vertex_sequence: Optional[tuple[GridVertex, ...]] = None
    claimed_hamiltonian: bool = False
    claimed_t: Optional[int] = None
    claimed_z: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown cycle kind {self.kind!r}")

    def covered(self) -> frozenset[GridVertex]:
        return frozenset(v for e in self.edges for v in e.vertices)
