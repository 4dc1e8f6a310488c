"""Hamiltonian cycle certificates for grid-structured uniform hypergraphs."""

from .certificates import (
    KIND_BERGE,
    KIND_K_INTERSECTING,
    KIND_SHARP,
    CycleCertificate,
    Matching,
    SharpnessProfile,
)
from .construct import (
    construct_berge_hamiltonian,
    construct_k_intersecting,
    construct_sharp_hamiltonian,
    diagonal_matching,
    frobenius_decompose,
    shifted_matching,
)
from .core import (
    Edge,
    GridVertex,
    Partition,
    SigmaHypergraph,
    edge_count,
    enumerate_edges,
    is_edge,
    make_hypergraph,
    parse_partition,
)
from .errors import (
    BudgetExceeded,
    CertificateParseError,
    ConstructionError,
    ConstructionUnsupported,
    DegenerateIntersection,
    KOutOfRange,
    NoEdgesError,
    NTooSmall,
    OnlyOneEdge,
    QNotRepresentable,
)
from .verify import (
    BoundsReport,
    MaxMatchingResult,
    SharpSearchResult,
    VerificationReport,
    bounds_report,
    brute_force_max_matching,
    brute_force_sharp_hamiltonian_exists,
    matching_upper_bound,
    sharp_cycle_bounds,
    sharp_nonexistence_test,
    verify_berge_hamiltonian,
    verify_k_intersecting,
    verify_matching,
    verify_sharp_cycle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
