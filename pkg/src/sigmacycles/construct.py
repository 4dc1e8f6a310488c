"""Explicit cycle constructions on the vertex grid.

All constructors are deterministic, search-free, and verifier-gated: a
certificate is only returned after the corresponding definition-level
verifier has accepted it.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .certificates import (
    KIND_BERGE,
    KIND_K_INTERSECTING,
    KIND_SHARP,
    CycleCertificate,
    Matching,
)
from .core import Edge, GridVertex, SigmaHypergraph
from .errors import (
    ConstructionUnsupported,
    DegenerateIntersection,
    KOutOfRange,
    NTooSmall,
    OnlyOneEdge,
    QNotRepresentable,
)
from .verify import verify_berge_hamiltonian, verify_k_intersecting, verify_sharp_cycle


def frobenius_decompose(q: int, r: int) -> tuple[int, int]:
    """Write q = x*r + y*(r+1) with x, y >= 0 and y minimal.

    Always succeeds for q >= r(r-1); below that bound a representation may
    or may not exist.  Raises QNotRepresentable when there is none.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if q < 1:
        raise ValueError("q must be >= 1")
    y = q % r
    x = (q - y * (r + 1)) // r
    if x < 0:
        raise QNotRepresentable(f"q={q} is not x*{r} + y*{r + 1} with x, y >= 0")
    return x, y


def _part_offsets(parts: tuple[int, ...]) -> list[int]:
    return [0] + list(itertools.accumulate(parts))


def _part_vertices(
    H: SigmaHypergraph, block_start_row: int, j: int, i: int
) -> list[GridVertex]:
    """Vertices of part i of the j-th diagonal edge of a block: part sizes
    occupy consecutive row segments of the block's top r rows, class shifted
    i columns right of j."""
    parts = H.sigma.parts
    off = _part_offsets(parts)
    cls = (j + i) % H.n
    return [(cls, block_start_row + row) for row in range(off[i], off[i + 1])]


def _check_block(H: SigmaHypergraph, block_start_row: int, block_height: int) -> None:
    r = H.r
    if block_height not in (r, r + 1):
        raise ValueError(f"block height must be {r} or {r + 1}")
    if block_start_row < 0 or block_start_row + block_height > H.q:
        raise ValueError("block out of range")


def diagonal_matching(H: SigmaHypergraph, block_start_row: int, block_height: int) -> Matching:
    """n pairwise-disjoint edges placed diagonally: edge j takes its i-th part
    from class j+i (mod n), covering the block's top r x n subgrid."""
    _check_block(H, block_start_row, block_height)
    s = H.sigma.s
    if H.n < s:
        raise NTooSmall(f"n={H.n} < s={s}")
    edges = []
    for j in range(H.n):
        vs: list[GridVertex] = []
        for i in range(s):
            vs += _part_vertices(H, block_start_row, j, i)
        edges.append(Edge.of(vs))
    return Matching(tuple(edges))


def _shifted_edge(
    H: SigmaHypergraph,
    block_start_row: int,
    block_height: int,
    j: int,
    p: int,
    tail_block_start: Optional[int] = None,
    tail_j: Optional[int] = None,
) -> Edge:
    """Shifted edge: parts up to p as in diagonal edge j, later parts as in
    diagonal edge j+1 (or a caller-supplied diagonal edge, used to chain
    blocks).  For an (r+1)-high block the first part trades its last row for
    the block's extra row, so the shifted matching covers that row too."""
    s = H.sigma.s
    vs: list[GridVertex] = []
    for i in range(s):
        if i < p:
            pv = _part_vertices(H, block_start_row, j, i)
            if i == 0 and block_height == H.r + 1:
                cls = pv[-1][0]
                pv = pv[:-1] + [(cls, block_start_row + H.r)]
        else:
            if tail_block_start is not None:
                pv = _part_vertices(H, tail_block_start, tail_j or 0, i)
            else:
                pv = _part_vertices(H, block_start_row, (j + 1) % H.n, i)
        vs += pv
    return Edge.of(vs)


def shifted_matching(
    H: SigmaHypergraph, block_start_row: int, block_height: int, p: int
) -> Matching:
    """The companion matching to diagonal_matching under split index p."""
    _check_block(H, block_start_row, block_height)
    s = H.sigma.s
    if not 1 <= p < s:
        raise ValueError(f"split index must satisfy 1 <= p < s={s}")
    if H.n <= s:
        raise NTooSmall(f"n={H.n} <= s={s}: shifted edges would collide")
    edges = tuple(
        _shifted_edge(H, block_start_row, block_height, j, p) for j in range(H.n)
    )
    return Matching(edges)


def _blocks(H: SigmaHypergraph) -> list[tuple[int, int]]:
    """(start_row, height) for x r-blocks stacked top-down, then y (r+1)-blocks."""
    x, y = frobenius_decompose(H.q, H.r)
    blocks = []
    row = 0
    for _ in range(x):
        blocks.append((row, H.r))
        row += H.r
    for _ in range(y):
        blocks.append((row, H.r + 1))
        row += H.r + 1
    return blocks


def _resolve_split(H: SigmaHypergraph, p: int, y: int) -> int:
    """Keep the requested split unless an (r+1)-block would produce a zero
    intersection (head size t-1 = 0); then take the smallest split with
    head sum >= 2, or fail."""
    parts = H.sigma.parts
    s = len(parts)
    if not 1 <= p < s:
        raise ValueError(f"split index must satisfy 1 <= p < s={s}")
    if y == 0 or sum(parts[:p]) >= 2:
        return p
    for cand in range(1, s):
        if sum(parts[:cand]) >= 2:
            return cand
    raise DegenerateIntersection(
        f"sigma=({H.sigma}) with an (r+1)-block: every split gives a zero intersection"
    )


def construct_sharp_hamiltonian(H: SigmaHypergraph, p: int = 1) -> CycleCertificate:
    """Sharp Hamiltonian cycle from chained diagonal/shifted matchings.

    The grid splits into x r-blocks followed by y (r+1)-blocks; each block
    contributes the 2n edges E_0, E*_0, ..., E_{n-1}, E*_{n-1}, and the tail
    parts of each block's last shifted edge are re-targeted at the next
    block's first diagonal edge (the final block wraps to the first).
    """
    s = H.sigma.s
    if s < 2:
        raise ConstructionUnsupported("sharp construction needs at least two parts")
    if H.n <= s:
        raise NTooSmall(f"n={H.n} <= s={s}")
    blocks = _blocks(H)
    x, y = frobenius_decompose(H.q, H.r)
    p = _resolve_split(H, p, y)
    edges: list[Edge] = []
    for m, (b, h) in enumerate(blocks):
        next_b, _ = blocks[(m + 1) % len(blocks)]
        for j in range(H.n):
            diag = Edge.of(
                v for i in range(s) for v in _part_vertices(H, b, j, i)
            )
            if j < H.n - 1:
                star = _shifted_edge(H, b, h, j, p)
            else:
                star = _shifted_edge(H, b, h, j, p, tail_block_start=next_b, tail_j=0)
            edges += [diag, star]
    cert = CycleCertificate(
        hypergraph=H, kind=KIND_SHARP, edges=tuple(edges), split_index=p
    )
    report = verify_sharp_cycle(H, cert)
    if not report.ok or not report.hamiltonian:
        raise ConstructionUnsupported(
            f"recipe failed verification for {H}: {report.violated_condition or 'not hamiltonian'}"
        )
    profile = report.profile
    return CycleCertificate(
        hypergraph=H,
        kind=KIND_SHARP,
        edges=tuple(edges),
        split_index=p,
        claimed_hamiltonian=True,
        claimed_t=profile.uniform_t if profile else None,
        claimed_z=profile.uniform_z if profile else None,
    )


def construct_berge_hamiltonian(H: SigmaHypergraph) -> CycleCertificate:
    """Berge Hamiltonian cycle walking the grid bottom row to top row.

    Edge k anchors its first part at the walk position (class k mod n,
    counting row passes from the bottom); parts that wrap past the last
    class sit one row higher, and row arithmetic is modulo q.
    """
    sigma = H.sigma
    n, q, s = H.n, H.q, sigma.s
    if sigma.rectangular and q == sigma.delta_max:
        if n == s:
            raise OnlyOneEdge(f"{H} has a single edge")
        if sigma.delta_max >= 2:
            raise ConstructionUnsupported(
                f"{H}: too few edges for a cycle through all {n * q} vertices"
            )
    nq = n * q
    verts = tuple((m % n, q - 1 - (m // n)) for m in range(nq))
    edges = []
    for k in range(nq):
        c, rho = k % n, k // n
        vs: list[GridVertex] = []
        for i, a in enumerate(sigma.parts):
            cls_raw = c + i
            anchor = q - 1 - (rho + cls_raw // n)
            vs += [((cls_raw % n), (anchor - d) % q) for d in range(a)]
        edges.append(Edge.of(vs))
    cert = CycleCertificate(
        hypergraph=H,
        kind=KIND_BERGE,
        edges=tuple(edges),
        vertex_sequence=verts,
        claimed_hamiltonian=True,
    )
    report = verify_berge_hamiltonian(H, cert)
    if not report.ok:
        raise ConstructionUnsupported(
            f"recipe failed verification for {H}: {report.violated_condition}"
        )
    return cert


def construct_k_intersecting(H: SigmaHypergraph, k: int) -> CycleCertificate:
    """k-intersecting Hamiltonian cycle from k block matchings.

    Per block, matching 1 is the diagonal matching; matching j (2 <= j <= k)
    keeps the leading parts of diagonal edge i and takes the trailing parts
    from diagonal edge i+1, the threshold moving one part left per matching.
    In (r+1)-blocks matchings 2..k share the swapped first part so the k-window
    intersection has size a_1 - 1, hence the largest part must be >= 2 there.
    """
    sigma = H.sigma
    s = sigma.s
    if s < 2:
        raise ConstructionUnsupported("k-intersecting construction needs at least two parts")
    if not 2 <= k <= s:
        raise KOutOfRange(f"k={k} outside [2, {s}]")
    if H.n <= s:
        raise NTooSmall(f"n={H.n} <= s={s}")
    blocks = _blocks(H)
    _, y = frobenius_decompose(H.q, H.r)
    if y > 0 and sigma.delta_max == 1:
        raise DegenerateIntersection(
            f"largest part 1 with an (r+1)-block: window intersection would be empty"
        )
    n, r = H.n, H.r
    edges: list[Edge] = []
    for m, (b, h) in enumerate(blocks):
        next_b, _ = blocks[(m + 1) % len(blocks)]
        for i in range(n):
            edges.append(Edge.of(v for pi in range(s) for v in _part_vertices(H, b, i, pi)))
            for j in range(2, k + 1):
                threshold = k - j + 1  # parts from this index on come from edge i+1
                vs: list[GridVertex] = []
                for pi in range(s):
                    if pi == 0:
                        pv = _part_vertices(H, b, i, 0)
                        if h == r + 1:
                            pv = pv[:-1] + [(pv[-1][0], b + r)]
                    elif pi < threshold:
                        pv = _part_vertices(H, b, i, pi)
                    else:
                        if i < n - 1:
                            pv = _part_vertices(H, b, i + 1, pi)
                        else:
                            pv = _part_vertices(H, next_b, 0, pi)
                    vs += pv
                edges.append(Edge.of(vs))
    cert = CycleCertificate(hypergraph=H, kind=KIND_K_INTERSECTING, edges=tuple(edges), k=k)
    report = verify_k_intersecting(H, cert, k)
    if not report.ok or not report.hamiltonian:
        raise ConstructionUnsupported(
            f"recipe failed verification for {H}, k={k}: "
            f"{report.violated_condition or 'not hamiltonian'}"
        )
    return CycleCertificate(
        hypergraph=H,
        kind=KIND_K_INTERSECTING,
        edges=tuple(edges),
        k=k,
        claimed_hamiltonian=True,
    )
