"""Command-line front end.

Exit codes: 0 success/pass, 1 verification refuted, 2 usage or parse error,
3 construction unsupported for the given parameters.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import certfile, export
from .certificates import KIND_BERGE, KIND_K_INTERSECTING, KIND_SHARP
from .construct import (
    construct_berge_hamiltonian,
    construct_k_intersecting,
    construct_sharp_hamiltonian,
)
from .core import SigmaHypergraph, edge_count, enumerate_edges, make_hypergraph, parse_partition
from .errors import (
    BudgetExceeded,
    CertificateParseError,
    ConstructionError,
    NoEdgesError,
)
from .verify import (
    bounds_report,
    brute_force_max_matching,
    brute_force_sharp_hamiltonian_exists,
    verify_berge_hamiltonian,
    verify_k_intersecting,
    verify_sharp_cycle,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _add_hypergraph_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--sigma", required=True, help="comma-separated partition parts")
    sp.add_argument("--n", type=int, required=True, help="number of classes")
    sp.add_argument("--q", type=int, required=True, help="class size")


def _hypergraph(args: argparse.Namespace) -> SigmaHypergraph:
    return make_hypergraph(args.n, args.q, parse_partition(args.sigma))


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        H = _hypergraph(args)
        if args.kind == KIND_BERGE:
            cert = construct_berge_hamiltonian(H)
        elif args.kind == KIND_SHARP:
            cert = construct_sharp_hamiltonian(H, p=args.split)
        else:
            if args.k is None:
                print("construct: --k is required for kind k-intersecting", file=sys.stderr)
                return EXIT_USAGE
            cert = construct_k_intersecting(H, args.k)
    except (ValueError, NoEdgesError) as exc:
        print(f"construct: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"construct: {exc.name}: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.output:
        certfile.write_certificate(cert, args.output)
    else:
        sys.stdout.write(certfile.dumps(cert))
    summary = f"{cert.kind}: {len(cert.edges)} edges"
    if cert.claimed_t is not None:
        summary += f", profile ({cert.claimed_t},{cert.claimed_z})"
    if cert.k is not None:
        summary += f", k={cert.k}"
    print(summary)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        cert = certfile.read_certificate(args.path)
    except CertificateParseError as exc:
        print(f"verify: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    H = cert.hypergraph
    try:
        if cert.kind == KIND_BERGE:
            report = verify_berge_hamiltonian(H, cert)
        elif cert.kind == KIND_SHARP:
            report = verify_sharp_cycle(H, cert)
        else:
            report = verify_k_intersecting(H, cert, budget=args.budget)
    except BudgetExceeded as exc:
        print(f"verify: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_REFUTED
    if report.profile is not None:
        print(f"profile: {list(report.profile.pair_sizes)}")
        if report.profile.uniform_t is not None:
            kind = "t-sharp" if report.profile.t_sharp else "(t,z)-sharp"
            print(f"{kind}: t={report.profile.uniform_t}, z={report.profile.uniform_z}")
    if report.window_sizes is not None:
        print(f"window sizes: {list(report.window_sizes)}")
    print(f"hamiltonian: {str(report.hamiltonian).lower()}")
    if report.ok:
        print("PASS")
        return EXIT_OK
    print(f"FAIL: {report.violated_condition}: {report.detail}")
    return EXIT_REFUTED


def _cmd_bounds(args: argparse.Namespace) -> int:
    try:
        H = _hypergraph(args)
    except (ValueError, NoEdgesError) as exc:
        print(f"bounds: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = bounds_report(H, nu=args.nu)
    print(f"vertices: {H.vertex_count}")
    print(f"sharp cycle edge-count window: [{rep.sharp_edge_lower}, {rep.sharp_edge_upper}]")
    if rep.nu_upper is not None:
        print(f"unmatched vertices >= {rep.unmatched_lower}")
        print(f"max matching <= {rep.nu_upper}")
    else:
        print("max matching bound: not applicable (gcd < 2 or q divisible by gcd)")
    if args.nu is not None:
        print("REFUTES-SHARP-HC" if rep.nonexistence_fired else "INCONCLUSIVE")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    try:
        H = _hypergraph(args)
    except (ValueError, NoEdgesError) as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.oracle == "max-matching":
        try:
            result = brute_force_max_matching(H, budget=args.budget)
        except BudgetExceeded as exc:
            print(f"oracle: budget exceeded: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        if result.exact:
            print(result.nu)
        else:
            print(f">= {result.nu} (inexact, budget exhausted)")
        return EXIT_OK
    try:
        result = brute_force_sharp_hamiltonian_exists(
            H, max_len=args.max_len, budget=args.budget
        )
    except BudgetExceeded as exc:
        print(f"oracle: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if result.status == "found":
        print(f"found ({len(result.certificate.edges)} edges)")
        if args.output:
            certfile.write_certificate(result.certificate, args.output)
    else:
        print("exhausted")
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        H = _hypergraph(args)
    except (ValueError, NoEdgesError) as exc:
        print(f"enumerate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.count_only:
        print(edge_count(H))
        return EXIT_OK
    for edge in enumerate_edges(H):
        print(" ".join(f"{c},{row}" for c, row in edge.vertices))
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    try:
        cert = certfile.read_certificate(args.path)
    except CertificateParseError as exc:
        print(f"export: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = export.render_dot(cert) if args.format == "dot" else export.render_svg(cert)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigma-cycles",
        description="Construct, verify and analyze Hamiltonian cycle certificates "
        "for grid-structured uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="construct a verifier-gated certificate")
    _add_hypergraph_args(sp)
    sp.add_argument("--kind", required=True, choices=[KIND_BERGE, KIND_SHARP, KIND_K_INTERSECTING])
    sp.add_argument("--k", type=int, help="window size for k-intersecting cycles")
    sp.add_argument("--split", type=int, default=1, help="split index for sharp cycles")
    sp.add_argument("-o", "--output", help="certificate output path (default: stdout)")
    sp.set_defaults(func=_cmd_construct)

    sp = sub.add_parser("verify", help="verify a certificate file")
    sp.add_argument("path")
    sp.add_argument("--budget", type=int, default=10**7, help="subset-check budget")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("bounds", help="matching and sharp-cycle bounds")
    _add_hypergraph_args(sp)
    sp.add_argument("--nu", type=int, help="known maximum matching size or upper bound")
    sp.set_defaults(func=_cmd_bounds)

    sp = sub.add_parser("oracle", help="brute-force oracles")
    sp.add_argument("oracle", choices=["max-matching", "sharp-exists"])
    _add_hypergraph_args(sp)
    sp.add_argument("--budget", type=int, default=2_000_000, help="search node budget")
    sp.add_argument("--max-len", type=int, default=12, help="maximum cycle length (sharp-exists)")
    sp.add_argument("-o", "--output", help="write a found certificate here")
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("enumerate", help="stream or count edges")
    _add_hypergraph_args(sp)
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("export", help="render a certificate as DOT or SVG")
    sp.add_argument("path")
    sp.add_argument("--format", required=True, choices=["dot", "svg"])
    sp.add_argument("-o", "--output", help="output path (default: stdout)")
    sp.set_defaults(func=_cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
