"""Command-line front end: ``spantree <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations_with_replacement

from spantree import bounds, exact, generators, io, oracle, spectral
from spantree.graph import DomainError, GraphError
from spantree.product import cartesian_product

ORACLE_MAX_EDGES = 16
FORMATS = ("edges", "graph6")


class CommandError(Exception):
    pass


def _load(path: str, fmt: str | None):
    return io.read_graph(path, fmt)


def _emit_graph(g, fmt: str) -> str:
    return io.format_graph(g, fmt)


def cmd_gen(args) -> str:
    return _emit_graph(generators.generate(args.family, args.n), args.format)


def cmd_tree(args) -> str:
    text = args.prufer.strip()
    try:
        seq = [int(x) for x in text.split(",")] if text else []
    except ValueError:
        raise CommandError(f"bad Prüfer sequence {args.prufer!r}") from None
    n = args.n if args.n is not None else len(seq) + 2
    return _emit_graph(generators.prufer_decode(seq, n), args.format)


def cmd_random(args) -> str:
    return _emit_graph(generators.random_graph(args.n, args.p, args.seed), args.format)


def cmd_count(args) -> str:
    g = _load(args.file, args.format)
    if g.n > exact.SOFT_MAX_N:
        print(f"warning: n={g.n} exceeds the soft limit {exact.SOFT_MAX_N}", file=sys.stderr)
    tau = exact.tau_exact(g)
    if args.json:
        return json.dumps({"n": g.n, "m": g.m, "tau": str(tau)}) + "\n"
    return f"{tau}\n"


def cmd_spectrum(args) -> str:
    s = spectral.laplacian_spectrum(_load(args.file, args.format))
    if args.json:
        return json.dumps({"values": list(s.values), "tol": s.tol}) + "\n"
    return "".join(f"{v:.12f}\n" for v in s.values)


def cmd_product(args) -> str:
    g1 = _load(args.g1, args.input_format)
    g2 = _load(args.g2, args.input_format)
    return _emit_graph(cartesian_product(g1, g2), args.format)


def _fmt_log(x: float) -> str:
    return "-inf" if x == bounds.LOG_ZERO else f"{x:.12f}"


def cmd_bounds(args) -> str:
    g1 = _load(args.g1, args.format)
    g2 = _load(args.g2, args.format)
    r = bounds.bounds_report(g1, g2, strict=False)
    if args.json:
        return json.dumps(r.to_json()) + "\n"
    return (
        f"n1 {r.n1}\nn2 {r.n2}\ntau {r.tau_exact_product}\n"
        f"log_tau {_fmt_log(r.log_tau)}\n"
        f"log_lower {_fmt_log(r.log_lower)}\n"
        f"log_upper {_fmt_log(r.log_upper)}\n"
        f"equality_lower {str(r.equality_lower_predicted).lower()}\n"
        f"equality_upper {str(r.equality_upper_predicted).lower()}\n"
        f"sandwich_ok {str(r.sandwich_ok).lower()}\n"
    )


def cmd_rook(args) -> str:
    return f"{bounds.rook_tau(args.n1, args.n2)}\n"


def cmd_oracle(args) -> str:
    g = _load(args.file, args.format)
    if g.m > ORACLE_MAX_EDGES:
        raise CommandError(f"oracle is slow; limited to {ORACLE_MAX_EDGES} edges, got {g.m}")
    dc = oracle.tau_deletion_contraction(g)
    sub = oracle.tau_subset_enumeration(g)
    if dc != sub:
        raise CommandError(f"oracles disagree: deletion-contraction {dc}, subsets {sub}")
    return f"{dc}\n"


def _corpus_files(directory: str) -> list[str]:
    names = sorted(
        f for f in os.listdir(directory)
        if os.path.isfile(os.path.join(directory, f)) and not f.startswith(".")
    )
    return [os.path.join(directory, f) for f in names]


def cmd_verify(args) -> str | int:
    graphs = [(os.path.basename(p), _load(p, args.format)) for p in _corpus_files(args.corpus)]
    if not graphs:
        raise CommandError(f"no graph files in {args.corpus}")
    checked = 0
    for name, g in graphs:
        if g.m <= ORACLE_MAX_EDGES:
            t = exact.tau_exact(g)
            dc = oracle.tau_deletion_contraction(g)
            sub = oracle.tau_subset_enumeration(g)
            if not t == dc == sub:
                print(f"FAIL oracle {name}: exact={t} deletion-contraction={dc} subsets={sub}")
                return 1
            checked += 1
    pairs = [(a, b) for a, b in combinations_with_replacement(graphs, 2)
             if a[1].n >= 2 and b[1].n >= 2]
    for (na, ga), (nb, gb) in pairs:
        r = bounds.bounds_report(ga, gb, strict=False)
        if not r.consistent:
            print(f"FAIL bounds ({na}, {nb}): {json.dumps(r.to_json())}")
            return 1
    return f"ok: {checked} oracle checks, {len(pairs)} bound pairs\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spantree", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def out_format(sp):
        sp.add_argument("--format", choices=FORMATS, default="edges", help="output format")

    def in_file(sp):
        sp.add_argument("--file", required=True)
        sp.add_argument("--format", choices=FORMATS, help="input format (default: by extension)")

    sp = sub.add_parser("gen", help="generate a named graph family")
    sp.add_argument("family", choices=sorted(generators.FAMILY_MIN_N))
    sp.add_argument("n", type=int)
    out_format(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("tree", help="decode a Prüfer sequence")
    sp.add_argument("--prufer", required=True, help="comma-separated entries ('' for n=2)")
    sp.add_argument("--n", type=int, help="vertex count (default: len + 2)")
    out_format(sp)
    sp.set_defaults(func=cmd_tree)

    sp = sub.add_parser("random", help="seeded G(n, p) sample")
    sp.add_argument("n", type=int)
    sp.add_argument("p", type=float)
    sp.add_argument("--seed", type=int, default=0)
    out_format(sp)
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("count", help="exact spanning-tree count")
    in_file(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("spectrum", help="Laplacian eigenvalues")
    in_file(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("product", help="Cartesian product of two graphs")
    sp.add_argument("--g1", required=True)
    sp.add_argument("--g2", required=True)
    sp.add_argument("--input-format", choices=FORMATS)
    out_format(sp)
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("bounds", help="product count with lower/upper bounds")
    sp.add_argument("--g1", required=True)
    sp.add_argument("--g2", required=True)
    sp.add_argument("--format", choices=FORMATS, help="input format")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("rook", help="closed-form count for K_n1 x K_n2")
    sp.add_argument("n1", type=int)
    sp.add_argument("n2", type=int)
    sp.set_defaults(func=cmd_rook)

    sp = sub.add_parser("oracle", help="brute-force count (slow, m <= 16)")
    in_file(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="cross-check oracles and bounds over a corpus")
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--format", choices=FORMATS, help="input format")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except io.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 3
    except (DomainError, GraphError) as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 4
    except spectral.ConvergenceError as e:
        print(f"convergence error: {e}", file=sys.stderr)
        return 5
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return 6
    except CommandError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if isinstance(result, int):
        return result
    sys.stdout.write(result)
    return 0


def main() -> None:
    sys.exit(run())
