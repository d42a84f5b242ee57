"""Command line interface: ``cubepath <command> [flags]``.

Exit status: 0 on success, 1 when a verification or coverage check fails,
2 on a usage error.  Certificates and results go to standard output;
progress and ``--trace`` lines go to standard error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .builder import BuildError, cover, lhc_path
from .config import classify, in_S, in_Sprime
from .core import DimensionError, enumerate_edges, enumerate_vertices, fmt, vertex
from .paths import format_certificate, iter_records, verify
from .search import (
    EXPECTED_UNCOVERED,
    SearchBudget,
    check_lhp_nonexistence,
    ledger_from_records,
    run_base_case,
)
from .store import DEFAULT_FILENAME, StoreError, WitnessStore, open_store
from .symmetry import format_config, normalize, parse_config

COMMANDS = (
    "vertices", "edges", "normalize", "classify", "verify", "search-base",
    "check-nonexistence", "cover", "lhc", "verify-witnesses",
)


class UsageError(Exception):
    pass


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--d", type=int, help="dimension")
    for name in ("a", "b", "x", "y"):
        p.add_argument(f"--{name}", help=f"vertex {name} as a trit string, e.g. 0120")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--file", help="read input from a file")
    src.add_argument("--stdin", action="store_true", help="read input from standard input")
    p.add_argument("--out", help="output file (search-base: witness file)")
    p.add_argument("--uncovered", help="search-base: file for the uncovered configurations")
    p.add_argument("--witnesses", default=DEFAULT_FILENAME, help="witness store location")
    p.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    p.add_argument("--jobs", type=int, default=1, help="search-base: parallel workers")
    p.add_argument("--trace", action="store_true", help="print one line per recursion frame to stderr")
    p.add_argument("--budget-nodes", type=int, help="search-base: node cap per heuristic attempt")
    p.add_argument("--budget-secs", type=float, help="search-base: seconds cap per heuristic attempt")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="cubepath", description="Loose Hamilton paths in the 3-uniform cube hypergraph Q(d).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    helps = {
        "vertices": "list the vertices of Q(d)",
        "edges": "list the edges of Q(d)",
        "normalize": "normal form of a configuration",
        "classify": "types t1..t5 / phi1..phi4 of a configuration",
        "verify": "check certificates",
        "search-base": "settle every normalized 4-configuration of Q(4)",
        "check-nonexistence": "decide whether Q(d) has a loose Hamilton path (d <= 3)",
        "cover": "path from a to b omitting x and y",
        "lhc": "loose Hamilton path from a to b",
        "verify-witnesses": "re-verify a witness file and recompute coverage",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def _vertex(args, name, required=True):
    s = getattr(args, name)
    if s is None:
        if required:
            raise UsageError(f"--{name} is required")
        return None
    try:
        v = vertex(s)
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}") from None
    if args.d is not None and len(v) != args.d:
        raise UsageError(f"--{name} has {len(v)} coordinates but --d is {args.d}")
    return v


def _text(args):
    if args.stdin:
        return sys.stdin.read()
    if args.file:
        try:
            with open(args.file) as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    return None


def _configs(args, sizes=(2, 4)):
    """Configurations from --a/--b/--x/--y or one per input line."""
    text = _text(args)
    if text is None:
        vs = [_vertex(args, "a"), _vertex(args, "b"), _vertex(args, "x", False), _vertex(args, "y", False)]
        vs = [v for v in vs if v is not None]
        if len(vs) not in sizes:
            raise UsageError("give --a --b, or --a --b --x --y")
        return [tuple(vs)]
    out = []
    for ln in text.splitlines():
        ln = ln.split("#")[0].strip()
        if ln:
            try:
                out.append(parse_config(ln))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    return out


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dim(args):
    if args.d is None:
        raise UsageError("--d is required")
    return args.d


def cmd_vertices(args):
    _emit(args, "".join(fmt(v) + "\n" for v in enumerate_vertices(_dim(args))))
    return 0


def cmd_edges(args):
    d = _dim(args)
    lines = [" ".join(fmt(v) for v in sorted(e)) for e in enumerate_edges(d)]
    _emit(args, "".join(ln + "\n" for ln in sorted(lines)))
    return 0


def cmd_normalize(args):
    out = []
    for c in _configs(args):
        key, _, swapped = normalize(c)
        out.append(format_config(key) + (" swap" if swapped else "") + "\n")
    _emit(args, "".join(out))
    return 0


def cmd_classify(args):
    out = []
    for c in _configs(args, (4,)):
        out.append(f"config {format_config(c)}\n")
        for ta in classify(c):
            out.append(f"  {ta}\n")
        out.append(f"  S={int(in_S(c))} S'={int(in_Sprime(c))}\n")
    _emit(args, "".join(out))
    return 0


def cmd_verify(args):
    text = _text(args)
    if text is None:
        raise UsageError("verify reads certificates from --file or --stdin")
    bad = n = 0
    out = []
    for rec in iter_records(text):
        n += 1
        if rec.cert is None:
            bad += 1
            out.append(f"line {rec.line}: invalid: {rec.error}\n")
            continue
        v = verify(rec.cert)
        if v:
            c = rec.cert
            out.append(f"line {rec.line}: ok d={c.dim} {fmt(c.start)}->{fmt(c.end)} edges={c.path.length}\n")
        else:
            bad += 1
            out.append(f"line {rec.line}: invalid: {v.reason}\n")
    if n == 0:
        out.append("no certificate found\n")
        bad = 1
    _emit(args, "".join(out))
    return 1 if bad else 0


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


def cmd_search_base(args):
    d = _dim(args)
    if d != 4:
        raise UsageError("search-base covers the d=4 base case only")
    kw = {}
    if args.budget_nodes is not None:
        kw["per_config_node_limit"] = args.budget_nodes
    if args.budget_secs is not None:
        kw["per_config_time_limit"] = args.budget_secs
    try:
        budget = SearchBudget(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t0 = time.monotonic()
    ledger = run_base_case(d, budget, jobs=max(1, args.jobs), seed=args.seed, progress=_progress)
    store = WitnessStore.from_ledger(ledger, seed=args.seed)
    store.save(args.out or args.witnesses)
    unc = "".join(format_config(c) + "\n" for c in sorted(ledger.uncovered))
    if args.uncovered:
        with open(args.uncovered, "w") as fh:
            fh.write(unc)
    _progress(f"done in {time.monotonic() - t0:.0f}s")
    print(f"covered={len(ledger.covered)} uncovered={len(ledger.uncovered)} inconclusive={len(ledger.inconclusive)}")
    for c in sorted(ledger.uncovered):
        print(f"uncovered {format_config(c)} (exhaustive, {ledger.nodes.get(c, 0)} nodes)")
    for c in sorted(ledger.inconclusive):
        print(f"inconclusive {format_config(c)}")
    return 0 if ledger.complete() else 1


def cmd_check_nonexistence(args):
    d = _dim(args)
    if d < 1:
        raise UsageError("--d must be at least 1")
    t0 = time.monotonic()
    res = check_lhp_nonexistence(d)
    dt = time.monotonic() - t0
    if res.absent:
        print(f"d={d} absent: no loose Hamilton path (pairs={len(res.pairs)} nodes={res.nodes} time={dt:.2f}s)")
        return 0
    print(f"d={d} present: loose Hamilton path found (nodes={res.nodes} time={dt:.2f}s)")
    sys.stdout.write(format_certificate(res.counterexample))
    return 1


def _trace(args):
    return _progress if args.trace else None


def cmd_cover(args):
    (c,) = _configs(args, (4,))
    d = len(c[0])
    if d < 4:
        raise UsageError("cover needs d >= 4")
    if d == 4 and not in_Sprime(c):
        raise UsageError(f"{format_config(c)} is not in S'(4)")
    if d > 4 and not in_S(c):
        raise UsageError(f"{format_config(c)} is not in S({d})")
    store = open_store(args.witnesses)
    _emit(args, format_certificate(cover(c, store, _trace(args))))
    return 0


def cmd_lhc(args):
    a, b = _vertex(args, "a"), _vertex(args, "b")
    if len(a) != len(b):
        raise UsageError("--a and --b have different lengths")
    if a == b:
        raise UsageError("--a and --b must differ")
    if len(a) < 4:
        raise UsageError("Q(d) has no loose Hamilton paths for d <= 3; need d >= 4")
    store = open_store(args.witnesses)
    _emit(args, format_certificate(lhc_path(a, b, len(a), store, _trace(args))))
    return 0


def cmd_verify_witnesses(args):
    path = args.file or args.witnesses
    text = _text(args)
    if text is None:
        try:
            with open(path) as fh:
                text = fh.read()
        except FileNotFoundError:
            raise StoreError(f"witness file {path} not found; run search-base first") from None
    ledger = ledger_from_records(iter_records(text))
    missing = sorted(c for c in ledger.uncovered if in_Sprime(c))
    print(f"covered={len(ledger.covered)} uncovered={len(ledger.uncovered)} rejected={len(ledger.rejected)}")
    for line, why in ledger.rejected:
        print(f"rejected line {line}: {why}")
    for c in sorted(ledger.uncovered):
        note = "" if c in EXPECTED_UNCOVERED else " (not in the expected uncovered set)"
        print(f"uncovered {format_config(c)}{note}")
    return 1 if ledger.rejected or missing else 0


HANDLERS = {
    "vertices": cmd_vertices,
    "edges": cmd_edges,
    "normalize": cmd_normalize,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "search-base": cmd_search_base,
    "check-nonexistence": cmd_check_nonexistence,
    "cover": cmd_cover,
    "lhc": cmd_lhc,
    "verify-witnesses": cmd_verify_witnesses,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except (UsageError, DimensionError) as exc:
        parser.exit(2, f"cubepath {args.command}: error: {exc}\n")
    except (StoreError, BuildError) as exc:
        print(f"cubepath {args.command}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.exit(2, f"cubepath {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
