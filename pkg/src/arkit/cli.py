"""``arkit`` command-line entry point.

Exit codes: 0 success, 1 property violated or counterexample found,
2 usage error, 3 instance too large or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import audit, extremal, harness, matching, rainbow, structures
from .colored_graph import ColoredGraph, Graph, parse_colored_graph, parse_graph, serialize, serialize_graph
from .errors import BudgetExceeded, FormatError, InstanceTooLarge, RegimeError

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    out = json.dumps(payload, sort_keys=True) if args.json else text
    if getattr(args, "output", None):
        Path(args.output).write_text(out if out.endswith("\n") else out + "\n")
    else:
        print(out)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for this subcommand")


def _read_colored(path: str) -> ColoredGraph:
    return parse_colored_graph(Path(path).read_text())


def _read_plain(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


# ---------------------------------------------------------------------------
# Subcommands


def cmd_formula(args) -> int:
    if args.what == "g":
        _require(args, "n", "s")
        tv = extremal.threshold_g(args.n, args.s, permissive=args.permissive)
        if not tv.in_range:
            print("note: n < 2s+5, outside the stated range", file=sys.stderr)
        _emit(args, str(tv), {"g1": tv.g1, "g2": tv.g2, "g": tv.g, "regime": tv.regime,
                              "in_range": tv.in_range})
    elif args.what == "ex":
        _require(args, "n", "k")
        value = extremal.turan_matching(args.n, args.k)
        _emit(args, str(value), {"n": args.n, "k": args.k, "ex": value})
    else:
        _require(args, "n", "s")
        value = extremal.anti_ramsey_matching(args.n, args.s)
        _emit(args, str(value), {"n": args.n, "s": args.s, "ar": value})
    return EXIT_OK


def cmd_construct(args) -> int:
    kind = args.what
    if kind in ("h1", "h2"):
        _require(args, "n", "s")
        variant = kind.upper()
        if not extremal.in_regime(args.n, args.s, variant):
            if not args.permissive:
                raise RegimeError(f"(n={args.n}, s={args.s}) is outside the {variant} regime; "
                                  "pass --permissive to build it anyway")
            print(f"note: out-of-regime {variant} construction", file=sys.stderr)
        doc = serialize(extremal.construct_extremal_coloring(args.n, args.s, variant,
                                                             permissive=args.permissive))
    elif kind == "turan":
        _require(args, "n", "s")
        doc = serialize_graph(extremal.construct_turan_graph(args.n, args.s))
    else:
        _require(args, "n")
        if args.base:
            base = parse_graph(Path(args.base).read_text())
        else:
            _require(args, "s")
            base = extremal.construct_turan_graph(args.n, args.s)
        doc = serialize(extremal.rainbow_plus_one(args.n, base))
    if args.output:
        Path(args.output).write_text(doc)
    else:
        sys.stdout.write(doc)
    return EXIT_OK


def cmd_rainbow(args) -> int:
    h = _read_colored(args.file)
    if args.what == "max":
        cert = rainbow.max_rainbow_matching(h, budget_ms=args.budget_ms)
        text = f"size={cert.size}\n" + " ".join(f"{u}-{v}:{c}" for (u, v), c in
                                                 zip(cert.edges, cert.colors))
        _emit(args, text, cert.to_json())
        return EXIT_OK
    _require(args, "k")
    found, cert = rainbow.has_rainbow_matching(h, args.k, budget_ms=args.budget_ms)
    if found:
        text = f"found=true size={cert.size}\n" + " ".join(
            f"{u}-{v}:{c}" for (u, v), c in zip(cert.edges, cert.colors))
        payload = {"found": True, **cert.to_json()}
    else:
        text, payload = "found=false", {"found": False}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _read_plain(args.file)
    w = matching.berge_witness(g)
    text = f"nu={w.nu} T={list(w.T)} odd_components={[list(c) for c in w.odd_components]}"
    _emit(args, text, w.to_json())
    return EXIT_OK


def _cert_text(cert) -> str:
    if cert is None:
        return "none"
    if cert.kind == "clique":
        return f"found color={cert.color} clique={list(cert.clique_vertices)}"
    return f"found color={cert.color} A={list(cert.A_set)} B={list(cert.B_set)}"


def cmd_detect(args) -> int:
    h = _read_colored(args.file)
    if args.what == "mono-clique":
        if args.k is None:
            _require(args, "s")
            q = h.n - args.s
        else:
            q = args.k
        cert = structures.find_mono_clique(h, q)
        _emit(args, _cert_text(cert), cert.to_json() if cert else {"found": False})
        return EXIT_OK
    _require(args, "s")
    if args.what == "mono-join":
        cert = structures.find_mono_join(h, args.s)
        _emit(args, _cert_text(cert), cert.to_json() if cert else {"found": False})
        return EXIT_OK
    rep = structures.theorem_verdict(h, args.s, permissive=args.permissive,
                                     budget_ms=args.budget_ms)
    text = (f"colors={rep.color_count} g={rep.g} hypothesis_colors={rep.hypothesis_colors} "
            f"hypothesis_rainbow={rep.hypothesis_rainbow} clique={rep.conclusion_clique} "
            f"join={rep.conclusion_join} verdict={rep.verdict}")
    _emit(args, text, rep.to_json())
    if rep.verdict == "inconclusive":
        return EXIT_TOO_LARGE
    return EXIT_VIOLATION if rep.is_counterexample else EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"--s-range expects LO:HI, got {text!r}") from None
    return lo, hi


def cmd_audit(args) -> int:
    rep = audit.audit_proof_inequalities(_parse_range(args.s_range), args.n_cap)
    _emit(args, rep.table(), rep.to_json())
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_probe(args) -> int:
    _require(args, "n", "s")
    if args.what == "boundary":
        rep = harness.recolor_boundary_probe(args.n, args.s, args.variant,
                                             permissive=args.permissive, budget_ms=args.budget_ms)
    else:
        _require(args, "samples", "seed")
        rep = harness.random_stability_search(args.n, args.s, args.samples, args.seed,
                                              permissive=args.permissive,
                                              budget_ms=args.budget_ms)
    _emit(args, rep.summary() + f"\nsha256: {rep.digest()}", rep.to_json())
    if rep.counterexamples:
        return EXIT_VIOLATION
    if rep.inconclusive:
        return EXIT_TOO_LARGE
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.what == "ex":
        _require(args, "n", "k")
        value = harness.oracle_turan(args.n, args.k)
        _emit(args, str(value), {"n": args.n, "k": args.k, "ex": value})
    else:
        _require(args, "n", "s")
        value = harness.oracle_anti_ramsey(args.n, args.s)
        _emit(args, str(value), {"n": args.n, "s": args.s, "ar": value})
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--s", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--budget-ms", type=float, dest="budget_ms")
    common.add_argument("--permissive", action="store_true")
    common.add_argument("--json", action="store_true")
    common.add_argument("-o", "--output")

    parser = argparse.ArgumentParser(prog="arkit",
                                     description="Anti-Ramsey matchings toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", parents=[common], help="closed-form values")
    p.add_argument("what", choices=["ex", "ar", "g"])
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", parents=[common], help="extremal graphs and colorings")
    p.add_argument("what", choices=["h1", "h2", "turan", "rainbow-plus-one"])
    p.add_argument("--base", help="plain 'g 1' graph for rainbow-plus-one (default G(n, s))")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rainbow", parents=[common], help="exact rainbow matching search")
    p.add_argument("what", choices=["max", "decide"])
    p.add_argument("file")
    p.set_defaults(func=cmd_rainbow)

    p = sub.add_parser("decompose", parents=[common], help="Gallai-Edmonds / Berge witness")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("detect", parents=[common], help="monochromatic structures and verdict")
    p.add_argument("what", choices=["mono-clique", "mono-join", "verdict"])
    p.add_argument("file")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("audit", parents=[common], help="inequality audit over an (n, s) grid")
    p.add_argument("--s-range", default="2:60", dest="s_range")
    p.add_argument("--n-cap", type=int, default=400, dest="n_cap")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("probe", parents=[common], help="boundary and random stress probes")
    p.add_argument("what", choices=["boundary", "random"])
    p.add_argument("--variant", choices=["H1", "H2", "h1", "h2"])
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive oracles for tiny n")
    p.add_argument("what", choices=["ex", "ar"])
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, RegimeError, FormatError, OSError) as exc:
        print(f"arkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InstanceTooLarge, BudgetExceeded) as exc:
        print(f"arkit: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
