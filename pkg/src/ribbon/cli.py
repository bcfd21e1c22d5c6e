"""Command-line entry point: ``ribbon <subcommand> FILE ...``.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Iterable

from . import oracle
from .core import ArrowPresentation, PresentationError, edge_key, parse_presentation, serialize
from .petrial import cc_petrial_enumeration
from .pipeline import enumerate_rcc_twisted_duals
from .regular import enumerate_regular_partial_duals, regular_witnesses
from .spanning import spanning_quasi_trees, spanning_trees
from .topology import (
    boundary_count,
    checkerboard_colouring,
    connected_components,
    degrees,
    euler_genus,
    is_eulerian,
    is_orientable,
)
from .twist import apply_word, parse_word

SCHEMA_VERSION = 1


def fmt_subset(s: Iterable[str]) -> str:
    return "{" + ",".join(sorted(s, key=edge_key)) + "}"


def subset_list(s: Iterable[str]) -> list[str]:
    return sorted(s, key=edge_key)


def subset_order(s: frozenset[str]) -> tuple:
    return len(s), [edge_key(e) for e in sorted(s, key=edge_key)]


def words_json(p: ArrowPresentation) -> list[dict]:
    c = p.canonical
    return [{"id": circ.id, "word": [str(o) for o in circ.word]} for circ in c.circles]


class _Run:
    """Collects one invocation's report and renders it."""

    def __init__(self, args: argparse.Namespace, text: str):
        self.args = args
        self.digest = hashlib.sha256(text.encode()).hexdigest()
        self.start = time.perf_counter()

    def emit(self, parameters: dict, results, lines: list[str]) -> None:
        if getattr(self.args, "json", False):
            report = {
                "schema_version": SCHEMA_VERSION,
                "subcommand": self.args.command,
                "input_sha256": self.digest,
                "parameters": parameters,
                "results": results,
            }
            if self.args.verbose:
                report["timing_seconds"] = round(time.perf_counter() - self.start, 6)
            print(json.dumps(report, indent=2, sort_keys=True))
        else:
            for line in lines:
                print(line)
            if self.args.verbose:
                print(f"# {time.perf_counter() - self.start:.3f}s", file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_info(run: _Run, p: ArrowPresentation) -> None:
    col = checkerboard_colouring(p)
    results = {
        "degrees": degrees(p),
        "boundary_components": boundary_count(p),
        "orientable": is_orientable(p),
        "euler_genus": euler_genus(p),
        "eulerian": is_eulerian(p),
        "checkerboard": list(col.colours) if col is not None else None,
        "components": connected_components(p),
    }
    run.args.json = True  # info is always a JSON report
    run.emit({}, results, [])


def cmd_transform(run: _Run, p: ArrowPresentation) -> None:
    word = parse_word(run.args.word)
    q = apply_word(p, word)
    run.emit({"word": str(word)}, {"circles": words_json(q)}, serialize(q).splitlines())


def cmd_quasitrees(run: _Run, p: ArrowPresentation) -> None:
    gen = spanning_trees(p) if run.args.trees_only else spanning_quasi_trees(p)
    subsets = list(gen)
    run.emit(
        {"trees_only": run.args.trees_only},
        {"subsets": [subset_list(s) for s in subsets]},
        [fmt_subset(s) for s in subsets],
    )


def cmd_regular(run: _Run, p: ArrowPresentation) -> None:
    k = run.args.k
    subsets = sorted(enumerate_regular_partial_duals(p, k), key=subset_order)
    params = {"k": k, "witness": run.args.witness}
    if not run.args.witness:
        run.emit(params, {"subsets": [subset_list(s) for s in subsets]},
                 [fmt_subset(s) for s in subsets])
        return
    first: dict[frozenset[str], object] = {}
    for w in regular_witnesses(p, k):
        first.setdefault(w.subset, w)
    lines, items = [], []
    for s in subsets:
        w = first[s]
        arcs = [" ".join(c.labels(w.word)) for c in w.arcs]
        lines.append(f"{fmt_subset(s)}  quasi-tree={fmt_subset(w.quasi_tree)}  arcs=[{'; '.join(arcs)}]")
        items.append({"subset": subset_list(s), "quasi_tree": subset_list(w.quasi_tree), "arcs": arcs})
    run.emit(params, {"subsets": items}, lines)


def cmd_cc_petrials(run: _Run, p: ArrowPresentation) -> None:
    tree = None
    if run.args.tree is not None:
        tree = [e.strip() for e in run.args.tree.split(",") if e.strip()]
    en = cc_petrial_enumeration(p, tree)
    lines = [f"tree {fmt_subset(en.tree)}", f"A0 {fmt_subset(en.base)}"]
    lines += [f"E_{e} {fmt_subset(m)}" for e, m in en.adjoint.items()]
    lines += [f"{fmt_subset(s)} -> {fmt_subset(a)}" for s, a in en.subsets]
    results = {
        "tree": subset_list(en.tree),
        "base": subset_list(en.base),
        "t": {e: en.t_values[e] for e in sorted(en.t_values, key=edge_key)},
        "adjoint": {e: subset_list(m) for e, m in en.adjoint.items()},
        "subsets": [{"tree_part": subset_list(s), "subset": subset_list(a)} for s, a in en.subsets],
    }
    run.emit({"tree": subset_list(tree) if tree is not None else None}, results, lines)


def cmd_rcc(run: _Run, p: ArrowPresentation) -> None:
    k, cap = run.args.k, run.args.max_witnesses
    graphs = enumerate_rcc_twisted_duals(p, k, max_witnesses=cap)
    lines, items = [], []
    for i, g in enumerate(graphs, 1):
        lines.append(f"# graph {i} multiplicity {g.multiplicity}")
        lines += serialize(g.result).splitlines()
        for w in g.witnesses:
            lines.append(f"#   witness {w.word}")
        items.append({
            "circles": words_json(g.result),
            "multiplicity": g.multiplicity,
            "witnesses": [
                {"A1": subset_list(w.a1), "A2": subset_list(w.a2), "A3": subset_list(w.a3)}
                for w in g.witnesses
            ],
        })
    run.emit({"k": k, "max_witnesses": cap}, {"count": len(graphs), "graphs": items}, lines)


def cmd_oracle(run: _Run, p: ArrowPresentation) -> int:
    kind = run.args.kind
    k = run.args.k
    if kind in ("regular", "rcc") and k is None:
        raise PresentationError(f"oracle {kind} needs -k")
    if kind == "regular":
        truth = {fmt_subset(s) for s in oracle.brute_regular_duals(p, k)}
        got = {fmt_subset(s) for s in enumerate_regular_partial_duals(p, k)} if run.args.check else None
    elif kind == "cc-petrial":
        truth = {fmt_subset(s) for s in oracle.brute_cc_petrials(p)}
        got = {fmt_subset(s) for s in cc_petrial_enumeration(p).results()} if run.args.check else None
    else:
        found = oracle.brute_rcc_twisted(p, k)
        truth = {serialize(q) for q in found.values()}
        got = None
        if run.args.check:
            got = {serialize(g.result) for g in enumerate_rcc_twisted_duals(p, k, max_witnesses=0)}
    ordered = sorted(truth)
    lines = [t.replace("\n", " | ").rstrip(" |") for t in ordered]
    results: dict = {"oracle": ordered}
    status = 0
    if got is not None:
        missing, extra = sorted(truth - got), sorted(got - truth)
        results.update(agree=not missing and not extra, missing=missing, extra=extra)
        lines.append("check: agree" if results["agree"] else
                     f"check: MISMATCH missing={len(missing)} extra={len(extra)}")
        status = 0 if results["agree"] else 1
    run.emit({"kind": kind, "k": k, "check": run.args.check}, results, lines)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbon", description="Twisted duality on arrow presentations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="presentation file, or - for stdin")
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.add_argument("-v", "--verbose", action="store_true", help="report timing")
        return sp

    add("info", "surface invariants as JSON")
    sp = add("transform", "apply a twist word such as 't{e1};d{e2}'")
    sp.add_argument("--word", required=True)
    sp = add("enum-quasitrees", "spanning quasi-trees")
    sp.add_argument("--trees-only", action="store_true")
    sp = add("enum-regular", "subsets with a k-regular partial dual")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--witness", action="store_true")
    sp = add("enum-cc-petrials", "checkerboard colourable partial Petrials")
    sp.add_argument("--tree", help="comma separated spanning tree")
    sp = add("enum-rcc", "k-regular checkerboard colourable twisted duals")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--max-witnesses", type=int, default=None)
    sp = sub.add_parser("oracle", help="brute-force sweeps")
    sp.add_argument("kind", choices=["regular", "cc-petrial", "rcc"])
    sp.add_argument("file")
    sp.add_argument("-k", type=int)
    sp.add_argument("--check", action="store_true", help="diff against the enumerator")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("-v", "--verbose", action="store_true")
    return parser


_COMMANDS = {
    "info": cmd_info,
    "transform": cmd_transform,
    "enum-quasitrees": cmd_quasitrees,
    "enum-regular": cmd_regular,
    "enum-cc-petrials": cmd_cc_petrials,
    "enum-rcc": cmd_rcc,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = _read(args.file)
        p = parse_presentation(text)
        status = _COMMANDS[args.command](_Run(args, text), p)
    except (PresentationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
