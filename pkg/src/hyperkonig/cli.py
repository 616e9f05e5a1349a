"""Command-line interface.

Exit codes: 0 property holds / verification passed / success, 1 property
fails / verification failed, 2 usage or input error, 3 solver budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import generators as gen
from .core import HypergraphError
from .formats import (
    InstanceFormatError,
    bipartition_to_json,
    konig_to_json,
    cover_to_json,
    dumps,
    emit_instance,
    matching_to_json,
    read_instance,
    transversal_to_json,
    verify_certificate,
    weak_konig_to_json,
)
from .heritability import (
    DEFAULT_EXPLORE_BUDGET,
    cover_critical_core,
    explore,
    minimal_non_cp_core,
    minimal_nonbipartite_core,
)
from .properties import has_konig, has_weak_konig
from .solvers import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    bipartition,
    covering_number,
    exact_transversal,
    max_matching,
)

OK, FAIL, USAGE, BUDGET = 0, 1, 2, 3

PROPERTIES = ("konig", "weak-konig", "bipartite", "cp")

# family name -> (constructor, number of integer arguments)
FAMILIES = {
    "cofinite": (gen.cofinite_family, 2),
    "large-subsets": (gen.large_subsets_family, 2),
    "affine-lines": (gen.affine_lines_family, 1),
    "complete": (gen.complete_graph, 1),
    "cycle": (gen.cycle_graph, 1),
    "path": (gen.path_graph, 1),
    "random": (gen.random_hypergraph, 4),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_check(args) -> int:
    H = read_instance(args.file)
    doc = None
    if args.property == "konig":
        holds, cert = has_konig(H, args.solver_budget)
        if holds:
            doc = konig_to_json(H, cert)
    elif args.property == "weak-konig":
        holds, matching, cover = has_weak_konig(H, args.solver_budget)
        if holds:
            doc = weak_konig_to_json(H, matching, cover)
    elif args.property == "bipartite":
        b = bipartition(H, args.solver_budget)
        holds = b is not None
        if holds:
            doc = bipartition_to_json(H, b)
    else:
        t = exact_transversal(H, args.solver_budget)
        holds = t is not None
        if holds:
            doc = transversal_to_json(H, t)
    print(f"{args.property}: {'holds' if holds else 'fails'}")
    if args.certificate:
        if doc is None:
            print("no certificate written: property fails", file=sys.stderr)
        else:
            _write(args.certificate, dumps(doc))
    return OK if holds else FAIL


def _cmd_solve(args) -> int:
    H = read_instance(args.file)
    what = args.problem
    if what == "matching":
        size, matching, stats = max_matching(H, args.solver_budget)
        doc, text = matching_to_json(H, matching), f"max matching {size}: edges {list(matching.indices)}"
    elif what == "cover":
        cover, stats = covering_number(H, args.solver_budget)
        doc, text = cover_to_json(H, cover), f"nu {cover.nu}: cover {list(cover.cover)}"
    elif what == "transversal":
        t = exact_transversal(H, args.solver_budget)
        doc = None if t is None else transversal_to_json(H, t)
        text = "no exact transversal" if t is None else f"exact transversal {list(t.choice)}"
    else:
        b = bipartition(H, args.solver_budget)
        doc = None if b is None else bipartition_to_json(H, b)
        text = "not bipartite" if b is None else f"bipartition side {list(b.side)}"
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        print(text)
    return OK if doc is not None else FAIL


def _cmd_generate(args) -> int:
    if args.family not in FAMILIES:
        raise InstanceFormatError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    fn, arity = FAMILIES[args.family]
    if len(args.params) != arity:
        raise InstanceFormatError(f"{args.family} takes {arity} integer argument(s)")
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise InstanceFormatError("generator arguments must be integers") from None
    H = fn(*params)
    comments = [f"generated: {args.family} {' '.join(args.params)}"]
    if args.family == "random":
        comments.append(f"rng: {gen.RNG_ALGORITHM}")
    _write(args.output, emit_instance(H, tuple(comments)))
    return OK


def _cmd_explore(args) -> int:
    H = read_instance(args.file)
    report = explore(
        H,
        args.property,
        args.max_subset_size,
        budget=args.budget,
        seed=args.seed,
        solver_budget=args.solver_budget,
        workers=args.workers,
    )
    if args.json:
        sys.stdout.write(dumps(report.to_dict()))
    else:
        for key, value in report.to_dict().items():
            print(f"{key}: {json.dumps(value)}")
    return OK if report.whole_holds else FAIL


def _cmd_witness(args) -> int:
    H = read_instance(args.file)
    if args.kind == "bipartite":
        core = minimal_nonbipartite_core(H, args.solver_budget)
    elif args.kind == "cp":
        core = minimal_non_cp_core(H, args.solver_budget)
    else:
        core = cover_critical_core(H, args.solver_budget)
    indices = None if core is None else list(core.indices)
    if args.json:
        sys.stdout.write(dumps({"kind": f"{args.kind}_core", "edges": indices}))
    elif core is None:
        print(f"no {args.kind} core: the property holds on the whole family")
    else:
        print(f"{args.kind} core ({len(indices)} edges): {indices}")
        for i in indices:
            print("  e " + " ".join(map(str, H.edges[i])))
    return OK if core is not None else FAIL


def _cmd_verify(args) -> int:
    H = read_instance(args.file)
    try:
        with open(args.cert, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"certificate is not valid JSON: {exc}") from None
    verdict = verify_certificate(H, doc, args.solver_budget)
    print("verified" if verdict else f"rejected: {verdict.reason}")
    return OK if verdict else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperkonig", description="Exact deciders for König-type hypergraph properties.")
    parser.add_argument("--solver-budget", type=int, default=DEFAULT_BUDGET, help="node cap per solve")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide a property")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("file")
    p.add_argument("--certificate", metavar="OUT.json")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="run one exact solver")
    p.add_argument("problem", choices=("matching", "cover", "transversal", "bipartition"))
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("generate", help="write an instance of a named family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("explore", help="test a property on small edge subfamilies")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("file")
    p.add_argument("--max-subset-size", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_EXPLORE_BUDGET)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("witness", help="extract a 1-minimal failing subfamily")
    p.add_argument("kind", choices=("bipartite", "cp", "cover"))
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="check a certificate against an instance")
    p.add_argument("file")
    p.add_argument("cert")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return BUDGET
    except (InstanceFormatError, HypergraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
