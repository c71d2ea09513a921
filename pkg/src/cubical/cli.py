"""Command-line front end.

Exit codes: 0 on success, 1 when a requested check fails (the witness is
printed), 2 on input errors.  Commands are thin wrappers over the library
calls and print nothing the library does not compute.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import axioms, content, families, representation, stochastic
from .core import TokenSystem
from .errors import Error, NotCubicalError
from .formats import (
    FamilyDocument,
    SystemDocument,
    format_family_document,
    sniff_and_parse,
)
from .gsystem import build_gsystem

CHECK_FAILED = 1
INPUT_ERROR = 2


def _load(path: str) -> SystemDocument | FamilyDocument:
    text = Path(path).read_text(encoding="utf-8")
    return sniff_and_parse(text)


def _system_of(document: SystemDocument | FamilyDocument) -> TokenSystem:
    if isinstance(document, FamilyDocument):
        return build_gsystem(document.cube_graph()).system
    return document.system


def _require_system_document(
    document: SystemDocument | FamilyDocument, command: str
) -> SystemDocument:
    if not isinstance(document, SystemDocument):
        raise Error(f"{command} needs a system document with a theta block")
    return document


def cmd_check(args: argparse.Namespace) -> int:
    system = _system_of(_load(args.file))
    classification = axioms.classify(system)
    print(classification.describe())
    cubical = all(classification.verdicts[a].holds for a in ("C1", "C2", "C3", "C4"))
    return 0 if cubical else CHECK_FAILED


def cmd_classify(args: argparse.Namespace) -> int:
    system = _system_of(_load(args.file))
    print(axioms.classify(system).kind)
    return 0


def cmd_embed(args: argparse.Namespace) -> int:
    system = _system_of(_load(args.file))
    embedding = representation.embed(system, args.base)
    print(f"base {embedding.base}")
    names = embedding.alpha_names()
    for state in system.states:
        print(f"alpha {state} {names[state]}")
    for token in system.token_names:
        print(f"beta {token} {embedding.beta[token]}")
    return 0


def cmd_content(args: argparse.Namespace) -> int:
    system = _system_of(_load(args.file))
    contents = content.state_contents(system)
    states = [args.state] if args.state else list(system.states)
    for state in states:
        if state not in contents:
            raise Error(f"unknown state {state!r}")
        ordered = [t for t in system.token_names if t in contents[state]]
        print(f"{state}: {{ " + ", ".join(ordered) + " }")
    return 0


def _build_chain(document: SystemDocument) -> stochastic.StochasticSystem:
    if document.theta is None:
        raise Error("the document has no theta block")
    return stochastic.build_chain(document.system, document.xi, document.theta)


def cmd_stationary(args: argparse.Namespace) -> int:
    document = _require_system_document(_load(args.file), "stationary")
    chain = _build_chain(document)
    empirical = None
    if args.steps is not None:
        trajectory = stochastic.simulate(chain, args.seed, args.steps)
        empirical = stochastic.empirical_frequencies(trajectory)
    sys.stdout.write(stochastic.distributions_tsv(chain, empirical))
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    document = _require_system_document(_load(args.file), "simulate")
    chain = _build_chain(document)
    seeds = [args.seed + i for i in range(args.chains)]
    with ThreadPoolExecutor(max_workers=min(8, len(seeds))) as pool:
        trajectories = list(pool.map(lambda s: stochastic.simulate(chain, s, args.steps), seeds))
    counts = {s: 0 for s in chain.states}
    total = 0
    for trajectory in trajectories:
        for state, n in trajectory.counts.items():
            counts[state] += n
        total += len(trajectory.states)
    print("state\tvisits\tfrequency")
    for state in chain.states:
        print(f"{state}\t{counts[state]}\t{counts[state] / total!r}")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "lattice":
        if len(args.size) != 2:
            raise Error("lattice takes two size arguments: DIMS EXTENT")
        gsys = families.lattice_window(args.size[0], args.size[1])
        document = FamilyDocument(gsys.graph.family, gsys.graph.edges)
    else:
        if len(args.size) != 1:
            raise Error(f"{args.family} takes one size argument")
        n = args.size[0]
        allow = args.allow_large
        if args.family == "comparability":
            family = families.comparability_family(n, allow_large=allow)
        elif args.family == "ac-orders":
            family = families.ac_order_family(n, allow_large=allow)
        else:
            family = families.partial_order_family(n, allow_large=allow)
        document = FamilyDocument(family, None)
    sys.stdout.write(format_family_document(document))
    return 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    system = _system_of(_load(args.file))
    graph = representation.system_graph(system)
    lines = ["graph tokensystem {"]
    for state in graph.vertices:
        lines.append(f'  "{state}";')
    for s, v in graph.edges:
        rep = graph.edge_labels[(s, v)]
        rev = system.reverses[rep]
        lines.append(f'  "{s}" -- "{v}" [label="{rep},{rev}"];')
    lines.append("}")
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubical",
        description="Check, embed, and simulate cubical token systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the six axiom checks")
    p.add_argument("file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("classify", help="print medium / cubical_not_medium / not_cubical")
    p.add_argument("file")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("embed", help="print the cube embedding alpha and beta")
    p.add_argument("file")
    p.add_argument("--base", default=None)
    p.set_defaults(handler=cmd_embed)

    p = sub.add_parser("content", help="print state contents")
    p.add_argument("file")
    p.add_argument("--state", default=None)
    p.set_defaults(handler=cmd_content)

    p = sub.add_parser("stationary", help="print stationary distributions as TSV")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_stationary)

    p = sub.add_parser("simulate", help="simulate seeded trajectories")
    p.add_argument("file")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chains", type=int, default=1)
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("generate", help="emit a family document")
    p.add_argument(
        "family", choices=["comparability", "ac-orders", "partial-orders", "lattice"]
    )
    p.add_argument("size", type=int, nargs="+")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("export-dot", help="emit the labeled system graph as DOT")
    p.add_argument("file")
    p.set_defaults(handler=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except NotCubicalError as failure:
        print(f"check failed: {failure}", file=sys.stderr)
        return CHECK_FAILED
    except (Error, OSError) as problem:
        print(f"error: {problem}", file=sys.stderr)
        return INPUT_ERROR


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
