"""Command line entry point.

Exit status: 0 when the analysis ran, 1 on usage or input errors, 2 when a
verification found a bound violated.
"""

from __future__ import annotations

import argparse
import json
import sys

from .covers import DEFAULT_MAX_NODES
from .cycles import DEFAULT_MAX_CYCLES
from .dynamics import attractors_scc, build_astg, fixed_points
from .errors import AndNotError
from .network import read_network, serialize_network, state_to_str
from .report import (
    AnalyzeOptions,
    GeneratorConfig,
    analyze,
    default_max_states,
    generate_random,
    verify_campaign,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_solver_flags(p):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", dest="mode", action="store_const", const="exact",
                       help="minimum witness sets by branch and bound (default)")
    group.add_argument("--greedy", dest="mode", action="store_const", const="greedy",
                       help="greedy witness sets (not certified minimal)")
    p.set_defaults(mode="exact")
    p.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)
    p.add_argument("--max-path-len", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES,
                   help="branch-node budget of the exact solver")


def _add_generator_flags(p):
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--min-lits", type=int, default=1)
    p.add_argument("--max-lits", type=int, default=3)
    p.add_argument("--neg-prob", type=float, default=0.5)
    p.add_argument("--const-prob", type=float, default=0.05)


def _generator_config(args) -> GeneratorConfig:
    return GeneratorConfig(
        n=args.nodes,
        seed=args.seed,
        min_lits=args.min_lits,
        max_lits=args.max_lits,
        neg_prob=args.neg_prob,
        const_prob=args.const_prob,
    ).validate()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="andnot-bounds",
        description="Attractor bounds for AND-NOT Boolean networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="cycles, witness sets and bounds")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true",
                   help="also count attractors exhaustively and check every bound")
    p.add_argument("--max-states", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    _add_solver_flags(p)

    p = sub.add_parser("attractors", help="exhaustive asynchronous attractors")
    p.add_argument("file")
    p.add_argument("--max-states", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--dump-stg", action="store_true",
                   help="append the transition graph as an edge list (n <= 10)")

    p = sub.add_parser("random", help="print a random AND-NOT network")
    _add_generator_flags(p)

    p = sub.add_parser("campaign", help="check the bounds on random networks")
    _add_generator_flags(p)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--max-states", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    _add_solver_flags(p)
    return parser


def _options(args, verify) -> AnalyzeOptions:
    return AnalyzeOptions(
        verify=verify,
        max_states=args.max_states if args.max_states is not None else default_max_states(),
        mode=args.mode,
        max_cycles=args.max_cycles,
        max_path_len=args.max_path_len,
        max_nodes=args.max_nodes,
    )


def cmd_analyze(args, out) -> int:
    bn = read_network(args.file)
    report = analyze(bn, _options(args, args.verify))
    out.write(report.to_json_text() if args.format == "json" else report.to_text())
    return EXIT_VIOLATION if report.violated else EXIT_OK


def cmd_attractors(args, out) -> int:
    bn = read_network(args.file)
    cap = args.max_states if args.max_states is not None else default_max_states()
    stg = build_astg(bn, cap)
    found = attractors_scc(stg)
    fps = fixed_points(bn, cap)
    if args.format == "json":
        data = found.to_json()
        data["fixed_points"] = [state_to_str(x, bn.n) for x in fps]
        if args.dump_stg:
            data["stg"] = stg.to_edgelist().splitlines()
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(
            f"{len(found)} attractor(s), {len(fps)} fixed point(s); "
            f"state order {', '.join(bn.names)}\n"
        )
        for states, kind in zip(found.as_strings(), found.kinds):
            out.write(f"  {kind}: {{{', '.join(states)}}}\n")
        if args.dump_stg:
            out.write(stg.to_edgelist())
    return EXIT_OK


def cmd_random(args, out) -> int:
    out.write(serialize_network(generate_random(_generator_config(args))))
    return EXIT_OK


def cmd_campaign(args, out) -> int:
    summary = verify_campaign(_generator_config(args), args.samples, _options(args, True))
    if args.format == "json":
        out.write(json.dumps(summary.to_json(), indent=2) + "\n")
    else:
        out.write(f"{summary.samples} networks, n={summary.config.n}, seed={summary.config.seed}")
        out.write(f" ({summary.skipped} skipped)\n" if summary.skipped else "\n")
        for check, count in summary.violation_counts.items():
            out.write(f"  {check}: {summary.checked.get(check, 0)} checked, {count} violations\n")
        for v in summary.violations:
            out.write(f"\nviolation in sample {v['sample']} (seed {v['seed']}): {v['check']}\n")
            out.write(f"  {v['detail']}\n")
            out.write(v["network"])
    return EXIT_OK if summary.ok else EXIT_VIOLATION


COMMANDS = {
    "analyze": cmd_analyze,
    "attractors": cmd_attractors,
    "random": cmd_random,
    "campaign": cmd_campaign,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (AndNotError, OSError) as exc:
        print(f"andnot-bounds: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
