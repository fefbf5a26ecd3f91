"""Command-line interface: ``spt <command> [options]``.

Exit codes: 0 success, 2 invalid input, 3 resource limit, 1 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import graphs, invariants, optimization
from .errors import ConsistencyError, InvalidArgument, ResourceLimit, SptError
from .factorization import find_evens_pattern, max_edge_count, optimal_factorization
from .ideals import EdgeIdeal
from .monomials import format_monomial, parse

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class CommandResult:
    command: str
    inputs: dict
    output: object
    elapsed_ms: int

    def to_dict(self):
        return {"command": self.command, "inputs": self.inputs,
                "output": self.output, "elapsed_ms": self.elapsed_ms}


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def parse_graph(text: str) -> graphs.Graph:
    kind, _, rest = text.partition(":")
    try:
        if kind == "cycle":
            return graphs.cycle(int(rest))
        if kind == "complete":
            return graphs.complete(int(rest))
        if kind == "pendant":
            size, _, at = rest.partition(":")
            return graphs.cycle_with_pendant(int(size), int(at))
    except ValueError as exc:
        if isinstance(exc, InvalidArgument):
            raise
        raise InvalidArgument(f"bad graph specifier {text!r}") from None
    if kind == "file":
        try:
            text = Path(rest).read_text()
        except OSError as exc:
            raise InvalidArgument(f"cannot read {rest}: {exc.strerror}") from None
        return graphs.from_edge_list(text)
    raise InvalidArgument(f"unknown graph specifier {text!r}; use cycle:N, complete:K, pendant:N:v or file:PATH")


def _odd_cycle_n(g: graphs.Graph) -> int:
    if not g.is_odd_cycle():
        raise InvalidArgument("this mode needs an odd cycle graph (cycle:2n+1)")
    return (g.num_vertices - 1) // 2


def _q(v: Fraction) -> str:
    return optimization.fraction_str(Fraction(v))


# -- commands ------------------------------------------------------------------

def cmd_covers(args):
    g = parse_graph(args.graph)
    covers = graphs.minimal_vertex_covers(g)
    return {"covers": [list(c) for c in covers], "rows": [list(r) for r in graphs.cover_matrix(g).rows]}


def cmd_factorize(args):
    g = parse_graph(args.graph)
    m = parse(args.monomial, g.num_vertices)
    f = optimal_factorization(g, m)
    out = {"monomial": list(m), "b": f.edge_count, "factorization": f.to_dict(), "text": str(f)}
    if g.is_cycle():
        out["evens_pattern"] = find_evens_pattern(f) is not None
    return out


def cmd_member(args):
    g = parse_graph(args.graph)
    ideal = EdgeIdeal(g, args.budget)
    m = parse(args.monomial, g.num_vertices)
    t = args.t
    return {
        "monomial": list(m),
        "text": format_monomial(m),
        "t": t,
        "b": max_edge_count(g, m),
        "ordinary": ideal.in_ordinary_power(m, t),
        "symbolic": ideal.in_symbolic_power(m, t),
        "L": ideal.l_membership(m, t),
        "D": ideal.d_membership(m, t),
        "min_cover_weight": min(ideal.cover_weights(m)),
    }


def cmd_gens(args):
    g = parse_graph(args.graph)
    ideal = EdgeIdeal(g, args.budget)
    gens = {
        "symbolic": ideal.symbolic_minimal_generators,
        "ordinary": ideal.ordinary_power_generators,
        "d": ideal.d_generators,
    }[args.kind](args.t)
    return {"kind": args.kind, "t": args.t, "count": len(gens), "generators": [list(m) for m in gens]}


def cmd_check_decomp(args):
    g = parse_graph(args.graph)
    ideal = EdgeIdeal(g, args.budget)
    if args.against == "l":
        report = ideal.check_l_equality(args.t, args.extra_degree)
    else:
        report = ideal.check_decomposition(args.t)
    out = report.to_dict()
    out["against"] = args.against
    return out


def cmd_alpha(args):
    g = parse_graph(args.graph)
    t = args.t
    if args.mode == "closed":
        return {"mode": "closed", "t": t, "alpha": optimization.alpha_symbolic_closed(_odd_cycle_n(g), t)}
    if args.mode == "lp":
        full = optimization.lp_solve(optimization.alpha_program(g, t))
        out = {"mode": "lp", "t": t, "lower_bound": _q(full.value), "rows": len(full.dual),
               "point": [_q(v) for v in full.point], "dual": [_q(v) for v in full.dual]}
        if g.is_odd_cycle():
            sub = optimization.lp_solve(optimization.alpha_subprogram(g, t))
            out["subprogram_value"] = _q(sub.value)
        if args.tableau:
            out["tableau"] = optimization.alpha_program(g, t).to_text()
        return out
    ideal = EdgeIdeal(g, args.budget)
    return {"mode": "brute", "t": t, "alpha": optimization.alpha_bruteforce(ideal, t, symbolic=not args.ordinary),
            "symbolic": not args.ordinary}


def cmd_resurgence(args):
    return invariants.resurgence_report(args.n, args.witnesses)


def cmd_sdefect(args):
    g = parse_graph(args.graph)
    out = {"t": args.t, "mode": args.mode}
    if args.mode in ("closed", "both"):
        out["closed"] = invariants.sdefect_closed(_odd_cycle_n(g), args.t)
    if args.mode in ("brute", "both"):
        out["brute"] = invariants.sdefect_bruteforce(EdgeIdeal(g, args.budget), args.t)
    if args.mode == "both":
        out["agree"] = out["closed"] == out["brute"]
    return out


def cmd_contain(args):
    g = parse_graph(args.graph)
    return invariants.containment_check(EdgeIdeal(g, args.budget), args.m, args.r).to_dict()


COMMANDS = {
    "covers": cmd_covers,
    "factorize": cmd_factorize,
    "member": cmd_member,
    "gens": cmd_gens,
    "check-decomp": cmd_check_decomp,
    "alpha": cmd_alpha,
    "resurgence": cmd_resurgence,
    "sdefect": cmd_sdefect,
    "contain": cmd_contain,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the full command result as canonical JSON")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="enumeration budget (overrides $SPT_BUDGET)")

    parser = argparse.ArgumentParser(prog="spt", parents=[common],
                                     description="Ordinary and symbolic powers of edge ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        return p

    p = add("covers", "minimal vertex covers and the cover matrix")
    p.add_argument("--graph", required=True)

    p = add("factorize", "optimal edge factorization of a monomial")
    p.add_argument("--graph", required=True)
    p.add_argument("--monomial", required=True, help="x1^2*x2 or 2,1,0,...")

    p = add("member", "membership in I^t, I^(t), L(t), D(t)")
    p.add_argument("--graph", required=True)
    p.add_argument("--monomial", required=True)
    p.add_argument("--t", type=int, required=True)

    p = add("gens", "minimal generators of I^(t), I^t or D(t)")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kind", choices=["symbolic", "ordinary", "d"], default="symbolic")

    p = add("check-decomp", "test I^(t) = I^t + (D(t)), or I^t = (L(t)) with --against l")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--against", choices=["decomposition", "l"], default="decomposition")
    p.add_argument("--extra-degree", type=int, default=0)

    p = add("alpha", "minimal degree of I^(t)")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=["closed", "lp", "brute"], default="closed")
    p.add_argument("--ordinary", action="store_true", help="brute mode: search I^t instead")
    p.add_argument("--tableau", action="store_true", help="lp mode: include the program as text")

    p = add("resurgence", "resurgence of I(C_{2n+1}) and the witness sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--witnesses", type=int, default=6)

    p = add("sdefect", "symbolic defect")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=["closed", "brute", "both"], default="both")

    p = add("contain", "test I^(m) subset I^r")
    p.add_argument("--graph", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    return parser


def run(argv) -> CommandResult:
    """Parse and execute; library errors propagate to the caller."""
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.budget = getattr(args, "budget", None)
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("json",)}
    start = time.perf_counter()
    output = COMMANDS[args.command](args)
    elapsed = int((time.perf_counter() - start) * 1000)
    return CommandResult(args.command, inputs, output, elapsed)


def format_text(result: CommandResult) -> str:
    out = result.output
    rows = []
    for key in sorted(out):
        value = out[key]
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            rows.append((key, f"[{len(value)} items]"))
            for item in value:
                rows.append(("", canonical_json(item)))
        elif isinstance(value, (dict, list)):
            rows.append((key, canonical_json(value)))
        elif isinstance(value, str) and "\n" in value:
            rows.append((key, ""))
            rows.extend(("", line) for line in value.splitlines())
        else:
            rows.append((key, json.dumps(value)))
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}".rstrip() for k, v in rows)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        result = run(argv)
    except SystemExit as exc:  # argparse usage errors already printed
        return int(exc.code) if exc.code is not None else EXIT_OK
    except ResourceLimit as exc:
        print(f"spt: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidArgument as exc:
        print(f"spt: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ConsistencyError, SptError) as exc:
        print(f"spt: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    wants_json = "--json" in argv
    print(canonical_json(result.to_dict()) if wants_json else format_text(result))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
