"""``wsmkit`` command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import LIMITS
from .errors import GraphParseError, PreconditionViolation, SizeCapExceeded, StructureError, WsmkitError
from .graph import members
from .io import load_graph
from .obstructions import builtin_names, get_obstruction_set, load_obstruction_set
from .rankdecomp import rankwidth, rankwidth_at_most
from .solvers import solve
from .split import build_split_tree
from .wsm import find_wsm, mod_size, sim_k_classes, sim_k_decide, wsn_search

OK, NO, USAGE, CAP = 0, 1, 2, 3


def _class(args):
    if args.obstructions:
        return load_obstruction_set(args.obstructions)
    if not args.cls:
        raise UsageError("this command needs --class or --obstructions")
    try:
        return get_obstruction_set(args.cls)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


class UsageError(Exception):
    pass


def _need_k(args) -> int:
    if args.k is None:
        raise UsageError(f"{args.verb} needs --k")
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    return args.k


def _write_dot(args, text: str) -> None:
    if args.dot:
        Path(args.dot).write_text(text)


def cmd_rankwidth(args, g):
    if args.k is not None:
        ok, dec = rankwidth_at_most(g, _need_k(args))
        if dec is not None:
            _write_dot(args, dec.to_dot())
        out = {"k": args.k, "rankwidth_at_most": ok, "decomposition": dec.to_json() if dec else None}
        return (OK if ok else NO), out, f"rank-width <= {args.k}: {'yes' if ok else 'no'}"
    rw, dec = rankwidth(g)
    _write_dot(args, dec.to_dot())
    return OK, {"rankwidth": rw, "decomposition": dec.to_json()}, f"rank-width {rw}"


def cmd_splittree(args, g):
    t = build_split_tree(g)
    _write_dot(args, t.to_dot())
    kinds = sorted(node.kind for node in t.nodes.values())
    return OK, t.to_json(), f"{len(t.nodes)} nodes: {', '.join(kinds) if kinds else 'none'}"


def cmd_simk(args, g):
    k = _need_k(args)
    if args.pair:
        v, w = args.pair
        related = sim_k_decide(g, k, v, w)
        return (OK if related else NO), {"k": k, "v": v, "w": w, "related": related}, (
            f"{v} ~_{k} {w}: {'yes' if related else 'no'}"
        )
    classes = sim_k_classes(g, k)
    text = "\n".join(" ".join(map(str, members(c))) for c in classes.classes)
    return OK, classes.to_json(), text


def cmd_wsn(args, g):
    f = _class(args)
    res = wsn_search(g, f)
    out = {"class": f.name, "wsn": res.value, "modulator": res.modulator.to_json()}
    return OK, out, f"wsn {res.value}"


def cmd_findwsm(args, g):
    f = _class(args)
    k = _need_k(args)
    found = find_wsm(g, k, f)
    if found is None:
        return NO, {"k": k, "class": f.name, "modules": None}, f"no {k}-well-structured modulator"
    text = "\n".join(" ".join(map(str, members(m))) for m in found.modules) or "(empty modulator)"
    return OK, found.to_json(), text


def cmd_modsize(args, g):
    f = _class(args)
    size, witness = mod_size(g, f)
    return OK, {"class": f.name, "mod_size": size, "modulator": members(witness)}, f"mod {size}: {members(witness)}"


def cmd_solve(args, g):
    f = _class(args)
    sol = solve(g, args.problem, f)
    out = sol.to_json()
    code = OK
    if args.m is not None:
        if args.m < 0:
            raise UsageError("--m must be nonnegative")
        answer = sol.decide(args.m)
        out["m"], out["decision"] = args.m, answer
        code = OK if answer else NO
    text = f"{args.problem} size {sol.size} via {sol.path}: {sol.to_json()['vertices']}"
    return code, out, text


COMMANDS = {
    "rankwidth": (cmd_rankwidth, "exact rank-width with an optimal decomposition (or decide <= --k)"),
    "splittree": (cmd_splittree, "split tree (reduced graph-labeled forest)"),
    "simk": (cmd_simk, "classes of the ~_k equivalence, or one pair with --pair"),
    "wsn": (cmd_wsn, "well-structure number with a witness modulator"),
    "findwsm": (cmd_findwsm, "search for a k-well-structured modulator"),
    "modsize": (cmd_modsize, "minimum modulator size"),
    "solve": (cmd_solve, "minimum vertex cover or maximum clique"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="graph file")
    common.add_argument("--format", default="auto", choices=["auto", "edges", "dimacs"], help="input format")
    common.add_argument("--class", dest="cls", help=f"target class: {', '.join(builtin_names())}")
    common.add_argument("--obstructions", help="JSON obstruction-set file (overrides --class)")
    common.add_argument("--k", type=int, help="parameter k")
    common.add_argument("--output", default="json", choices=["json", "text"], help="stdout format")
    common.add_argument("--dot", help="also write a DOT rendering to this path")
    common.add_argument("--max-exact-n", type=int, help=f"rank-width DP cap (default {LIMITS.max_exact_n})")

    parser = argparse.ArgumentParser(
        prog="wsmkit",
        description="Rank-width, split decompositions and well-structured modulators.",
        epilog="exit status: 0 success/yes, 1 no/none, 2 usage or input error, 3 size cap exceeded",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == "simk":
            p.add_argument("--pair", nargs=2, type=int, metavar=("V", "W"), help="decide a single pair")
        if name == "solve":
            p.add_argument("--problem", required=True, choices=["vc", "clique"])
            p.add_argument("--m", type=int, help="decision target (cover <= m / clique >= m)")
    return parser


def _emit(args, payload, text) -> None:
    if args.output == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    old_cap = LIMITS.max_exact_n
    if args.max_exact_n is not None:
        LIMITS.max_exact_n = args.max_exact_n
    try:
        g = load_graph(args.input, args.format)
        handler = COMMANDS[args.verb][0]
        code, payload, text = handler(args, g)
    except (GraphParseError, OSError) as exc:
        print(f"wsmkit: {args.input}: {exc}", file=sys.stderr)
        return USAGE
    except SizeCapExceeded as exc:
        print(f"wsmkit: size cap exceeded: {exc}", file=sys.stderr)
        return CAP
    except (UsageError, PreconditionViolation, StructureError, ValueError, KeyError, WsmkitError) as exc:
        print(f"wsmkit: {exc}", file=sys.stderr)
        return USAGE
    finally:
        LIMITS.max_exact_n = old_cap
    _emit(args, payload, text)
    return code


if __name__ == "__main__":
    sys.exit(main())
