"""Command-line front end.

Exit codes: 0 success, 1 failed verification/conjecture, 2 malformed input
or arguments, 3 isolated vertex where a game needs none, 4 solver memo cap
exceeded, 5 EOF while a play session expected input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classic import domination_number, total_domination_number
from .codec import graph6_str, parse_graph6, sniff_and_parse
from .errors import FormatError, IsolatedVertexError, MemoLimitError
from .game import (DEFAULT_MEMO_CAP, VARIANTS, GameState, Player, apply_move,
                   game_value, initial_state, is_finished, legal_moves,
                   optimal_move, profile)
from .graphs import Graph, VertexSet, generate
from .products import (bridge_graph, cartesian_product, complement,
                       hat_construction, lexicographic_product)
from .trees import conjecture_scan, write_census
from .verify import SUITES, SuiteFailure, run_suite

_PLAYER = {"d": Player.DOMINATOR, "s": Player.STALLER}


def load_graph(arg: str) -> Graph:
    """A readable path wins; otherwise the argument is graph6 text."""
    if os.path.exists(arg):
        with open(arg, "rb") as fh:
            return sniff_and_parse(fh.read())
    return parse_graph6(arg)


def _parse_covered(raw: str | None, n: int) -> VertexSet | None:
    if raw is None:
        return None
    try:
        members = [int(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError as exc:
        raise FormatError(f"bad --covered list {raw!r}") from exc
    if any(not 0 <= v < n for v in members):
        raise FormatError(f"--covered vertex outside [0, {n})")
    return VertexSet(n, members)


def cmd_value(args) -> int:
    G = load_graph(args.graph)
    covered = _parse_covered(args.covered, G.n)
    val = game_value(G, VARIANTS[args.variant], _PLAYER[args.first],
                     initial_covered=covered, memo_cap=args.memo_cap)
    print(val)
    return 0


def cmd_profile(args) -> int:
    G = load_graph(args.graph)
    flat = profile(G, memo_cap=args.memo_cap).as_flat_dict()
    if args.format == "json":
        print(json.dumps(flat))
    else:
        keys = list(flat)
        print("\t".join(keys))
        print("\t".join(str(flat[k]) for k in keys))
    return 0


def cmd_generate(args) -> int:
    fam = args.family
    if fam in ("path", "cycle", "complete", "empty"):
        G = generate(fam, _require(args, "n"))
    elif fam == "star":
        G = generate(fam, _require(args, "k"))
    elif fam == "cycle_power":
        G = generate(fam, _require(args, "N"), _require(args, "n"))
    elif fam == "bridge":
        G = bridge_graph(_require(args, "m"), _require(args, "n"))
    elif fam == "hat":
        G = hat_construction(load_graph(_require(args, "graph")))
    elif fam == "complement":
        G = complement(load_graph(_require(args, "graph")))
    elif fam in ("lexicographic", "cartesian"):
        left = load_graph(_require(args, "graph"))
        right = load_graph(_require(args, "right"))
        op = lexicographic_product if fam == "lexicographic" else cartesian_product
        G = op(left, right)
    else:  # pragma: no cover - argparse restricts choices
        raise FormatError(f"unknown family {fam}")
    print(graph6_str(G))
    return 0


def _require(args, name: str):
    val = getattr(args, name, None)
    if val is None:
        raise FormatError(f"--family {args.family} needs --{name}")
    return val


def cmd_census(args) -> int:
    rows = write_census(args.min, args.max, args.out, args.detail,
                        jobs=args.jobs, memo_cap=args.memo_cap,
                        cache_dir=args.cache)
    for row in rows:
        print(row.tsv_line())
    return 0


def cmd_verify(args) -> int:
    try:
        reports = run_suite(args.suite, args.max_order, args.out)
    except SuiteFailure as exc:
        print(f"FAIL {exc.report.check} on {exc.report.graph}; "
              f"counterexample at {exc.counterexample_path}", file=sys.stderr)
        return 1
    n_pass = sum(r.status == "pass" for r in reports)
    n_vac = sum(r.status == "vacuous" for r in reports)
    print(f"PASS {n_pass} checks ({n_vac} vacuous)")
    return 0


def cmd_conjecture(args) -> int:
    report = conjecture_scan(args.max_order, jobs=args.jobs,
                             memo_cap=args.memo_cap)
    if report.passed:
        print(f"PASS 0 counterexamples ({report.trees_checked} trees, "
              f"n <= {report.n_max})")
        return 0
    print(f"FAIL {len(report.strict_counterexamples)} counterexamples: "
          + " ".join(report.strict_counterexamples))
    return 1


def _print_state(G: Graph, state: GameState, moves_played: int) -> None:
    covered = ",".join(map(str, state.covered)) or "-"
    print(f"[{moves_played} moves] covered: {covered}")


def cmd_play(args) -> int:
    G = load_graph(args.graph)
    variant = VARIANTS[args.variant]
    human = Player.DOMINATOR if args.side == "dominator" else Player.STALLER
    state = initial_state(G)
    moves = 0
    _print_state(G, state, moves)
    while not is_finished(G, variant, state):
        if state.to_move is human:
            legal = legal_moves(G, variant, state)
            try:
                line = input(f"your move {sorted(legal)}: ")
            except EOFError:
                print("aborted", file=sys.stderr)
                return 5
            try:
                v = int(line.strip())
            except ValueError:
                print("not a vertex index", file=sys.stderr)
                continue
            if v not in legal:
                print(f"illegal move {v}", file=sys.stderr)
                continue
        else:
            v = optimal_move(G, variant, state, memo_cap=args.memo_cap)
            print(f"engine plays {v}")
        state = apply_move(G, variant, state, v)
        moves += 1
        _print_state(G, state, moves)
    print(f"game over in {moves} moves")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domgames",
        description="Exact solver and verification workbench for the five "
                    "domination games.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_memo_cap(p):
        p.add_argument("--memo-cap", type=int, default=DEFAULT_MEMO_CAP,
                       help="solver transposition-table entry cap")

    p = sub.add_parser("value", help="game value of one graph")
    p.add_argument("--variant", required=True, choices=sorted(VARIANTS))
    p.add_argument("--first", default="d", choices=["d", "s"])
    p.add_argument("--graph", required=True)
    p.add_argument("--covered", help="comma list of pre-dominated vertices")
    add_memo_cap(p)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("profile", help="gamma, gamma_t, and all ten game values")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", default="json", choices=["json", "tsv"])
    add_memo_cap(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("generate", help="emit a family member as graph6")
    p.add_argument("--family", required=True,
                   choices=["path", "cycle", "complete", "star", "empty",
                            "cycle_power", "bridge", "hat", "complement",
                            "lexicographic", "cartesian"])
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--graph")
    p.add_argument("--right")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("census", help="tree census rows (TSV)")
    p.add_argument("--min", type=int, default=4)
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--out", required=True)
    p.add_argument("--detail")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", help="directory for per-order row cache")
    add_memo_cap(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a named claim-checking suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-order", type=int)
    p.add_argument("--out", help="write JSON-lines report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="tree scan for gamma_Zg < gamma_Lg")
    p.add_argument("--max-order", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    add_memo_cap(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("play", help="text-mode game against the engine")
    p.add_argument("--variant", required=True, choices=sorted(VARIANTS))
    p.add_argument("--as", dest="side", required=True,
                   choices=["dominator", "staller"])
    p.add_argument("--graph", required=True)
    add_memo_cap(p)
    p.set_defaults(func=cmd_play)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IsolatedVertexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MemoLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
