"""``efdepth`` command line.

Exit codes: 0 success or true, 1 false or negative result, 2 usage or input
error, 3 verification failure, 4 budget exceeded. Results go to stdout and
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cert import BoundCertificate, certify_lower, certify_upper, general_lower_bound, search_pair, verify_certificate
from .formats import DecodeError, decode, encode, encode_graph6, sniff_decode
from .game import (
    NoSpoilerWin, PolicyMismatch, SolverBudgetExceeded, extract_distinguishing, registered_policy,
    play_interactive, solve, verify_policy,
)
from .game.solver import DEFAULT_BUDGET
from .graph import Graph, GraphError
from .instances import FAMILIES, INSTANCE_NAMES, FamilySpec, generate, parse_instance_args
from .logic import FormulaError, evaluate, parse, quantifier_depth, synth_thm11, synth_trivial, to_text
from .suite import run_paper_suite

OK, NEGATIVE, USAGE, VERIFY_FAILED, BUDGET = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _read_source(arg: str, literal_ok: bool = False) -> str:
    if arg == "-":
        return sys.stdin.read()
    path = Path(arg)
    if path.is_file():
        return path.read_text()
    if literal_ok:
        return arg
    raise InputError(f"no such file: {arg}")


def read_graph(arg: str) -> Graph:
    """A file path, ``-`` for stdin, or ``g6:<graph6>``."""
    text = arg[3:] if arg.startswith("g6:") else _read_source(arg)
    try:
        return sniff_decode(text.strip())
    except DecodeError as exc:
        raise InputError(f"{arg}: {exc}") from exc


def read_formula(arg: str):
    """A file path, ``-`` for stdin, or the formula text itself."""
    return parse(_read_source(arg, literal_ok=True).strip())


def _emit(text: str, out: str | None = None):
    if out and out != "-":
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _g6(G: Graph) -> str:
    return encode_graph6(G).decode("ascii")


# -- subcommands ---------------------------------------------------------------

def cmd_gen(a) -> int:
    name = a.name
    if name in INSTANCE_NAMES:
        bundle = parse_instance_args([name] + a.params)
        print(f"{bundle.name}: rounds {bundle.r}", file=sys.stderr)
        G = {"F": bundle.F, "G": bundle.G, "H": bundle.H}[a.part]
    elif name in FAMILIES:
        G = generate(FamilySpec(name, tuple(int(p) for p in a.params)))
    else:
        raise InputError(f"unknown family or instance {name!r}; choose from {FAMILIES + INSTANCE_NAMES}")
    _emit(encode(G, a.format).decode("ascii").rstrip("\n"), a.output)
    return OK


def cmd_encode(a) -> int:
    G = read_graph(a.graph)
    sys.stdout.write(encode(G, a.to).decode("ascii").rstrip("\n") + "\n")
    return OK


def cmd_decode(a) -> int:
    text = _read_source(a.graph)
    try:
        G = decode(text.strip() if a.source == "graph6" else text, a.source)
    except DecodeError as exc:
        raise InputError(str(exc)) from exc
    print(_g6(G))
    return OK


def cmd_eval(a) -> int:
    phi = read_formula(a.formula)
    env = {}
    for item in a.env or []:
        name, _, val = item.partition("=")
        env[name] = int(val)
    result = evaluate(phi, read_graph(a.graph), env)
    print("true" if result else "false")
    return OK if result else NEGATIVE


def cmd_depth(a) -> int:
    print(quantifier_depth(read_formula(a.formula)))
    return OK


def cmd_synth(a) -> int:
    H = read_graph(a.target)
    phi = synth_thm11(H) if a.kind == "thm11" else synth_trivial(H)
    print(to_text(phi))
    return OK


def cmd_ef(a) -> int:
    G, H = read_graph(a.left), read_graph(a.right)
    out = solve(G, H, a.rounds, a.budget, with_strategy=bool(a.strategy))
    if a.strategy:
        Path(a.strategy).write_text(json.dumps({
            "left": _g6(G), "right": _g6(H), "rounds": a.rounds,
            "winner": out.winner.value, "moves": out.strategy}, indent=1) + "\n")
    print(out.winner.value)
    print(f"positions searched: {out.nodes}", file=sys.stderr)
    return OK


def cmd_verify_policy(a) -> int:
    bundle = parse_instance_args(a.instance)
    if not bundle.name.startswith(a.name + "("):
        raise InputError(f"policy {a.name} does not apply to {bundle.name}")
    rounds = bundle.r if a.rounds is None else a.rounds
    ok, transcript = verify_policy(bundle.G, bundle.H, rounds, registered_policy(a.name, bundle.params))
    if ok:
        print(f"ok {bundle.name} rounds {rounds}")
        return OK
    print("\n".join(transcript))
    return VERIFY_FAILED


def cmd_distinguish(a) -> int:
    G, H = read_graph(a.left), read_graph(a.right)
    try:
        phi = extract_distinguishing(G, H, a.rounds, budget=a.budget)
    except NoSpoilerWin:
        print("none")
        return NEGATIVE
    print(to_text(phi))
    return OK


def cmd_play(a) -> int:
    G, H = read_graph(a.left), read_graph(a.right)
    lines = play_interactive(G, H, a.rounds, a.role, sys.stdin, sys.stdout)
    return OK if lines and lines[-1].startswith("winner") else NEGATIVE


def _cert_exit(cert: BoundCertificate) -> int:
    if cert.verified:
        return OK
    if "solver-budget-exceeded" in cert.reasons:
        return BUDGET
    return VERIFY_FAILED


def cmd_certify_lower(a) -> int:
    cert = certify_lower(read_graph(a.pattern), read_graph(a.left), read_graph(a.right), a.rounds, a.budget)
    _emit(cert.to_json(), a.output)
    for reason in cert.reasons:
        print(f"rejected: {reason}", file=sys.stderr)
    return _cert_exit(cert)


def cmd_certify_upper(a) -> int:
    cert = certify_upper(read_graph(a.pattern), read_formula(a.formula), a.max_n)
    _emit(cert.to_json(), a.output)
    print(f"checked every graph with at most {a.max_n} vertices; this is not a proof for larger graphs",
          file=sys.stderr)
    if cert.counterexample is not None:
        print(f"counterexample: {_g6(cert.counterexample)}", file=sys.stderr)
    return _cert_exit(cert)


def cmd_bound(a) -> int:
    real, integer = general_lower_bound(read_graph(a.pattern), a.complement)
    print(integer)
    print(f"real value {real:g}", file=sys.stderr)
    return OK


def cmd_search_pair(a) -> int:
    res = search_pair(read_graph(a.pattern), a.rounds, a.max_n, a.budget)
    print(f"games solved: {res.games_solved}", file=sys.stderr)
    if res.certificate is not None:
        print(res.certificate.to_json())
        return OK
    print("none")
    return BUDGET if res.budget_exhausted else NEGATIVE


def cmd_suite(a) -> int:
    if a.jobs and a.jobs > 1:
        print("note: rows run sequentially; --jobs is a hint only", file=sys.stderr)
    report = run_paper_suite(a.level, a.out, sabotage_p0=a.sabotage_p0, seed=a.seed,
                             progress=lambda row: print(f"row {row.criterion} done", file=sys.stderr))
    print(report.table())
    return OK if report.passed else VERIFY_FAILED


def cmd_check_cert(a) -> int:
    try:
        cert = BoundCertificate.from_json(_read_source(a.certificate))
    except (ValueError, TypeError) as exc:
        raise InputError(f"malformed certificate: {exc}") from exc
    fresh = verify_certificate(cert, a.budget)
    print("verified" if fresh.verified else "rejected: " + ", ".join(fresh.reasons))
    return _cert_exit(fresh)


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=2024, help="seed for randomised checks")
    common.add_argument("--jobs", type=int, default=1, help="parallelism hint")

    p = argparse.ArgumentParser(prog="efdepth", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"efdepth {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(fn=fn)
        return sp

    sp = add("gen", cmd_gen, "generate a family member or one graph of a registered instance")
    sp.add_argument("name", help=f"family ({', '.join(FAMILIES)}) or instance ({', '.join(INSTANCE_NAMES)})")
    sp.add_argument("params", nargs="*", help="integer parameters")
    sp.add_argument("--part", choices=("F", "G", "H"), default="G", help="which graph of an instance")
    sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    sp.add_argument("-o", "--output")

    sp = add("encode", cmd_encode, "convert a graph to the given format")
    sp.add_argument("graph", nargs="?", default="-")
    sp.add_argument("--to", choices=("graph6", "edgelist"), default="edgelist")

    sp = add("decode", cmd_decode, "read a graph in the given format and print graph6")
    sp.add_argument("graph", nargs="?", default="-")
    sp.add_argument("--from", dest="source", choices=("graph6", "edgelist"), default="edgelist")

    sp = add("eval", cmd_eval, "evaluate a formula on a graph")
    sp.add_argument("--formula", required=True)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--env", nargs="*", metavar="VAR=VERTEX")

    sp = add("depth", cmd_depth, "quantifier depth of a formula")
    sp.add_argument("--formula", required=True)

    sp = add("synth", cmd_synth, "build a sentence for an induced pattern")
    sp.add_argument("--target", required=True, help="H for thm11 (pattern P3+K1+H), F for trivial")
    sp.add_argument("--kind", choices=("thm11", "trivial"), default="thm11")

    def game_args(sp):
        sp.add_argument("--left", required=True)
        sp.add_argument("--right", required=True)
        sp.add_argument("--rounds", type=int, required=True)

    sp = add("ef", cmd_ef, "solve the game exactly")
    game_args(sp)
    sp.add_argument("--strategy", help="write the winner's strategy table as JSON")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = add("verify-policy", cmd_verify_policy, "check a scripted Duplicator against every Spoiler line")
    sp.add_argument("--name", choices=("thm2", "thm1_2"), required=True)
    sp.add_argument("--instance", nargs="+", required=True, help="e.g. thm2 1 2 2 2 or thm1_2 3")
    sp.add_argument("--rounds", type=int)

    sp = add("distinguish", cmd_distinguish, "separating sentence from a Spoiler win")
    game_args(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = add("play", cmd_play, "play against the solver")
    game_args(sp)
    sp.add_argument("--as", dest="role", choices=("spoiler", "duplicator"), required=True)

    sp = add("certify-lower", cmd_certify_lower, "lower-bound certificate from a Duplicator win")
    sp.add_argument("--pattern", required=True)
    game_args(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("-o", "--output")

    sp = add("certify-upper", cmd_certify_upper, "check a sentence on all small graphs")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--formula", required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("-o", "--output")

    sp = add("bound", cmd_bound, "general lower bound for a pattern")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--complement", action="store_true")

    sp = add("search-pair", cmd_search_pair, "search small pairs for a lower-bound certificate")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--rounds", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--budget", type=int, default=10_000, help="maximum number of games solved")

    sp = add("suite", cmd_suite, "run the reproduction suite")
    sp.add_argument("--level", choices=("core", "extended"), default="core")
    sp.add_argument("--out", help="directory for certificates and reports")
    sp.add_argument("--sabotage-p0", type=int, help=argparse.SUPPRESS)

    sp = add("check-cert", cmd_check_cert, "recompute a certificate file")
    sp.add_argument("certificate")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        return a.fn(a)
    except SolverBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except (InputError, FormulaError, GraphError, PolicyMismatch, ValueError, OSError) as exc:
        print(f"efdepth {a.command}: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
