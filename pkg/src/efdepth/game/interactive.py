"""Text turn loop against the solver."""

from __future__ import annotations

import sys
from typing import TextIO

from ..graph import Graph
from .rules import LEFT, RIGHT, Configuration, consistent, format_round, other
from .solver import DEFAULT_BUDGET, EFSolver


def _read(inp: TextIO, out: TextIO, prompt: str) -> str | None:
    out.write(prompt)
    out.flush()
    line = inp.readline()
    return None if line == "" else line.strip()


def play_interactive(G: Graph, H: Graph, r: int, human_role: str,
                     inp: TextIO = sys.stdin, out: TextIO = sys.stdout,
                     budget: int = DEFAULT_BUDGET) -> list[str]:
    """Play ``r`` rounds with the human as ``spoiler`` or ``duplicator``.

    Spoiler enters ``G <v>`` or ``H <v>``; Duplicator enters a vertex number.
    Illegal input is rejected without using up the round. Returns the
    transcript; its last line names the winner, or is ``aborted`` on EOF.
    """
    if human_role not in ("spoiler", "duplicator"):
        raise ValueError("human_role must be 'spoiler' or 'duplicator'")
    engine = EFSolver(G, H, budget)
    engine.duplicator_wins((), r)
    c = Configuration(G, H)
    lines: list[str] = []

    def finish(winner: str) -> list[str]:
        lines.append(f"winner: {winner}")
        out.write(lines[-1] + "\n")
        return lines

    for t in range(1, r + 1):
        k = r - t + 1
        if not c.unchosen(LEFT) and not c.unchosen(RIGHT):
            break
        if human_role == "spoiler":
            while True:
                text = _read(inp, out, f"round {t} ({k} left) spoiler> ")
                if text is None:
                    lines.append("aborted")
                    out.write("aborted\n")
                    return lines
                parts = text.split()
                if len(parts) == 2 and parts[0].upper() in (LEFT, RIGHT) and parts[1].isdigit():
                    side, v = parts[0].upper(), int(parts[1])
                    if v in c.unchosen(side):
                        break
                out.write(f"illegal move {text!r}; enter 'G <v>' or 'H <v>' with an unchosen vertex\n")
            w = engine.duplicator_reply(c.pairs, side, v, k)
            if w is None:
                w = _any_reply(c, side, v)
        else:
            move = engine.spoiler_move(c.pairs, k)
            if move is None:
                side = LEFT if c.unchosen(LEFT) else RIGHT
                move = (side, c.unchosen(side)[0])
            side, v = move
            out.write(f"round {t}: spoiler picks {side} {v}\n")
            if not c.unchosen(other(side)):
                w = None
            else:
                while True:
                    text = _read(inp, out, f"round {t} duplicator ({other(side)})> ")
                    if text is None:
                        lines.append("aborted")
                        out.write("aborted\n")
                        return lines
                    if text.isdigit() and int(text) in c.unchosen(other(side)):
                        w = int(text)
                        break
                    out.write(f"illegal reply {text!r}; enter an unchosen vertex of {other(side)}\n")
        lines.append(format_round(t, side, v, w))
        out.write(lines[-1] + "\n")
        if w is None:
            return finish("spoiler")
        x, y = (v, w) if side == LEFT else (w, v)
        if not consistent(G, H, c.pairs, x, y):
            return finish("spoiler")
        c = c.extend(side, v, w)
    return finish("duplicator")


def _any_reply(c: Configuration, side: str, v: int) -> int | None:
    """Some legal reply, preferring one that keeps the pairs consistent."""
    free = c.unchosen(other(side))
    for w in free:
        x, y = (v, w) if side == LEFT else (w, v)
        if consistent(c.G, c.H, c.pairs, x, y):
            return w
    return free[0] if free else None
