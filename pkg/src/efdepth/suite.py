"""Reproduction suite: every registered instance and property check, with timings.

Rows are numbered 1..8 for the core level; the extended level adds row 9.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import graph as g
from .cert import BoundCertificate, certify_lower, certify_upper, general_lower_bound
from .formats import encode_graph6
from .game import NoSpoilerWin, extract_distinguishing, registered_policy, solve, verify_policy
from .game.solver import EFSolver
from .instances import gen_paper_instance, paw
from .iso import enumerate_up_to_iso, canonicalize
from .logic import CompiledFormula, quantifier_depth, random_sentence, synth_thm11
from .oracles import burnside_count, labelled_code, orbit_labels

MUTATION_LITERAL = 0
ENUM_COUNTS = (1, 2, 4, 11, 34, 156, 1044)
THM2_CASES = ((1, 2, (2, 2)), (1, 3, (1, 1, 2)))
THM3_CASES = ("thm3_c5", "thm3_g41", "thm3_diamond", "thm3_g311")


@dataclass
class SuiteRow:
    criterion: int
    name: str
    passed: bool
    seconds: float
    detail: str = ""
    artifacts: list[str] = field(default_factory=list)


@dataclass
class SuiteReport:
    level: str
    rows: list[SuiteRow]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def table(self) -> str:
        lines = [f"{'#':>2}  {'status':6}  {'secs':>8}  name: detail"]
        for r in self.rows:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.criterion:>2}  {status:6}  {r.seconds:8.2f}  {r.name}: {r.detail}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"level": self.level, "passed": self.passed,
                           "rows": [asdict(r) for r in self.rows]}, indent=2)


class _Artifacts:
    def __init__(self, out_dir: str | Path | None):
        self.dir = Path(out_dir) if out_dir is not None else None
        if self.dir is not None:
            self.dir.mkdir(parents=True, exist_ok=True)

    def cert(self, name: str, cert: BoundCertificate) -> list[str]:
        if self.dir is None:
            return []
        path = self.dir / f"{name}.cert.json"
        path.write_text(cert.to_json() + "\n")
        return [str(path)]

    def graph(self, name: str, G: g.Graph) -> list[str]:
        if self.dir is None:
            return [f"{name}={encode_graph6(G).decode()}"]
        path = self.dir / f"{name}.g6"
        path.write_bytes(encode_graph6(G) + b"\n")
        return [str(path)]


def _slug(name: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in name).strip("_")


def check_thm1_2(art: _Artifacts, limit: float = 60.0):
    ok, notes, files = True, [], []
    for m in (1, 2):
        t0 = time.perf_counter()
        b = gen_paper_instance("thm1_2", m)
        cert = certify_lower(b.F, b.G, b.H, b.r)
        pol_ok, transcript = verify_policy(b.G, b.H, b.r, registered_policy("thm1_2", (m,)))
        dt = time.perf_counter() - t0
        good = cert.verified and pol_ok and cert.claimed_bound == b.F.n - 1 and dt < limit
        ok &= good
        notes.append(f"m={m} bound={cert.claimed_bound} cert={cert.verified} policy={pol_ok} {dt:.2f}s")
        files += art.cert(_slug(b.name), cert)
        if transcript:
            notes.append(" / ".join(transcript))
    return ok, "; ".join(notes), files


def check_thm2(art: _Artifacts, limit: float = 300.0):
    ok, notes, files = True, [], []
    for m, k, sizes in THM2_CASES:
        t0 = time.perf_counter()
        b = gen_paper_instance("thm2", m, k, sizes)
        cert = certify_lower(b.F, b.G, b.H, b.r)
        ell = m * sum(sizes)
        pol_ok, _ = verify_policy(b.G, b.H, b.r, registered_policy("thm2", (m, k, sizes)))
        embeds = g.contains_induced(b.G, b.F)[0]
        avoids = not g.contains_induced(b.H, b.F)[0]
        dt = time.perf_counter() - t0
        good = cert.verified and cert.claimed_bound == ell == 4 and pol_ok and embeds and avoids and dt < limit
        ok &= good
        notes.append(f"{b.name} bound={cert.claimed_bound} cert={cert.verified} policy={pol_ok} "
                     f"F<=G={embeds} F!<=H={avoids} {dt:.2f}s")
        files += art.cert(_slug(b.name), cert)
    return ok, "; ".join(notes), files


def check_thm3(art: _Artifacts, limit: float = 1800.0):
    ok, notes, files = True, [], []
    t0 = time.perf_counter()
    for name in THM3_CASES:
        b = gen_paper_instance(name)
        cert = certify_lower(b.F, b.G, b.H, 3)
        ok &= cert.verified and cert.claimed_bound == 4
        notes.append(f"{name}={'ok' if cert.verified else ','.join(cert.reasons)}")
        files += art.cert(name, cert)
    dt = time.perf_counter() - t0
    return ok and dt < limit, "; ".join(notes) + f" total {dt:.2f}s", files


def check_thm1_1(art: _Artifacts, drop: int | None = None, limit: float = 900.0):
    ok, notes, files = True, [], []
    t0 = time.perf_counter()
    cases = [(g.empty(0), 6), (g.empty(1), 6), (g.complete(2), 6), (g.path(3), 6),
             (g.empty(0), 7), (g.empty(1), 7)]
    labels = {0: "empty", 1: "K1", 2: "K2", 3: "P3"}
    for H, n_max in cases:
        F = g.union(g.path(3), g.empty(1), H)
        cert = certify_upper(F, synth_thm11(H, drop_p0_literal=drop), n_max)
        good = cert.verified and cert.depth == H.n + 3
        ok &= good
        tag = f"H={labels[H.n]},n<={n_max}"
        if cert.counterexample is not None:
            files += art.graph(f"thm1_1_{labels[H.n]}_{n_max}_counterexample", cert.counterexample)
            notes.append(f"{tag} counterexample {encode_graph6(cert.counterexample).decode()}")
        else:
            notes.append(f"{tag} depth={cert.depth} ok={good}")
    dt = time.perf_counter() - t0
    return ok and dt < limit, "; ".join(notes) + f" total {dt:.2f}s", files


def check_bound_table(art: _Artifacts, limit: float = 1.0):
    t0 = time.perf_counter()
    got = {
        "K5": general_lower_bound(g.complete(5))[1],
        "C5": general_lower_bound(g.cycle(5))[1],
        "C5c": general_lower_bound(g.cycle(5), True)[1],
        "paw": general_lower_bound(paw())[1],
    }
    ok = got == {"K5": 5, "C5": 3, "C5c": 3, "paw": 3}
    five = [F for F in enumerate_up_to_iso(5) if F.num_edges != 5]
    low = [F for F in five if general_lower_bound(F, True)[1] < 4]
    ok &= not low
    dt = time.perf_counter() - t0
    detail = " ".join(f"{k}={v}" for k, v in got.items())
    detail += f"; {len(five) - len(low)}/{len(five)} five-vertex graphs with e!=5 reach >=4 {dt:.3f}s"
    return ok and dt < limit, detail, []


def check_enumeration(art: _Artifacts, limit: float = 300.0):
    t0 = time.perf_counter()
    ok, notes = True, []
    for n in range(1, 8):
        reps = list(enumerate_up_to_iso(n))
        labels = orbit_labels(n)
        hit = {int(labels[labelled_code(G)]) for G in reps}
        distinct = len(set(map(canonicalize, reps))) == len(reps)
        good = len(reps) == ENUM_COUNTS[n - 1] == burnside_count(n) == len(set(labels.tolist())) == len(hit)
        ok &= good and distinct
        notes.append(f"n={n}:{len(reps)}")
    dt = time.perf_counter() - t0
    return ok and dt < limit, " ".join(notes) + f" {dt:.2f}s", []


def random_pair(rng: random.Random) -> tuple[g.Graph, g.Graph]:
    """Random small pair; a third are isomorphic and a third differ in one edge."""
    n = rng.randint(1, 5)
    G = g.build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
    mode = rng.randrange(3)
    if mode == 0:
        m = rng.randint(1, 5)
        return G, g.build(m, [(u, v) for u in range(m) for v in range(u + 1, m) if rng.random() < 0.5])
    perm = list(range(n))
    rng.shuffle(perm)
    H = g.relabel(G, perm)
    if mode == 2 and n >= 2:
        u, v = rng.sample(range(n), 2)
        edges = set(H.edges()) ^ {(min(u, v), max(u, v))}
        H = g.build(n, edges)
    return G, H


def check_battery(art: _Artifacts, seed: int = 2024, pairs: int = 100, sentences: int = 25,
                  limit: float = 600.0):
    rng = random.Random(seed)
    t0 = time.perf_counter()
    violations, dup_wins, spo_wins = [], 0, 0
    for i in range(pairs):
        G, H = random_pair(rng)
        r = rng.randint(1, 3)
        solver = EFSolver(G, H)
        if solver.duplicator_wins((), r):
            dup_wins += 1
            for _ in range(sentences):
                phi = random_sentence(rng, r)
                check = CompiledFormula(phi)
                if check(G) != check(H):
                    violations.append(f"pair {i}: sentence disagrees")
                    break
        else:
            spo_wins += 1
            try:
                phi = extract_distinguishing(G, H, r, solver)
            except NoSpoilerWin:
                violations.append(f"pair {i}: no separator")
                continue
            check = CompiledFormula(phi)
            if quantifier_depth(phi) > r or not check(G) or check(H):
                violations.append(f"pair {i}: bad separator")
    dt = time.perf_counter() - t0
    detail = f"seed={seed} duplicator={dup_wins} spoiler={spo_wins} violations={len(violations)} {dt:.2f}s"
    if violations:
        detail += " [" + "; ".join(violations[:5]) + "]"
    return not violations and dt < limit, detail, []


def check_mutation(art: _Artifacts, literal: int = MUTATION_LITERAL):
    F = g.union(g.path(3), g.empty(1))
    cert = certify_upper(F, synth_thm11(g.empty(0), drop_p0_literal=literal), 6)
    if cert.verified:
        return False, f"dropping P0 literal {literal} went unnoticed", []
    files = art.graph("mutation_counterexample", cert.counterexample)
    return True, f"dropping P0 literal {literal} caught on {encode_graph6(cert.counterexample).decode()}", files


def check_extended(art: _Artifacts):
    notes, files = [], []
    G = g.union(g.cycle(5), g.cycle(6))
    H = g.copies(2, g.cycle(6))
    t0 = time.perf_counter()
    out = solve(G, H, 4)
    notes.append(f"C5+C6 vs 2C6 r=4 winner={out.winner.value} ({time.perf_counter() - t0:.2f}s)")
    t0 = time.perf_counter()
    b = gen_paper_instance("thm2", 2, 2, (1, 2))
    pol_ok, _ = verify_policy(b.G, b.H, b.r, registered_policy("thm2", (2, 2, (1, 2))))
    notes.append(f"{b.name} r={b.r} policy={pol_ok} ({time.perf_counter() - t0:.2f}s)")
    return pol_ok, "; ".join(notes), files


def run_paper_suite(level: str = "core", out_dir: str | Path | None = None,
                    sabotage_p0: int | None = None, seed: int = 2024, progress=None) -> SuiteReport:
    """Run rows 1..8 (``core``) or 1..9 (``extended``).

    ``sabotage_p0`` drops that literal from the first inner predicate of the
    depth-(m+3) sentence, which must make row 4 fail with a counterexample.
    ``progress`` is called with each finished row.
    """
    if level not in ("core", "extended"):
        raise ValueError("level must be 'core' or 'extended'")
    art = _Artifacts(out_dir)
    plan = [
        (1, "P3+mK1 lower bounds", lambda: check_thm1_2(art)),
        (2, "almost-multipartite lower bounds", lambda: check_thm2(art)),
        (3, "five-vertex lower bounds", lambda: check_thm3(art)),
        (4, "P3+K1+H upper bounds", lambda: check_thm1_1(art, sabotage_p0)),
        (5, "general lower bound table", lambda: check_bound_table(art)),
        (6, "enumeration counts", lambda: check_enumeration(art)),
        (7, "game/logic consistency battery", lambda: check_battery(art, seed)),
        (8, "mutation sensitivity", lambda: check_mutation(art)),
    ]
    if level == "extended":
        plan.append((9, "extended ground truth", lambda: check_extended(art)))
    rows = []
    for num, name, fn in plan:
        t0 = time.perf_counter()
        try:
            passed, detail, files = fn()
        except Exception as exc:  # a crashing row is a failing row
            passed, detail, files = False, f"{type(exc).__name__}: {exc}", []
        row = SuiteRow(num, name, bool(passed), time.perf_counter() - t0, detail, files)
        rows.append(row)
        if progress:
            progress(row)
    report = SuiteReport(level, rows)
    if art.dir is not None:
        (art.dir / "report.json").write_text(report.to_json() + "\n")
        (art.dir / "report.txt").write_text(report.table() + "\n")
    return report
