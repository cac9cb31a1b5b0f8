"""Exact game values around the registered instances, one round past their range."""

import argparse
import json
import time

from efdepth import graph as g
from efdepth.game import registered_policy, solve, verify_policy
from efdepth.instances import gen_paper_instance


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, round(time.perf_counter() - t0, 3)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-policy", action="store_true", help="skip the slow five-round policy check")
    ap.add_argument("-o", "--output", default="ground_truth.json")
    args = ap.parse_args()

    rows = []
    G, H = g.union(g.cycle(5), g.cycle(6)), g.copies(2, g.cycle(6))
    for r in (3, 4):
        out, secs = timed(lambda: solve(G, H, r))
        rows.append({"pair": "C5+C6 vs 2C6", "rounds": r, "winner": out.winner.value, "seconds": secs})

    for name, params in [("thm1_2", (1,)), ("thm1_2", (2,)), ("thm1_2", (3,)), ("thm2", (1, 2, (2, 2))),
                         ("thm2", (1, 3, (1, 1, 2))), ("thm3_c5", ()), ("thm3_g41", ()),
                         ("thm3_diamond", ()), ("thm3_g311", ())]:
        b = gen_paper_instance(name, *params)
        for r in (b.r, b.r + 1):
            out, secs = timed(lambda: solve(b.G, b.H, r))
            rows.append({"pair": b.name, "rounds": r, "winner": out.winner.value, "seconds": secs})

    if not args.skip_policy:
        b = gen_paper_instance("thm2", 2, 2, (1, 2))
        (ok, _), secs = timed(lambda: verify_policy(b.G, b.H, b.r, registered_policy("thm2", b.params)))
        rows.append({"pair": b.name, "rounds": b.r, "policy_holds": ok, "seconds": secs})

    for row in rows:
        print(json.dumps(row))
    with open(args.output, "w") as fh:
        json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
