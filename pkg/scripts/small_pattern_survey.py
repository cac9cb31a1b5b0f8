"""For every pattern on 3..4 vertices: the general lower bound, the depth of
the trivial sentence, and whether a small pair certifies depth >= v(F) - 1."""

import argparse

from efdepth.cert import general_lower_bound, search_pair
from efdepth.formats import encode_graph6
from efdepth.iso import enumerate_up_to_iso


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6, help="largest host size searched")
    ap.add_argument("--budget", type=int, default=5000, help="games per pattern")
    args = ap.parse_args()
    print("pattern  v  e  bound  bound(c)  lower-cert(r=v-2)")
    for n in (3, 4):
        for F in enumerate_up_to_iso(n):
            res = search_pair(F, n - 2, args.max_n, args.budget)
            found = "yes" if res.certificate else ("budget" if res.budget_exhausted else "no")
            print(f"{encode_graph6(F).decode():7}  {F.n}  {F.num_edges}  {general_lower_bound(F)[1]:5}  "
                  f"{general_lower_bound(F, True)[1]:8}  {found}")


if __name__ == "__main__":
    main()
