"""Exact s(G) for small graphs next to the closed-form bounds that apply.

    python scripts/small_graph_table.py [--csv]
"""

import argparse
import csv
import sys

from slowcol.decomposition import bound_degenerate, bound_fourcol, bound_multipartite_upper, bound_wu_lower
from slowcol.generators import (
    gen_c4_box_path,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_maximal_outerplanar,
    gen_maximal_planar,
    gen_path,
    gen_star,
)
from slowcol.graph import degeneracy
from slowcol.solver import sum_color_cost


def rows():
    cases = [(f"K{n}", gen_complete(n)) for n in range(1, 7)]
    cases += [(f"P{n}", gen_path(n)) for n in (4, 8, 12)]
    cases += [(f"C{n}", gen_cycle(n)) for n in (4, 5, 6, 9)]
    cases += [(f"K1,{n - 1}", gen_star(n)) for n in (4, 8, 12)]
    cases += [("C4xP2", gen_c4_box_path(2)), ("C4xP3", gen_c4_box_path(3))]
    cases += [("K" + ",".join(map(str, s)), gen_complete_multipartite(*s)) for s in [(2, 2), (3, 3), (2, 2, 2), (4, 4, 3)]]
    cases += [(f"outer{n}", gen_maximal_outerplanar(n, n)) for n in (6, 9, 12)]
    cases += [(f"planar{n}", gen_maximal_planar(n, n)) for n in (6, 9, 12)]
    for name, G in cases:
        row = {"graph": name, "n": G.n, "m": G.m, "s": sum_color_cost(G), "degenerate": float(bound_degenerate(degeneracy(G), G.n))}
        if "planar" in G.tags():
            row["fourcol"] = float(bound_fourcol(G.n, G.m))
        if "outerplanar" in G.tags():
            row["outerplanar"] = round(7 * G.n / 3, 3)
        if G.meta.get("family") == "multipartite":
            sizes = [len(p) for p in G.meta["parts"]]
            row["multipartite"] = round(bound_multipartite_upper(*sizes), 3)
            row["wu_lower"] = bound_wu_lower(*sizes)
        yield row


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()
    data = list(rows())
    cols = ["graph", "n", "m", "s", "degenerate", "fourcol", "outerplanar", "multipartite", "wu_lower"]
    if args.csv:
        w = csv.DictWriter(sys.stdout, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(data)
        return
    print(" | ".join(cols))
    for r in data:
        print(" | ".join(str(r.get(c, "")) for c in cols))


if __name__ == "__main__":
    main()
