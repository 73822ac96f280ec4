"""How much of the potential the Lister actually collects against the two
potential painters, by Lister type. Prints mean score / Phi(G) and the
smallest per-round slack seen.

    python scripts/potential_slack.py --n 80 --reps 20 --seed 0
"""

import argparse
from fractions import Fraction

import numpy as np

from slowcol.game import lister_connected_random, lister_full, lister_random, lister_singletons, play
from slowcol.generators import gen_maximal_outerplanar, gen_maximal_planar
from slowcol.potential import FOURCOL, OUTERPLANAR, painter_potential, potential_drop, total_potential
from slowcol.graph import induced_subgraph


def min_round_slack(G, spec, trace):
    alive = set(range(G.n))
    slack = None
    for r in trace.rounds:
        H, ids = induced_subgraph(G, alive)
        index = {v: i for i, v in enumerate(ids)}
        drop = potential_drop(H, spec, [index[v] for v in r.colored]).fraction()
        s = drop - len(r.marked)
        slack = s if slack is None else min(slack, s)
        alive -= r.colored
    return slack


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=80)
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    listers = {
        "full": lambda s: lister_full(),
        "singletons": lambda s: lister_singletons(),
        "random(0.2)": lambda s: lister_random(s, 0.2),
        "random(0.6)": lambda s: lister_random(s, 0.6),
        "connected-random": lambda s: lister_connected_random(s),
    }
    print("class | lister | mean score/Phi | min round slack")
    for spec, gen in ((FOURCOL, gen_maximal_planar), (OUTERPLANAR, gen_maximal_outerplanar)):
        for name, make in listers.items():
            ratios, slack = [], None
            for _ in range(args.reps):
                s = int(rng.integers(2**32))
                G = gen(args.n, s)
                t = play(G, make(s), painter_potential(spec))
                ratios.append(Fraction(t.final_score) / total_potential(G, spec).fraction())
                m = min_round_slack(G, spec, t)
                slack = m if slack is None else min(slack, m)
            print(f"{spec.name} | {name} | {float(sum(ratios) / len(ratios)):.4f} | {slack}")


if __name__ == "__main__":
    main()
