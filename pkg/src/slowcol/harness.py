"""Experiment configuration, instance/strategy factories and the verification
suites driven by ``slowcol verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .decomposition import (
    FOREST,
    INDEPENDENT,
    WeightedPartition,
    acyclic_pair_partition,
    bound_fourcol,
    bound_multipartite_upper,
    bound_wu_lower,
    composite_painter,
    forest_partition,
    partition_degenerate,
    u_r,
)
from .game import (
    GreedyPainter,
    lister_connected_random,
    lister_full,
    lister_random,
    lister_singletons,
    play,
    validate_trace,
)
from .generators import (
    gen_c4_box_path,
    gen_complete,
    gen_complete_multipartite,
    gen_disjoint_union,
    gen_maximal_outerplanar,
    gen_maximal_planar,
    gen_path,
    gen_random_graph,
    gen_random_tree,
    gen_star,
    gen_two_forest_graph,
)
from .graph import (
    Graph,
    GraphError,
    acyclic_coloring,
    degeneracy,
    induced_subgraph,
    is_forest,
    read_graph,
)
from .potential import (
    FOURCOL,
    OUTERPLANAR,
    good_coloring,
    good_coloring_problems,
    painter_potential,
    total_potential,
)
from .solver import lister_optimal, painter_optimal, sum_color_cost

FAMILIES = ("complete", "multipartite", "path", "star", "tree", "maximal-outerplanar", "maximal-planar", "c4xpath", "union", "file")
RANDOM_FAMILIES = {"tree", "maximal-outerplanar", "maximal-planar"}
PAINTERS = ("greedy", "optimal", "potential-4col", "potential-outerplanar", "composite")
LISTERS = ("full", "singletons", "random", "connected-random", "optimal")
RANDOM_LISTERS = {"random", "connected-random"}
SUITES = (
    "closed-forms",
    "monotonicity",
    "composite-multipartite",
    "composite-forests",
    "potential-4col",
    "potential-outerplanar",
    "good-coloring",
    "partitions",
)


@dataclass
class ExperimentConfig:
    family: str = "complete"
    n: int | None = None
    parts: tuple[int, ...] = ()
    seed: int | None = None
    painter: str = "greedy"
    lister: str = "full"
    p: float = 0.5
    reps: int | None = None
    cap: int | None = None
    graph_file: str | None = None
    assume_class: tuple[str, ...] = ()
    debug: bool = False
    slow: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.painter not in PAINTERS:
            raise ValueError(f"unknown painter {self.painter!r}; choose from {', '.join(PAINTERS)}")
        if self.lister not in LISTERS:
            raise ValueError(f"unknown lister {self.lister!r}; choose from {', '.join(LISTERS)}")
        needs_seed = self.family in RANDOM_FAMILIES or self.lister in RANDOM_LISTERS
        if needs_seed and self.seed is None:
            raise ValueError("a seed is required for randomized families and listers")
        if self.family == "file" and not self.graph_file:
            raise ValueError("family 'file' needs a graph file")


def build_graph(cfg: ExperimentConfig) -> Graph:
    f, n = cfg.family, cfg.n
    if f == "file":
        with open(cfg.graph_file) as fh:
            G = read_graph(fh.read())
        if cfg.assume_class:
            G = Graph(G.n, G.adj, {"tags": sorted(cfg.assume_class)})
        return G
    if f in ("multipartite", "union"):
        if not cfg.parts:
            raise ValueError(f"family {f!r} needs --parts")
        if f == "multipartite":
            return gen_complete_multipartite(*cfg.parts)
        return gen_disjoint_union(gen_complete(r) for r in cfg.parts)
    if n is None:
        raise ValueError(f"family {f!r} needs --n")
    if f == "complete":
        return gen_complete(n)
    if f == "path":
        return gen_path(n)
    if f == "star":
        return gen_star(n)
    if f == "c4xpath":
        return gen_c4_box_path(n)
    if f == "tree":
        return gen_random_tree(n, cfg.seed)
    if f == "maximal-outerplanar":
        return gen_maximal_outerplanar(n, cfg.seed)
    return gen_maximal_planar(n, cfg.seed)


def default_partition(G: Graph) -> WeightedPartition:
    parts = G.meta.get("parts") if G.meta.get("family") == "multipartite" else None
    if parts:
        return WeightedPartition([frozenset(p) for p in parts], [INDEPENDENT] * len(parts))
    ps, cs = forest_partition(G)
    return WeightedPartition(ps, cs)


def make_painter(cfg: ExperimentConfig, G: Graph, partition: WeightedPartition | None = None):
    name = cfg.painter
    if name == "greedy":
        return GreedyPainter()
    if name == "optimal":
        return painter_optimal(G, cfg.cap)
    if name == "potential-4col":
        return painter_potential(FOURCOL, debug=cfg.debug)
    if name == "potential-outerplanar":
        return painter_potential(OUTERPLANAR, debug=cfg.debug)
    return composite_painter(G, partition or default_partition(G))


def make_lister(cfg: ExperimentConfig, G: Graph):
    name = cfg.lister
    if name == "full":
        return lister_full()
    if name == "singletons":
        return lister_singletons()
    if name == "random":
        return lister_random(cfg.seed, cfg.p)
    if name == "connected-random":
        return lister_connected_random(cfg.seed)
    return lister_optimal(G, cfg.cap)


def parse_partition(text: str, n: int) -> WeightedPartition:
    """One part per line: vertex ids, optionally followed by c=<rational>."""
    parts, coeffs = [], []
    for line in text.splitlines():
        tokens = line.split()
        if not tokens:
            continue
        c = None
        ids = []
        for t in tokens:
            if t.startswith("c="):
                c = Fraction(t[2:])
            else:
                ids.append(int(t))
        if any(not 0 <= v < n for v in ids):
            raise GraphError("partition mentions a vertex outside the graph")
        parts.append(frozenset(ids))
        coeffs.append(c)
    return parts, coeffs


# ---- verification ------------------------------------------------------------


@dataclass
class Record:
    instance: str
    n: int
    m: int
    bound: str
    bound_value: float | int | str
    observed: int
    relation: str = "<="
    seed: int | None = None

    @property
    def passed(self) -> bool:
        if self.relation == "==":
            return self.observed == self.bound_value
        # scores are integers, so compare against the floor of the bound
        return self.observed <= math.floor(float(Fraction(str(self.bound_value))) + 1e-9)

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "n": self.n,
            "m": self.m,
            "bound": self.bound,
            "bound_value": self.bound_value if isinstance(self.bound_value, (int, str)) else round(self.bound_value, 12),
            "observed": self.observed,
            "relation": self.relation,
            "seed": self.seed,
            "pass": self.passed,
        }


@dataclass
class SuiteOptions:
    seed: int = 0
    reps: int | None = None
    max_n: int | None = None
    slow: bool = False


def _exact(name: str, G: Graph, expected: int, observed: int) -> Record:
    return Record(name, G.n, G.m, "exact", expected, observed, "==")


def partitions_of(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def suite_closed_forms(opt: SuiteOptions) -> list[Record]:
    top = opt.max_n or 12
    out = []
    for n in range(1, min(top, 6) + 1):
        G = gen_complete(n)
        out.append(_exact(f"K{n}", G, n * (n + 1) // 2, sum_color_cost(G)))
    for n in range(1, top + 1):
        G = gen_path(n)
        out.append(_exact(f"P{n}", G, 3 * n // 2, sum_color_cost(G)))
    for n in range(2, top + 1):
        G = gen_star(n)
        out.append(_exact(f"K1,{n - 1}", G, n + u_r(n - 1), sum_color_cost(G)))
    for k in (2, 3) if opt.slow or top >= 12 else (2,):
        G = gen_c4_box_path(k)
        out.append(_exact(f"C4xP{k}", G, 7 * G.n // 4 - 1, sum_color_cost(G)))
    for k in (2, 3):
        for copies in range(1, top // (k + 1) + 1):
            G = gen_disjoint_union([gen_complete(k + 1)] * copies)
            score = play(G, lister_optimal(G), painter_optimal(G)).final_score
            out.append(_exact(f"{copies}xK{k + 1}", G, (k + 2) * G.n // 2, score))
    return out


def suite_monotonicity(opt: SuiteOptions) -> list[Record]:
    rng = np.random.default_rng(opt.seed)
    reps = opt.reps or 200
    top = opt.max_n or 9
    out = []
    for i in range(reps):
        n = int(rng.integers(1, top + 1))
        G = gen_random_graph(n, float(rng.random()), int(rng.integers(2**32)))
        keep = [v for v in range(n) if rng.random() < 0.6]
        H, _ = induced_subgraph(G, keep)
        out.append(Record(f"mono-{i}", n, G.m, "s(G)", sum_color_cost(G), sum_color_cost(H), seed=opt.seed))
    for i in range(max(reps // 2, 1)):
        a = gen_random_graph(int(rng.integers(1, 7)), float(rng.random()), int(rng.integers(2**32)))
        b = gen_random_graph(int(rng.integers(1, 7)), float(rng.random()), int(rng.integers(2**32)))
        U = gen_disjoint_union([a, b])
        out.append(Record(f"additive-{i}", U.n, U.m, "s(G1)+s(G2)", sum_color_cost(a) + sum_color_cost(b), sum_color_cost(U), "==", opt.seed))
    return out


def suite_composite_multipartite(opt: SuiteOptions) -> list[Record]:
    top = opt.max_n or 11
    out = []
    for n in range(1, top + 1):
        for sizes in partitions_of(n):
            G = gen_complete_multipartite(*sizes)
            painter = composite_painter(G, default_partition(G))
            score = play(G, lister_optimal(G), painter).final_score
            name = "K" + ",".join(map(str, sizes))
            out.append(Record(name, n, G.m, "n+2sum sqrt(ri rj)", bound_multipartite_upper(*sizes), score))
            out.append(Record(name, n, G.m, "s(G) >= wu_lower", sum_color_cost(G), bound_wu_lower(*sizes)))
    return out


def suite_composite_forests(opt: SuiteOptions) -> list[Record]:
    rng = np.random.default_rng(opt.seed)
    top = opt.max_n or 10
    out = []
    for i in range(opt.reps or 100):
        n = int(rng.integers(2, top + 1))
        G, parts = gen_two_forest_graph(n, int(rng.integers(2**32)), float(rng.random()))
        assert all(is_forest(G, p) for p in parts)
        partition = WeightedPartition(parts, [FOREST] * len(parts))
        score = play(G, lister_optimal(G), composite_painter(G, partition)).final_score
        eq1 = partition.eq1()
        out.append(Record(f"forests-{i}", n, G.m, "eq1", eq1, score, seed=opt.seed))
        out.append(Record(f"forests-{i}", n, G.m, "3n", 3 * n, math.floor(eq1 + 1e-9), seed=opt.seed))
    return out


def _potential_games(spec, graphs, listers, name) -> list[Record]:
    out = []
    for label, G, lister in ((l, G, L) for l, G in graphs for L in listers(G)):
        trace = play(G, lister, painter_potential(spec))
        validate_trace(trace)
        phi = total_potential(G, spec).fraction()
        out.append(Record(f"{label}/{lister.name}", G.n, G.m, "Phi(G)", str(phi), trace.final_score))
    return out


def suite_potential_4col(opt: SuiteOptions) -> list[Record]:
    top = opt.max_n or 11
    out = []
    for n in range(4, top + 1):
        G = gen_maximal_planar(n, opt.seed + n)
        score = play(G, lister_optimal(G), painter_potential(FOURCOL)).final_score
        out.append(Record(f"planar-{n}", n, G.m, "(8n+3m)/5", str(bound_fourcol(n, G.m)), score, seed=opt.seed))
    graphs = [(f"planar-60-{s}", gen_maximal_planar(60, opt.seed + s)) for s in range(opt.reps or 5)]
    out += _potential_games(FOURCOL, graphs, lambda G: [lister_random(opt.seed, 0.4), lister_connected_random(opt.seed)], "4col")
    return out


def suite_potential_outerplanar(opt: SuiteOptions) -> list[Record]:
    top = opt.max_n or 12
    out = []
    for n in range(3, top + 1):
        G = gen_maximal_outerplanar(n, opt.seed + n)
        score = play(G, lister_optimal(G), painter_potential(OUTERPLANAR)).final_score
        phi = total_potential(G, OUTERPLANAR).fraction()
        out.append(Record(f"outer-{n}", n, G.m, "Phi(G)", str(phi), score, seed=opt.seed))
        # strict Phi(G) < 7n/3, checked in fifteenths
        phi15 = total_potential(G, OUTERPLANAR).num
        out.append(Record(f"outer-{n}", n, G.m, "15*Phi(G) < 35n", 35 * n - 1, phi15, seed=opt.seed))
    graphs = [(f"outer-300-{s}", gen_maximal_outerplanar(300, opt.seed + s)) for s in range(opt.reps or 5)]
    out += _potential_games(OUTERPLANAR, graphs, lambda G: [lister_random(opt.seed, 0.3), lister_connected_random(opt.seed)], "outer")
    return out


def _random_connected_subset(G: Graph, rng) -> frozenset[int]:
    start = int(rng.integers(G.n))
    target = int(rng.integers(1, G.n + 1))
    chosen = {start}
    frontier = set(G.adj[start])
    while len(chosen) < target and frontier:
        v = sorted(frontier)[int(rng.integers(len(frontier)))]
        chosen.add(v)
        frontier = (frontier | G.adj[v]) - chosen
    return frozenset(chosen)


def suite_good_coloring(opt: SuiteOptions) -> list[Record]:
    rng = np.random.default_rng(opt.seed)
    out = []
    for i in range(opt.reps or 500):
        planar = i % 2 == 0
        n = int(rng.integers(3, 41))
        s = int(rng.integers(2**32))
        G = gen_maximal_planar(n, s) if planar else gen_maximal_outerplanar(n, s)
        # thin the host first so marked sets contain tree-components
        H, _ = induced_subgraph(G, [v for v in range(n) if rng.random() < 0.7] or [0])
        M = _random_connected_subset(H, rng)
        k = 4 if planar else 3
        problems = good_coloring_problems(H, M, good_coloring(H, M, k))
        out.append(Record(f"goodcol-{i}", H.n, H.m, "problems", 0, len(problems), "==", opt.seed))
    return out


def suite_partitions(opt: SuiteOptions) -> list[Record]:
    rng = np.random.default_rng(opt.seed)
    out = []
    for i in range(opt.reps or 200):
        n = int(rng.integers(1, 16))
        G = gen_random_graph(n, float(rng.random()) * 0.6, int(rng.integers(2**32)))
        k = degeneracy(G)
        t = int(rng.integers(1, k + 2))
        targets = sorted(int(x) for x in rng.multinomial(k + 1 - t, [1 / t] * t)) if t else []
        parts = partition_degenerate(G, targets)
        worst = max(degeneracy(induced_subgraph(G, p)[0]) - kt for p, kt in zip(parts, targets))
        covered = sorted(v for p in parts for v in p) == list(range(n))
        out.append(Record(f"degen-{i}", n, G.m, "max(deg_i - k_i)", 0, worst if covered else 99, seed=opt.seed))
        if n <= 10:
            col = next(c for c in (acyclic_coloring(G, k) for k in range(1, n + 2)) if c is not None)
            ps, _ = acyclic_pair_partition(G, col)
            bad = sum(not is_forest(G, p) for p in ps)
            out.append(Record(f"acyclic-{i}", n, G.m, "non-forest parts", 0, bad, "==", opt.seed))
    return out


SUITE_FUNCS: dict[str, Callable[[SuiteOptions], list[Record]]] = {
    "closed-forms": suite_closed_forms,
    "monotonicity": suite_monotonicity,
    "composite-multipartite": suite_composite_multipartite,
    "composite-forests": suite_composite_forests,
    "potential-4col": suite_potential_4col,
    "potential-outerplanar": suite_potential_outerplanar,
    "good-coloring": suite_good_coloring,
    "partitions": suite_partitions,
}


@dataclass
class VerificationReport:
    suite: str
    records: list[Record]
    seed: int

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.passed]

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "instances": len(self.records),
            "failures": len(self.failures),
            "pass": self.passed,
            "seed": self.seed,
        }


def run_suite(name: str, opt: SuiteOptions) -> VerificationReport:
    if name not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    records = SUITE_FUNCS[name](opt)
    return VerificationReport(name, sorted(records, key=lambda r: (r.instance, r.bound)), opt.seed)
