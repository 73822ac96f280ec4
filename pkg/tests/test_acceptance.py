"""Acceptance criteria 1-10. Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from slowcol.decomposition import (
    FOREST,
    INDEPENDENT,
    WeightedPartition,
    acyclic_pair_partition,
    bound_multipartite_upper,
    bound_wu_lower,
    composite_painter,
    partition_degenerate,
    u_r,
)
from slowcol.game import lister_connected_random, lister_random, play
from slowcol.generators import (
    gen_c4_box_path,
    gen_complete,
    gen_complete_multipartite,
    gen_disjoint_union,
    gen_maximal_outerplanar,
    gen_maximal_planar,
    gen_path,
    gen_random_graph,
    gen_star,
    gen_two_forest_graph,
)
from slowcol.graph import acyclic_coloring, degeneracy, induced_subgraph
from slowcol.harness import partitions_of
from slowcol.potential import FOURCOL, OUTERPLANAR, good_coloring, painter_potential
from slowcol.solver import lister_optimal, painter_optimal, sum_color_cost

from oracles import connected_sample, good_coloring_ok, induces_forest, peel_degeneracy, phi_oracle


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


def test_criterion_01_closed_forms(report):
    bad = []
    for n in range(1, 7):
        if sum_color_cost(gen_complete(n)) != n * (n + 1) // 2:
            bad.append(f"K{n}")
    for n in range(1, 13):
        if sum_color_cost(gen_path(n)) != 3 * n // 2:
            bad.append(f"P{n}")
    for n in range(2, 13):
        if sum_color_cost(gen_star(n)) != n + u_r(n - 1):
            bad.append(f"K1,{n - 1}")
    report(1, not bad, f"complete, path and star closed forms; mismatches {bad}")


def test_criterion_02_c4_box_path(report):
    got = [sum_color_cost(gen_c4_box_path(k)) for k in (2, 3)]
    report(2, got == [13, 20], f"s(C4xP2), s(C4xP3) = {got}, expected [13, 20]")


def test_criterion_03_monotone_and_additive(report):
    rng = np.random.default_rng(3)
    mono_bad = 0
    for _ in range(200):
        n = int(rng.integers(1, 10))
        G = gen_random_graph(n, float(rng.random()), int(rng.integers(2**32)))
        keep = [v for v in range(n) if rng.random() < 0.6]
        H, _ = induced_subgraph(G, keep)
        mono_bad += sum_color_cost(H) > sum_color_cost(G)
    add_bad = 0
    for _ in range(100):
        a, b = (gen_random_graph(int(rng.integers(1, 7)), float(rng.random()), int(rng.integers(2**32))) for _ in range(2))
        add_bad += sum_color_cost(gen_disjoint_union([a, b])) != sum_color_cost(a) + sum_color_cost(b)
    report(3, mono_bad == add_bad == 0, f"200 induced pairs ({mono_bad} failures), 100 unions ({add_bad} failures)")


def test_criterion_04_composite_multipartite(report):
    count, bad = 0, []
    for n in range(1, 12):
        for sizes in partitions_of(n):
            G = gen_complete_multipartite(*sizes)
            parts = [frozenset(p) for p in G.meta["parts"]]
            painter = composite_painter(G, WeightedPartition(parts, [INDEPENDENT] * len(parts)))
            score = play(G, lister_optimal(G), painter).final_score
            upper = math.floor(bound_multipartite_upper(*sizes) + 1e-9)
            s = sum_color_cost(G)
            count += 1
            if score > upper or bound_wu_lower(*sizes) > s:
                bad.append(sizes)
    report(4, not bad, f"{count} complete multipartite graphs with n <= 11; failures {bad}")


def test_criterion_05_composite_forests(report):
    rng = np.random.default_rng(5)
    bad = 0
    for _ in range(100):
        n = int(rng.integers(2, 11))
        G, parts = gen_two_forest_graph(n, int(rng.integers(2**32)), float(rng.random()))
        assert len(parts) <= 2 and all(induces_forest(G, p) for p in parts)
        partition = WeightedPartition(parts, [FOREST] * len(parts))
        score = play(G, lister_optimal(G), composite_painter(G, partition)).final_score
        eq1 = math.floor(partition.eq1() + 1e-9)
        bad += not (score <= eq1 <= 3 * n)
    report(5, bad == 0, f"100 two-forest graphs vs optimal Lister; {bad} failures")


def _count_rounds(spec, graphs, listers):
    rounds = violations = 0
    for G in graphs:
        for lister in listers:
            trace = play(G, lister, painter_potential(spec))
            alive = set(range(G.n))
            for r in trace.rounds:
                before = phi_oracle(G, spec.name, alive)
                alive -= r.colored
                rounds += 1
                violations += len(r.marked) > before - phi_oracle(G, spec.name, alive)
    return rounds, violations


def test_criterion_06_potential_fourcol(report):
    bad = []
    for n in range(4, 12):
        for seed in range(3):
            G = gen_maximal_planar(n, 100 * n + seed)
            score = play(G, lister_optimal(G), painter_potential(FOURCOL)).final_score
            if score > (8 * n + 3 * G.m) // 5:
                bad.append((n, seed, score))
    rng = np.random.default_rng(6)
    graphs = [gen_maximal_planar(int(rng.integers(4, 61)), s) for s in range(40)]
    listers = [lister_random(1, 0.1), lister_random(2, 0.3), lister_random(3, 0.7), lister_connected_random(4)]
    rounds, violations = _count_rounds(FOURCOL, graphs, listers)
    ok = not bad and violations == 0 and rounds >= 1000
    report(6, ok, f"(a) optimal Lister failures {bad}; (b,c) {rounds} rounds, {violations} drop violations, no TheoryViolation")


def test_criterion_07_potential_outerplanar(report):
    bad = []
    for n in range(3, 13):
        for seed in range(3):
            G = gen_maximal_outerplanar(n, 100 * n + seed)
            phi = phi_oracle(G, OUTERPLANAR.name, range(n))
            score = play(G, lister_optimal(G), painter_potential(OUTERPLANAR)).final_score
            if score > math.floor(phi) or not phi < Fraction(7, 3) * n:
                bad.append((n, seed, score))
    rng = np.random.default_rng(7)
    graphs = [gen_maximal_outerplanar(int(rng.integers(100, 301)), s) for s in range(60)]
    listers = [lister_random(1, 0.05), lister_random(2, 0.2), lister_random(3, 0.6), lister_connected_random(4)]
    rounds, violations = _count_rounds(OUTERPLANAR, graphs, listers)
    ok = not bad and violations == 0 and rounds >= 10_000
    report(7, ok, f"(a) optimal Lister failures {bad}; (b) {rounds} rounds, {violations} drop violations")


def test_criterion_08_good_coloring(report):
    rng = np.random.default_rng(8)
    bad = 0
    for k, gen in ((4, gen_maximal_planar), (3, gen_maximal_outerplanar)):
        for i in range(500):
            n = int(rng.integers(3, 41))
            G = gen(n, int(rng.integers(2**32)))
            H, _ = induced_subgraph(G, [v for v in range(n) if rng.random() < 0.7] or [0])
            M = connected_sample(H, rng)
            bad += not good_coloring_ok(H, M, good_coloring(H, M, k).colors, k)
    report(8, bad == 0, f"1000 connected marked sets (500 planar k=4, 500 outerplanar k=3); {bad} failures")


def test_criterion_09_partitions(report):
    rng = np.random.default_rng(9)
    bad_degen = bad_acyc = 0
    acyc = 0
    for _ in range(200):
        n = int(rng.integers(1, 16))
        G = gen_random_graph(n, float(rng.random()) * 0.6, int(rng.integers(2**32)))
        k = degeneracy(G)
        t = int(rng.integers(1, k + 2))
        targets = [int(x) for x in rng.multinomial(k + 1 - t, [1 / t] * t)]
        parts = partition_degenerate(G, targets)
        covered = sorted(v for p in parts for v in p) == list(range(n))
        bad_degen += not covered or any(peel_degeneracy(G, p) > kt for p, kt in zip(parts, targets))
        if n <= 10:
            col = next(c for c in (acyclic_coloring(G, j) for j in range(1, n + 2)) if c is not None)
            ps, _ = acyclic_pair_partition(G, col)
            acyc += 1
            bad_acyc += not all(induces_forest(G, p) for p in ps)
    report(9, bad_degen == bad_acyc == 0, f"200 degenerate splits ({bad_degen} failures), {acyc} acyclic pairings ({bad_acyc} failures)")


def test_criterion_10_disjoint_cliques(report):
    bad = []
    for k in (2, 3):
        for copies in range(1, 12 // (k + 1) + 1):
            G = gen_disjoint_union([gen_complete(k + 1)] * copies)
            score = play(G, lister_optimal(G), painter_optimal(G)).final_score
            if Fraction(score) != (Fraction(k, 2) + 1) * G.n:
                bad.append((k, copies, score))
    report(10, not bad, f"disjoint K3 and K4 copies up to n = 12; mismatches {bad}")
