import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from slowcol.decomposition import (
    FOREST,
    INDEPENDENT,
    PreconditionViolated,
    WeightedPartition,
    acyclic_pair_partition,
    bound_acyclic,
    bound_acyclic_odd,
    bound_degenerate,
    bound_eq1,
    bound_eq2,
    bound_fourcol,
    bound_gamma,
    bound_multipartite_upper,
    bound_outerplanar,
    bound_pq,
    bound_pq_sweep,
    bound_report,
    bound_wu_lower,
    bound_wu_upper,
    complete_coefficient,
    composite_painter,
    forest_partition,
    partition_degenerate,
    u_r,
)
from slowcol.game import play
from slowcol.generators import gen_complete, gen_complete_multipartite, gen_cycle, gen_maximal_planar, gen_two_forest_graph
from slowcol.graph import Coloring, acyclic_coloring, degeneracy, induced_subgraph, is_forest
from slowcol.harness import default_partition
from slowcol.solver import lister_optimal, sum_color_cost, worst_case_score

from conftest import graphs


def test_u_r_values():
    assert [u_r(r) for r in range(1, 11)] == [1, 1, 2, 2, 2, 3, 3, 3, 3, 4]


def test_closed_form_values():
    assert bound_fourcol(100, 294) == Fraction(1682, 5)
    assert float(bound_fourcol(100, 294)) == pytest.approx(336.4)
    assert bound_outerplanar(30) == 70
    assert bound_acyclic_odd(5, 1000) < 3985.7
    assert bound_degenerate(1, 4) == 6
    assert bound_degenerate(0, 4) == 4
    assert bound_acyclic(2, 4) == 6
    assert bound_multipartite_upper(1, 1) == pytest.approx(4)
    assert bound_wu_lower(1, 1) == 3


def test_complete_coefficient_is_tight():
    for r in range(1, 6):
        assert complete_coefficient(r) * r == sum_color_cost(gen_complete(r))


@given(st.lists(st.tuples(st.integers(1, 20), st.fractions(Fraction(1, 2), 5)), min_size=1, max_size=5))
def test_eq1_never_exceeds_eq2(parts):
    sizes = [s for s, _ in parts]
    c = [ci for _, ci in parts]
    assert bound_eq1(c, sizes) <= float(bound_eq2(c, sum(sizes))) * (1 + 1e-12)


@given(st.integers(1, 30), st.integers(1, 30), st.fractions(1, 4), st.fractions(1, 4))
def test_gamma_interpolates(a, b, ca, cb):
    # order so the window [cA/(cA+cB), a/(a+b)] is nonempty
    if ca * b > cb * a:
        a, b, ca, cb = b, a, cb, ca
    n = a + b
    hi = bound_gamma(ca, cb, a, b, Fraction(a, n))
    assert hi == pytest.approx(bound_eq1([ca, cb], [a, b]))
    lo = bound_gamma(ca, cb, a, b, ca / (ca + cb))
    assert lo == pytest.approx(float((ca + cb) * n))
    with pytest.raises(PreconditionViolated):
        bound_gamma(ca, cb, a, b, Fraction(a, n) + 1)


def test_pq_bounds():
    # two classes with coefficient c each: (2 sqrt(c))^2 / 2 = 2c
    assert bound_pq(1, 1, FOREST, FOREST, 10) == pytest.approx(30)
    # coefficients proportional to the class count collapse to c0 (p + q)
    assert bound_pq(2, 3, 2 * 0.7, 3 * 0.7, 10) == pytest.approx(0.7 * 5 * 10)
    assert bound_pq_sweep(3, {1: 1.5, 2: 1.5}) == pytest.approx(bound_pq(1, 2, 1.5, 1.5, 1))
    with pytest.raises(PreconditionViolated):
        bound_pq(0, 1, 1, 1, 1)


def test_wu_upper_between():
    for sizes in [(2, 3), (3, 3, 3), (4, 1)]:
        assert bound_wu_lower(*sizes) <= bound_wu_upper(*sizes) <= bound_multipartite_upper(*sizes) + 1e-9


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.data())
def test_choose_part_meets_weight(sizes, data):
    G = gen_complete_multipartite(*sizes)
    painter = composite_painter(G, default_partition(G))
    painter.start(G)
    M = data.draw(st.frozensets(st.integers(0, G.n - 1), min_size=1))
    i = painter.choose_part(M)
    w = painter.partition.weights[i]
    assert len(M & painter.partition.parts[i]) >= w * len(M) - 1e-9


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_composite_worst_case_multipartite(sizes):
    G = gen_complete_multipartite(*sizes)
    if G.n > 7:
        return
    painter = composite_painter(G, default_partition(G))
    assert worst_case_score(G, painter, cap=7) <= math.floor(bound_multipartite_upper(*sizes) + 1e-9)


@given(st.integers(2, 7), st.integers(0, 2**31))
def test_composite_worst_case_two_forests(n, seed):
    G, parts = gen_two_forest_graph(n, seed)
    partition = WeightedPartition(parts, [FOREST] * len(parts))
    painter = composite_painter(G, partition)
    assert worst_case_score(G, painter, cap=7) <= math.floor(partition.eq1() + 1e-9)


def test_composite_records_routing():
    G = gen_complete_multipartite(2, 3)
    painter = composite_painter(G, default_partition(G))
    play(G, lister_optimal(G), painter)
    assert painter.routed and not painter.fallback


def test_partition_validation():
    G = gen_complete(3)
    with pytest.raises(PreconditionViolated):
        composite_painter(G, WeightedPartition([frozenset({0, 1})], [1]))
    with pytest.raises(PreconditionViolated):
        composite_painter(G, WeightedPartition([frozenset({0, 1}), frozenset({1, 2})], [1, 1]))
    with pytest.raises(ValueError):
        WeightedPartition([frozenset({0})], [0])


@given(graphs(min_n=1, max_n=12), st.data())
def test_partition_degenerate(G, data):
    k = degeneracy(G)
    targets = data.draw(st.lists(st.integers(0, k), min_size=1, max_size=k + 1))
    if sum(t + 1 for t in targets) < k + 1:
        with pytest.raises(PreconditionViolated):
            partition_degenerate(G, targets)
        return
    parts = partition_degenerate(G, targets)
    assert sorted(v for p in parts for v in p) == list(range(G.n))
    for p, t in zip(parts, targets):
        assert degeneracy(induced_subgraph(G, p)[0]) <= t


@given(graphs(min_n=1, max_n=12))
def test_forest_partition(G):
    parts, coeffs = forest_partition(G)
    assert len(parts) == (degeneracy(G) + 2) // 2
    for p, c in zip(parts, coeffs):
        assert is_forest(G, p) if c == FOREST else (c == INDEPENDENT and G.is_independent(p))


def test_acyclic_pair_partition():
    G = gen_maximal_planar(9, 1)
    for k in range(1, 8):
        col = acyclic_coloring(G, k)
        if col is not None:
            break
    parts, coeffs = acyclic_pair_partition(G, col)
    assert all(is_forest(G, p) for p in parts)
    assert len(parts) == (k + 1) // 2
    bad = Coloring({0: 0, 1: 1, 2: 0, 3: 1}, 2)
    with pytest.raises(PreconditionViolated):
        acyclic_pair_partition(gen_cycle(4), bad)


def test_bound_report_keys():
    G = gen_maximal_planar(20, 0)
    rep = bound_report(G)
    assert rep["fourcol"] == pytest.approx(float(bound_fourcol(20, 54)))
    M = gen_complete_multipartite(2, 2)
    rep = bound_report(M, default_partition(M))
    assert {"multipartite_upper", "wu_lower", "eq1", "eq2", "gamma_best"} <= set(rep)
