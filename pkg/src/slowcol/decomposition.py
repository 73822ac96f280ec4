"""Vertex-partition Painter strategies and closed-form upper/lower bounds.

The composite strategy routes each mark to one part V_i of a partition, chosen
so that |M & V_i| / |M| >= w_i with w_i = sqrt(c_i |V_i|) / sum_j sqrt(c_j |V_j|),
and plays an optimal sub-game there. If each part satisfies s(G[V_i]) <= c_i |V_i|
the whole game scores at most (sum_i sqrt(c_i |V_i|))**2.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .game import GreedyPainter, Painter
from .graph import (
    Coloring,
    Graph,
    degeneracy,
    degeneracy_ordering,
    induced_subgraph,
    is_acyclic_coloring,
    is_forest,
)
from .solver import default_cap, painter_optimal

FOREST = Fraction(3, 2)
INDEPENDENT = Fraction(1)


def complete_coefficient(r: int) -> Fraction:
    """c for K_r: s(K_r) = r(r+1)/2 = ((r+1)/2) r."""
    return Fraction(r + 1, 2)


class PreconditionViolated(ValueError):
    pass


@dataclass
class WeightedPartition:
    parts: list[frozenset[int]]
    coefficients: list[Fraction]
    weights: list[float] = field(init=False)

    def __post_init__(self):
        if len(self.parts) != len(self.coefficients):
            raise ValueError("one coefficient per part")
        keep = [(p, Fraction(c)) for p, c in zip(self.parts, self.coefficients) if p]
        if any(c <= 0 for _, c in keep):
            raise ValueError("coefficients must be positive")
        self.parts = [p for p, _ in keep]
        self.coefficients = [c for _, c in keep]
        roots = [math.sqrt(c * len(p)) for p, c in keep]
        total = sum(roots)
        self.weights = [r / total for r in roots]

    @property
    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def check_partition(self, G: Graph) -> None:
        seen: set[int] = set()
        for p in self.parts:
            if seen & p:
                raise PreconditionViolated("parts overlap")
            seen |= p
        if seen != set(range(G.n)):
            raise PreconditionViolated("parts do not cover V(G)")

    def eq1(self) -> float:
        return bound_eq1(self.coefficients, self.sizes)


def default_sub_painter(H: Graph) -> tuple[Painter, bool]:
    """Optimal painter when the part fits the solver, greedy otherwise.
    The flag reports whether the fallback was used."""
    if H.n <= default_cap():
        return painter_optimal(H), False
    return GreedyPainter(), True


class CompositePainter(Painter):
    name = "composite"

    def __init__(self, partition: WeightedPartition, sub_painter_factory: Callable = default_sub_painter):
        self.partition = partition
        self.factory = sub_painter_factory

    def start(self, G):
        super().start(G)
        self.partition.check_partition(G)
        self.subs = []
        self.fallback = False
        for part in self.partition.parts:
            H, ids = induced_subgraph(G, part)
            painter, fell_back = self.factory(H)
            painter.start(H)
            self.fallback |= fell_back
            self.subs.append((H, ids, {v: i for i, v in enumerate(ids)}, painter))
        self._root_sum = sum(math.sqrt(c * s) for c, s in zip(self.partition.coefficients, self.partition.sizes))
        self.routed: list[int] = []

    def choose_part(self, M: frozenset[int]) -> int:
        # argmax of |M & V_i| / w_i, compared exactly through squares:
        # |M & V_i|^2 / (c_i |V_i|)
        hits = [len(M & p) for p in self.partition.parts]
        keys = [Fraction(h * h) / (c * len(p)) for h, c, p in zip(hits, self.partition.coefficients, self.partition.parts)]
        i = max(range(len(keys)), key=lambda j: (keys[j], -j))
        assert hits[i] > 0
        c, s = self.partition.coefficients[i], len(self.partition.parts[i])
        assert hits[i] * self._root_sum >= len(M) * math.sqrt(c * s) * (1 - 1e-9)
        return i

    def respond(self, uncolored, marked, history):
        i = self.choose_part(marked)
        H, ids, index, painter = self.subs[i]
        part = self.partition.parts[i]
        sub_U = frozenset(index[v] for v in uncolored & part)
        sub_M = frozenset(index[v] for v in marked & part)
        X = painter.respond(sub_U, sub_M, ())
        self.routed.append(i)
        return frozenset(ids[x] for x in X)


def composite_painter(G: Graph, partition: WeightedPartition, sub_painter_factory: Callable = default_sub_painter) -> CompositePainter:
    partition.check_partition(G)
    return CompositePainter(partition, sub_painter_factory)


def partition_degenerate(G: Graph, targets: Sequence[int]) -> list[frozenset[int]]:
    """Split V(G) so that part i induces a targets[i]-degenerate graph; needs
    sum(k_i + 1) >= degeneracy(G) + 1."""
    ordering = degeneracy_ordering(G)
    if sum(k + 1 for k in targets) < ordering.k + 1:
        raise PreconditionViolated(f"targets {list(targets)} too small for degeneracy {ordering.k}")
    parts: list[set[int]] = [set() for _ in targets]
    for v in ordering.order:
        for i, k in enumerate(targets):
            if len(G.adj[v] & parts[i]) <= k:
                parts[i].add(v)
                break
        else:
            raise AssertionError("no part accepts vertex; ordering is not a k-ordering")
    out = [frozenset(p) for p in parts]
    for p, k in zip(out, targets):
        H, _ = induced_subgraph(G, p)
        assert degeneracy(H) <= k
    return out


def forest_partition(G: Graph) -> tuple[list[frozenset[int]], list[Fraction]]:
    """ceil((k+1)/2) parts: forests, plus one independent set when k is even."""
    k = degeneracy(G)
    if k % 2:
        targets = [1] * ((k + 1) // 2)
    else:
        targets = [1] * (k // 2) + [0]
    parts = partition_degenerate(G, targets)
    coeffs = [FOREST if t == 1 else INDEPENDENT for t in targets]
    for p, t in zip(parts, targets):
        assert is_forest(G, p) if t == 1 else G.is_independent(p)
    return parts, coeffs


def acyclic_pair_partition(G: Graph, coloring: Coloring) -> tuple[list[frozenset[int]], list[Fraction]]:
    """Pair color classes of an acyclic coloring into induced forests; for odd
    k the smallest class stays alone as an independent part."""
    if not is_acyclic_coloring(G, coloring):
        raise PreconditionViolated("coloring is not a proper acyclic coloring")
    classes = sorted(coloring.classes(), key=lambda c: (-len(c), min(c, default=G.n)))
    parts, coeffs = [], []
    if len(classes) % 2:
        smallest = classes.pop()
    else:
        smallest = None
    for a, b in zip(classes[::2], classes[1::2]):
        assert is_forest(G, a | b)
        parts.append(a | b)
        coeffs.append(FOREST)
    if smallest is not None:
        parts.append(smallest)
        coeffs.append(INDEPENDENT)
    return parts, coeffs


# ---- closed-form bounds ----------------------------------------------------


def bound_eq1(c: Sequence, sizes: Sequence[int]) -> float:
    """(sum_i sqrt(c_i |V_i|))**2"""
    return sum(math.sqrt(Fraction(ci) * s) for ci, s in zip(c, sizes)) ** 2


def bound_eq2(c: Sequence, n: int) -> Fraction:
    """(sum_i c_i) n"""
    return sum((Fraction(ci) for ci in c), Fraction(0)) * n


def bound_gamma(c_A, c_B, size_A: int, size_B: int, gamma) -> float:
    c_A, c_B, gamma = Fraction(c_A), Fraction(c_B), Fraction(gamma)
    lo = c_A / (c_A + c_B)
    hi = Fraction(size_A, size_A + size_B)
    if not lo <= gamma <= hi:
        raise PreconditionViolated(f"gamma={gamma} outside [{lo}, {hi}]")
    return (math.sqrt(c_A * gamma) + math.sqrt(c_B * (1 - gamma))) ** 2 * (size_A + size_B)


def u_r(r: int) -> int:
    """max{t : t(t+1)/2 <= r}"""
    t = 0
    while (t + 1) * (t + 2) // 2 <= r:
        t += 1
    return t


def bound_multipartite_upper(*sizes: int) -> float:
    return sum(sizes) + 2 * sum(math.sqrt(a * b) for a, b in itertools.combinations(sizes, 2))


def bound_wu_lower(*sizes: int) -> int:
    return sum(sizes) + sum(u_r(a) * u_r(b) for a, b in itertools.combinations(sizes, 2))


def bound_wu_upper(*sizes: int) -> float:
    """Wu's sharper multipartite upper bound; calculator only, no strategy
    implemented."""
    return sum(sizes) + sum(math.sqrt(2 * a - 1) * math.sqrt(2 * b - 1) for a, b in itertools.combinations(sizes, 2))


def _need_positive(**kw):
    for name, v in kw.items():
        if v < 0:
            raise PreconditionViolated(f"{name} must be nonnegative")


def bound_degenerate(k: int, n: int) -> Fraction:
    _need_positive(k=k, n=n)
    return Fraction(3 * k + 4 if k % 2 == 0 else 3 * k + 3, 4) * n


def bound_acyclic(k: int, n: int) -> Fraction:
    _need_positive(k=k, n=n)
    return Fraction(3 * k if k % 2 == 0 else 3 * k + 1, 4) * n


def bound_acyclic_odd(k: int, n: int) -> float:
    if k % 2 == 0 or k < 1:
        raise PreconditionViolated("needs odd k")
    return (math.sqrt(0.75) * (k - 1) + 1) ** 2 / k * n


def bound_pq(p: int, q: int, c_p, c_q, n: int) -> float:
    if p < 1 or q < 1:
        raise PreconditionViolated("p, q must be positive")
    return (math.sqrt(p * Fraction(c_p)) + math.sqrt(q * Fraction(c_q))) ** 2 / (p + q) * n


def bound_pq_sweep(r: int, c: dict[int, float]) -> float:
    """Best coefficient for r parts over all splits p + q = r (c holds the
    known coefficients for smaller counts)."""
    return min(bound_pq(p, r - p, c[p], c[r - p], 1) for p in range(1, r))


def bound_two_forests(n: int) -> Fraction:
    return 2 * FOREST * n


def bound_fourcol(n: int, m: int) -> Fraction:
    return Fraction(8 * n + 3 * m, 5)


def bound_outerplanar(n: int) -> Fraction:
    return Fraction(7, 3) * n


def bound_report(G: Graph, partition: WeightedPartition | None = None) -> dict:
    """Every bound that applies to G from what can be computed at desk scale."""
    n, m = G.n, G.m
    k = degeneracy(G)
    rep: dict = {"n": n, "m": m, "degeneracy": k, "degenerate": float(bound_degenerate(k, n))}
    if partition is not None:
        rep["eq1"] = partition.eq1()
        rep["eq2"] = float(bound_eq2(partition.coefficients, n))
        if len(partition.parts) == 2:
            (a, b), (ca, cb) = partition.sizes, partition.coefficients
            if ca * b > cb * a:
                a, b, ca, cb = b, a, cb, ca
            rep["gamma_best"] = bound_gamma(ca, cb, a, b, Fraction(a, a + b))
    parts = G.meta.get("parts") if G.meta.get("family") == "multipartite" else None
    if parts:
        sizes = [len(p) for p in parts]
        rep["multipartite_upper"] = bound_multipartite_upper(*sizes)
        rep["wu_lower"] = bound_wu_lower(*sizes)
        rep["wu_upper_no_strategy"] = bound_wu_upper(*sizes)
    if "planar" in G.tags():
        rep["fourcol"] = float(bound_fourcol(n, m))
        rep["acyclic_odd_5"] = bound_acyclic_odd(5, n)
    if "outerplanar" in G.tags():
        rep["outerplanar"] = float(bound_outerplanar(n))
    for key, v in rep.items():
        if isinstance(v, float) and key not in ("n", "m", "degeneracy") and n:
            if v < n - 1e-9:
                warnings.warn(f"bound {key}={v} below n={n}")
    return rep
