"""Exact value of the slow-coloring game by memoized minimax over uncolored sets.

    value(0) = 0
    value(U) = max over nonempty M <= U of |M| + min over maximal independent
               X of G[M] of value(U - X)

Painter is restricted to maximal independent subsets of the mark: coloring
more never raises the value of the remaining game. States are bitmasks over
the fixed vertex set; the table has 2**n entries and the recurrence touches
3**n (U, M) pairs, each against the padded list of maximal independent sets
of G[M]. Default cap is 13 vertices (override with SLOWCOL_CAP); each extra
vertex roughly triples the work.
"""

from __future__ import annotations

import functools
import os

import numpy as np

from .game import CapExceeded, Lister, Painter
from .graph import Graph

DEFAULT_CAP = 13


def default_cap() -> int:
    return int(os.environ.get("SLOWCOL_CAP", DEFAULT_CAP))


class UncoveredState(KeyError):
    pass


def to_mask(S) -> int:
    m = 0
    for v in S:
        m |= 1 << v
    return m


def from_mask(m: int) -> frozenset[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return frozenset(out)


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(sorted(from_mask(mask)))


def _submasks(U: int, n: int) -> np.ndarray:
    """All nonempty submasks of U, in increasing numeric order."""
    bits = [b for b in range(n) if U >> b & 1]
    idx = np.arange(1, 1 << len(bits), dtype=np.int64)
    subs = np.zeros_like(idx)
    for j, b in enumerate(bits):
        subs |= ((idx >> j) & 1) << b
    return subs


class Solver:
    """Value table for one graph; also extracts optimal moves for both sides."""

    def __init__(self, G: Graph, cap: int | None = None):
        cap = default_cap() if cap is None else cap
        if G.n > cap:
            raise CapExceeded(f"exact solver capped at {cap} vertices, graph has {G.n}")
        self.G = G
        self.n = G.n
        self.full = (1 << G.n) - 1
        self.nbr = [to_mask(G.adj[v]) for v in range(G.n)]
        self.mis = self._maximal_independent_sets()
        self.popcount = np.array([bin(m).count("1") for m in range(1 << self.n)], dtype=np.int64)
        self.values = self._solve()

    def _maximal_independent_sets(self) -> list[list[int]]:
        size = 1 << self.n
        mis: list[list[int]] = [[0]] + [None] * (size - 1)  # type: ignore[list-item]
        for M in range(1, size):
            low = M & -M
            v = low.bit_length() - 1
            with_v = [x | low for x in mis[M & ~low & ~self.nbr[v]]]
            # sets avoiding v must be blocked from adding it
            without_v = [x for x in mis[M & ~low] if x & self.nbr[v]]
            mis[M] = with_v + without_v
        return mis

    def _solve(self) -> np.ndarray:
        size = 1 << self.n
        width = max(len(x) for x in self.mis)
        pad = np.empty((size, width), dtype=np.int64)
        for M, sets in enumerate(self.mis):
            pad[M, : len(sets)] = sets
            pad[M, len(sets):] = sets[0]
        self._pad = pad
        values = np.zeros(size, dtype=np.int64)
        for U in np.argsort(self.popcount, kind="stable")[1:]:
            U = int(U)
            subs = _submasks(U, self.n)
            inner = values[U ^ pad[subs]].min(axis=1)
            values[U] = (self.popcount[subs] + inner).max()
        return values

    def _check(self, U: int) -> None:
        if U & ~self.full or U < 0:
            raise UncoveredState(f"state {sorted(from_mask(U))} outside the table")

    def value(self, U=None) -> int:
        U = self.full if U is None else to_mask(U)
        self._check(U)
        return int(self.values[U])

    def best_painter_response(self, U, M) -> frozenset[int]:
        """Maximal independent X in G[M] minimizing value(U - X); ties go to
        the lexicographically least X."""
        U, M = to_mask(U), to_mask(M)
        self._check(U)
        if not M or M & ~U:
            raise ValueError("mark must be a nonempty subset of the uncolored set")
        cands = self.mis[M]
        vals = [int(self.values[U ^ X]) for X in cands]
        best = min(vals)
        X = min((X for X, v in zip(cands, vals) if v == best), key=_lex_key)
        return from_mask(X)

    def mark_scores(self, U: int) -> tuple[np.ndarray, np.ndarray]:
        subs = _submasks(U, self.n)
        scores = self.popcount[subs] + self.values[U ^ self._pad[subs]].min(axis=1)
        return subs, scores

    def best_lister_mark(self, U) -> frozenset[int]:
        """Mark attaining value(U); ties go to the smallest, then
        lexicographically least, mark."""
        U = to_mask(U)
        self._check(U)
        if not U:
            raise ValueError("nothing left to mark")
        subs, scores = self.mark_scores(U)
        best = scores.max()
        cands = [int(s) for s in subs[scores == best]]
        M = min(cands, key=lambda m: (bin(m).count("1"), _lex_key(m)))
        return from_mask(M)


@functools.lru_cache(maxsize=128)
def solver_for(G: Graph, cap: int | None = None) -> Solver:
    return Solver(G, cap)


def sum_color_cost(G: Graph, cap: int | None = None) -> int:
    return solver_for(G, cap).value()


class OptimalPainter(Painter):
    name = "optimal"

    def __init__(self, G: Graph, cap: int | None = None):
        self.solver = solver_for(G, cap)

    def start(self, G):
        if G != self.solver.G:
            raise ValueError("optimal painter was built for a different graph")
        super().start(G)

    def respond(self, uncolored, marked, history):
        return self.solver.best_painter_response(uncolored, marked)


class OptimalLister(Lister):
    name = "optimal"

    def __init__(self, G: Graph, cap: int | None = None):
        self.solver = solver_for(G, cap)

    def start(self, G):
        if G != self.solver.G:
            raise ValueError("optimal lister was built for a different graph")
        super().start(G)

    def mark(self, uncolored, history):
        return self.solver.best_lister_mark(uncolored)


def painter_optimal(G: Graph, cap: int | None = None) -> OptimalPainter:
    return OptimalPainter(G, cap)


def lister_optimal(G: Graph, cap: int | None = None) -> OptimalLister:
    return OptimalLister(G, cap)


def worst_case_score(G: Graph, painter: Painter, cap: int = 8) -> int:
    """Largest score any Lister can force against a painter whose answer
    depends only on (uncolored, marked). Exhaustive over all 3**n pairs."""
    if G.n > cap:
        raise CapExceeded(f"best-response search capped at {cap} vertices")
    painter.start(G)
    memo = {0: 0}

    def worst(U: int) -> int:
        if U in memo:
            return memo[U]
        Uset = from_mask(U)
        best = 0
        M = U
        while M:
            X = to_mask(painter.respond(Uset, from_mask(M), ()))
            assert X and X & ~M == 0
            best = max(best, bin(M).count("1") + worst(U & ~X))
            M = (M - 1) & U
        memo[U] = best
        return best

    return worst((1 << G.n) - 1)
