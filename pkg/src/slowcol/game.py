"""Rules of the slow-coloring game, the match driver and baseline strategies.

In every round Lister marks a nonempty set M of uncolored vertices and scores
|M|; Painter answers with a nonempty independent X contained in M, which gets
colored. Strategies see the uncolored set, the mark and the public history.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, connected_components, new_graph


class GameError(RuntimeError):
    exit_code = 3


class IllegalMark(GameError):
    pass


class IllegalResponse(GameError):
    pass


class RoundCapExceeded(GameError):
    pass


class CapExceeded(RuntimeError):
    """Input too large for an exhaustive routine."""

    exit_code = 2


@dataclass(frozen=True)
class Round:
    marked: frozenset[int]
    colored: frozenset[int]
    score_after: int


@dataclass
class Trace:
    graph: Graph
    rounds: list[Round]
    painter: str
    lister: str
    seed: int | None = None
    debug: list | None = None

    @property
    def final_score(self) -> int:
        return self.rounds[-1].score_after if self.rounds else 0

    def color_classes(self) -> list[frozenset[int]]:
        return [r.colored for r in self.rounds]

    def to_dict(self) -> dict:
        out = {
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges()]},
            "rounds": [
                {"marked": sorted(r.marked), "colored": sorted(r.colored), "score_after": r.score_after}
                for r in self.rounds
            ],
            "final_score": self.final_score,
            "painter": self.painter,
            "lister": self.lister,
            "seed": self.seed,
        }
        if self.debug is not None:
            out["potential_debug"] = self.debug
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Trace":
        G = new_graph(d["graph"]["n"], d["graph"]["edges"])
        rounds = [Round(frozenset(r["marked"]), frozenset(r["colored"]), r["score_after"]) for r in d["rounds"]]
        return cls(G, rounds, d["painter"], d["lister"], d.get("seed"), d.get("potential_debug"))


def validate_trace(trace: Trace) -> None:
    """Re-check every rule on a recorded game; raises GameError."""
    G = trace.graph
    uncolored = set(range(G.n))
    score = 0
    for r in trace.rounds:
        if not r.marked or not r.marked <= uncolored:
            raise IllegalMark(f"bad mark {sorted(r.marked)}")
        if not r.colored or not r.colored <= r.marked or not G.is_independent(r.colored):
            raise IllegalResponse(f"bad response {sorted(r.colored)}")
        score += len(r.marked)
        if score != r.score_after:
            raise GameError("score bookkeeping mismatch")
        uncolored -= r.colored
    if uncolored:
        raise GameError("game did not finish")


class Painter:
    name = "painter"

    def start(self, G: Graph) -> None:
        self.G = G

    def respond(self, uncolored: frozenset[int], marked: frozenset[int], history: Sequence[Round]) -> frozenset[int]:
        raise NotImplementedError


class Lister:
    name = "lister"

    def start(self, G: Graph) -> None:
        self.G = G

    def mark(self, uncolored: frozenset[int], history: Sequence[Round]) -> frozenset[int]:
        raise NotImplementedError


def play(G: Graph, lister: Lister, painter: Painter, round_cap: int | None = None, seed: int | None = None) -> Trace:
    if round_cap is None:
        round_cap = 2 * G.n
    if round_cap < G.n:
        raise ValueError("round cap must be at least n")
    lister.start(G)
    painter.start(G)
    uncolored = frozenset(range(G.n))
    history: list[Round] = []
    score = 0
    while uncolored:
        if len(history) >= round_cap:
            raise RoundCapExceeded(f"no finish after {round_cap} rounds")
        M = frozenset(lister.mark(uncolored, tuple(history)))
        if not M or not M <= uncolored:
            raise IllegalMark(f"{lister.name} marked {sorted(M)} with uncolored {sorted(uncolored)}")
        X = frozenset(painter.respond(uncolored, M, tuple(history)))
        if not X:
            raise IllegalResponse(f"{painter.name} colored nothing")
        if not X <= M:
            raise IllegalResponse(f"{painter.name} colored unmarked vertices {sorted(X - M)}")
        if not G.is_independent(X):
            raise IllegalResponse(f"{painter.name} colored a non-independent set {sorted(X)}")
        score += len(M)
        uncolored = uncolored - X
        history.append(Round(M, X, score))
    debug = getattr(painter, "debug_log", None)
    return Trace(G, history, painter.name, lister.name, seed, debug)


GREEDY_CAP = 30


def max_independent_subset(G: Graph, M: frozenset[int]) -> frozenset[int]:
    """Maximum independent subset of G[M]; among those, the lexicographically
    least sorted tuple. Branch and bound over bitmasks, include-first."""
    if len(M) > GREEDY_CAP:
        raise CapExceeded(f"greedy painter caps marks at {GREEDY_CAP} vertices, got {len(M)}")
    order = sorted(M)
    pos = {v: i for i, v in enumerate(order)}
    nbr = [sum(1 << pos[w] for w in G.adj[v] if w in pos) for v in order]
    best = [0, -1]  # mask, size

    def search(cand: int, chosen: int, size: int) -> None:
        if cand == 0:
            if size > best[1]:
                best[0], best[1] = chosen, size
            return
        if size + cand.bit_count() <= best[1]:
            return
        low = cand & -cand
        i = low.bit_length() - 1
        search(cand & ~low & ~nbr[i], chosen | low, size + 1)
        search(cand & ~low, chosen, size)

    search((1 << len(order)) - 1, 0, 0)
    return frozenset(order[i] for i in range(len(order)) if best[0] >> i & 1)


class GreedyPainter(Painter):
    """Colors a maximum independent subset of the mark."""

    name = "greedy"

    def respond(self, uncolored, marked, history):
        return max_independent_subset(self.G, marked)


def painter_greedy() -> GreedyPainter:
    return GreedyPainter()


class FullLister(Lister):
    name = "full"

    def mark(self, uncolored, history):
        return uncolored


class SingletonLister(Lister):
    name = "singletons"

    def mark(self, uncolored, history):
        return frozenset([min(uncolored)])


class RandomLister(Lister):
    """Marks each uncolored vertex independently with probability p."""

    def __init__(self, seed: int, p: float = 0.5):
        self.seed = seed
        self.p = p
        self.name = f"random(p={p})"

    def start(self, G):
        super().start(G)
        self.rng = np.random.default_rng(self.seed)

    def mark(self, uncolored, history):
        verts = sorted(uncolored)
        hits = self.rng.random(len(verts)) < self.p
        M = frozenset(v for v, h in zip(verts, hits) if h)
        return M or frozenset([verts[int(self.rng.integers(len(verts)))]])


class ConnectedRandomLister(Lister):
    """Marks a random connected subset of a random component of G[uncolored]."""

    name = "connected-random"

    def __init__(self, seed: int):
        self.seed = seed

    def start(self, G):
        super().start(G)
        self.rng = np.random.default_rng(self.seed)

    def mark(self, uncolored, history):
        comps = connected_components(self.G, uncolored)
        comp = comps[int(self.rng.integers(len(comps)))]
        target = int(self.rng.integers(1, len(comp) + 1))
        start = sorted(comp)[int(self.rng.integers(len(comp)))]
        chosen = {start}
        frontier = set(self.G.adj[start] & comp)
        while len(chosen) < target and frontier:
            v = sorted(frontier)[int(self.rng.integers(len(frontier)))]
            chosen.add(v)
            frontier |= self.G.adj[v] & comp
            frontier -= chosen
        return frozenset(chosen)


def lister_full() -> FullLister:
    return FullLister()


def lister_singletons() -> SingletonLister:
    return SingletonLister()


def lister_random(seed: int, p: float = 0.5) -> RandomLister:
    return RandomLister(seed, p)


def lister_connected_random(seed: int) -> ConnectedRandomLister:
    return ConnectedRandomLister(seed)
