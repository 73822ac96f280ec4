"""Simple undirected graphs on vertices 0..n-1 and the structural routines the
strategies need: components, degeneracy orderings, cycle/no-cycle splits,
backtracking colorings and the plain-text graph file format.

Vertex sets are plain ``frozenset`` objects; the exact solver converts them to
bitmasks internally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    # class certificates / generator records; not part of equality
    meta: Mapping = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v in ascending lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def tags(self) -> frozenset[str]:
        return frozenset(self.meta.get("tags", ()))

    def is_independent(self, S: Iterable[int]) -> bool:
        S = frozenset(S)
        return all(not (self.adj[v] & S) for v in S)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Coloring:
    colors: Mapping[int, int]
    k: int

    def classes(self) -> list[frozenset[int]]:
        out: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in self.colors.items():
            out[c].add(v)
        return [frozenset(s) for s in out]

    def is_proper(self, G: Graph) -> bool:
        return all(
            0 <= c < self.k and all(self.colors.get(w, -1) != c for w in G.adj[v])
            for v, c in self.colors.items()
        )


@dataclass(frozen=True)
class Ordering:
    order: tuple[int, ...]
    k: int


def new_graph(n: int, edges: Iterable[Sequence[int]], meta: Mapping | None = None) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), dict(meta or {}))


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(H, ids)`` where vertex ``i`` of H is vertex ``ids[i]`` of G."""
    ids = sorted(set(S))
    index = {v: i for i, v in enumerate(ids)}
    if ids and not (0 <= ids[0] and ids[-1] < G.n):
        raise GraphError("vertex set not contained in V(G)")
    keep = frozenset(ids)
    adj = tuple(frozenset(index[w] for w in G.adj[v] & keep) for v in ids)
    # induced subgraphs of a certified class stay in the (hereditary) class
    meta = {"tags": sorted(G.tags())} if G.tags() else {}
    return Graph(len(ids), adj, meta), ids


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges())
        offset += H.n
    tags = set.intersection(*(set(H.tags()) for H in graphs)) if graphs else set()
    return new_graph(offset, edges, {"tags": sorted(tags)} if tags else None)


def connected_components(G: Graph, S: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Components of G[S], ordered by their smallest vertex."""
    remaining = set(range(G.n) if S is None else S)
    comps = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in G.adj[v]:
                if w in remaining:
                    remaining.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(G: Graph, S: Iterable[int] | None = None) -> bool:
    return len(connected_components(G, S)) <= 1


def is_forest(G: Graph, S: Iterable[int] | None = None) -> bool:
    S = frozenset(range(G.n) if S is None else S)
    edges = sum(len(G.adj[v] & S) for v in S) // 2
    return edges == len(S) - len(connected_components(G, S))


def degeneracy_ordering(G: Graph) -> Ordering:
    """Smallest-last ordering: every vertex has at most ``k`` earlier neighbors,
    with ``k`` the degeneracy of G."""
    deg = [G.degree(v) for v in range(G.n)]
    buckets: list[set[int]] = [set() for _ in range(max(deg, default=0) + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    removed = [False] * G.n
    removal = []
    k = 0
    lo = 0
    for _ in range(G.n):
        lo = max(lo - 1, 0)
        while not buckets[lo]:
            lo += 1
        v = min(buckets[lo])
        buckets[lo].discard(v)
        removed[v] = True
        k = max(k, lo)
        removal.append(v)
        for w in G.adj[v]:
            if not removed[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)
    order = tuple(reversed(removal))
    assert max_back_degree(G, order) <= k
    return Ordering(order, k)


def max_back_degree(G: Graph, order: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    return max((sum(pos[w] < pos[v] for w in G.adj[v]) for v in order), default=0)


def degeneracy(G: Graph) -> int:
    return degeneracy_ordering(G).k


def biconnected_components(G: Graph, S: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Vertex sets of the biconnected components (blocks) of G[S] that contain
    at least one edge. Iterative Hopcroft-Tarjan with an edge stack."""
    S = frozenset(range(G.n) if S is None else S)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    t = 0
    for root in sorted(S):
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(G.adj[root] & S)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(sorted(G.adj[w] & S))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.update((a, b))
                        if (a, b) == (parent, v):
                            break
                    blocks.append(frozenset(block))
    return blocks


def cycle_split(G: Graph, M: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Split M into (T, S): T holds the vertices of M lying on no cycle of G[M].

    A vertex lies on a cycle exactly when one of its blocks has 3+ vertices.
    """
    M = frozenset(M)
    on_cycle: set[int] = set()
    for block in biconnected_components(G, M):
        if len(block) >= 3:
            on_cycle |= block
    S = frozenset(on_cycle)
    return M - S, S


def path_or_cycle_order(G: Graph, Q: Iterable[int]) -> tuple[list[int], bool]:
    """Order the vertices of G[Q] along the path or cycle it induces.

    Paths start at their smaller-id endpoint, cycles at their smallest vertex
    (then towards its smaller neighbor). Returns ``(order, is_cycle)``.
    """
    Q = frozenset(Q)
    if not Q:
        raise GraphError("empty vertex set")
    nbrs = {v: sorted(G.adj[v] & Q) for v in Q}
    if any(len(a) > 2 for a in nbrs.values()) or not is_connected(G, Q):
        raise GraphError("G[Q] is neither a path nor a cycle")
    ends = sorted(v for v in Q if len(nbrs[v]) < 2)
    is_cycle = not ends
    if is_cycle and len(Q) < 3:
        raise GraphError("G[Q] is neither a path nor a cycle")
    start = min(Q) if is_cycle else ends[0]
    order = [start]
    prev = None
    cur = start
    while len(order) < len(Q):
        nxt = [w for w in nbrs[cur] if w != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order, is_cycle


def max_independent_path_cycle(G: Graph, Q: Iterable[int], start: int | None = None) -> frozenset[int]:
    """Largest independent set of a path or cycle G[Q]: alternate vertices from
    ``start`` (a path endpoint; default the smaller-id one)."""
    order, is_cycle = path_or_cycle_order(G, Q)
    if start is not None and not is_cycle:
        if start == order[-1]:
            order.reverse()
        elif start != order[0]:
            raise GraphError(f"{start} is not an endpoint of the path")
    picked = order[::2]
    if is_cycle and len(order) % 2 == 1:
        picked = picked[:-1]
    return frozenset(picked)


def _pick_vertex(G: Graph, todo: set[int], colors: dict[int, int]) -> int:
    # first-fail: most distinct neighbor colors, then most uncolored neighbors
    def key(v):
        seen = {colors[w] for w in G.adj[v] if w in colors}
        return (-len(seen), -sum(1 for w in G.adj[v] if w in todo), v)

    return min(todo, key=key)


def proper_coloring(
    G: Graph,
    k: int,
    S: Iterable[int] | None = None,
    fixed: Mapping[int, int] | None = None,
    allowed: Mapping[int, Iterable[int]] | None = None,
) -> Coloring | None:
    """Proper k-coloring of G[S] by deterministic backtracking, or None.

    ``fixed`` pre-assigns colors; ``allowed`` restricts a vertex's palette.
    """
    if k < 1:
        raise GraphError("k must be positive")
    S = frozenset(range(G.n) if S is None else S)
    H, ids = induced_subgraph(G, S)
    index = {v: i for i, v in enumerate(ids)}
    colors: dict[int, int] = {}
    palette = {i: list(range(k)) for i in range(H.n)}
    for v, cs in (allowed or {}).items():
        if v in index:
            palette[index[v]] = sorted(c for c in set(cs) if 0 <= c < k)
    for v, c in (fixed or {}).items():
        if v in index:
            palette[index[v]] = [c] if 0 <= c < k else []
    todo = set(range(H.n))

    def extend() -> bool:
        if not todo:
            return True
        v = _pick_vertex(H, todo, colors)
        used = {colors[w] for w in H.adj[v] if w in colors}
        todo.discard(v)
        for c in palette[v]:
            if c not in used:
                colors[v] = c
                if extend():
                    return True
                del colors[v]
        todo.add(v)
        return False

    if not extend():
        return None
    return Coloring({ids[i]: c for i, c in colors.items()}, k)


def chromatic_number(G: Graph) -> int:
    k = 1 if G.n else 0
    while G.n and proper_coloring(G, k) is None:
        k += 1
    return k


def is_acyclic_coloring(G: Graph, coloring: Coloring) -> bool:
    if not coloring.is_proper(G):
        return False
    classes = coloring.classes()
    return all(is_forest(G, a | b) for a, b in itertools.combinations(classes, 2))


def acyclic_coloring(G: Graph, k: int) -> Coloring | None:
    """Proper k-coloring with no 2-colored cycle, by backtracking in a
    degeneracy order (colors ascending), or None."""
    if k < 1:
        raise GraphError("k must be positive")
    order = degeneracy_ordering(G).order
    colors: dict[int, int] = {}
    members: list[set[int]] = [set() for _ in range(k)]

    def ok(v: int, c: int) -> bool:
        if any(colors.get(w) == c for w in G.adj[v]):
            return False
        for d in range(k):
            if d == c:
                continue
            hits = [w for w in G.adj[v] if colors.get(w) == d]
            if len(hits) < 2:
                continue
            if not is_forest(G, members[c] | members[d] | {v}):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(k):
            if ok(v, c):
                colors[v] = c
                members[c].add(v)
                if extend(i + 1):
                    return True
                members[c].discard(v)
                del colors[v]
        return False

    if not extend(0):
        return None
    return Coloring(dict(colors), k)


def write_graph(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("expected header 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    if len(edges) != m or any(len(r) != 2 for r in rows[1:]):
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return new_graph(n, edges)
