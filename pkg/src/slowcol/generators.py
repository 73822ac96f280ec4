"""Deterministic graph families. Randomized generators take an integer seed and
draw from ``numpy.random.default_rng(seed)`` (PCG64)."""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Graph, GraphError, disjoint_union, new_graph


def gen_complete(n: int) -> Graph:
    return new_graph(n, itertools.combinations(range(n), 2), {"family": "complete"})


def gen_edgeless(n: int) -> Graph:
    return new_graph(n, [], {"family": "edgeless"})


def gen_complete_multipartite(*sizes: int) -> Graph:
    if any(r < 1 for r in sizes):
        raise GraphError("part sizes must be positive")
    parts = []
    start = 0
    for r in sizes:
        parts.append(list(range(start, start + r)))
        start += r
    edges = [(u, v) for a, b in itertools.combinations(parts, 2) for u in a for v in b]
    return new_graph(start, edges, {"family": "multipartite", "parts": parts})


def gen_path(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)], {"family": "path"})


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)], {"family": "cycle"})


def gen_star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    return new_graph(n, [(0, i) for i in range(1, n)], {"family": "star"})


def gen_random_tree(n: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [(int(rng.integers(i)), i) for i in range(1, n)]
    perm = rng.permutation(n)
    return new_graph(n, [(int(perm[u]), int(perm[v])) for u, v in edges], {"family": "tree", "seed": seed})


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return new_graph(n, edges, {"family": "gnp", "seed": seed})


def gen_maximal_outerplanar(n: int, seed: int) -> Graph:
    """Random triangulated polygon built by ear additions, randomly relabeled.

    meta records the outer (Hamiltonian) cycle and the triangle list.
    """
    if n < 1:
        raise GraphError("need n >= 1")
    rng = np.random.default_rng(seed)
    if n <= 3:
        outer = list(range(n))
        triangles = [(0, 1, 2)] if n == 3 else []
    else:
        outer = [0, 1, 2]
        triangles = [(0, 1, 2)]
        for v in range(3, n):
            i = int(rng.integers(len(outer)))
            a, b = outer[i], outer[(i + 1) % len(outer)]
            outer.insert(i + 1, v)
            triangles.append((a, b, v))
    perm = [int(x) for x in rng.permutation(n)]
    edges = set()
    for t in triangles:
        for u, v in itertools.combinations(t, 2):
            edges.add((perm[u], perm[v]))
    if n == 2:
        edges.add((perm[0], perm[1]))
    meta = {
        "family": "maximal-outerplanar",
        "seed": seed,
        "tags": ["outerplanar", "planar"],
        "outer_cycle": [perm[v] for v in outer],
        "triangles": [tuple(sorted(perm[v] for v in t)) for t in triangles],
    }
    return new_graph(n, edges, meta)


def gen_maximal_planar(n: int, seed: int) -> Graph:
    """Planar triangulation grown from K4 by inserting each new vertex into a
    uniformly random face. meta records the face list."""
    if n < 1:
        raise GraphError("need n >= 1")
    rng = np.random.default_rng(seed)
    if n <= 3:
        faces = [(0, 1, 2), (0, 1, 2)] if n == 3 else []
    else:
        faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        for v in range(4, n):
            i = int(rng.integers(len(faces)))
            a, b, c = faces[i]
            faces[i] = (a, b, v)
            faces.extend([(a, c, v), (b, c, v)])
    edges = {tuple(sorted(p)) for f in faces for p in itertools.combinations(f, 2)}
    if n <= 2:
        edges = set(gen_complete(n).edges())
    meta = {"family": "maximal-planar", "seed": seed, "tags": ["planar"], "faces": faces}
    return new_graph(n, edges, meta)


def gen_c4_box_path(k: int) -> Graph:
    """Cartesian product C4 x P_k; vertex 4*j + i is cycle vertex i in layer j."""
    edges = []
    for j in range(k):
        for i in range(4):
            edges.append((4 * j + i, 4 * j + (i + 1) % 4))
            if j + 1 < k:
                edges.append((4 * j + i, 4 * (j + 1) + i))
    return new_graph(4 * k, edges, {"family": "c4xpath", "tags": ["planar"]})


def gen_disjoint_union(graphs) -> Graph:
    return disjoint_union(list(graphs))


def gen_two_forest_graph(n: int, seed: int, cross_p: float = 0.5) -> tuple[Graph, list[frozenset[int]]]:
    """Random graph whose vertex set splits into two induced forests: a random
    forest on each side plus random cross edges. Returns (G, [A, B])."""
    rng = np.random.default_rng(seed)
    side = rng.random(n) < 0.5
    parts = [[v for v in range(n) if side[v]], [v for v in range(n) if not side[v]]]
    edges = []
    for part in parts:
        for i in range(1, len(part)):
            if rng.random() < 0.8:
                edges.append((part[int(rng.integers(i))], part[i]))
    for u in parts[0]:
        for v in parts[1]:
            if rng.random() < cross_p:
                edges.append((u, v))
    G = new_graph(n, edges, {"family": "two-forest", "seed": seed})
    return G, [frozenset(p) for p in parts if p]
