"""Potential-function Painter strategies for 4-colorable and outerplanar graphs.

Every vertex and edge carries a potential; Phi(G) is their sum. On a mark M
Painter colors an independent X whose removal lowers Phi by at least |M|, so
the final score never exceeds Phi of the starting graph. X is picked among
"augmented" color classes: a good coloring of G[M] in which some low-degree
vertices receive extra colors.

All arithmetic is exact, in integer fifteenths (Q15).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .game import Painter
from .graph import (
    Coloring,
    Graph,
    GraphError,
    connected_components,
    cycle_split,
    degeneracy_ordering,
    induced_subgraph,
    is_connected,
    max_independent_path_cycle,
    path_or_cycle_order,
    proper_coloring,
)


class TheoryViolation(AssertionError):
    """A guarantee proved for the potential method failed at runtime; this
    means an implementation bug or a graph outside the certified class."""

    exit_code = 3


@functools.total_ordering
class Q15:
    __slots__ = ("num",)

    def __init__(self, num: int):
        self.num = int(num)

    @classmethod
    def of(cls, x) -> "Q15":
        x = Fraction(x) * 15
        if x.denominator != 1:
            raise ValueError(f"{x / 15} is not a multiple of 1/15")
        return cls(x.numerator)

    def _coerce(self, other) -> int:
        if isinstance(other, Q15):
            return other.num
        if isinstance(other, int):
            return 15 * other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Q15(self.num + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Q15(self.num - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Q15(o - self.num)

    def __neg__(self):
        return Q15(-self.num)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return Q15(self.num * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self.num == o

    def __lt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self.num < o

    def __hash__(self):
        return hash(Fraction(self.num, 15))

    def __float__(self):
        return self.num / 15

    def fraction(self) -> Fraction:
        return Fraction(self.num, 15)

    def __repr__(self):
        return f"Q15({self.fraction()})"

    def __str__(self):
        return str(self.fraction())


ZERO = Q15(0)


def _live_degree(G: Graph, v: int, removed: frozenset[int]) -> int:
    return len(G.adj[v] - removed) if removed else len(G.adj[v])


def in_triangle(G: Graph, v: int, removed: frozenset[int] = frozenset()) -> bool:
    nbrs = G.adj[v] - removed
    return any(G.adj[a] & nbrs for a in nbrs)


def fourcol_vertex(G: Graph, v: int, removed: frozenset[int] = frozenset()) -> Q15:
    # 1 + min(d, 3) / 5
    return Q15(15 + 3 * min(_live_degree(G, v, removed), 3))


def outerplanar_vertex(G: Graph, v: int, removed: frozenset[int] = frozenset()) -> Q15:
    d = _live_degree(G, v, removed)
    if d == 0:
        return Q15(15)
    if d >= 3 or in_triangle(G, v, removed):
        return Q15(25)
    return Q15(20)


@dataclass(frozen=True)
class PotentialSpec:
    name: str
    edge: Q15
    colors: int
    vertex_rule: Callable[..., Q15]


FOURCOL = PotentialSpec("potential-4col", Q15(9), 4, fourcol_vertex)
OUTERPLANAR = PotentialSpec("potential-outerplanar", Q15(5), 3, outerplanar_vertex)


def total_potential(G: Graph, spec: PotentialSpec, removed: Iterable[int] = frozenset()) -> Q15:
    """Phi(G - removed)."""
    removed = frozenset(removed)
    alive = [v for v in range(G.n) if v not in removed]
    vertex_part = sum((spec.vertex_rule(G, v, removed).num for v in alive), 0)
    edges = sum(_live_degree(G, v, removed) for v in alive) // 2
    return Q15(vertex_part + spec.edge.num * edges)


def potential_drop(G: Graph, spec: PotentialSpec, X: Iterable[int]) -> Q15:
    """Phi(G) - Phi(G - X), touching only X and its neighbors."""
    X = frozenset(X)
    touched: set[int] = set()
    for x in X:
        touched |= G.adj[x]
    touched -= X
    lost_edges = sum(len(G.adj[x]) for x in X) - sum(len(G.adj[x] & X) for x in X) // 2
    drop = sum(spec.vertex_rule(G, x).num for x in X) + spec.edge.num * lost_edges
    drop += sum(spec.vertex_rule(G, v).num - spec.vertex_rule(G, v, X).num for v in touched)
    return Q15(drop)


def _check_move(G: Graph, M: frozenset[int], X: frozenset[int]) -> None:
    if not M <= G.vertices:
        raise GraphError("marked set not inside V(G)")
    if not X <= M:
        raise GraphError("X must be contained in M")
    if not G.is_independent(X):
        raise GraphError("X must be independent")


def utility(G: Graph, spec: PotentialSpec, M: Iterable[int], X: Iterable[int]) -> Q15:
    """u(X) = Phi(G) - Phi(G - X) - |M|."""
    M, X = frozenset(M), frozenset(X)
    _check_move(G, M, X)
    return total_potential(G, spec) - total_potential(G, spec, X) - len(M)


def vertex_utility(G: Graph, spec: PotentialSpec, M: Iterable[int], X: Iterable[int], v: int) -> Q15:
    """Share of u(X) carried by vertex v; these shares sum to u(X)."""
    M, X = frozenset(M), frozenset(X)
    if v in X:
        return spec.vertex_rule(G, v) + spec.edge * G.degree(v) - 1
    loss = spec.vertex_rule(G, v) - spec.vertex_rule(G, v, X)
    return loss - 1 if v in M else loss


def apportioned_utility(G: Graph, spec: PotentialSpec, M, X, within: Iterable[int]) -> Q15:
    M, X = frozenset(M), frozenset(X)
    return sum((vertex_utility(G, spec, M, X, v) for v in within), ZERO)


# ---- good colorings ---------------------------------------------------------


@dataclass(frozen=True)
class Pieces:
    T: frozenset[int]
    S: frozenset[int]
    tree_components: list[frozenset[int]]
    cycle_components: list[frozenset[int]]


def pieces(G: Graph, M: Iterable[int]) -> Pieces:
    T, S = cycle_split(G, M)
    return Pieces(T, S, connected_components(G, T), connected_components(G, S))


def _color_piece(G: Graph, piece: frozenset[int], k: int, pin: tuple[int, int] | None) -> dict[int, int]:
    """Proper k-coloring of G[piece] with optional (vertex, color) pin.
    Greedy along a degeneracy order when that suffices, else backtracking."""
    H, ids = induced_subgraph(G, piece)
    ordering = degeneracy_ordering(H)
    colors: dict[int, int] = {}
    if ordering.k < k:
        for v in ordering.order:
            used = {colors[w] for w in H.adj[v] if w in colors}
            colors[v] = min(c for c in range(k) if c not in used)
        out = {ids[v]: c for v, c in colors.items()}
        if pin is not None:
            q, target = pin
            a = out[q]
            swap = {a: target, target: a}
            out = {v: swap.get(c, c) for v, c in out.items()}
        return out
    coloring = proper_coloring(G, k, piece, fixed=dict([pin]) if pin else None)
    if coloring is None:
        raise GraphError(f"induced subgraph on {sorted(piece)} is not {k}-colorable")
    return dict(coloring.colors)


def _two_color_tree(G: Graph, tree: frozenset[int], root: int, root_color: int, other: int) -> dict[int, int]:
    colors = {root: root_color}
    stack = [root]
    while stack:
        v = stack.pop()
        for w in G.adj[v] & tree:
            if w not in colors:
                colors[w] = other if colors[v] == root_color else root_color
                stack.append(w)
    return colors


def good_coloring(G: Graph, M: Iterable[int], k: int) -> Coloring:
    """Proper k-coloring of G[M] where each tree-component together with its
    neighbors in M uses at most two colors.

    Pieces (tree- and cycle-components) form a tree once contracted; they are
    colored outward from the piece holding min(M). Each later piece hangs off
    exactly one colored vertex, which fixes one color of the piece.
    """
    M = frozenset(M)
    if not M:
        return Coloring({}, k)
    if not is_connected(G, M):
        raise GraphError("marked set must induce a connected subgraph")
    if k < 2 and len(M) > 1:
        raise GraphError(f"G[M] is not {k}-colorable")
    pc = pieces(G, M)
    all_pieces = [(p, True) for p in pc.tree_components] + [(p, False) for p in pc.cycle_components]
    piece_of = {v: i for i, (p, _) in enumerate(all_pieces) for v in p}
    pair: dict[int, tuple[int, int]] = {}
    colors: dict[int, int] = {}

    start = piece_of[min(M)]
    seen = {start}
    queue: list[tuple[int, int | None, int | None]] = [(start, None, None)]
    while queue:
        i, parent, q = queue.pop(0)
        piece, is_tree = all_pieces[i]
        if is_tree:
            if parent is None:
                a, b, q = 1, 0, min(piece)
            else:
                a = colors[parent]
                b = 0 if a != 0 else 1
            # q takes b; the pair {a, b} then covers the piece and its neighbors
            colors.update(_two_color_tree(G, piece, q, b, a))
            pair[i] = (a, b)
        else:
            pin = None
            if parent is not None:
                a, b = pair[piece_of[parent]]
                pin = (q, b if colors[parent] == a else a)
            colors.update(_color_piece(G, piece, k, pin))
        for x in sorted(piece):
            for y in sorted(G.adj[x] & M):
                j = piece_of[y]
                if j not in seen:
                    seen.add(j)
                    queue.append((j, x, y))
    return Coloring(colors, k)


def good_coloring_problems(G: Graph, M: Iterable[int], coloring: Coloring) -> list[str]:
    """Empty list iff ``coloring`` is a good coloring of G[M]."""
    M = frozenset(M)
    problems = []
    if set(coloring.colors) != M:
        problems.append("domain differs from M")
    for v in M:
        c = coloring.colors.get(v)
        if c is None or not 0 <= c < coloring.k:
            problems.append(f"vertex {v} has no valid color")
        elif any(coloring.colors.get(w) == c for w in G.adj[v] & M):
            problems.append(f"vertex {v} shares a color with a neighbor")
    for tc in pieces(G, M).tree_components:
        closed = set(tc)
        for v in tc:
            closed |= G.adj[v] & M
        used = {coloring.colors.get(v) for v in closed}
        if len(used) > 2:
            problems.append(f"tree-component {sorted(tc)} and its neighbors use colors {sorted(used)}")
    return problems


# ---- augmentation -------------------------------------------------------------


@dataclass(frozen=True)
class AugmentedClasses:
    classes: tuple[frozenset[int], ...]
    base: Coloring
    added: tuple[tuple[int, int], ...]

    def multiplicity(self, v: int) -> int:
        return sum(v in c for c in self.classes)


def _check_augmented(G: Graph, M: frozenset[int], aug: AugmentedClasses) -> None:
    covered = frozenset().union(*aug.classes) if aug.classes else frozenset()
    if covered != M or not all(G.is_independent(c) for c in aug.classes):
        raise TheoryViolation("augmented classes must be independent and cover M")


def augment_4col(G: Graph, M: Iterable[int], coloring: Coloring) -> AugmentedClasses:
    """Give each vertex of a largest independent set R of every component of
    G[P], P = {v in M : deg_{G[M]}(v) <= 2}, every color free on its closed
    neighborhood in G[M]."""
    M = frozenset(M)
    if good_coloring_problems(G, M, coloring):
        raise GraphError("coloring is not a good coloring of G[M]")
    classes = [set(c) for c in coloring.classes()]
    P = frozenset(v for v in M if len(G.adj[v] & M) <= 2)
    added = []
    for Q in connected_components(G, P):
        R = max_independent_path_cycle(G, Q)
        for v in sorted(R):
            for i, cls in enumerate(classes):
                if v not in cls and not (G.adj[v] & cls):
                    cls.add(v)
                    added.append((v, i))
    aug = AugmentedClasses(tuple(frozenset(c) for c in classes), coloring, tuple(added))
    _check_augmented(G, M, aug)
    return aug


def augment_outer(G: Graph, M: Iterable[int], coloring: Coloring) -> AugmentedClasses:
    """For each path-component v_1..v_l of G[P], P = {v in T : deg_{G[M]}(v) <= 2},
    add every other vertex to the color Z missing from its tree-component's
    pair, starting at v_1 unless v_1 has degree 1 in G."""
    M = frozenset(M)
    if coloring.k != 3:
        raise GraphError("outerplanar augmentation needs a 3-coloring")
    if good_coloring_problems(G, M, coloring):
        raise GraphError("coloring is not a good coloring of G[M]")
    pc = pieces(G, M)
    tree_of = {v: tc for tc in pc.tree_components for v in tc}
    classes = [set(c) for c in coloring.classes()]
    P = frozenset(v for v in pc.T if len(G.adj[v] & M) <= 2)
    added = []
    for Q in connected_components(G, P):
        order, is_cycle = path_or_cycle_order(G, Q)
        if is_cycle:
            raise TheoryViolation(f"path-component {sorted(Q)} induces a cycle")
        tc = tree_of[order[0]]
        closed = set(tc)
        for v in tc:
            closed |= G.adj[v] & M
        used = {coloring.colors[v] for v in closed}
        if len(used) > 2:
            raise TheoryViolation(f"tree-component {sorted(tc)} neighborhood uses colors {sorted(used)}")
        # a lone marked vertex sees one color; take the least free one
        Z = min(set(range(3)) - used)
        if len(order) > 1 and G.degree(order[0]) == 1:
            order.reverse()
        for v in order[::2]:
            classes[Z].add(v)
            added.append((v, Z))
    aug = AugmentedClasses(tuple(frozenset(c) for c in classes), coloring, tuple(added))
    _check_augmented(G, M, aug)
    return aug


def vertex_class_utility(G: Graph, spec: PotentialSpec, M, aug: AugmentedClasses, x: int) -> Q15:
    """u(x): the share of vertex x summed over all augmented classes."""
    return sum((vertex_utility(G, spec, M, cls, x) for cls in aug.classes), ZERO)


def fourcol_share_floor(G: Graph, M, aug: AugmentedClasses, x: int) -> Q15:
    """Lower bound on u(x) for x in M under the 4-colorable potential:
    (4d/5 + 1) c(x) + s(x)/5 - 4 when d <= 3, else 4 c(x) - 4."""
    M = frozenset(M)
    d = G.degree(x)
    c = aug.multiplicity(x)
    if d >= 4:
        return Q15(15 * (4 * c - 4))
    s = sum(aug.multiplicity(y) for y in G.adj[x] & M)
    return Q15((12 * d + 15) * c + 3 * s - 60)


# ---- the painter ----------------------------------------------------------------


def certify(G: Graph, spec: PotentialSpec) -> None:
    if spec is OUTERPLANAR:
        if "outerplanar" not in G.tags():
            raise GraphError("outerplanar painter needs a graph certified outerplanar (maximal-outerplanar generator or --assume-class)")
    elif spec is FOURCOL:
        if "planar" not in G.tags() and "4-colorable" not in G.tags() and proper_coloring(G, 4) is None:
            raise GraphError("graph is not 4-colorable")


class PotentialPainter(Painter):
    """Colors, in each component of the mark, the augmented class with the
    largest utility share on that component."""

    def __init__(self, spec: PotentialSpec, check: bool = True, debug: bool = False):
        self.spec = spec
        self.name = spec.name
        self.check = check
        self.debug = debug

    def start(self, G):
        certify(G, self.spec)
        super().start(G)
        self.debug_log = [] if self.debug else None

    def choose(self, H: Graph, M: frozenset[int]) -> tuple[frozenset[int], list[dict]]:
        spec = self.spec
        augment = augment_4col if spec is FOURCOL else augment_outer
        X: set[int] = set()
        notes = []
        for C in connected_components(H, M):
            if len(C) == 1:
                X |= C
                notes.append({"size": 1, "chosen": 0, "utilities": [str(vertex_utility(H, spec, C, C, min(C)))]})
                continue
            coloring = good_coloring(H, C, spec.colors)
            aug = augment(H, C, coloring)
            # shares of vertices outside C are never negative, and they may
            # overlap between components, so only C's own shares are counted
            utils = [apportioned_utility(H, spec, C, cls, C) for cls in aug.classes]
            total = sum(utils, ZERO)
            best = max(range(len(utils)), key=lambda i: (utils[i], -i))
            if total < 0 or utils[best] < 0:
                raise TheoryViolation(f"augmented classes on {sorted(C)} have utilities {[str(u) for u in utils]}")
            X |= aug.classes[best]
            notes.append({"size": len(C), "chosen": best, "utilities": [str(u) for u in utils]})
        return frozenset(X), notes

    def respond(self, uncolored, marked, history):
        H, ids = induced_subgraph(self.G, uncolored)
        index = {v: i for i, v in enumerate(ids)}
        M = frozenset(index[v] for v in marked)
        X, notes = self.choose(H, M)
        if self.check or self.debug:
            drop = potential_drop(H, self.spec, X)
            if drop < len(M):
                raise TheoryViolation(f"potential dropped by {drop} < |M| = {len(M)}")
            if self.debug:
                before = total_potential(H, self.spec)
                self.debug_log.append(
                    {"phi_before": str(before), "phi_after": str(before - drop), "marked": len(M), "components": notes}
                )
        return frozenset(ids[x] for x in X)


def painter_potential(spec: PotentialSpec, check: bool = True, debug: bool = False) -> PotentialPainter:
    return PotentialPainter(spec, check, debug)
