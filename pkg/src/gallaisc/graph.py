"""Finite simple graphs on vertices 1..n.

Graphs are immutable values. Edges are stored as a sorted tuple of
``(u, v)`` pairs with ``u < v`` so that equal graphs compare equal and
hash alike.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import FormatError, InvalidParameter, InvalidVertex, NotAdjacent, SelfLoop, UnknownEdge

Edge = tuple[int, int]


def canonical_edge(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in self.vertices), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge((u, v)) in self.edge_set

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices if not self.neighbors[v]]

    def __str__(self) -> str:
        return to_edgelist(self).rstrip("\n")


def make_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a canonical graph on 1..n, collapsing duplicate pairs."""
    if n < 0:
        raise InvalidParameter(f"vertex count must be non-negative, got {n}")
    canon = set()
    for e in edges:
        u, v = e
        for x in (u, v):
            if not 1 <= x <= n:
                raise InvalidVertex(f"vertex {x} outside 1..{n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        canon.add(canonical_edge((u, v)))
    return Graph(n, tuple(sorted(canon)))


def _require_edge(g: Graph, e: Iterable[int]) -> Edge:
    ce = canonical_edge(e)
    if ce not in g.edge_set:
        raise UnknownEdge(f"{set(ce)} is not an edge")
    return ce


def adjacent_edges(g: Graph, e: Iterable[int], f: Iterable[int]) -> bool:
    """True iff the two edges of ``g`` share exactly one endpoint."""
    e, f = _require_edge(g, e), _require_edge(g, f)
    return len(set(e) & set(f)) == 1


def spans_triangle(g: Graph, e: Iterable[int], f: Iterable[int]) -> bool:
    """For adjacent edges {i,j}, {j,k}: is {i,k} also an edge?"""
    e, f = _require_edge(g, e), _require_edge(g, f)
    common = set(e) & set(f)
    if len(common) != 1:
        raise NotAdjacent(f"{set(e)} and {set(f)} do not share exactly one endpoint")
    i, k = sorted(set(e) ^ set(f))
    return g.has_edge(i, k)


def relabel(g: Graph, image: Sequence[int]) -> Graph:
    """Apply the vertex permutation ``v -> image[v-1]``."""
    if sorted(image) != list(g.vertices):
        raise InvalidParameter("image is not a permutation of 1..n")
    return make_graph(g.n, ((image[u - 1], image[v - 1]) for u, v in g.edges))


def _vertex_invariants(g: Graph) -> dict[int, tuple]:
    return {
        v: (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors[v])))
        for v in g.vertices
    }


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Return ``image`` with ``relabel(g, image) == h``, or None.

    Exhaustive backtracking; candidates for each vertex are restricted to
    vertices of ``h`` with the same degree and neighbour-degree multiset.
    Meant for small graphs (n up to roughly 16).
    """
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return None
    inv_g, inv_h = _vertex_invariants(g), _vertex_invariants(h)
    if Counter(inv_g.values()) != Counter(inv_h.values()):
        return None

    classes: dict[tuple, list[int]] = {}
    for w in h.vertices:
        classes.setdefault(inv_h[w], []).append(w)

    # most constrained first, then grow along edges so adjacency checks bite early
    order: list[int] = []
    seen: set[int] = set()
    for start in sorted(g.vertices, key=lambda v: (len(classes[inv_g[v]]), -g.degree(v), v)):
        if start in seen:
            continue
        frontier = [start]
        seen.add(start)
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for w in sorted(g.neighbors[v], key=lambda x: (len(classes[inv_g[x]]), x)):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in classes[inv_g[v]]:
            if w in used:
                continue
            if all(
                (u in g.neighbors[v]) == (mapping[u] in h.neighbors[w]) for u in order[:pos]
            ):
                mapping[v] = w
                used.add(w)
                if extend(pos + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    if not extend(0):
        return None
    return tuple(mapping[v] for v in g.vertices)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# -- edge-list text format -------------------------------------------------


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise FormatError("first line must be 'n m'")
    try:
        n, m = map(int, rows[0])
        pairs = [tuple(map(int, r)) for r in rows[1:]]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if any(len(p) != 2 for p in pairs):
        raise FormatError("edge lines must hold exactly two vertices")
    if len(pairs) != m:
        raise FormatError(f"header announces {m} edges, found {len(pairs)}")
    return make_graph(n, pairs)
