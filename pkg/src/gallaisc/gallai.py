"""The Gallai graph, Gallai indices, and the Gallai-simplicial complex.

Vertex ``k`` (1-based) of the Gallai graph stands for ``labeling[k-1]``,
the k-th edge of the source graph in lexicographic order.
"""

from __future__ import annotations

from typing import NamedTuple

from .complex import Face, SimplicialComplex, make_complex
from .errors import NoEdges
from .graph import Edge, Graph, make_graph


class GallaiGraph(NamedTuple):
    graph: Graph
    labeling: tuple[Edge, ...]


def _gallai_pairs(g: Graph):
    """Yield index pairs (a, b), a < b, of edges adjacent in Gallai(g).

    Edges sharing endpoint j are grouped by j; a pair {i,j}, {j,k} qualifies
    unless {i,k} is an edge. Each qualifying pair shares exactly one
    endpoint, so it is produced exactly once.
    """
    index = {e: k for k, e in enumerate(g.edges)}
    for j in g.vertices:
        nbrs = sorted(g.neighbors[j])
        for x, i in enumerate(nbrs):
            for k in nbrs[x + 1:]:
                if g.has_edge(i, k):
                    continue
                a = index[(i, j) if i < j else (j, i)]
                b = index[(j, k) if j < k else (k, j)]
                yield (a, b) if a < b else (b, a), (i, j, k)


def gallai(g: Graph) -> GallaiGraph:
    """Gallai graph of ``g`` together with its vertex-to-edge labeling."""
    if not g.edges:
        raise NoEdges("the Gallai graph of an edgeless graph is empty")
    pairs = [(a + 1, b + 1) for (a, b), _ in _gallai_pairs(g)]
    return GallaiGraph(make_graph(g.m, pairs), g.edges)


def gallai_indices(g: Graph) -> set[Face]:
    """Omega(g): triples {i,j,k} from Gallai-adjacent edge pairs plus the
    edges that are isolated in the Gallai graph. Deduplicated.
    """
    if not g.edges:
        raise NoEdges("Gallai indices need at least one edge")
    omega: set[Face] = set()
    touched: set[int] = set()
    for (a, b), triple in _gallai_pairs(g):
        omega.add(tuple(sorted(triple)))
        touched.update((a, b))
    omega.update(e for k, e in enumerate(g.edges) if k not in touched)
    return omega


def gallai_complex(g: Graph) -> SimplicialComplex:
    """Complex generated by the Gallai indices of ``g``.

    Only vertices covered by some index belong to the ground set; use
    :func:`uncovered_vertices` for the rest of V(g).
    """
    return make_complex(gallai_indices(g))


def uncovered_vertices(g: Graph) -> list[int]:
    """Vertices of ``g`` that lie in no Gallai index (exactly its isolated vertices)."""
    covered = {v for F in gallai_indices(g) for v in F}
    return [v for v in g.vertices if v not in covered]


def labeling_table(gg: GallaiGraph) -> str:
    return "".join(f"{k} {u} {v}\n" for k, (u, v) in enumerate(gg.labeling, start=1))
