"""Graph and complex families with fixed, deterministic vertex labelings.

Labelings follow the conventions under which the Gallai-index families of
the triangular ladder and the prism have closed forms (see
:mod:`gallaisc.oracle`).
"""

from __future__ import annotations

from itertools import combinations

from .complex import SimplicialComplex, make_complex
from .errors import EmptyGraph, InvalidParameter
from .graph import Graph, make_graph


def _at_least(name: str, value: int, lo: int) -> None:
    if value < lo:
        raise InvalidParameter(f"{name} must be >= {lo}, got {value}")


def path(n: int) -> Graph:
    if n < 1:
        raise EmptyGraph("path needs at least one vertex")
    return make_graph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    _at_least("n", n, 3)
    return make_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    _at_least("n", n, 1)
    return make_graph(n, combinations(range(1, n + 1), 2))


def star(n: int) -> Graph:
    """K_{1,n} with centre 1 and leaves 2..n+1."""
    _at_least("n", n, 1)
    return make_graph(n + 1, ((1, k) for k in range(2, n + 2)))


def ladder(n: int) -> Graph:
    """P_n x P_2: rails 1..n and n+1..2n, rungs {i, 2n+1-i}.

    The second rail runs backwards, so 1..2n is a path round the boundary
    and ladder(2) is the 4-cycle 1-2-3-4.
    """
    _at_least("n", n, 2)
    edges = [(i, i + 1) for i in range(1, n)]
    edges += [(n + i, n + i + 1) for i in range(1, n)]
    edges += [(i, 2 * n + 1 - i) for i in range(1, n + 1)]
    return make_graph(2 * n, edges)


def triangular_ladder(n: int) -> Graph:
    """Ladder with a cross edge between consecutive rungs, 2n vertices, 4n-3 edges.

    The vertices run round the boundary as a 2n-path 1..2n; rung i joins
    i to 2n+1-i and the cross edge joins i to 2n-i.
    """
    _at_least("n", n, 2)
    edges = [(i, i + 1) for i in range(1, 2 * n)]
    for i in range(1, n):
        edges += [(i, 2 * n - i), (i, 2 * n + 1 - i)]
    return make_graph(2 * n, edges)


def prism(n: int) -> Graph:
    """C_3 x P_n: triangles {3i+1, 3i+2, 3i+3}, rails {j, j+3}."""
    _at_least("n", n, 2)
    edges = []
    for i in range(n):
        a = 3 * i
        edges += [(a + 1, a + 2), (a + 2, a + 3), (a + 3, a + 1)]
    edges += [(j, j + 3) for j in range(1, 3 * n - 2)]
    return make_graph(3 * n, edges)


def _double_star(l: int, extra_leaf: bool) -> Graph:
    # 1, 2 centres; 3..l+2 shared leaves; then private leaves of centre 1, of centre 2
    _at_least("l", l, 2)
    shared = range(3, l + 3)
    own1 = range(l + 3, 2 * l + 3)
    own2 = range(2 * l + 3, 3 * l + 3 + (1 if extra_leaf else 0))
    edges = [(1, v) for v in shared] + [(2, v) for v in shared]
    edges += [(1, v) for v in own1] + [(2, v) for v in own2]
    return make_graph(3 * l + 2 + (1 if extra_leaf else 0), edges)


def double_star_even(l: int) -> Graph:
    """Two copies of S_{2l} glued along l leaves: 3l+2 vertices, 4l edges."""
    return _double_star(l, extra_leaf=False)


def double_star_odd(l: int) -> Graph:
    """S_{2l} and S_{2l+1} glued along l leaves: 3l+3 vertices, 4l+1 edges."""
    return _double_star(l, extra_leaf=True)


def joined_complete(l: int, odd: bool = False) -> Graph:
    """K_{2l} and K_{2l} (or K_{2l+1} when ``odd``) joined by the matching {i, 2l+i}, i <= l."""
    _at_least("l", l, 1)
    k2 = 2 * l + (1 if odd else 0)
    first = range(1, 2 * l + 1)
    second = range(2 * l + 1, 2 * l + k2 + 1)
    edges = list(combinations(first, 2)) + list(combinations(second, 2))
    edges += [(i, 2 * l + i) for i in range(1, l + 1)]
    return make_graph(2 * l + k2, edges)


def simplex_complex(n: int) -> SimplicialComplex:
    """The closed n-simplex on vertices 1..n+1."""
    _at_least("n", n, 0)
    return make_complex([range(1, n + 2)])


def boundary_complex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, a triangulated (n-1)-sphere."""
    _at_least("n", n, 1)
    return make_complex(combinations(range(1, n + 2), n))


#: CLI family name -> one-integer constructor
GRAPH_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "ladder": ladder,
    "triangular-ladder": triangular_ladder,
    "prism": prism,
    "double-star-even": double_star_even,
    "double-star-odd": double_star_odd,
    "joined-complete-even": lambda l: joined_complete(l, odd=False),
    "joined-complete-odd": lambda l: joined_complete(l, odd=True),
}
