import random

import pytest

from gallaisc import generators as gen
from gallaisc.complex import euler_characteristic, f_vector, is_pure, make_complex
from gallaisc.errors import NoEdges
from gallaisc.gallai import gallai, gallai_complex, gallai_indices, labeling_table, uncovered_vertices
from gallaisc.graph import is_isomorphic, make_graph

import brute


def random_graph(rng, max_n=8, p=None):
    n = rng.randint(2, max_n)
    p = rng.random() if p is None else p
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return make_graph(n, [e for e in pairs if rng.random() < p])


def test_gallai_of_triangle_is_edgeless():
    gg = gallai(gen.complete(3))
    assert (gg.graph.n, gg.graph.m) == (3, 0)


def test_gallai_of_p3():
    gg = gallai(gen.path(3))
    assert (gg.graph.n, gg.graph.m) == (2, 1)
    assert gg.labeling == ((1, 2), (2, 3))


def test_labeling_is_lexicographic():
    gg = gallai(gen.prism(3))
    assert list(gg.labeling) == sorted(gg.labeling)
    assert len(set(gg.labeling)) == gen.prism(3).m
    assert labeling_table(gg).splitlines()[0] == "1 1 2"


def test_gallai_of_double_star_is_two_cliques_and_matching():
    g = gen.double_star_even(3)
    gg = gallai(g)
    lab = gg.labeling
    star1 = {k for k, e in enumerate(lab, 1) if 1 in e}
    star2 = {k for k, e in enumerate(lab, 1) if 2 in e}
    assert len(star1) == len(star2) == 6
    within = [e for e in gg.graph.edges if set(e) <= star1 or set(e) <= star2]
    across = [e for e in gg.graph.edges if e not in within]
    assert len(within) == 2 * 15
    assert len(across) == 3
    # each crossing edge joins {1,s} and {2,s} for a shared leaf s
    for a, b in across:
        assert set(lab[a - 1]) ^ set(lab[b - 1]) == {1, 2}


def test_no_edges():
    with pytest.raises(NoEdges):
        gallai(gen.path(1))
    with pytest.raises(NoEdges):
        gallai_indices(make_graph(3, []))


def test_gallai_indices_small():
    assert gallai_indices(gen.complete(3)) == {(1, 2), (2, 3), (1, 3)}
    assert gallai_indices(gen.path(3)) == {(1, 2, 3)}


def test_gallai_complex_of_triangle():
    c = gallai_complex(gen.complete(3))
    assert c.facets == ((1, 2), (1, 3), (2, 3))
    assert f_vector(c) == (3, 3)
    assert euler_characteristic(f_vector(c)) == 0


def test_gallai_complex_ladder_and_prism():
    assert f_vector(gallai_complex(gen.triangular_ladder(3))) == (6, 14, 8)
    assert f_vector(gallai_complex(gen.prism(3))) == (9, 30, 27)
    assert is_pure(gallai_complex(gen.prism(3)))


def test_uncovered_vertices():
    g = make_graph(5, [(1, 2), (2, 3)])
    assert uncovered_vertices(g) == [4, 5]
    assert gallai_complex(g).ground == frozenset({1, 2, 3})
    assert uncovered_vertices(gen.prism(3)) == []


@pytest.mark.parametrize(
    "edges",
    [
        # both found by enumerating all 1023 nonempty graphs on 5 vertices
        [(1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)],
        [(1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (4, 5)],
    ],
)
def test_example_complex_regression(edges):
    expected = make_complex([{2, 4}, {1, 2, 3}, {1, 3, 4}, {1, 2, 5}, {1, 4, 5}])
    assert gallai_complex(make_graph(5, edges)) == expected


def test_gallai_matches_definition_on_random_graphs():
    rng = random.Random(1)
    for _ in range(150):
        g = random_graph(rng)
        if not g.edges:
            continue
        gg = gallai(g)
        got = {frozenset((frozenset(gg.labeling[a - 1]), frozenset(gg.labeling[b - 1]))) for a, b in gg.graph.edges}
        assert got == brute.gallai_adjacent_pairs(g.edges)
        assert gg.graph.n == g.m


def test_triangle_free_gallai_is_line_graph():
    rng = random.Random(2)
    checked = 0
    while checked < 60:
        g = random_graph(rng, p=0.3)
        if not g.edges or any(g.has_edge(i, k) for (i, j) in g.edges for k in g.neighbors[j] if k != i):
            continue
        gg = gallai(g)
        got = {frozenset((frozenset(gg.labeling[a - 1]), frozenset(gg.labeling[b - 1]))) for a, b in gg.graph.edges}
        assert got == brute.line_graph_pairs(g.edges)
        checked += 1


def test_gallai_degree_formula():
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng)
        if not g.edges:
            continue
        gg = gallai(g)
        for k, (i, j) in enumerate(gg.labeling, 1):
            touching = sum(1 for e in g.edges if len({i, j} & set(e)) == 1)
            triangles = sum(1 for w in g.vertices if g.has_edge(i, w) and g.has_edge(j, w))
            assert gg.graph.degree(k) == touching - 2 * triangles


def test_omega_member_shape():
    rng = random.Random(4)
    for _ in range(100):
        g = random_graph(rng)
        if not g.edges:
            continue
        for F in gallai_indices(g):
            assert len(F) in (2, 3)
            if len(F) == 3:
                i, j, k = F
                present = g.has_edge(i, j) + g.has_edge(j, k) + g.has_edge(i, k)
                assert present == 2
            else:
                assert g.has_edge(*F)
        facets = gallai_complex(g).facets
        assert brute.is_antichain(facets)
