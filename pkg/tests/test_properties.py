"""Property tests: invariants checked against brute-force oracles."""

from hypothesis import given, settings
from hypothesis import strategies as st

from gallaisc.complex import euler_characteristic, f_vector, make_complex
from gallaisc.gallai import gallai, gallai_complex
from gallaisc.graph import is_isomorphic, make_graph, relabel
from gallaisc.ideal import edge_ideal, facet_complex, is_f_ideal, make_ideal, nonface_complex
from gallaisc.complex import enumerate_faces

import brute


@st.composite
def graphs(draw, min_n=1, max_n=8, min_edges=0):
    n = draw(st.integers(max(min_n, 2 if min_edges else 1), max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=min_edges, unique=True)) if pairs else []
    return make_graph(n, chosen)


@st.composite
def facet_families(draw, max_ground=9):
    ground = draw(st.integers(1, max_ground))
    face = st.frozensets(st.integers(1, ground), min_size=1, max_size=min(ground, 5))
    return draw(st.lists(face, min_size=1, max_size=8))


@given(graphs())
def test_isomorphic_reflexive(g):
    assert is_isomorphic(g, g)


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_isomorphic_symmetric_and_relabel(g, rnd):
    image = list(g.vertices)
    rnd.shuffle(image)
    h = relabel(g, image)
    assert is_isomorphic(g, h) and is_isomorphic(h, g)


@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphic_matches_brute_force(g, h):
    assert is_isomorphic(g, h) == is_isomorphic(h, g) == brute.isomorphic(g.n, g.edges, h.n, h.edges)


@given(graphs())
def test_make_graph_idempotent(g):
    assert make_graph(g.n, g.edges) == g


@given(facet_families())
def test_fvector_matches_subset_count(family):
    c = make_complex(family)
    assert f_vector(c) == brute.fvector_by_subsets(c.ground, family)
    assert brute.is_antichain(c.facets)
    assert sum(f_vector(c)) == sum(len(layer) for layer in enumerate_faces(c))


@given(graphs(min_edges=1))
def test_gallai_vertex_count(g):
    assert gallai(g).graph.n == g.m


@given(graphs(min_edges=1))
def test_gallai_complex_chi_matches_brute(g):
    c = gallai_complex(g)
    fv = brute.fvector_by_subsets(c.ground, c.facets)
    assert euler_characteristic(f_vector(c)) == euler_characteristic(fv)


@given(graphs(min_edges=1))
def test_nonface_complex_is_independence_complex(g):
    faces = {F for layer in enumerate_faces(nonface_complex(edge_ideal(g))) for F in layer}
    assert faces == brute.independent_sets(g.n, g.edges)


@given(graphs(min_edges=1), st.randoms(use_true_random=False))
def test_f_ideal_permutation_invariant(g, rnd):
    image = list(g.vertices)
    rnd.shuffle(image)
    assert is_f_ideal(edge_ideal(g)).is_f_ideal == is_f_ideal(edge_ideal(relabel(g, image))).is_f_ideal


@given(facet_families())
def test_facet_duality_round_trip(family):
    antichain = [F for F in set(family) if not any(F < G for G in family)]
    n = max(max(F) for F in antichain)
    ideal = make_ideal(n, antichain)
    assert set(map(frozenset, facet_complex(ideal).facets)) == set(antichain)


@settings(max_examples=50)
@given(graphs(max_n=8, min_edges=1), st.data())
def test_adding_generator_shrinks_nonface_fvector(g, data):
    ideal = edge_ideal(g)
    extra = data.draw(st.frozensets(st.integers(1, g.n), min_size=1, max_size=3))
    bigger = make_ideal(g.n, list(ideal.gens) + [tuple(extra)])
    small, large = f_vector(nonface_complex(bigger)), f_vector(nonface_complex(ideal))
    assert len(small) <= len(large)
    assert all(a <= b for a, b in zip(small, large))
