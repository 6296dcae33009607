import random

import pytest
from hypothesis import given, settings, strategies as st

from latcovol import aut
from latcovol.aut import ColoredGraph, PermGroup, StabChain, mul
from latcovol.complex import Graph
from latcovol.links import complete_bipartite, petersen, projective_plane_incidence
from oracles import brute_force_automorphisms


def path(n):
    return Graph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def test_group_orders():
    assert aut.automorphism_group(petersen()).order() == 120
    assert aut.automorphism_group(complete_bipartite(3, 3)).order() == 72
    assert aut.automorphism_group(complete_bipartite(3, 2)).order() == 12
    assert aut.automorphism_group(projective_plane_incidence(2)).order() == 336
    assert aut.automorphism_group(complete_bipartite(4, 4)).order() == 1152
    assert PermGroup([], 5).order() == 1


def test_fixators():
    e = petersen().edges[0]
    assert aut.pointwise_fixator(petersen(), e).order() == 4
    k = complete_bipartite(3, 2)
    assert aut.pointwise_fixator(k, k.edges[0]).order() == 2
    h = projective_plane_incidence(2)
    flag = h.edges[0]
    assert aut.pointwise_fixator(h.as_colored(use_types=True), flag).order() == 8
    with pytest.raises(KeyError):
        aut.pointwise_fixator(petersen(), [99])


def test_type_preserving():
    assert aut.type_preserving_subgroup(projective_plane_incidence(2)).order() == 168
    assert aut.type_preserving_subgroup(complete_bipartite(3, 3)).order() == 36
    assert aut.type_preserving_subgroup(projective_plane_incidence(3)).order() == 5616
    with pytest.raises(ValueError):
        aut.type_preserving_subgroup(petersen())


def test_edge_transitivity():
    h = projective_plane_incidence(2)
    assert aut.is_edge_transitive(h, aut.type_preserving_subgroup(h))
    p4 = path(4)
    assert not aut.is_edge_transitive(p4, aut.automorphism_group(p4))


def test_restriction_kernel_image_trivial():
    g = ColoredGraph([0, 1], [], ["a", "b"])
    G = aut.automorphism_group(g)
    kernel, image = aut.restriction_kernel_image(G, [0])
    assert kernel.order() == 1 and image.value == 1


def test_restriction_not_invariant():
    g = path(3)
    G = aut.automorphism_group(g)
    with pytest.raises(ValueError):
        aut.restriction_kernel_image(G, [0])


def test_generators_are_automorphisms():
    for g in (petersen(), projective_plane_incidence(3), complete_bipartite(4, 3)):
        cg = g.as_colored()
        G = aut.automorphism_group(g)
        assert all(cg.is_automorphism(s) for s in G.generators)


def test_schreier_sims_from_scratch_agrees():
    for g in (petersen(), projective_plane_incidence(2), complete_bipartite(4, 4)):
        G = aut.automorphism_group(g)
        assert StabChain(G.degree, G.generators).order() == G.order()


def test_enumeration_agrees_with_chain():
    G = aut.automorphism_group(petersen())
    els = G.elements()
    assert len(els) == 120
    assert all(G.contains(x) for x in list(els)[:20])
    with pytest.raises(OverflowError):
        aut.automorphism_group(complete_bipartite(4, 4)).elements(limit=100)


def test_full_group_is_twice_type_preserving():
    for q in (2, 3, 4):
        g = projective_plane_incidence(q)
        assert aut.automorphism_group(g).order() == 2 * aut.type_preserving_subgroup(g).order()


def test_isomorphic():
    rng = random.Random(7)
    h = projective_plane_incidence(2).as_colored()
    assert aut.isomorphic(h, _relabel(h, rng))
    assert aut.isomorphic(petersen(), petersen())
    # K_{3,3} against the triangular prism plus a perfect matching: both cubic, not isomorphic
    prism = Graph.from_edges(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                        (0, 3), (1, 4), (2, 5)])
    assert not aut.isomorphic(complete_bipartite(3, 3), prism)
    assert not aut.isomorphic(path(4), path(5))


def _relabel(g: ColoredGraph, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return ColoredGraph([perm[i] for i in range(g.n)],
                        [(perm[a], perm[b]) for a, b in g.edges()],
                        [g.colors[i] for i in range(g.n)])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_order_invariant_under_relabeling(seed):
    rng = random.Random(seed)
    g = rng.choice([petersen(), projective_plane_incidence(2), complete_bipartite(3, 4)]).as_colored()
    assert aut.automorphism_group(_relabel(g, rng)).order() == aut.automorphism_group(g).order()


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.floats(0.1, 0.9), st.integers(0, 10**6), st.integers(1, 3))
def test_random_graphs_match_brute_force(n, density, seed, ncolors):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    colors = [rng.randrange(ncolors) for _ in range(n)]
    g = ColoredGraph(list(range(n)), edges, colors)
    G = aut.automorphism_group(g)
    assert G.order() == len(brute_force_automorphisms(g))


def test_mul_convention():
    p, q = (1, 2, 0), (1, 0, 2)
    assert mul(p, q) == tuple(q[p[i]] for i in range(3))
