from __future__ import annotations

import random

import pytest

from hatlab.autgroup import (are_isomorphic, automorphism_group, canonical_form, edge_orbits,
                             transitivity_profile, vertex_stabilizer_order)
from hatlab.families import Xo, Y, Z, build
from hatlab.graphcore import Graph, complete_graph, cycle_graph

from helpers import brute_automorphisms, random_graph


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + inner + [(i, i + 5) for i in range(5)])


def rook(n):
    idx = lambda a, b: a * n + b  # noqa: E731
    edges = set()
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if c != b:
                    edges.add(tuple(sorted((idx(a, b), idx(a, c)))))
                if c != a:
                    edges.add(tuple(sorted((idx(a, b), idx(c, b)))))
    return Graph(n * n, sorted(edges))


def shrikhande():
    steps = [(0, 1), (1, 0), (1, 1)]
    edges = set()
    for a in range(4):
        for b in range(4):
            for da, db in steps:
                u, v = a * 4 + b, ((a + da) % 4) * 4 + (b + db) % 4
                edges.add((min(u, v), max(u, v)))
    return Graph(16, sorted(edges))


def paley(q):
    sq = {(x * x) % q for x in range(1, q)}
    return Graph(q, [(u, v) for u in range(q) for v in range(u + 1, q) if (v - u) % q in sq])


@pytest.mark.parametrize("g,order", [
    (petersen(), 120), (paley(13), 78), (rook(4), 1152), (shrikhande(), 192),
    (complete_graph(6), 720), (cycle_graph(9), 18), (Graph(5, []), 120),
    (build(Xo(3, 9, 2)), 54), (build(Y(4, 48, 13, 44)), 384), (build(Z(20, 5, 9, 2)), 200),
])
def test_known_orders(g, order):
    aut = automorphism_group(g)
    assert aut.order == order
    for h in aut.generators:
        assert g.is_automorphism(h.images)


def test_brute_force_oracle():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng, 8)
        assert automorphism_group(g).group.order() == len(brute_automorphisms(g))


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(12)
    for _ in range(60):
        g = random_graph(rng, 14)
        perm = list(range(g.order))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(g) == canonical_form(h)
        ok, phi = are_isomorphic(g, h)
        assert ok and all(h.has_edge(phi[u], phi[v]) for u, v in g.edges())


def test_non_isomorphic_pairs():
    assert not are_isomorphic(rook(4), shrikhande())[0]
    assert not are_isomorphic(cycle_graph(6), Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (3, 5)]))[0]
    assert are_isomorphic(cycle_graph(5), cycle_graph(6)) == (False, None)


def test_transitivity_profiles():
    holt = transitivity_profile(build(Xo(3, 9, 2)))
    assert (holt.vertex, holt.edge, holt.arc, holt.half_arc) == (True, True, False, True)
    pet = transitivity_profile(petersen())
    assert pet.arc and not pet.half_arc
    path = Graph(3, [(0, 1), (1, 2)])
    assert not transitivity_profile(path).vertex


def test_stabilizer_and_edge_orbits():
    g = build(Xo(3, 9, 2))
    aut = automorphism_group(g)
    assert vertex_stabilizer_order(g, aut) == 2 == aut.stabilizer_order
    assert edge_orbits(g, aut.generators) == 1


def test_seed_does_not_change_results():
    g = build(Y(4, 48, 13, 44))
    a, b = automorphism_group(g, seed=0), automorphism_group(g, seed=5)
    assert a.order == b.order and a.canonical_form == b.canonical_form


def test_large_group_is_fast_and_exact():
    # r = -1 gives a wreath-like group far too large to enumerate
    g = build(Xo(4, 15, 14))
    aut = automorphism_group(g)
    assert aut.order == automorphism_group(g.relabel(list(reversed(range(g.order))))).order
    assert aut.order % g.order == 0
