"""Independent oracles and shared property checks for the test suite."""

from __future__ import annotations

import random

from hatlab.autgroup import arc_orbits, automorphism_group, transitivity_profile
from hatlab.families import DegenerateAdjacency, Xe, Xo, build, validate
from hatlab.graphcore import Graph, all_cycles
from hatlab.hat import alternating_structure, cycle_code, hat_orientation


def random_graph(rng: random.Random, max_order: int, p: float | None = None) -> Graph:
    n = rng.randint(1, max_order)
    p = rng.random() if p is None else p
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def brute_automorphisms(g: Graph) -> set[tuple[int, ...]]:
    """Every automorphism, by plain backtracking over adjacency-preserving partial maps."""
    n = g.order
    adj = [set(a) for a in g.adj]
    deg = [len(a) for a in adj]
    out: set[tuple[int, ...]] = set()
    img = [-1] * n
    used = [False] * n

    def extend(x: int) -> None:
        if x == n:
            out.add(tuple(img))
            return
        for y in range(n):
            if used[y] or deg[y] != deg[x]:
                continue
            if all((w in adj[x]) == (img[w] in adj[y]) for w in range(x)):
                img[x] = y
                used[y] = True
                extend(x + 1)
                used[y] = False
        img[x] = -1

    extend(0)
    return out


def brute_cycles_through(g: Graph, v: int, length: int) -> set[frozenset]:
    """Cycles through v as edge sets, from every simple path starting at v (no symmetry pruning)."""
    found: set[frozenset] = set()
    adj = g.adj

    def walk(path: list[int]) -> None:
        x = path[-1]
        if len(path) == length:
            if v in adj[x]:
                edges = [frozenset((path[i], path[(i + 1) % length])) for i in range(length)]
                found.add(frozenset(edges))
            return
        for y in adj[x]:
            if y not in path:
                walk(path + [y])

    walk([v])
    return found


def as_edge_set(cycle) -> frozenset:
    c = list(cycle)
    return frozenset(frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c)))


def xo_xe_candidates(max_order: int) -> list:
    out = []
    for m in range(3, max_order // 3 + 1):
        for n in range(3, max_order // m + 1):
            for r in range(1, n):
                p = Xo(m, n, r)
                if not validate(p):
                    out.append(p)
                if m % 2 == 0 and n % 2 == 0:
                    for t in range(n):
                        p = Xe(m, n, r, t)
                        if not validate(p):
                            out.append(p)
    return out


def sample_hat_xo_xe(count: int, max_order: int, seed: int = 1):
    """The first ``count`` connected HAT graphs in a seeded random order of valid Xo/Xe parameters."""
    cands = xo_xe_candidates(max_order)
    random.Random(seed).shuffle(cands)
    found = []
    for p in cands:
        try:
            g = build(p)
        except DegenerateAdjacency:
            continue
        if not g.is_connected():
            continue
        aut = automorphism_group(g)
        if transitivity_profile(g, aut).half_arc:
            found.append((p, g, aut))
            if len(found) == count:
                break
    return found


def check_hat_properties(g: Graph, aut=None, *, eight_cycles: bool = True) -> None:
    """Structural invariants every quartic half-arc-transitive graph must satisfy."""
    aut = aut or automorphism_group(g)
    gens = aut.group.generators
    # no automorphism reverses an edge: the two arc orbits are mirror images
    assert arc_orbits(g, gens) == 2
    o = hat_orientation(g, aut)
    imgs = [h.images.tolist() for h in gens]
    for im in imgs:
        for u, v in o.arcs:
            assert o.is_arc(im[u], im[v])
    alt = alternating_structure(g, o)
    assert {len(c) for c in alt.cycles} == {2 * alt.radius}
    sets_by_pair = {}
    for i, c in enumerate(alt.cycles):
        for j in range(i + 1, len(alt.cycles)):
            inter = set(c) & set(alt.cycles[j])
            if inter:
                sets_by_pair[(i, j)] = inter
    assert all(len(s) == alt.attachment_number for s in sets_by_pair.values())
    if eight_cycles:
        for c in all_cycles(g, 8):
            code = cycle_code(o, c)
            for im in imgs:
                assert cycle_code(o, [im[x] for x in c]) == code
