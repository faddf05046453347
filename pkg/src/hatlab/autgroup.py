"""Automorphism groups, canonical forms and isomorphism by partition refinement.

The search tree is the usual individualize-and-refine tree.  Leaves are
compared by (trace invariants along the path, relabeled edge certificate);
the least leaf defines the canonical labeling.  Automorphisms come from leaves
whose key equals the first or the best leaf, and prune the tree through orbits
of the stabilizer of the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernel
from .graphcore import Graph
from .permgroup import Permutation, PermGroup


class NotVertexTransitive(ValueError):
    pass


@dataclass
class AutResult:
    group: PermGroup
    canonical_form: tuple[tuple[int, int], ...]
    canonical_labeling: tuple[int, ...]
    stabilizer_order: int
    leaves: int = 0

    @property
    def order(self) -> int:
        return self.group.order()

    @property
    def generators(self) -> list[Permutation]:
        return self.group.generators


class _State:
    __slots__ = ("lab", "pos", "cstart", "clen", "ncells")

    def __init__(self, lab, pos, cstart, clen, ncells):
        self.lab, self.pos, self.cstart, self.clen, self.ncells = lab, pos, cstart, clen, ncells

    def copy(self) -> _State:
        return _State(self.lab.copy(), self.pos.copy(), self.cstart.copy(), self.clen.copy(), self.ncells)


def _orbit_reps(gens: list[np.ndarray], fixed: list[int], cell: list[int], n: int) -> set[int]:
    """Least members of the cell's orbits under the generators fixing ``fixed`` pointwise."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[f] != f for f in fixed):
            continue
        for x, y in enumerate(g.tolist()):
            a, b = find(x), find(y)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return {find(v) for v in cell}


class _Search:
    def __init__(self, g: Graph, refine):
        self.g = g
        self.n = g.order
        self.refine = refine
        self.xadj, self.adjncy = g.csr()
        e = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)
        self.eu, self.ev = e[:, 0], e[:, 1]
        self.gens: list[np.ndarray] = []
        self.first = None  # (inv, cert, pos)
        self.best = None
        self.leaves = 0

    def _refine(self, s: _State, splitters: list[int]) -> int:
        s.ncells, h = self.refine(self.xadj, self.adjncy, s.lab, s.pos, s.cstart, s.clen, splitters, s.ncells)
        return h

    def _cert(self, pos: np.ndarray) -> bytes:
        a, b = pos[self.eu].astype(np.int64), pos[self.ev].astype(np.int64)
        keys = np.sort(np.minimum(a, b) * self.n + np.maximum(a, b))
        return keys.tobytes()

    def _target(self, s: _State) -> int:
        best_c, best_sz = -1, 1
        c = 0
        while c < self.n:
            sz = int(s.clen[c])
            if sz > best_sz:
                best_c, best_sz = c, sz
            c += sz
        return best_c

    def run(self) -> None:
        n = self.n
        lab = np.arange(n, dtype=np.int32)
        s = _State(lab, lab.copy(), np.zeros(n, dtype=np.int32), np.zeros(n, dtype=np.int32), 1)
        s.clen[0] = n
        h = self._refine(s, [0])
        self._search(s, (h,), [])

    def _automorphism(self, pos_a: np.ndarray, lab_b: np.ndarray) -> None:
        gamma = lab_b[pos_a].astype(np.int64)
        if not np.array_equal(gamma, np.arange(self.n)):
            self.gens.append(gamma)

    def _common(self, path: list[int], other: list[int]) -> int:
        d = 0
        while d < len(path) and d < len(other) and path[d] == other[d]:
            d += 1
        return d

    def _leaf(self, s: _State, inv: tuple, path: list[int]) -> int | None:
        """Process a leaf; return the depth to jump back to, or None to continue."""
        self.leaves += 1
        cert = self._cert(s.pos)
        rec = (inv, cert, s.pos.copy(), s.lab.copy(), list(path))
        if self.first is None:
            self.first = self.best = rec
            return None
        if inv == self.first[0] and cert == self.first[1]:
            self._automorphism(self.first[2], s.lab)
            return self._common(path, self.first[4])
        if inv == self.best[0] and cert == self.best[1]:
            self._automorphism(self.best[2], s.lab)
            return self._common(path, self.best[4])
        if (inv, cert) < (self.best[0], self.best[1]):
            self.best = rec
        return None

    def _keep(self, inv: tuple) -> bool:
        if self.first is None:
            return True
        d = len(inv)
        if inv == self.first[0][:d]:
            return True
        return inv <= self.best[0][:d]

    def _search(self, s: _State, inv: tuple, path: list[int]) -> int | None:
        if s.ncells == self.n:
            return self._leaf(s, inv, path)
        c = self._target(s)
        cell = sorted(int(v) for v in s.lab[c:c + int(s.clen[c])])
        tried: list[int] = []
        ngens = -1
        reps: set[int] = set()
        for v in cell:
            if tried:
                if len(self.gens) != ngens:
                    ngens = len(self.gens)
                    reps = _orbit_reps(self.gens, path, cell, self.n)
                if v not in reps:
                    continue
            tried.append(v)
            child = s.copy()
            pv = int(child.pos[v])
            u = int(child.lab[c])
            child.lab[c], child.lab[pv] = v, u
            child.pos[v], child.pos[u] = c, pv
            sz = int(child.clen[c])
            child.clen[c] = 1
            child.clen[c + 1] = sz - 1
            child.cstart[c + 1:c + sz] = c + 1
            child.ncells += 1
            h = self._refine(child, [c])
            cinv = inv + (h,)
            if not self._keep(cinv):
                continue
            jump = self._search(child, cinv, path + [v])
            if jump is not None and jump < len(path):
                return jump
        return None


def _path_order(srch: _Search) -> int:
    """Product of the orbit lengths along the first path, each under the found
    generators fixing the earlier path points: the order of the group they generate."""
    path = srch.first[4]
    total = 1
    for d, v in enumerate(path):
        gens = [x for x in srch.gens if all(x[path[i]] == path[i] for i in range(d))]
        orb = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for h in gens:
                y = int(h[x])
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        total *= len(orb)
    return total


def _search(g: Graph, refine=None) -> _Search:
    srch = _Search(g, refine or kernel.refine)
    if g.order:
        srch.run()
    return srch


def automorphism_group(g: Graph, *, refine=None, seed: int = 0) -> AutResult:
    """Generators of Aut(g), its canonical form and labeling, and the stabilizer order of vertex 0."""
    srch = _search(g, refine)
    n = g.order
    gens = [Permutation(x, check=False) for x in srch.gens]
    hint = _path_order(srch) if n else None
    group = PermGroup(gens, degree=n, seed=seed, order_hint=hint)
    if n == 0:
        return AutResult(group, (), (), 1, 0)
    pos = srch.best[2]
    form = tuple(sorted((min(int(pos[u]), int(pos[v])), max(int(pos[u]), int(pos[v]))) for u, v in g.edges()))
    stab = group.order() // len(group.orbit(0))
    return AutResult(group, form, tuple(int(x) for x in pos), stab, srch.leaves)


def canonical_form(g: Graph, *, refine=None) -> tuple[int, tuple[tuple[int, int], ...]]:
    """(order, canonical edge list); equal exactly for isomorphic graphs."""
    srch = _search(g, refine)
    if g.order == 0:
        return 0, ()
    pos = srch.best[2]
    form = tuple(sorted((min(int(pos[u]), int(pos[v])), max(int(pos[u]), int(pos[v]))) for u, v in g.edges()))
    return g.order, form


def are_isomorphic(g1: Graph, g2: Graph) -> tuple[bool, list[int] | None]:
    """Decide isomorphism; on success also return ``phi`` with ``phi[v]`` the image of v."""
    if g1.order != g2.order or g1.size != g2.size or sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return False, None
    a = automorphism_group(g1)
    b = automorphism_group(g2)
    if a.canonical_form != b.canonical_form:
        return False, None
    inv_b = [0] * g2.order
    for v, p in enumerate(b.canonical_labeling):
        inv_b[p] = v
    phi = [inv_b[p] for p in a.canonical_labeling]
    return True, phi


@dataclass(frozen=True)
class TransitivityProfile:
    vertex: bool
    edge: bool
    arc: bool
    half_arc: bool

    def as_dict(self) -> dict:
        return {"vertex": self.vertex, "edge": self.edge, "arc": self.arc, "half_arc": self.half_arc}


def _count_orbits(items: list[tuple[int, int]], gens: list[Permutation], key) -> int:
    index = {it: i for i, it in enumerate(items)}
    parent = list(range(len(items)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        im = g.images.tolist()
        for i, (u, v) in enumerate(items):
            j = index[key(im[u], im[v])]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return len({find(i) for i in range(len(items))})


def edge_orbits(g: Graph, gens: list[Permutation]) -> int:
    return _count_orbits(g.edges(), gens, lambda a, b: (min(a, b), max(a, b)))


def arc_orbits(g: Graph, gens: list[Permutation]) -> int:
    arcs = [(u, v) for u in range(g.order) for v in g.adj[u]]
    return _count_orbits(arcs, gens, lambda a, b: (a, b))


def transitivity_profile(g: Graph, aut: AutResult | None = None) -> TransitivityProfile:
    aut = aut or automorphism_group(g)
    gens = aut.group.generators
    vt = aut.group.is_transitive()
    et = edge_orbits(g, gens) <= 1
    at = arc_orbits(g, gens) <= 1
    return TransitivityProfile(vt, et, at, vt and et and not at)


def vertex_stabilizer_order(g: Graph, aut: AutResult | None = None) -> int:
    aut = aut or automorphism_group(g)
    if not aut.group.is_transitive():
        raise NotVertexTransitive("the automorphism group has more than one vertex orbit")
    return aut.group.order() // g.order
