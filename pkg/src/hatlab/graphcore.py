"""Undirected simple graphs, orientations, quotients by vertex partitions, cycles."""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class GraphError(ValueError):
    pass


class NonConstantDegree(GraphError):
    pass


class NotACycle(GraphError):
    pass


class Graph:
    """Simple undirected graph on vertices 0..order-1 with sorted adjacency lists."""

    __slots__ = ("order", "adj", "_edges")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]]):
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if v in nbrs[u]:
                raise GraphError(f"multi-edge between {u} and {v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.order = order
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._edges = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> Graph:
        """Build from neighbor lists; duplicate listings of one edge are merged."""
        edges = {(min(u, v), max(u, v)) for u, nb in enumerate(adj) for v in nb}
        return cls(len(adj), sorted(edges))

    def edges(self) -> list[tuple[int, int]]:
        if self._edges is None:
            self._edges = [(u, v) for u in range(self.order) for v in self.adj[u] if u < v]
        return self._edges

    @property
    def size(self) -> int:
        return len(self.edges())

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_regular(self, k: int | None = None) -> bool:
        degs = {len(a) for a in self.adj}
        if k is None:
            return len(degs) <= 1
        return degs <= {k}

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adj[u]
        i = bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in compressed sparse row form (offsets, neighbors), int32."""
        xadj = np.zeros(self.order + 1, dtype=np.int32)
        xadj[1:] = np.cumsum([len(a) for a in self.adj])
        nbrs = np.fromiter((v for a in self.adj for v in a), dtype=np.int32, count=int(xadj[-1]))
        return xadj, nbrs

    def relabel(self, images: Sequence[int]) -> Graph:
        """The graph with vertex ``v`` renamed ``images[v]``."""
        return Graph(self.order, [(images[u], images[v]) for u, v in self.edges()])

    def components(self) -> list[list[int]]:
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.order <= 1 or len(self.components()) == 1

    def is_automorphism(self, images: Sequence[int]) -> bool:
        return all(self.has_edge(int(images[u]), int(images[v])) for u, v in self.edges())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.order == other.order and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"

    # -- HATG v1 text format ----------------------------------------------

    def to_hatg(self) -> str:
        lines = ["hatg 1", f"n {self.order}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_hatg(cls, text: str) -> Graph:
        lines = text.splitlines()
        if len(lines) < 2 or lines[0].strip() != "hatg 1":
            raise GraphError("not a HATG v1 file")
        head = lines[1].split()
        if len(head) != 2 or head[0] != "n":
            raise GraphError("missing order line")
        order = int(head[1])
        edges = []
        for lineno, line in enumerate(lines[2:], start=3):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'u v'")
            u, v = int(parts[0]), int(parts[1])
            if u >= v:
                raise GraphError(f"line {lineno}: edges must be written with u < v")
            edges.append((u, v))
        if edges != sorted(edges):
            raise GraphError("edges not sorted")
        return cls(order, edges)

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_hatg(), encoding="ascii")

    @classmethod
    def read(cls, path: str | Path) -> Graph:
        return cls.from_hatg(Path(path).read_text(encoding="ascii"))


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@dataclass(frozen=True)
class Orientation:
    """One arc per edge of ``base``."""

    base: Graph
    arcs: frozenset[tuple[int, int]]
    out_adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    in_adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        if len(arcs) != base.size:
            raise GraphError("orientation must choose exactly one arc per edge")
        for u, v in arcs:
            if not base.has_edge(u, v) or (v, u) in arcs:
                raise GraphError(f"arc ({u}, {v}) invalid for this graph")
        out = [[] for _ in range(base.order)]
        inn = [[] for _ in range(base.order)]
        for u, v in arcs:
            out[u].append(v)
            inn[v].append(u)
        return cls(base, arcs, tuple(tuple(sorted(x)) for x in out), tuple(tuple(sorted(x)) for x in inn))

    def is_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def head(self, u: int, v: int) -> int:
        if (u, v) in self.arcs:
            return v
        if (v, u) in self.arcs:
            return u
        raise GraphError(f"({u}, {v}) is not an edge")

    def reversed(self) -> Orientation:
        return Orientation.from_arcs(self.base, ((v, u) for u, v in self.arcs))

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class QuotientMultigraph:
    """Quotient of a graph by a vertex partition.

    ``mult[(a, b)]`` (a < b) is the number of neighbors a vertex of class ``a``
    has in class ``b``; ``loops[a]`` is half the inner degree of class ``a``.
    """

    classes: tuple[tuple[int, ...], ...]
    mult: dict[tuple[int, int], int]
    loops: tuple[int, ...]
    inner_degree: tuple[int, ...]

    def neighbors(self, a: int) -> dict[int, int]:
        out = {}
        for (x, y), k in self.mult.items():
            if x == a:
                out[y] = k
            elif y == a:
                out[x] = k
        return out

    def valency(self, a: int) -> int:
        return sum(self.neighbors(a).values()) + 2 * self.loops[a]


def quotient(g: Graph, partition: Sequence[Sequence[int]]) -> QuotientMultigraph:
    cls_of = [-1] * g.order
    for ci, cls in enumerate(partition):
        for v in cls:
            if cls_of[v] != -1:
                raise GraphError(f"vertex {v} appears in two classes")
            cls_of[v] = ci
    if -1 in cls_of:
        raise GraphError("partition does not cover every vertex")
    k = len(partition)
    mult: dict[tuple[int, int], int] = {}
    inner = []
    for ci, cls in enumerate(partition):
        profile = None
        for v in cls:
            counts: dict[int, int] = {}
            for w in g.adj[v]:
                counts[cls_of[w]] = counts.get(cls_of[w], 0) + 1
            if profile is None:
                profile = counts
            elif counts != profile:
                raise NonConstantDegree(f"class {ci} vertices see the classes differently")
        profile = profile or {}
        inner.append(profile.get(ci, 0))
        for cj, c in profile.items():
            if cj == ci:
                continue
            key = (min(ci, cj), max(ci, cj))
            if key in mult and mult[key] != c:
                raise NonConstantDegree(f"classes {ci} and {cj} have asymmetric multiplicity")
            mult[key] = c
    for d in inner:
        if d % 2:
            raise NonConstantDegree("odd inner degree cannot come from a cyclic orbit structure")
    return QuotientMultigraph(
        tuple(tuple(c) for c in partition), mult, tuple(d // 2 for d in inner), tuple(inner)
    )


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for s in range(g.order):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            dx = dist[x]
            if 2 * dx + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dx + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dx + dist[y] + 1)
    return best


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation or reflection of a cyclic vertex sequence."""
    seq = list(seq)
    n = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for i in range(n):
            cand = tuple(s[i:] + s[:i])
            if best is None or cand < best:
                best = cand
    return best


def cycles_through(g: Graph, v: int, length: int) -> list[tuple[int, ...]]:
    """All simple cycles of the given length through ``v``, canonicalized and sorted."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    adj = g.adj
    found = set()
    path = [v]
    on_path = {v}

    def dfs(x: int) -> None:
        if len(path) == length:
            if v in adj[x] and path[1] < path[-1]:
                found.add(canonical_cycle(path))
            return
        for y in adj[x]:
            if y not in on_path:
                path.append(y)
                on_path.add(y)
                dfs(y)
                path.pop()
                on_path.discard(y)

    dfs(v)
    return sorted(found)


def all_cycles(g: Graph, length: int) -> list[tuple[int, ...]]:
    """Every simple cycle of the given length, each once, in canonical form."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    adj = g.adj
    out = []
    for v in range(g.order):
        path = [v]
        on_path = {v}
        stack = [iter([y for y in adj[v] if y > v])]
        while stack:
            y = next(stack[-1], None)
            if y is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if y in on_path:
                continue
            path.append(y)
            on_path.add(y)
            if len(path) == length:
                if v in adj[y] and path[1] < path[-1]:
                    out.append(tuple(path))
                on_path.discard(path.pop())
            else:
                stack.append(iter([z for z in adj[y] if z > v]))
    out.sort()
    return out


def is_cycle(g: Graph, seq: Sequence[int]) -> bool:
    n = len(seq)
    return n >= 3 and len(set(seq)) == n and all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n))
