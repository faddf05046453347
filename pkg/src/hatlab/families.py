"""The four quartic metacirculant families Xo, Xe, Y and Z.

Vertex ``u_i^j`` (i in Z_m, j in Z_n) has index ``i*n + j`` everywhere in the
package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graphcore import Graph, GraphError
from .modring import is_unit
from .permgroup import Permutation

FAMILIES = ("Xo", "Xe", "Y", "Z")


class InvalidParams(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class DegenerateAdjacency(GraphError):
    pass


@dataclass(frozen=True, order=True)
class MetaParams:
    family: str
    m: int
    n: int
    r: int
    t: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.m >= 1 and self.n >= 1:
            object.__setattr__(self, "r", self.r % self.n)
            if self.t is not None:
                object.__setattr__(self, "t", self.t % self.n)
            if self.k is not None:
                object.__setattr__(self, "k", self.k % self.m)

    @property
    def order(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        if self.family == "Xo":
            return f"Xo({self.m},{self.n};{self.r})"
        if self.family == "Z":
            return f"Z({self.m},{self.n};{self.k},{self.r})"
        return f"{self.family}({self.m},{self.n};{self.r},{self.t})"

    def vertex(self, i: int, j: int) -> int:
        return (i % self.m) * self.n + (j % self.n)

    def label(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n)


def Xo(m: int, n: int, r: int) -> MetaParams:
    return MetaParams("Xo", m, n, r)


def Xe(m: int, n: int, r: int, t: int) -> MetaParams:
    return MetaParams("Xe", m, n, r, t=t)


def Y(m: int, n: int, r: int, t: int) -> MetaParams:
    return MetaParams("Y", m, n, r, t=t)


def Z(m: int, n: int, k: int, r: int) -> MetaParams:
    return MetaParams("Z", m, n, r, k=k)


_PARAM_RE = re.compile(r"^(Xo|Xe|Y|Z)\((-?\d+),(-?\d+);(-?\d+)(?:,(-?\d+))?\)$")


def parse_params(text: str) -> MetaParams:
    """Parse ``Xo(m,n;r)``, ``Xe(m,n;r,t)``, ``Y(m,n;r,t)`` or ``Z(m,n;k,r)``."""
    compact = re.sub(r"\s+", "", text)
    match = _PARAM_RE.match(compact)
    if not match:
        raise ValueError(f"cannot parse parameters {text!r}")
    fam, m, n, a, b = match.groups()
    m, n, a = int(m), int(n), int(a)
    if fam == "Xo":
        if b is not None:
            raise ValueError("Xo takes a single residue: Xo(m,n;r)")
        return MetaParams(fam, m, n, a)
    if b is None:
        raise ValueError(f"{fam} takes two residues")
    if fam == "Z":
        return MetaParams(fam, m, n, int(b), k=a)
    return MetaParams(fam, m, n, a, t=int(b))


def validate(p: MetaParams) -> list[str]:
    """Violated family conditions, as messages; empty when the parameters are valid."""
    out: list[str] = []
    m, n, r = p.m, p.n, p.r
    fam = p.family
    min_m = {"Xo": 3, "Xe": 4, "Y": 3, "Z": 5}[fam]
    min_n = {"Xo": 3, "Xe": 4, "Y": 3, "Z": 3}[fam]
    if m < min_m:
        out.append(f"m >= {min_m} required")
    if n < min_n:
        out.append(f"n >= {min_n} required")
    if fam == "Xo" and n % 2 == 0:
        out.append("n must be odd")
    if fam == "Xe":
        if m % 2:
            out.append("m must be even")
        if n % 2:
            out.append("n must be even")
    if out and (m < 1 or n < 1):
        return out
    if not is_unit(n, r):
        out.append("r must be a unit mod n")
    rm = pow(r, m, n) if n > 1 else 0
    if fam == "Xo":
        if rm not in (1 % n, (-1) % n):
            out.append("r^m must be 1 or -1")
    elif rm != 1 % n:
        out.append("r^m must be 1")
    if fam in ("Xe", "Y"):
        if p.t is None:
            out.append("t is required")
        elif (p.t * (r - 1)) % n:
            out.append("t(r-1) must be 0")
    if fam == "Z":
        if p.k is None:
            out.append("k is required")
        elif p.k in (0, 1 % m, (-1) % m):
            out.append("k must not be 0, 1 or -1 mod m")
    return out


def _require_valid(p: MetaParams) -> None:
    bad = validate(p)
    if bad:
        raise InvalidParams(bad)


def adjacency_pairs(p: MetaParams) -> list[tuple[int, int]]:
    """The defining adjacencies, one pair per rule application (may repeat edges)."""
    m, n, r = p.m, p.n, p.r
    v = p.vertex
    rp = [pow(r, i, n) for i in range(m)]
    pairs = []
    for i in range(m):
        for j in range(n):
            a = v(i, j)
            if p.family == "Xo":
                pairs += [(a, v(i + 1, j + rp[i])), (a, v(i + 1, j - rp[i]))]
            elif p.family == "Xe":
                if i != m - 1:
                    pairs += [(a, v(i + 1, j)), (a, v(i + 1, j + rp[i]))]
                else:
                    pairs += [(a, v(0, j + p.t)), (a, v(0, j + rp[m - 1] + p.t))]
            elif p.family == "Y":
                if i != m - 1:
                    pairs += [(a, v(i, j + rp[i])), (a, v(i + 1, j))]
                else:
                    pairs += [(a, v(m - 1, j + rp[m - 1])), (a, v(0, j + p.t))]
            else:
                pairs += [(a, v(i + 1, j)), (a, v(i + p.k, j + rp[i]))]
    return pairs


def build(p: MetaParams) -> Graph:
    """The graph of the family on m*n vertices; raises if the rules collapse edges."""
    _require_valid(p)
    pairs = adjacency_pairs(p)
    edges = set()
    for a, b in pairs:
        if a == b:
            raise DegenerateAdjacency(f"{p} produces a loop at vertex {a}")
        e = (min(a, b), max(a, b))
        if e in edges:
            raise DegenerateAdjacency(f"{p} produces a multi-edge {e}")
        edges.add(e)
    g = Graph(p.order, sorted(edges))
    if not g.is_regular(4):
        raise DegenerateAdjacency(f"{p} is not quartic")
    return g


def canonical_pair(p: MetaParams) -> tuple[Permutation, Permutation]:
    """The semiregular ``rho`` (j -> j+1) and the orbit-cycling ``sigma`` of the family."""
    _require_valid(p)
    m, n, r = p.m, p.n, p.r
    rho = [0] * p.order
    sigma = [0] * p.order
    for i in range(m):
        for j in range(n):
            a = p.vertex(i, j)
            rho[a] = p.vertex(i, j + 1)
            if p.family in ("Xe", "Y") and i == m - 1:
                sigma[a] = p.vertex(0, r * j + p.t)
            else:
                sigma[a] = p.vertex(i + 1, r * j)
    return Permutation(rho), Permutation(sigma)
