"""Weak metacirculant representations, the four quotient classes, and the
arithmetic of Class II graphs Y(m,n;r,t)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .autgroup import AutResult, automorphism_group
from .families import Y, build
from .graphcore import Graph, quotient
from .modring import elem_order, geometric_sum
from .permgroup import Permutation, conjugation_exponent


class UnclassifiableQuotient(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, partial: list, examined: int):
        super().__init__(f"budget exhausted after {examined} candidate pairs; results are a lower bound")
        self.partial = partial
        self.examined = examined


class NotAnAutomorphism(RuntimeError):
    pass


@dataclass(frozen=True)
class WeakRepr:
    rho: Permutation
    sigma: Permutation
    m: int
    n: int
    r: int
    is_strict: bool

    def orbits(self) -> list[list[int]]:
        """rho-orbits ordered so that X_{i+1} = X_i sigma, X_0 containing vertex 0."""
        rho = self.rho.images.tolist()
        sig = self.sigma.images.tolist()
        x = 0
        out = []
        for _ in range(self.m):
            orb = [x]
            y = rho[x]
            while y != x:
                orb.append(y)
                y = rho[y]
            out.append(sorted(orb))
            x = sig[x]
        return out


@dataclass(frozen=True)
class ClassResult:
    label: str
    d_inn: int


def classify_repr(g: Graph, w: WeakRepr) -> ClassResult:
    """Match the quotient by rho-orbits against the four class templates."""
    orbs = w.orbits()
    q = quotient(g, orbs)
    m = w.m
    d_inn = q.inner_degree[0]
    if d_inn not in (0, 2):
        raise UnclassifiableQuotient(f"inner degree {d_inn} is neither 0 nor 2")
    prof = q.neighbors(0)
    mults = sorted(prof.values())
    if d_inn == 2:
        if m >= 3 and mults == [1, 1]:
            return ClassResult("II", 2)
        raise UnclassifiableQuotient("inner degree 2 but the quotient is not a cycle")
    if m >= 3 and mults == [2, 2]:
        return ClassResult("I", 0)
    if m % 2 == 0 and m >= 4 and mults == [1, 1, 2]:
        double = [b for b, k in prof.items() if k == 2]
        if double == [m // 2]:
            return ClassResult("III", 0)
        raise UnclassifiableQuotient("double edge does not join antipodal orbits")
    if mults == [1, 1, 1, 1]:
        return ClassResult("IV", 0)
    raise UnclassifiableQuotient(f"quotient profile {mults} matches no class")


def _is_semiregular(p: Permutation) -> tuple[int, int] | None:
    cyc = p.cycles()
    n = len(cyc[0])
    if n < 2 or any(len(c) != n for c in cyc):
        return None
    return len(cyc), n


def _orbit_cycle_period(rho: Permutation, sigma: Permutation, m: int) -> bool:
    """True iff sigma permutes the m rho-orbits as a single m-cycle."""
    label = [0] * rho.degree
    for k, c in enumerate(rho.cycles()):
        for v in c:
            label[v] = k
    sig = sigma.images.tolist()
    perm = [-1] * m
    for v in range(rho.degree):
        a, b = label[v], label[sig[v]]
        if perm[a] == -1:
            perm[a] = b
        elif perm[a] != b:
            return False
    x, steps = 0, 0
    while True:
        x = perm[x]
        steps += 1
        if x == 0:
            return steps == m
        if steps > m:
            return False


@dataclass
class ReprSearch:
    reprs: list[WeakRepr]
    exhaustive: bool
    examined: int
    classes: dict[str, int] = field(default_factory=dict)

    @property
    def class_set(self) -> set[str]:
        return {k for k, v in self.classes.items() if v}


def find_reprs(g: Graph, aut: AutResult | None = None, max_candidates: int = 10**6,
               *, raise_on_budget: bool = True) -> list[WeakRepr] | ReprSearch:
    """One weak representation per conjugacy class of cyclic subgroups <rho> that admits a sigma.

    A strict sigma (sigma^m fixing a vertex) is preferred when one exists.
    Raises BudgetExceeded once more than ``max_candidates`` (rho, sigma) pairs
    have been examined, unless ``raise_on_budget`` is false, in which case a
    ReprSearch carrying the exhaustiveness flag is returned.
    """
    aut = aut or automorphism_group(g)
    group = aut.group
    elems = list(group.elements())
    gens = group.generators
    elem_index = {e: i for i, e in enumerate(elems)}
    done = [False] * len(elems)
    out: list[WeakRepr] = []
    examined = 0
    exhaustive = True
    for i, rho in enumerate(elems):
        if done[i]:
            continue
        shape = _is_semiregular(rho)
        # mark every generator of every conjugate of <rho>
        cls = {rho}
        stack = [rho]
        while stack:
            x = stack.pop()
            for s in gens:
                y = x.conjugate(s)
                if y not in cls:
                    cls.add(y)
                    stack.append(y)
        order = rho.order()
        for x in cls:
            for k in range(1, order):
                if gcd(k, order) == 1:
                    done[elem_index[x ** k]] = True
        if shape is None:
            continue
        m, n = shape
        found = None
        for sigma in elems:
            if examined >= max_candidates:
                exhaustive = False
                break
            examined += 1
            r = conjugation_exponent(rho, sigma, n)
            if r is None or not _orbit_cycle_period(rho, sigma, m):
                continue
            strict = bool(((sigma ** m).images == np.arange(g.order)).any())
            found = WeakRepr(rho, sigma, m, n, r, strict)
            if strict:
                break
        if found is not None:
            out.append(found)
        if not exhaustive:
            break
    out.sort(key=lambda w: (w.m, w.n, w.rho.images.tobytes()))
    if not exhaustive and raise_on_budget:
        raise BudgetExceeded(out, examined)
    if raise_on_budget:
        return out
    return ReprSearch(out, exhaustive, examined)


def class_membership(g: Graph, aut: AutResult | None = None, budget: int = 10**6) -> ReprSearch:
    """Classes realized by the weak representations of g, with an exhaustiveness flag."""
    res = find_reprs(g, aut, budget, raise_on_budget=False)
    counts = {"I": 0, "II": 0, "III": 0, "IV": 0}
    for w in res.reprs:
        try:
            counts[classify_repr(g, w).label] += 1
        except UnclassifiableQuotient:
            counts.setdefault("unclassified", 0)
            counts["unclassified"] += 1
    res.classes = counts
    return res


# -- Class II arithmetic -----------------------------------------------------


@dataclass(frozen=True)
class ClassIIConditions:
    r_m_one: bool
    m_r1_zero: bool
    t_r1_zero: bool
    r1_sq_zero: bool
    same_subgroup: bool
    c: int | None
    a: int | None
    c_unique: bool
    a_unique: bool
    m_divides_n: bool
    d_m_gt_2: bool

    @property
    def iii(self) -> bool:
        return self.m_divides_n and self.d_m_gt_2

    @property
    def iv(self) -> bool:
        return (self.r_m_one and self.m_r1_zero and self.t_r1_zero and self.r1_sq_zero and self.same_subgroup
                and self.c is not None and self.a is not None)

    @property
    def all(self) -> bool:
        return self.iii and self.iv


def thm51_conditions(m: int, n: int, r: int, t: int) -> ClassIIConditions:
    """Evaluate each arithmetic clause for Y(m,n;r,t) independently."""
    r, t = r % n, t % n
    d_m = elem_order(n, m)
    cs = [c for c in range(d_m) if (t - c * m) % n == 0 and (m - c * t) % n == 0]
    as_ = [a for a in range(d_m) if (a * t - (r - 1)) % n == 0 and (-a * m - (r - 1)) % n == 0]
    return ClassIIConditions(
        r_m_one=pow(r, m, n) == 1 % n,
        m_r1_zero=(m * (r - 1)) % n == 0,
        t_r1_zero=(t * (r - 1)) % n == 0,
        r1_sq_zero=((r - 1) ** 2) % n == 0,
        same_subgroup=gcd(m, n) == gcd(t, n),
        c=cs[0] if cs else None,
        a=as_[0] if as_ else None,
        c_unique=len(cs) == 1,
        a_unique=len(as_) == 1,
        m_divides_n=n % m == 0,
        d_m_gt_2=n % m == 0 and n // m > 2,
    )


def _squarefree(x: int) -> bool:
    d = 2
    while d * d <= x:
        if x % (d * d) == 0:
            return False
        d += 1
    return True


def nontight_prefilter(m: int, n: int) -> bool:
    """Necessary condition for a non-tight graph: m, d_m even and n = 8 n1, n1 > 2, n1 even or not squarefree."""
    if n % m:
        return False
    d_m = n // m
    if m % 2 or d_m % 2 or n % 8:
        return False
    n1 = n // 8
    return n1 > 2 and (n1 % 2 == 0 or not _squarefree(n1))


def is_tightly_attached_classII(m: int, n: int, r: int, t: int) -> bool:
    """r - 1 lies in the subgroup of Z_n generated by t - (1 + r + ... + r^(m-1))."""
    y = (t - geometric_sum(n, r, m)) % n
    return (r - 1) % gcd(y, n) == 0


def strict_metacirculant_witness(m: int, n: int, r: int, t: int) -> int | None:
    """Least k with t + k(1 + r + ... + r^(m-1)) = 0 in Z_n, so that (sigma rho^k)^m = 1."""
    s = geometric_sum(n, r, m)
    for k in range(n):
        if (t + k * s) % n == 0:
            return k
    return None


def tau_map(m: int, n: int, r: int, t: int, *, check: bool = True) -> Permutation:
    """u_i^j -> u_b^(i + a t) where j r^(-i) = a m + b, 0 <= b < m."""
    if n % m:
        raise ValueError("tau needs m | n")
    r, t = r % n, t % n
    rinv = pow(r, -1, n)
    images = [0] * (m * n)
    for i in range(m):
        ri = pow(rinv, i, n)
        for j in range(n):
            a, b = divmod((j * ri) % n, m)
            images[i * n + j] = b * n + (i + a * t) % n
    try:
        tau = Permutation(images)
    except ValueError as exc:
        raise NotAnAutomorphism(f"tau is not a bijection: {exc}") from None
    if check and not build(Y(m, n, r, t)).is_automorphism(tau.images):
        raise NotAnAutomorphism(f"tau is not an automorphism of Y({m},{n};{r},{t})")
    return tau
