"""Permutations on {0..N-1} and permutation groups with a stabilizer chain.

Permutations act on the right, matching the exponent notation used for graph
automorphisms: ``x^(pq) = (x^p)^q``, so ``(p * q).images == q.images[p.images]``.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator, Sequence
from math import gcd, prod

import numpy as np


class DegreeMismatch(ValueError):
    pass


class Permutation:
    """An immutable bijection of {0..N-1}; ``images[i]`` is the image of ``i``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int] | np.ndarray, *, check: bool = True):
        arr = np.array(images, dtype=np.int64)
        if check:
            if arr.ndim != 1:
                raise ValueError("images must be one-dimensional")
            seen = np.zeros(len(arr), dtype=bool)
            if len(arr) and (arr.min() < 0 or arr.max() >= len(arr)):
                raise ValueError("images out of range")
            seen[arr] = True
            if not seen.all():
                raise ValueError("images do not form a bijection")
        arr.flags.writeable = False
        self.images = arr
        self._hash = None

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(np.arange(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(other.images[self.images], check=False)

    def inverse(self) -> Permutation:
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(len(self.images))
        return Permutation(inv, check=False)

    def __pow__(self, k: int) -> Permutation:
        result = np.arange(self.degree)
        base = self.images if k >= 0 else self.inverse().images
        k = abs(k)
        while k:
            if k & 1:
                result = base[result]
            base = base[base]
            k >>= 1
        return Permutation(result, check=False)

    def conjugate(self, s: Permutation) -> Permutation:
        """Return ``s^-1 * self * s``."""
        return s.inverse() * self * s

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def order(self) -> int:
        lengths = {len(c) for c in self.cycles()}
        out = 1
        for length in lengths:
            out = out * length // gcd(out, length)
        return out

    def cycles(self) -> list[list[int]]:
        seen = np.zeros(self.degree, dtype=bool)
        img = self.images.tolist()
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = img[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = img[x]
            out.append(cyc)
        return out

    def support(self) -> list[int]:
        return np.nonzero(self.images != np.arange(self.degree))[0].tolist()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images.tobytes())
        return self._hash

    def __repr__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return f"Permutation.identity({self.degree})"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def is_semiregular(p: Permutation, m: int, n: int) -> bool:
    """True iff ``p`` has exactly ``m`` cycles, all of length ``n``."""
    if m * n != p.degree:
        raise DegreeMismatch(f"m*n = {m * n} but degree is {p.degree}")
    cycles = p.cycles()
    return len(cycles) == m and all(len(c) == n for c in cycles)


def conjugation_exponent(p: Permutation, s: Permutation, n: int) -> int | None:
    """The unit r mod n with ``s^-1 p s = p^r``, or None if ``s`` does not normalize ``<p>``."""
    q = p.conjugate(s)
    target = q(0)
    x, r = 0, 0
    while True:
        if x == target:
            break
        x = p(x)
        r += 1
        if r >= n or x == 0:
            return None
    if gcd(r, n) != 1:
        return None
    return r if q == p ** r else None


class _Level:
    __slots__ = ("point", "transversal", "inverses")

    def __init__(self, point: int):
        self.point = point
        self.transversal: dict[int, np.ndarray] = {}
        self.inverses: dict[int, np.ndarray] = {}


class PermGroup:
    """Group generated by a list of permutations, with a base and strong generating set.

    The chain is built by random Schreier-Sims and then certified by sifting
    every Schreier generator, so the order is exact. A caller that already
    knows the order (``order_hint``) lets the random phase stop as soon as the
    transversals reach it, which skips the certification.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None, *, seed: int = 0,
                 order_hint: int | None = None):
        gens = [g for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group with no generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch("generators of differing degree")
        self.degree = degree
        self.generators = [g for g in gens if not g.is_identity()]
        self._seed = seed
        self._hint = order_hint
        self._levels: list[_Level] | None = None
        self._strong: list[tuple[int, np.ndarray]] = []

    # -- orbits -------------------------------------------------------------

    def orbit(self, point: int) -> set[int]:
        if not 0 <= point < self.degree:
            raise ValueError("point out of range")
        imgs = [g.images.tolist() for g in self.generators]
        seen = {point}
        stack = [point]
        while stack:
            x = stack.pop()
            for im in imgs:
                y = im[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def orbits(self) -> list[list[int]]:
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for x, y in enumerate(g.images.tolist()):
                a, b = find(x), find(y)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for x in range(self.degree):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def is_semiregular(self, p: Permutation, m: int, n: int) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch("permutation degree differs from group degree")
        return is_semiregular(p, m, n)

    # -- stabilizer chain ---------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self._chain()]

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._build()
        return self._levels

    def _level_gens(self, i: int) -> list[np.ndarray]:
        return [h for depth, h in self._strong if depth >= i]

    def _extend_orbit(self, i: int) -> None:
        lv = self._levels[i]
        gens = self._level_gens(i)
        if not lv.transversal:
            ident = np.arange(self.degree)
            lv.transversal[lv.point] = ident
            lv.inverses[lv.point] = ident
        queue = list(lv.transversal)
        while queue:
            x = queue.pop()
            u = lv.transversal[x]
            for h in gens:
                y = int(h[x])
                if y not in lv.transversal:
                    w = h[u]
                    lv.transversal[y] = w
                    inv = np.empty_like(w)
                    inv[w] = np.arange(self.degree)
                    lv.inverses[y] = inv
                    queue.append(y)

    def _sift(self, g: np.ndarray) -> tuple[np.ndarray, int]:
        for i, lv in enumerate(self._levels):
            x = int(g[lv.point])
            inv = lv.inverses.get(x)
            if inv is None:
                return g, i
            g = inv[g]
        return g, len(self._levels)

    def _add_strong(self, h: np.ndarray, depth: int) -> None:
        """Insert ``h`` (fixing the first ``depth`` base points) into the chain."""
        if depth == len(self._levels):
            moved = np.nonzero(h != np.arange(self.degree))[0]
            self._levels.append(_Level(int(moved[0])))
        self._strong.append((depth, h))
        for i in range(depth + 1):
            self._extend_orbit(i)

    def _build(self) -> None:
        self._levels = []
        self._strong = []
        ident = np.arange(self.degree)
        for g in self.generators:
            h, depth = self._sift(g.images.copy())
            if not np.array_equal(h, ident):
                self._add_strong(h, depth)
        if not self.generators:
            return
        rng = random.Random(self._seed)
        # product replacement pool for random elements
        pool = [g.images.copy() for g in self.generators]
        while len(pool) < 10:
            pool.append(pool[len(pool) % len(self.generators)].copy())
        acc = ident.copy()
        for _ in range(50):
            acc, pool = self._pr_step(rng, pool, acc)
        quiet = 0
        patience = 25 if self._hint is None else 500
        while quiet < patience:
            if self._hint is not None and self.order() >= self._hint:
                break
            acc, pool = self._pr_step(rng, pool, acc)
            h, depth = self._sift(acc)
            if np.array_equal(h, ident):
                quiet += 1
            else:
                quiet = 0
                self._add_strong(h, depth)
        if self._hint is not None and self.order() == self._hint:
            return
        while self._verify_once():
            pass

    @staticmethod
    def _pr_step(rng: random.Random, pool: list[np.ndarray], acc: np.ndarray):
        i, j = rng.sample(range(len(pool)), 2)
        if rng.random() < 0.5:
            pool[i] = pool[j][pool[i]]
        else:
            pool[i] = pool[i][pool[j]]
        acc = pool[i][acc]
        return acc, pool

    def _verify_once(self) -> bool:
        """Sift all Schreier generators; add the first failing residue. True if changed."""
        ident = np.arange(self.degree)
        for i in range(len(self._levels) - 1, -1, -1):
            lv = self._levels[i]
            gens = self._level_gens(i)
            for x, u in list(lv.transversal.items()):
                for h in gens:
                    y = int(h[x])
                    schreier = lv.inverses[y][h[u]]
                    res, depth = self._sift(schreier)
                    if not np.array_equal(res, ident):
                        self._add_strong(res, depth)
                        return True
        return False

    def order(self) -> int:
        if self._levels is None:
            self._build()
        return prod(len(lv.transversal) for lv in self._levels)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        self._chain()
        res, depth = self._sift(p.images.copy())
        return depth == len(self._levels) and np.array_equal(res, np.arange(self.degree))

    __contains__ = contains

    def strong_generators(self) -> list[Permutation]:
        self._chain()
        return [Permutation(h, check=False) for _, h in self._strong]

    def elements(self) -> Iterator[Permutation]:
        """Every element, as products of transversal representatives."""
        levels = self._chain()
        elems = [np.arange(self.degree)]
        for lv in reversed(levels):
            elems = [u[e] for u in lv.transversal.values() for e in elems]
        for e in elems:
            yield Permutation(e, check=False)

    def random_element(self, rng: random.Random) -> Permutation:
        g = np.arange(self.degree)
        for lv in reversed(self._chain()):
            u = lv.transversal[rng.choice(sorted(lv.transversal))]
            g = u[g]
        return Permutation(g, check=False)

    def stabilizer_order(self, point: int) -> int:
        return self.order() // len(self.orbit(point))


def group_order(g: PermGroup) -> int:
    return g.order()


def orbit(g: PermGroup, point: int) -> set[int]:
    return g.orbit(point)
