"""Arithmetic in the residue ring Z_n."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class CoprimeViolation(ValueError):
    pass


@dataclass(frozen=True)
class ZnCtx:
    """The ring Z_n; every residue crossing the API is normalized to 0..n-1."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")

    def norm(self, x: int) -> int:
        return x % self.n

    def is_unit(self, x: int) -> bool:
        return is_unit(self, x)

    def elem_order(self, x: int) -> int:
        return elem_order(self, x)

    def subgroup(self, x: int) -> frozenset[int]:
        return subgroup_generated(self, x)

    def units(self) -> list[int]:
        return [x for x in range(self.n) if gcd(x, self.n) == 1]


def _ctx(ctx: ZnCtx | int) -> ZnCtx:
    return ctx if isinstance(ctx, ZnCtx) else ZnCtx(ctx)


def is_unit(ctx: ZnCtx | int, x: int) -> bool:
    ctx = _ctx(ctx)
    return gcd(x % ctx.n, ctx.n) == 1


def elem_order(ctx: ZnCtx | int, x: int) -> int:
    """Additive order of ``x``: the least d >= 1 with d*x = 0."""
    ctx = _ctx(ctx)
    return ctx.n // gcd(x % ctx.n, ctx.n)


def subgroup_generated(ctx: ZnCtx | int, x: int) -> frozenset[int]:
    ctx = _ctx(ctx)
    g = gcd(x % ctx.n, ctx.n)
    return frozenset(range(0, ctx.n, g))


def in_subgroup(ctx: ZnCtx | int, y: int, x: int) -> bool:
    """True iff ``y`` lies in the additive subgroup generated by ``x``."""
    ctx = _ctx(ctx)
    return (y % ctx.n) % gcd(x % ctx.n, ctx.n) == 0


def geometric_sum(ctx: ZnCtx | int, r: int, m: int) -> int:
    """1 + r + ... + r^(m-1) mod n."""
    ctx = _ctx(ctx)
    total, p = 0, 1 % ctx.n
    for _ in range(m):
        total = (total + p) % ctx.n
        p = (p * r) % ctx.n
    return total


def crt_combine(n1: int, a1: int, n2: int, a2: int) -> int:
    """Unique x mod n1*n2 with x = a1 (mod n1) and x = a2 (mod n2)."""
    if gcd(n1, n2) != 1:
        raise CoprimeViolation(f"moduli {n1} and {n2} are not coprime")
    a1 %= n1
    inv = pow(n1, -1, n2) if n2 > 1 else 0
    k = ((a2 - a1) * inv) % n2 if n2 > 1 else 0
    return (a1 + n1 * k) % (n1 * n2)
