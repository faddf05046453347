"""Regular Z_p voltage covers and the two explicit cover families.

Cover vertex ``(v, k)`` (base vertex v, layer k in Z_p) has index ``k*N + v``
where N is the base order; with p = 1 the cover is the base graph itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .autgroup import automorphism_group, transitivity_profile
from .families import Y, Z, build
from .graphcore import Graph, Orientation, all_cycles, canonical_cycle, girth
from .hat import alternating_structure, hat_orientation
from .modring import crt_combine


class NotAWalk(ValueError):
    pass


class VerificationFailure(RuntimeError):
    def __init__(self, clause: str, report: CoverReport | None = None):
        super().__init__(f"verification failed: {clause}")
        self.clause = clause
        self.report = report


@dataclass
class VoltageSpec:
    base: Graph
    orientation: Orientation
    group_order: int
    voltage: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        if set(self.voltage) != set(self.orientation.arcs):
            raise ValueError("voltages must be given on exactly the arcs of the orientation")
        p = self.group_order
        self.voltage = {a: v % p for a, v in self.voltage.items()}

    @classmethod
    def constant(cls, base: Graph, o: Orientation, p: int, value: int = 1) -> VoltageSpec:
        return cls(base, o, p, {a: value for a in o.arcs})

    def dart_voltage(self, u: int, v: int) -> int:
        """Voltage of the dart u -> v; reverse darts carry the negated voltage."""
        if (u, v) in self.voltage:
            return self.voltage[(u, v)]
        if (v, u) in self.voltage:
            return (-self.voltage[(v, u)]) % self.group_order
        raise NotAWalk(f"({u}, {v}) is not an edge of the base graph")


@dataclass
class CoverGraph:
    graph: Graph
    base_order: int
    p: int
    connected: bool

    def vertex(self, v: int, k: int) -> int:
        return (k % self.p) * self.base_order + v

    def fiber(self, x: int) -> tuple[int, int]:
        """(base vertex, layer) of cover vertex x."""
        k, v = divmod(x, self.base_order)
        return v, k

    def deck_shift(self, s: int = 1) -> list[int]:
        N, p = self.base_order, self.p
        return [((x // N + s) % p) * N + x % N for x in range(N * p)]


def build_cover(spec: VoltageSpec) -> CoverGraph:
    N, p = spec.base.order, spec.group_order
    if p < 1:
        raise ValueError("group order must be positive")
    edges = []
    for (u, v), a in spec.voltage.items():
        for k in range(p):
            edges.append((k * N + u, ((k + a) % p) * N + v))
    g = Graph(N * p, edges)
    return CoverGraph(g, N, p, g.is_connected())


def net_voltage(spec: VoltageSpec, cycle) -> int:
    """Signed voltage sum along the closed walk ``cycle`` (last vertex joins the first)."""
    c = list(cycle)
    if len(c) < 2:
        raise NotAWalk("a closed walk needs at least two vertices")
    total = 0
    for i in range(len(c)):
        total += spec.dart_voltage(c[i], c[(i + 1) % len(c)])
    return total % spec.group_order


@dataclass
class CoverReport:
    cover: CoverGraph
    target: str
    checks: dict[str, bool | None] = field(default_factory=dict)
    values: dict[str, object] = field(default_factory=dict)

    def ran(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is not None]

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]

    def as_dict(self) -> dict:
        return {"target": self.target, "order": self.cover.graph.order, "checks": dict(self.checks),
                "values": {k: v for k, v in self.values.items()}}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _oriented(base: Graph, u: int, v: int) -> Orientation:
    """The half-arc-transitive orientation of ``base`` containing the arc u -> v."""
    o = hat_orientation(base)
    if not o.is_arc(u, v):
        o = o.reversed()
    if not o.is_arc(u, v):
        raise VerificationFailure(f"({u}, {v}) is not an edge of the base graph")
    return o


def _check_map(cover: CoverGraph, target: Graph, phi: list[int]) -> bool:
    if len(set(phi)) != target.order or cover.graph.size != target.size:
        return False
    return all(target.has_edge(phi[a], phi[b]) for a, b in cover.graph.edges())


def _lifts(cover: CoverGraph, base_gens) -> bool:
    """Orientation-preserving base automorphisms lift layer-wise for orientation-determined voltages."""
    N, p = cover.base_order, cover.p
    g = cover.graph
    for h in base_gens:
        im = h.images.tolist()
        lifted = [(x // N) * N + im[x % N] for x in range(N * p)]
        if not g.is_automorphism(lifted):
            return False
    return True


def _finish(report: CoverReport, cover: CoverGraph, full: bool, hat_budget: int,
            expect: dict[str, int]) -> CoverReport:
    g = cover.graph
    report.checks["connected"] = cover.connected
    report.checks["deck_shift"] = g.is_automorphism(cover.deck_shift())
    gi = girth(g)
    report.values["girth"] = gi
    if "girth" in expect:
        report.checks["girth"] = gi == expect["girth"]
    if full and g.order <= hat_budget:
        aut = automorphism_group(g)
        prof = transitivity_profile(g, aut)
        report.values["aut_order"] = aut.group.order()
        report.checks["half_arc_transitive"] = prof.half_arc
        if prof.half_arc:
            alt = alternating_structure(g, hat_orientation(g, aut))
            report.values["radius"] = alt.radius
            report.values["attachment_number"] = alt.attachment_number
            if "radius" in expect:
                report.checks["radius"] = alt.radius == expect["radius"]
            if "attachment_number" in expect:
                report.checks["attachment_number"] = alt.attachment_number == expect["attachment_number"]
    else:
        for k in ("half_arc_transitive", "radius", "attachment_number"):
            if k == "half_arc_transitive" or k in expect:
                report.checks[k] = None
    return report


def construction59(p: int, *, verify: str = "full", hat_budget: int = 1000, strict: bool = True) -> CoverReport:
    """All-ones Z_p cover of Y(4,48;13,44), checked against Y(4,48p;r,t)."""
    if not _is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    base_p = Y(4, 48, 13, 44)
    base = build(base_p)
    o = _oriented(base, base_p.vertex(0, 0), base_p.vertex(0, 1))
    spec = VoltageSpec.constant(base, o, p, 1)
    cover = build_cover(spec)
    n = 48 * p
    r, t = crt_combine(48, 13, p, 1), crt_combine(48, 44, p, 4)
    target_p = Y(4, n, r, t)
    target = build(target_p)
    phi = [0] * cover.graph.order
    for x in range(cover.graph.order):
        v, k = cover.fiber(x)
        i, j = base_p.label(v)
        phi[x] = target_p.vertex(i, crt_combine(48, j, p, (k - i) % p))
    report = CoverReport(cover, str(target_p))
    report.values.update(r=r, t=t)
    report.checks["isomorphism_phi"] = _check_map(cover, target, phi)
    report.checks["aut_lifts"] = _lifts(cover, automorphism_group(base).group.generators)
    _finish(report, cover, verify == "full", hat_budget, {"girth": 8, "radius": 12, "attachment_number": 3})
    if strict and report.failed():
        raise VerificationFailure(", ".join(report.failed()), report)
    return report


def construction_sec6(p: int, *, verify: str = "full", hat_budget: int = 1000, strict: bool = True) -> CoverReport:
    """The +-1 voltage Z_p cover of Z(20,5;9,2), checked against Z(20p,5;k,2)."""
    if not _is_prime(p) or p < 7:
        raise ValueError("p must be a prime >= 7")
    base_p = Z(20, 5, 9, 2)
    base = build(base_p)
    u00 = base_p.vertex(0, 0)
    o = _oriented(base, u00, base_p.vertex(1, 0))
    if not o.is_arc(u00, base_p.vertex(9, 1)):
        raise VerificationFailure("u_0^0 is not the tail of u_0^0 u_9^1")
    spec = VoltageSpec.constant(base, o, p, 1)
    cover = build_cover(spec)
    k = crt_combine(20, 9, p, 1)
    target_p = Z(20 * p, 5, k, 2)
    target = build(target_p)
    phi = [0] * cover.graph.order
    for x in range(cover.graph.order):
        v, layer = cover.fiber(x)
        i, j = base_p.label(v)
        phi[x] = target_p.vertex(crt_combine(20, i, p, layer), j)
    report = CoverReport(cover, str(target_p))
    report.values.update(k=k)
    report.checks["isomorphism_phi"] = _check_map(cover, target, phi)
    report.checks["aut_lifts"] = _lifts(cover, automorphism_group(base).group.generators)
    _finish(report, cover, verify == "full", hat_budget, {"attachment_number": 1})
    if strict and report.failed():
        raise VerificationFailure(", ".join(report.failed()), report)
    return report


def zero_voltage_orbits(spec: VoltageSpec, length: int, gens) -> list[list[tuple[int, ...]]]:
    """Orbits, under the given base automorphisms, of the base cycles with net voltage 0."""
    zero = {canonical_cycle(c) for c in all_cycles(spec.base, length) if net_voltage(spec, c) == 0}
    imgs = [h.images.tolist() for h in gens]
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for c in sorted(zero):
        if c in seen:
            continue
        orb = {c}
        stack = [c]
        while stack:
            x = stack.pop()
            for im in imgs:
                y = canonical_cycle([im[v] for v in x])
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        seen |= orb
        orbits.append(sorted(orb))
    return orbits


def construction59_h_representatives() -> dict[str, list[tuple[int, int]]]:
    """The listed representatives of the zero-voltage 8-cycle orbits H2, H3, H4 as (i, j) pairs."""
    r, t = 13, 44
    r2 = r * r
    return {
        "H2": [(0, 0), (0, 1), (0, 2), (3, 2 - t), (2, 2 - t), (2, 2 - r2 - t), (2, 2 - 2 * r2 - t),
               (3, 2 - 2 * r2 - t)],
        "H3": [(0, 0), (0, 1), (1, 1), (2, 1), (2, 1 + r2), (1, 1 + r2), (1, 1 - r + r2), (1, 1 - 2 * r + r2)],
        "H4": [(0, 0), (0, 1), (1, 1), (1, 1 - r), (1, 1 - 2 * r), (2, 1 - 2 * r), (2, 1 - 2 * r + r2), (1, 0)],
    }
