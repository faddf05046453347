"""Half-arc-transitive structure: orbital orientation, alternating cycles, 8-cycle codes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .autgroup import AutResult, automorphism_group, transitivity_profile
from .families import MetaParams, canonical_pair
from .graphcore import Graph, GraphError, NotACycle, Orientation, all_cycles, canonical_cycle, is_cycle


class NotHalfArcTransitive(ValueError):
    pass


class UnclassifiedCycle(RuntimeError):
    pass


class StructureViolation(RuntimeError):
    """An invariant expected of half-arc-transitive graphs failed on this input."""


def arc_orbit(g: Graph, gens, arc: tuple[int, int]) -> set[tuple[int, int]]:
    imgs = [p.images.tolist() for p in gens]
    seen = {arc}
    stack = [arc]
    while stack:
        u, v = stack.pop()
        for im in imgs:
            a = (im[u], im[v])
            if a not in seen:
                seen.add(a)
                stack.append(a)
    return seen


def hat_orientation(g: Graph, aut: AutResult | None = None) -> Orientation:
    """The arc orbit of Aut(g) containing the least edge (u, v), u < v, oriented u -> v."""
    aut = aut or automorphism_group(g)
    if not transitivity_profile(g, aut).half_arc:
        raise NotHalfArcTransitive("graph is not half-arc-transitive")
    u, v = g.edges()[0]
    arcs = arc_orbit(g, aut.group.generators, (u, v))
    if len(arcs) != g.size:
        raise NotHalfArcTransitive("arc orbit does not induce an orientation")
    return Orientation.from_arcs(g, arcs)


@dataclass
class AltStructure:
    orientation: Orientation
    cycles: list[tuple[int, ...]]
    radius: int
    attachment_number: int
    attachment_sets: list[frozenset[int]]

    @property
    def attachment_class(self) -> str:
        return attachment_class(self)


def _trace(o: Orientation, u: int, v: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Alternating cycle through the arc u -> v, as a vertex sequence starting at u."""
    seq: list[int] = []
    arcs: list[tuple[int, int]] = []
    tail, head = u, v
    while True:
        seq += [tail, head]
        arcs.append((tail, head))
        # at a head, leave along the other in-arc; at a tail, along the other out-arc
        nt = [w for w in o.in_adj[head] if w != tail]
        if len(nt) != 1:
            raise StructureViolation("alternating cycles need in- and out-degree 2")
        arcs.append((nt[0], head))
        nh = [w for w in o.out_adj[nt[0]] if w != head]
        if len(nh) != 1:
            raise StructureViolation("alternating cycles need in- and out-degree 2")
        tail, head = nt[0], nh[0]
        if (tail, head) == (u, v):
            return seq, arcs


def alternating_cycles(o: Orientation) -> list[tuple[int, ...]]:
    seen: set[tuple[int, int]] = set()
    out = []
    for arc in o.sorted_arcs():
        if arc in seen:
            continue
        seq, arcs = _trace(o, *arc)
        seen.update(arcs)
        out.append(tuple(seq))
    return out


def alternating_structure(g: Graph, o: Orientation) -> AltStructure:
    for v in range(g.order):
        if len(o.in_adj[v]) != 2 or len(o.out_adj[v]) != 2:
            raise StructureViolation(f"vertex {v} does not have in- and out-degree 2")
    cycles = alternating_cycles(o)
    lengths = {len(c) for c in cycles}
    if len(lengths) != 1:
        raise StructureViolation(f"alternating cycles of different lengths {sorted(lengths)}")
    radius = lengths.pop() // 2
    on: list[list[int]] = [[] for _ in range(g.order)]
    for ci, c in enumerate(cycles):
        for v in set(c):
            on[v].append(ci)
    sets: dict[tuple[int, int], set[int]] = {}
    for v, cs in enumerate(on):
        if len(cs) == 2:
            sets.setdefault((cs[0], cs[1]), set()).add(v)
        elif len(cs) != 1:
            raise StructureViolation(f"vertex {v} lies on {len(cs)} alternating cycles")
    sizes = {len(s) for s in sets.values()}
    if sets:
        if len(sizes) != 1:
            raise StructureViolation(f"adjacent alternating cycles meet in {sorted(sizes)} vertices")
        att = sizes.pop()
    else:
        # a single alternating cycle through every vertex twice
        att = radius
    att_sets = sorted((frozenset(s) for s in sets.values()), key=sorted)
    return AltStructure(o, cycles, radius, att, att_sets)


def attachment_class(alt: AltStructure) -> str:
    if alt.attachment_number == alt.radius:
        return "tight"
    if alt.attachment_number == 1:
        return "loose"
    if alt.attachment_number == 2:
        return "antipodal"
    return "other"


@dataclass(frozen=True)
class CycleCode:
    bits: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @classmethod
    def canonical(cls, bits) -> CycleCode:
        """Greatest rotation of the sequence or of its reversed complement.

        Traversing a cycle the other way reverses and complements its bits, so
        this class does not depend on the traversal.
        """
        bits = list(bits)
        rc = [1 - b for b in reversed(bits)]
        n = len(bits)
        best = max(tuple(s[i:] + s[:i]) for s in (bits, rc) for i in range(n))
        return cls(best)


def cycle_code(o: Orientation, c) -> CycleCode:
    c = list(c)
    n = len(c)
    return CycleCode.canonical(1 if o.is_arc(c[i], c[(i + 1) % n]) else 0 for i in range(n))


def eight_cycle_code(g: Graph, o: Orientation, c) -> CycleCode:
    if len(c) != 8 or not is_cycle(g, c):
        raise NotACycle("expected an 8-cycle of the graph")
    return cycle_code(o, c)


GENERIC_CODE = CycleCode((1, 1, 1, 0, 0, 1, 0, 0))
TYPES = ("generic", "I", "II", "III", "IV", "V")


def _type_table(p: MetaParams, s: int) -> dict[str, tuple[bool, list[tuple[int, int]]]]:
    """Row conditions and representative (i, j) sequences of the 8-cycle table."""
    m, n, r, t = p.m, p.n, p.r, p.t
    r2, r3 = r * r, r ** 3
    z = lambda x: x % n == 0  # noqa: E731
    return {
        "generic": (True, [(0, 0), (0, s), (1, s), (1, s + r * s), (0, s + r * s), (0, r * s), (1, r * s), (1, 0)]),
        "I": (z(s * (1 - 2 * r + r2)),
              [(0, 0), (1, 0), (1, s * r), (2, s * r), (2, s * (r - r2)), (1, s * (r - r2)),
               (1, s * (2 * r - r2)), (0, s * (2 * r - r2))]),
        "II": (z(s * (2 - r + r2) - t) and m == 3,
               [(0, 0), (1, 0), (1, s * r), (2, s * r), (2, s * (r - r2)), (2, s * (r - 2 * r2)),
                (0, s * (r - 2 * r2) + t), (0, s * (-1 + r - 2 * r2) + t)]),
        "III": (z(s * (1 + r + r2) - t) and m == 3,
                [(0, 0), (0, s), (1, s), (1, s * (1 + r)), (0, s * (1 + r)), (2, s * (1 + r) - t),
                 (2, s * (1 + r + r2) - t), (1, s * (1 + r + r2) - t)]),
        "IV": (z(s * (2 + 2 * r3) - t) and m == 4,
               [(0, 0), (1, 0), (2, 0), (3, 0), (3, -s * r3), (3, -2 * s * r3), (0, -2 * s * r3 + t),
                (0, s * (-1 - 2 * r3) + t)]),
        "V": (z(s * (3 + r2) - t) and m == 4,
              [(0, 0), (0, s), (0, 2 * s), (0, 3 * s), (3, 3 * s - t), (2, 3 * s - t), (2, s * (3 + r2) - t),
               (1, s * (3 + r2) - t)]),
    }


def standard_orientation(g: Graph, o: Orientation, p: MetaParams) -> tuple[Orientation, int]:
    """Orientation with u_0^0 -> u_1^0 (reversing ``o`` if needed) and the step s with u_0^0 -> u_0^s."""
    if not o.is_arc(p.vertex(0, 0), p.vertex(1, 0)):
        o = o.reversed()
    s = 1 if o.is_arc(p.vertex(0, 0), p.vertex(0, 1)) else -1
    return o, s


def classify_8cycles(g: Graph, o: Orientation, params: MetaParams) -> dict[str, int]:
    """Count the 8-cycles of code 11100100 in each H-orbit type of the table; H = <rho, sigma>."""
    if params.family != "Y":
        raise ValueError("8-cycle types are defined for the Y family")
    o, s = standard_orientation(g, o, params)
    rho, sigma = canonical_pair(params)
    # H acts regularly, every element is rho^j sigma^i with i < m
    elems = []
    sig = list(range(g.order))
    rho_pows = [(rho ** j).images.tolist() for j in range(params.n)]
    sigma_im = sigma.images.tolist()
    for _ in range(params.m):
        for rp in rho_pows:
            elems.append([sig[rp[x]] for x in range(g.order)])
        sig = [sigma_im[x] for x in sig]
    owner: dict[tuple[int, ...], str] = {}
    for name, (cond, rep) in _type_table(params, s).items():
        if not cond:
            continue
        cyc = [params.vertex(i, j) for i, j in rep]
        if not is_cycle(g, cyc) or cycle_code(o, cyc) != GENERIC_CODE:
            raise UnclassifiedCycle(f"type {name} representative is not an 8-cycle of code 11100100")
        for h in elems:
            key = canonical_cycle([h[v] for v in cyc])
            owner.setdefault(key, name)
    counts = Counter({name: 0 for name in TYPES})
    for c in all_cycles(g, 8):
        if cycle_code(o, c) != GENERIC_CODE:
            continue
        key = canonical_cycle(c)
        if key not in owner:
            raise UnclassifiedCycle(f"8-cycle {c} of code 11100100 matches no type")
        counts[owner[key]] += 1
    return dict(counts)


def code_census(g: Graph, o: Orientation, length: int = 8) -> dict[str, int]:
    """Number of cycles of the given length per code."""
    out: Counter = Counter()
    for c in all_cycles(g, length):
        out[str(cycle_code(o, c))] += 1
    return dict(sorted(out.items()))


__all__ = [
    "AltStructure", "CycleCode", "GraphError", "NotHalfArcTransitive", "StructureViolation", "UnclassifiedCycle",
    "alternating_cycles", "alternating_structure", "arc_orbit", "attachment_class", "classify_8cycles",
    "code_census", "cycle_code", "eight_cycle_code", "hat_orientation", "standard_orientation",
]
