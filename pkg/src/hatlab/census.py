"""Census of Class II half-arc-transitive graphs Y(m,n;r,t) that are not tightly attached."""

from __future__ import annotations

import csv
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path

from .autgroup import automorphism_group, transitivity_profile
from .families import DegenerateAdjacency, MetaParams, Y, build
from .hat import alternating_structure, attachment_class, hat_orientation
from .metaclass import is_tightly_attached_classII, strict_metacirculant_witness, thm51_conditions, nontight_prefilter

log = logging.getLogger(__name__)

CSV_COLUMNS = ["order", "family", "m", "n", "r", "t", "radius", "attachment_number"]


@dataclass
class CensusRow:
    order: int
    params: MetaParams
    radius: int
    attachment_number: int
    canonical_form: tuple = field(repr=False)
    stabilizer_order: int = 0
    witness_k: int | None = None
    attachment_class: str = ""
    aliases: list[MetaParams] = field(default_factory=list)

    def csv_row(self) -> list:
        p = self.params
        return [self.order, p.family, p.m, p.n, p.r, p.t, self.radius, self.attachment_number]


def default_jobs() -> int:
    env = os.environ.get("HATLAB_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def shapes(max_order: int) -> list[tuple[int, int]]:
    """(m, n) with m >= 3, m | n, n/m > 2 and m n <= max_order."""
    out = []
    m = 3
    while 3 * m * m <= max_order:
        k = 3
        while m * (k * m) <= max_order:
            out.append((m, k * m))
            k += 1
        m += 1
    return out


def arithmetic_candidates(max_order: int) -> list[MetaParams]:
    """Y tuples passing every Class II arithmetic clause, enumerated by (m, n), then r, then t."""
    out = []
    for m, n in shapes(max_order):
        g_m = gcd(m, n)
        rs = [r for r in range(1, n) if ((r - 1) ** 2) % n == 0 and gcd(r, n) == 1
              and (m * (r - 1)) % n == 0 and pow(r, m, n) == 1 % n]
        ts = [t for t in range(n) if gcd(t, n) == g_m]
        for r in rs:
            for t in ts:
                if (t * (r - 1)) % n:
                    continue
                if thm51_conditions(m, n, r, t).all:
                    out.append(Y(m, n, r, t))
    return out


@dataclass
class CandidateResult:
    params: MetaParams
    status: str  # degenerate | disconnected | not_hat | hat
    canonical_form: tuple = ()
    radius: int = 0
    attachment_number: int = 0
    stabilizer_order: int = 0
    attachment_class: str = ""


def evaluate(p: MetaParams) -> CandidateResult:
    """Build one tuple and, when it is connected and half-arc-transitive, measure it."""
    try:
        g = build(p)
    except DegenerateAdjacency:
        return CandidateResult(p, "degenerate")
    if not g.is_connected():
        return CandidateResult(p, "disconnected")
    aut = automorphism_group(g)
    if not transitivity_profile(g, aut).half_arc:
        return CandidateResult(p, "not_hat", aut.canonical_form)
    alt = alternating_structure(g, hat_orientation(g, aut))
    return CandidateResult(p, "hat", aut.canonical_form, alt.radius, alt.attachment_number,
                           aut.group.order() // g.order, attachment_class(alt))


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=1))


@dataclass
class CensusReport:
    rows: list[CensusRow]
    candidates: int
    arithmetic_nontight: int
    survivors: int
    results: list[CandidateResult] = field(repr=False, default_factory=list)


def run_census_report(max_order: int, *, prefilter: bool = True, jobs: int | None = None) -> CensusReport:
    if max_order < 1:
        raise ValueError("max_order must be positive")
    jobs = default_jobs() if jobs is None else jobs
    cands = arithmetic_candidates(max_order)
    nontight = [p for p in cands if not is_tightly_attached_classII(p.m, p.n, p.r, p.t)]
    survivors = [p for p in nontight if nontight_prefilter(p.m, p.n)] if prefilter else nontight
    log.info("census: %d arithmetic candidates, %d non-tight, %d after prefilter",
             len(cands), len(nontight), len(survivors))
    results = _map(evaluate, survivors, jobs)
    groups: dict[tuple, list[CandidateResult]] = {}
    for res in results:
        if res.status == "hat":
            groups.setdefault((res.params.order, res.canonical_form), []).append(res)
    rows = []
    for key in sorted(groups):
        members = sorted(groups[key], key=lambda x: x.params)
        head = members[0]
        p = head.params
        rows.append(CensusRow(
            p.order, p, head.radius, head.attachment_number, head.canonical_form, head.stabilizer_order,
            strict_metacirculant_witness(p.m, p.n, p.r, p.t), head.attachment_class,
            [x.params for x in members[1:]],
        ))
    return CensusReport(rows, len(cands), len(nontight), len(survivors), results)


def run_census(max_order: int, prefilter: bool = True, jobs: int | None = None) -> list[CensusRow]:
    """Connected quartic HAT Class II graphs of order <= max_order that are not tightly attached."""
    return run_census_report(max_order, prefilter=prefilter, jobs=jobs).rows


def write_csv(rows: list[CensusRow], out) -> None:
    if isinstance(out, (str, Path)):
        with open(out, "w", newline="", encoding="ascii") as fh:
            write_csv(rows, fh)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow(row.csv_row())
