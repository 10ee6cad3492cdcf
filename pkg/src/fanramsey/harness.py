"""Rainbow-free lower-bound colourings and the consistency checks built on them."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .detection import EdgeColoring, FanWitness, find_fan, find_rainbow_fan
from .formulas import (
    ar_threshold,
    construct_extremal_fan_free,
    ex_fan,
    extremal_construction_fits,
    f_diag,
)
from .graph import FanSpec, turan_parts
from .partition import edgelow_deficit


def lower_bound_coloring(n: int, spec: FanSpec) -> EdgeColoring:
    """Rainbow colouring of the extremal F(k, r)-free graph plus one shared colour.

    Edges of the extremal graph get colours 0, 1, ... in lexicographic order;
    every other pair gets the last colour.
    """
    host = construct_extremal_fan_free(n, spec)
    extra = host.num_edges
    colors = {}
    for i, e in enumerate(host.edges()):
        colors[e] = i
    for pair in combinations(range(n), 2):
        colors.setdefault(pair, extra)
    return EdgeColoring.from_pairs(n, extra + 1, colors)


@dataclass
class VerificationReport:
    n: int
    k: int
    r: int
    colors_used: int = 0
    construction_edge_count: int = 0
    formula_value: int = 0
    fan_free: bool = False
    rainbow_free: bool = False
    below_threshold: bool = True
    elapsed: float = 0.0
    fan_witness: Optional[FanWitness] = None
    rainbow_witness: Optional[FanWitness] = None
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("fan_witness", "rainbow_witness"):
            w = getattr(self, key)
            out[key] = None if w is None else {"center": w.center, "cliques": [list(c) for c in w.cliques], "colors": None if w.colors is None else list(w.colors)}
        out["ok"] = self.ok
        return out


def verify_lower_bound(n: int, kplus1: int, r: int) -> VerificationReport:
    """Certify ar(n, F(k+1, r)) >= ex(n, F(k, r)) + 2 at this n.

    The report is returned even when a check fails; failures are listed and
    the offending witness is attached.
    """
    start = time.perf_counter()
    k = kplus1 - 1
    base = FanSpec(k, r)
    report = VerificationReport(n, kplus1, r, below_threshold=n < ar_threshold(kplus1, r))
    try:
        host = construct_extremal_fan_free(n, base)
    except ValueError as exc:
        report.failures.append(f"construction: {exc}")
        report.elapsed = time.perf_counter() - start
        return report
    coloring = lower_bound_coloring(n, base)
    report.construction_edge_count = host.num_edges
    report.colors_used = len(coloring.used_colors())
    report.formula_value = ex_fan(n, base).value

    report.fan_witness = find_fan(host, base)
    report.fan_free = report.fan_witness is None
    if not report.fan_free:
        report.failures.append("extremal graph contains F(k, r)")

    report.rainbow_witness = find_rainbow_fan(coloring, FanSpec(kplus1, r))
    report.rainbow_free = report.rainbow_witness is None
    if not report.rainbow_free:
        report.failures.append("colouring contains a rainbow F(k+1, r)")

    if report.colors_used != report.formula_value + 1:
        report.failures.append(f"{report.colors_used} colours, expected {report.formula_value + 1}")
    report.elapsed = time.perf_counter() - start
    return report


def split_extra_color(n: int, spec: FanSpec, seed: int = 0) -> dict:
    """Split the shared colour of the lower-bound colouring in two and search again.

    Informational only: at small n nothing forces a rainbow F(k+1, r) here.
    """
    base = lower_bound_coloring(n, spec)
    extra = base.num_colors - 1
    shared = [p for p in combinations(range(n), 2) if base.color(*p) == extra]
    rng = random.Random(seed)
    if len(shared) < 2:
        return {"n": n, "k": spec.k, "r": spec.r, "split": False, "rainbow_found": None}
    moved = set(rng.sample(shared, rng.randint(1, len(shared) - 1)))
    colors = {p: (extra + 1 if p in moved else base.color(*p)) for p in combinations(range(n), 2)}
    coloring = EdgeColoring.from_pairs(n, extra + 2, colors)
    hit = find_rainbow_fan(coloring, FanSpec(spec.k + 1, spec.r))
    return {"n": n, "k": spec.k, "r": spec.r, "split": True, "colors": extra + 2, "rainbow_found": hit is not None}


@dataclass
class GridRecord:
    n: int
    k: int
    r: int
    construction_edges: int
    formula_value: int
    deficit: int
    deficit_bound: int

    @property
    def ok(self) -> bool:
        return self.construction_edges == self.formula_value and self.deficit <= self.deficit_bound


def verify_formula_grid(ks: Iterable[int], rs: Iterable[int], ns: Iterable[int]) -> list[GridRecord]:
    """Construction-versus-formula identity and deficit check on every fitting cell.

    The deficit of the extremal graph against its Turán partition is compared
    with f(k-1, k-1), the bound for an F(k, r)-free graph.
    """
    records = []
    ns = list(ns)
    for k in ks:
        for r in rs:
            spec = FanSpec(k, r)
            for n in ns:
                if not extremal_construction_fits(n, spec):
                    continue
                g = construct_extremal_fan_free(n, spec)
                report = edgelow_deficit(g, turan_parts(n, r - 1), k - 1)
                records.append(GridRecord(
                    n, k, r, g.num_edges, ex_fan(n, spec).value, report.deficit, f_diag(k - 1),
                ))
    return records


def grid_failures(records: Iterable[GridRecord]) -> list[GridRecord]:
    return [rec for rec in records if not rec.ok]
