"""Brute-force ground truth for ex(n, .), f(nu, Delta) and ar(n, .) on tiny inputs.

None of these searches consult the closed forms in :mod:`fanramsey.formulas`;
they exist to check them.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Optional, Union

from .detection import EdgeColoring, _disjoint_cliques, _least_clique, rainbow_fan_search
from .formulas import BoundedPair
from .graph import FanSpec, Graph, complete, matching_from_rows

Forbidden = Union[FanSpec, int]


class BudgetExhausted(RuntimeError):
    pass


@dataclass
class SearchBudget:
    max_nodes: int = 50_000_000
    time_hint: Optional[float] = None

    def __post_init__(self):
        if self.max_nodes <= 0 or (self.time_hint is not None and self.time_hint <= 0):
            raise ValueError("budget must be positive")


@dataclass
class OracleResult:
    kind: str
    parameters: dict
    value: int
    witness: object = None
    nodes: int = 0
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    def record(self, witness_file: Optional[str] = None) -> dict:
        out = {
            "parameters": self.parameters,
            "value": self.value,
            "witness-file": witness_file,
            "node count": self.nodes,
            "elapsed": round(self.elapsed, 6),
        }
        out.update(self.extra)
        return out

    def to_json(self, witness_file: Optional[str] = None) -> str:
        return json.dumps(self.record(witness_file), sort_keys=True)


class _Counter:
    def __init__(self, budget: Optional[SearchBudget]):
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self.start = time.perf_counter()

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExhausted(f"node budget {self.budget.max_nodes} exhausted")
        hint = self.budget.time_hint
        if hint is not None and self.nodes % 4096 == 0 and time.perf_counter() - self.start > hint:
            raise BudgetExhausted(f"time budget {hint}s exhausted")

    @property
    def elapsed(self):
        return time.perf_counter() - self.start


# -- ex(n, F) ---------------------------------------------------------------

def _describe(forbidden: Forbidden) -> dict:
    if isinstance(forbidden, FanSpec):
        return {"k": forbidden.k, "r": forbidden.r}
    return {"clique": forbidden}


def _creates_copy(rows: list[int], u: int, v: int, forbidden: Forbidden) -> bool:
    """Does the graph ``rows`` (already containing uv) hold a copy of ``forbidden``?

    The graph without uv is known to be free, so only copies through uv matter
    for cliques; fans are rechecked from scratch.
    """
    if isinstance(forbidden, FanSpec):
        need = forbidden.k * (forbidden.r - 1)
        for center in range(len(rows)):
            nb = rows[center]
            if nb.bit_count() >= need and _disjoint_cliques(rows, nb, forbidden.k, forbidden.r - 1, -1) is not None:
                return True
        return False
    r = forbidden
    if r == 2:
        return True
    return _least_clique(rows, rows[u] & rows[v], r - 2) is not None


def solve_ex(n: int, forbidden: Forbidden, budget: Optional[SearchBudget] = None) -> OracleResult:
    """Exact ex(n, F) by branch and bound over edge sets in lexicographic order."""
    if n > 9:
        raise ValueError("brute-force ex is limited to n <= 9")
    if isinstance(forbidden, int) and forbidden < 2:
        raise ValueError("forbidden clique size must be >= 2")
    counter = _Counter(budget)
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    rows = [0] * n
    best = [-1, None]

    def search(i, count):
        counter.tick()
        if count + (m - i) <= best[0]:
            return
        if i == m:
            best[0], best[1] = count, tuple(rows)
            return
        u, v = pairs[i]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if not _creates_copy(rows, u, v, forbidden):
            search(i + 1, count + 1)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        search(i + 1, count)

    search(0, 0)
    witness = Graph(n, best[1])
    return OracleResult("ex", {"n": n, **_describe(forbidden)}, best[0], witness, counter.nodes, counter.elapsed)


def brute_force_ex(n: int, forbidden: Forbidden, budget: Optional[SearchBudget] = None) -> int:
    return solve_ex(n, forbidden, budget).value


def exhaustive_ex(n: int, forbidden: Forbidden) -> int:
    """Plain enumeration of all 2^binom(n,2) labelled graphs (n <= 6)."""
    from .detection import contains_clique, find_fan

    if n > 6:
        raise ValueError("plain enumeration is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        size = mask.bit_count()
        if size <= best:
            continue
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        hit = find_fan(g, forbidden) if isinstance(forbidden, FanSpec) else contains_clique(g, forbidden)
        if hit is None:
            best = size
    return best


# -- f(nu, Delta) -----------------------------------------------------------

def _core_images(m: int):
    """Vertex maps of the core preserving the matching {0,1}, {2,3}, ..."""
    from itertools import permutations

    for perm in permutations(range(m)):
        for flips in product((0, 1), repeat=m):
            mapping = [0] * (2 * m)
            for i, j in enumerate(perm):
                mapping[2 * i] = 2 * j + flips[i]
                mapping[2 * i + 1] = 2 * j + 1 - flips[i]
            yield mapping


def solve_f(pair: BoundedPair, budget: Optional[SearchBudget] = None) -> OracleResult:
    """Exact f(nu, Delta) by enumerating core graphs and their attachments.

    Any graph with matching number m <= nu has a maximum matching on 2m core
    vertices; every other vertex is adjacent only to the core and has at
    most Delta core neighbours. So it suffices to enumerate core edge sets
    containing the perfect matching {0,1}, {2,3}, ... and multisets of
    attachment neighbourhoods.
    """
    nu, delta = pair.nu, pair.delta
    if nu > 3 or delta > 3:
        raise ValueError("brute-force f is limited to nu, delta <= 3")
    counter = _Counter(budget)
    best = [0, Graph.empty(0)]

    for m in range(1, nu + 1):
        size = 2 * m
        matching = [(2 * i, 2 * i + 1) for i in range(m)]
        free = [p for p in combinations(range(size), 2) if p not in matching]
        index = {p: i for i, p in enumerate(free)}
        images = list(_core_images(m))
        types = [t for s in range(1, delta + 1) for t in combinations(range(size), s)]

        for chosen in range(1 << len(free)):
            edges = [p for i, p in enumerate(free) if chosen >> i & 1]
            canonical = min(
                sum(1 << index[tuple(sorted((g[a], g[b])))] for a, b in edges) for g in images
            )
            if canonical != chosen:
                continue
            rows = [0] * size
            for a, b in matching + edges:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
            caps = [delta - row.bit_count() for row in rows]
            if min(caps) < 0:
                continue
            if len(matching_from_rows(rows)) > nu:
                continue
            core_edges = m + len(edges)
            _attach(rows, caps, types, 0, core_edges, nu, best, counter)

    witness = best[1]
    return OracleResult("f", {"nu": nu, "delta": delta}, best[0], witness, counter.nodes, counter.elapsed)


def _attach(rows, caps, types, start, edges, nu, best, counter):
    counter.tick()
    if edges > best[0]:
        best[0], best[1] = edges, Graph(len(rows), tuple(rows))
    if edges + sum(caps) <= best[0]:
        return
    for ti in range(start, len(types)):
        t = types[ti]
        if any(caps[c] == 0 for c in t):
            continue
        w = len(rows)
        for c in t:
            rows[c] |= 1 << w
            caps[c] -= 1
        rows.append(sum(1 << c for c in t))
        if len(matching_from_rows(rows)) <= nu:
            _attach(rows, caps, types, ti, edges + len(t), nu, best, counter)
        rows.pop()
        for c in t:
            rows[c] &= ~(1 << w)
            caps[c] += 1


def brute_force_f(pair: BoundedPair, budget: Optional[SearchBudget] = None) -> int:
    return solve_f(pair, budget).value


# -- ar(n, F) ---------------------------------------------------------------

def restricted_growth_strings(m: int) -> Iterator[list[int]]:
    """All set partitions of ``range(m)`` as restricted growth strings, lexicographically."""
    if m == 0:
        yield []
        return
    a = [0] * m
    b = [1] * m  # b[i] = 1 + max(a[:i])
    while True:
        yield list(a)
        i = m - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(b[i], a[i] + 1)
        for j in range(i + 1, m):
            a[j] = 0
            b[j] = top


def _table(n: int, pairs, colors) -> list[list[int]]:
    table = [[-1] * n for _ in range(n)]
    for (u, v), c in zip(pairs, colors):
        table[u][v] = table[v][u] = c
    return table


def _is_rainbow_free(n, pairs, colors, spec, adj=None) -> bool:
    adj = adj or complete(n).adj
    return rainbow_fan_search(_table(n, pairs, colors), adj, spec.k, spec.r) is None


def _ar_exhaustive(n: int, spec: FanSpec, counter: _Counter):
    pairs = list(combinations(range(n), 2))
    adj = complete(n).adj
    best, witness = 0, None
    for rgs in restricted_growth_strings(len(pairs)):
        counter.tick()
        blocks = max(rgs, default=-1) + 1
        if blocks <= best:
            continue
        if _is_rainbow_free(n, pairs, rgs, spec, adj):
            best, witness = blocks, rgs
    return best, witness


def _ar_branch_and_bound(n: int, spec: FanSpec, counter: _Counter):
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    table = [[-1] * n for _ in range(n)]
    rows = [0] * n
    colors: list[int] = []
    best = [0, None]

    def search(i, blocks):
        counter.tick()
        if blocks + (m - i) <= best[0]:
            return
        if i == m:
            best[0], best[1] = blocks, list(colors)
            return
        u, v = pairs[i]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        for c in range(blocks + 1):
            table[u][v] = table[v][u] = c
            colors.append(c)
            if rainbow_fan_search(table, rows, spec.k, spec.r) is None:
                search(i + 1, max(blocks, c + 1))
            colors.pop()
        table[u][v] = table[v][u] = -1
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)

    search(0, 0)
    return best[0], best[1]


def solve_ar(n: int, spec: FanSpec, budget: Optional[SearchBudget] = None, method: str = "auto") -> OracleResult:
    """ar(n, F) as one more than the most colours of a rainbow-F-free exact colouring.

    Colourings are enumerated up to renaming of colours (set partitions of
    the edge set), which loses nothing since rainbow-freeness only depends on
    the partition. ``method`` is "exhaustive" (n <= 5), "bnb" (n <= 6) or
    "auto".
    """
    if method == "auto":
        method = "exhaustive" if n <= 5 else "bnb"
    if method == "exhaustive" and n > 5:
        raise ValueError("exhaustive ar enumeration is limited to n <= 5")
    if n > 6:
        raise ValueError("brute-force ar is limited to n <= 6")
    counter = _Counter(budget)
    if method == "exhaustive":
        best, colors = _ar_exhaustive(n, spec, counter)
    elif method == "bnb":
        best, colors = _ar_branch_and_bound(n, spec, counter)
    else:
        raise ValueError(f"unknown method {method!r}")
    witness = EdgeColoring.from_sequence(n, colors, best) if colors is not None else None
    return OracleResult(
        "ar", {"n": n, "k": spec.k, "r": spec.r}, best + 1, witness, counter.nodes, counter.elapsed,
        {"max rainbow-free colours": best},
    )


def brute_force_ar(n: int, spec: FanSpec, budget: Optional[SearchBudget] = None) -> int:
    return solve_ar(n, spec, budget).value


def max_rainbow_free_coloring(n: int, spec: FanSpec, budget: Optional[SearchBudget] = None) -> EdgeColoring:
    """Least (in restricted-growth order) exact colouring with ar - 1 colours and no rainbow F."""
    result = solve_ar(n, spec, budget)
    if result.witness is None:
        raise ValueError(f"every colouring of K_{n} with at least one colour has a rainbow copy")
    return result.witness


def unpruned_ar(n: int, spec: FanSpec) -> int:
    """ar(n, F) from every map E(K_n) -> [0, m), no symmetry reduction (n <= 4)."""
    if n > 4:
        raise ValueError("unpruned enumeration is limited to n <= 4")
    pairs = list(combinations(range(n), 2))
    adj = complete(n).adj
    best = 0
    for colors in product(range(len(pairs)), repeat=len(pairs)):
        used = len(set(colors))
        if used > best and _is_rainbow_free(n, pairs, colors, spec, adj):
            best = used
    return best + 1
