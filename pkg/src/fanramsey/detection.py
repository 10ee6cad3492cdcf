"""Exact clique, fan and rainbow-fan search in (edge-coloured) graphs.

Witnesses are canonical: centers are tried in ascending order and, for a
fixed center, the cliques are ordered by their least vertex and chosen
lexicographically, so the first witness found is the least one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .graph import FanSpec, Graph, bits, complete, mask_of


@dataclass(frozen=True)
class EdgeColoring:
    """A total colouring of the pairs of K_n with ids in ``[0, num_colors)``.

    ``table[u][v]`` holds the colour of ``{u, v}``; the diagonal is ``-1``.
    """

    n: int
    num_colors: int
    table: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        if len(self.table) != self.n:
            raise ValueError("colour table has wrong number of rows")
        for u in range(self.n):
            row = self.table[u]
            if len(row) != self.n or row[u] != -1:
                raise ValueError(f"malformed colour row {u}")
            for v in range(u + 1, self.n):
                c = row[v]
                if c != self.table[v][u]:
                    raise ValueError(f"asymmetric colour on {{{u}, {v}}}")
                if not 0 <= c < self.num_colors:
                    raise ValueError(f"colour {c} on {{{u}, {v}}} outside [0, {self.num_colors})")

    @classmethod
    def from_pairs(cls, n: int, num_colors: int, colors: dict) -> "EdgeColoring":
        table = [[-1] * n for _ in range(n)]
        for u, v in combinations(range(n), 2):
            key = (u, v) if (u, v) in colors else (v, u)
            if key not in colors:
                raise ValueError(f"pair {{{u}, {v}}} has no colour")
            table[u][v] = table[v][u] = colors[key]
        return cls(n, num_colors, tuple(map(tuple, table)))

    @classmethod
    def from_sequence(cls, n: int, colors: Sequence[int], num_colors: Optional[int] = None) -> "EdgeColoring":
        """Colours listed in lexicographic pair order."""
        pairs = list(combinations(range(n), 2))
        if len(colors) != len(pairs):
            raise ValueError(f"expected {len(pairs)} colours, got {len(colors)}")
        if num_colors is None:
            num_colors = max(colors, default=-1) + 1
        return cls.from_pairs(n, num_colors, dict(zip(pairs, colors)))

    @classmethod
    def distinct(cls, n: int) -> "EdgeColoring":
        m = n * (n - 1) // 2
        return cls.from_sequence(n, list(range(m)), m)

    @classmethod
    def monochromatic(cls, n: int) -> "EdgeColoring":
        return cls.from_sequence(n, [0] * (n * (n - 1) // 2), 1)

    def color(self, u: int, v: int) -> int:
        return self.table[u][v]

    def sequence(self) -> list[int]:
        return [self.table[u][v] for u, v in combinations(range(self.n), 2)]

    def used_colors(self) -> set[int]:
        return set(self.sequence())

    @property
    def is_exact(self) -> bool:
        return len(self.used_colors()) == self.num_colors


@dataclass(frozen=True)
class FanWitness:
    center: int
    cliques: tuple[tuple[int, ...], ...]
    colors: Optional[tuple[int, ...]] = None

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for clique in self.cliques:
            out.extend((min(u, v), max(u, v)) for u, v in combinations(clique, 2))
        return out

    def problems(self, g: Optional[Graph] = None, coloring: Optional[EdgeColoring] = None) -> list[str]:
        """Invariant violations of this witness (empty when it is sound)."""
        issues = []
        for clique in self.cliques:
            if self.center not in clique:
                issues.append(f"clique {clique} misses the center")
            if g is not None:
                for u, v in combinations(clique, 2):
                    if not g.has_edge(u, v):
                        issues.append(f"clique {clique} lacks edge {{{u}, {v}}}")
        for a, b in combinations(self.cliques, 2):
            if set(a) & set(b) != {self.center}:
                issues.append(f"cliques {a} and {b} meet outside the center")
        if self.colors is not None:
            if len(set(self.colors)) != len(self.colors):
                issues.append("witness colours repeat")
            if coloring is not None:
                actual = tuple(coloring.color(u, v) for u, v in self.edges())
                if actual != self.colors:
                    issues.append("recorded colours disagree with the colouring")
        return issues


def contains_clique(g: Graph, r: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least r-clique of ``g``, or None."""
    if r < 1:
        raise ValueError("clique size must be >= 1")
    found = _least_clique(g.adj, g.vertex_mask, r)
    return found


def _least_clique(adj, cand: int, size: int, prefix: tuple = ()) -> Optional[tuple[int, ...]]:
    if size == 0:
        return prefix
    if cand.bit_count() < size:
        return None
    for v in bits(cand):
        higher = cand & ~((2 << v) - 1)
        hit = _least_clique(adj, higher & adj[v], size - 1, prefix + (v,))
        if hit is not None:
            return hit
    return None


def _above(v: int) -> int:
    return ~((2 << v) - 1)


def find_fan(g: Graph, spec: FanSpec) -> Optional[FanWitness]:
    """Least copy of F(k, r) in ``g``: k disjoint K_{r-1}'s inside some N(v)."""
    k, r = spec.k, spec.r
    need = k * (r - 1)
    for center in range(g.n):
        nbhd = g.adj[center]
        if nbhd.bit_count() < need:
            continue
        found = _disjoint_cliques(g.adj, nbhd, k, r - 1, -1)
        if found is not None:
            cliques = tuple(tuple(sorted((center,) + c)) for c in found)
            return FanWitness(center, cliques)
    return None


def _disjoint_cliques(adj, avail: int, k: int, size: int, prev_min: int):
    """k vertex-disjoint ``size``-cliques in ``avail``, ordered by least vertex."""
    if k == 0:
        return []
    if avail.bit_count() < k * size:
        return None
    starts = avail & _above(prev_min) if prev_min >= 0 else avail
    for m in bits(starts):
        rest = avail & ~(1 << m)
        for clique in _cliques_from(adj, m, rest & adj[m] & _above(m), size - 1):
            used = mask_of(clique)
            tail = _disjoint_cliques(adj, avail & ~used, k - 1, size, m)
            if tail is not None:
                return [clique] + tail
    return None


def _cliques_from(adj, first: int, cand: int, remaining: int, prefix=None):
    prefix = (first,) if prefix is None else prefix
    if remaining == 0:
        yield prefix
        return
    if cand.bit_count() < remaining:
        return
    for v in bits(cand):
        yield from _cliques_from(adj, first, cand & adj[v] & _above(v), remaining - 1, prefix + (v,))


def find_rainbow_fan(coloring: EdgeColoring, spec: FanSpec, host: Optional[Graph] = None) -> Optional[FanWitness]:
    """Least rainbow copy of F(k, r) in ``coloring`` (restricted to ``host`` if given)."""
    n = coloring.n
    if host is None:
        host = complete(n)
    elif host.n != n:
        raise ValueError(f"host has {host.n} vertices, colouring has {n}")
    found = rainbow_fan_search(coloring.table, host.adj, spec.k, spec.r)
    if found is None:
        return None
    center, cliques = found
    witness = FanWitness(center, cliques)
    colors = tuple(coloring.table[u][v] for u, v in witness.edges())
    return FanWitness(center, cliques, colors)


def rainbow_fan_search(table, adj: Sequence[int], k: int, r: int):
    """Raw rainbow search over a colour table and adjacency rows.

    Only pairs adjacent in ``adj`` are read from ``table``, so partial
    colourings work as long as uncoloured pairs are non-edges. Returns
    ``(center, cliques)`` or None.
    """
    n = len(adj)
    per_clique = r * (r - 1) // 2
    palette = set()
    for u in range(n):
        row = table[u]
        for v in bits(adj[u] >> (u + 1)):
            palette.add(row[u + 1 + v])
    distinct_available = len(palette)
    if distinct_available < k * per_clique:
        return None

    def extend(center, avail, cliques_left, prev_min, used):
        if cliques_left == 0:
            return []
        if avail.bit_count() < cliques_left * (r - 1):
            return None
        if distinct_available - len(used) < cliques_left * per_clique:
            return None
        starts = avail & _above(prev_min) if prev_min >= 0 else avail
        for m in bits(starts):
            c = table[center][m]
            if c in used:
                continue
            used.add(c)
            for clique in grow(center, [m], avail & adj[m] & _above(m), used):
                tail = extend(center, avail & ~mask_of(clique), cliques_left - 1, m, used)
                if tail is not None:
                    return [clique] + tail
            used.discard(c)
        return None

    def grow(center, members, cand, used):
        # ``used`` holds every colour of the partial clique while suspended
        if len(members) == r - 1:
            yield tuple(members)
            return
        for v in bits(cand):
            fresh = [table[center][v]] + [table[u][v] for u in members]
            if len(set(fresh)) != len(fresh) or not used.isdisjoint(fresh):
                continue
            used.update(fresh)
            members.append(v)
            yield from grow(center, members, cand & adj[v] & _above(v), used)
            members.pop()
            used.difference_update(fresh)

    for center in range(n):
        nbhd = adj[center]
        if nbhd.bit_count() < k * (r - 1):
            continue
        found = extend(center, nbhd, k, -1, set())
        if found is not None:
            return center, tuple(tuple(sorted((center,) + c)) for c in found)
    return None


def representative_subgraph(coloring: EdgeColoring) -> Graph:
    """One edge per colour class: the lexicographically least edge of each."""
    if not coloring.is_exact:
        raise ValueError("colouring does not use every declared colour")
    chosen = {}
    for u, v in combinations(range(coloring.n), 2):
        chosen.setdefault(coloring.color(u, v), (u, v))
    return Graph.from_edges(coloring.n, chosen.values())


def naive_fan_check(g: Graph, spec: FanSpec) -> bool:
    """Exhaustive fan test over vertex subsets and groupings (n <= 10)."""
    k, r = spec.k, spec.r
    order = spec.order
    if g.n > 10:
        raise ValueError("naive fan check is limited to 10 vertices")
    if order > g.n:
        return False

    def is_clique(vs):
        return all(g.has_edge(u, v) for u, v in combinations(vs, 2))

    def groupings(items, groups):
        # set partitions of ``items`` into ``groups`` blocks of size r-1
        if groups == 0:
            yield []
            return
        first, rest = items[0], items[1:]
        for others in combinations(rest, r - 2):
            left = [x for x in rest if x not in others]
            for tail in groupings(left, groups - 1):
                yield [(first,) + others] + tail

    for subset in combinations(range(g.n), order):
        for center in subset:
            leaves = [v for v in subset if v != center]
            for grouping in groupings(leaves, k):
                if all(is_clique((center,) + grp) for grp in grouping):
                    return True
    return False


# -- text format ------------------------------------------------------------

def format_coloring(coloring: EdgeColoring) -> str:
    lines = [f"{coloring.n} {coloring.num_colors}"]
    for u, v in combinations(range(coloring.n), 2):
        lines.append(f"{u} {v} {coloring.color(u, v)}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, exact: bool = False) -> EdgeColoring:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise ValueError("colouring header must be 'n c'")
    n, c = (int(x) for x in rows[0])
    expected = n * (n - 1) // 2
    if len(rows) - 1 != expected:
        raise ValueError(f"expected {expected} pair lines, found {len(rows) - 1}")
    colors = {}
    for fields in rows[1:]:
        if len(fields) != 3:
            raise ValueError(f"bad colour line: {' '.join(fields)}")
        u, v, col = (int(x) for x in fields)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad pair ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in colors:
            raise ValueError(f"duplicate pair {key}")
        colors[key] = col
    coloring = EdgeColoring.from_pairs(n, c, colors)
    if exact and not coloring.is_exact:
        raise ValueError("colouring is not exact: some declared colours are unused")
    return coloring


def read_coloring(path, exact: bool = False) -> EdgeColoring:
    with open(path) as fh:
        return parse_coloring(fh.read(), exact=exact)


def write_coloring(coloring: EdgeColoring, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_coloring(coloring))
