"""Dense simple graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Every graph here is an immutable value. Row ``adj[v]`` is an int whose bit
``u`` is set iff ``{u, v}`` is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 256


class CapacityError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_capacity(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        _check_capacity(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at {{{u}, {v}}}")

    @classmethod
    def _trusted(cls, n: int, rows) -> "Graph":
        # rows known to be symmetric and loop-free; skips validation
        _check_capacity(n)
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_capacity(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph._trusted(self.n, rows)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, rows)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(index[u] for u in bits(self.adj[v]) if u in index))
        return Graph._trusted(len(vertices), rows)

    def remove_vertex(self, x: int) -> "Graph":
        return self.induced([v for v in range(self.n) if v != x])


# -- constructors ---------------------------------------------------------

def complete(n: int) -> Graph:
    _check_capacity(n)
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def turan_parts(n: int, p: int) -> list[list[int]]:
    """Part layout of T(n, p): contiguous ranges, the first ``n % p`` parts one larger.

    With ``n < p`` every vertex gets its own part (the graph is complete).
    """
    if p < 1:
        raise ValueError(f"number of parts must be >= 1, got {p}")
    p = min(p, n) if n else p
    if n == 0:
        return []
    q, extra = divmod(n, p)
    parts, start = [], 0
    for i in range(p):
        size = q + (1 if i < extra else 0)
        parts.append(list(range(start, start + size)))
        start += size
    return parts


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    n = sum(sizes)
    _check_capacity(n)
    rows = [0] * n
    full = (1 << n) - 1
    start = 0
    for size in sizes:
        part = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = full & ~part
        start += size
    return Graph._trusted(n, rows)


def turan(n: int, p: int) -> Graph:
    return complete_multipartite([len(part) for part in turan_parts(n, p)])


def fan(k: int, r: int) -> Graph:
    """F(k, r): k copies of K_r glued at vertex 0.

    Clique ``i`` occupies vertex 0 and ``1 + i*(r-1) .. (i+1)*(r-1)``.
    """
    FanSpec(k, r)
    n = k * (r - 1) + 1
    edges = []
    for i in range(k):
        members = [0] + list(range(1 + i * (r - 1), 1 + (i + 1) * (r - 1)))
        edges.extend((u, v) for a, u in enumerate(members) for v in members[a + 1:])
    return Graph.from_edges(n, edges)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on the first ``g.n`` indices, ``h`` shifted after it."""
    return Graph.from_edges(g.n + h.n, g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()])


def join(g: Graph, h: Graph) -> Graph:
    union = disjoint_union(g, h)
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return union.add_edges(cross)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def embed_in_part(host: Graph, part: Sequence[int], pattern: Graph) -> Graph:
    """Place ``pattern`` on the first ``pattern.n`` vertices of ``part`` (ascending).

    ``part`` must be an independent set of ``host``.
    """
    members = sorted(part)
    if len(set(members)) != len(members):
        raise ValueError("part has duplicate vertices")
    if pattern.n > len(members):
        raise ValueError(f"pattern on {pattern.n} vertices does not fit a part of size {len(members)}")
    pm = mask_of(members)
    for v in members:
        if host.adj[v] & pm:
            raise ValueError("part is not independent in host")
    slots = members[: pattern.n]
    return host.add_edges((slots[u], slots[v]) for u, v in pattern.edges())


# -- queries ----------------------------------------------------------------

def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def neighborhood_subgraph(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """G[N(v)] together with the list mapping new indices back to ``g``'s."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    labels = g.neighbors(v)
    return g.induced(labels), labels


def matching_number(g: Graph) -> int:
    """Maximum matching size via Edmonds' blossom algorithm."""
    return len(maximum_matching(g))


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    return matching_from_rows(g.adj)


def matching_from_rows(rows) -> list[tuple[int, int]]:
    """Edmonds' blossom algorithm on raw adjacency bitmasks."""
    n = len(rows)
    adj = [list(bits(row)) for row in rows]
    match = [-1] * n

    # greedy start
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break

    def find_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1 or not adj[root]:
            continue
        end, parent = find_path(root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return [(v, match[v]) for v in range(n) if match[v] > v]


def matching_number_brute(g: Graph) -> int:
    """Exhaustive matching search over vertex subsets; test oracle for n <= 12."""
    if g.n > 12:
        raise CapacityError("brute-force matching is limited to 12 vertices")

    @lru_cache(maxsize=None)
    def best(alive: int) -> int:
        if not alive:
            return 0
        v = (alive & -alive).bit_length() - 1
        rest = alive & ~(1 << v)
        value = best(rest)
        for u in bits(g.adj[v] & rest):
            value = max(value, 1 + best(rest & ~(1 << u)))
        return value

    return best(g.vertex_mask)


# -- FanSpec ----------------------------------------------------------------

@dataclass(frozen=True)
class FanSpec:
    """The fan F(k, r): ``k`` cliques of size ``r`` sharing one vertex."""

    k: int
    r: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"fan needs k >= 1, got {self.k}")
        if self.r < 2:
            raise ValueError(f"fan needs r >= 2, got {self.r}")

    @property
    def order(self) -> int:
        return self.k * (self.r - 1) + 1

    @property
    def size(self) -> int:
        return self.k * self.r * (self.r - 1) // 2


# -- text format ------------------------------------------------------------

def format_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def _data_lines(text: str) -> list[list[str]]:
    return [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def parse_graph(text: str) -> Graph:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 2:
        raise ValueError("graph header must be 'n m'")
    n, m = (int(x) for x in rows[0])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for fields in body:
        if len(fields) != 2:
            raise ValueError(f"bad edge line: {' '.join(fields)}")
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise ValueError(f"loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))
