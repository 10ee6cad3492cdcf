"""Deficiency domination between vertex classes and the greedy clique builders.

A class ``X`` dominates ``Y`` with ``b``-deficiency when every vertex of ``X``
misses at most ``b`` vertices of ``Y``. The clique builders below realise the
existence statements for such partitions by least-vertex greedy choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .formulas import f_diag
from .graph import Graph, bits, mask_of, matching_number, max_degree


class ExtensionError(RuntimeError):
    """Greedy extension got stuck; the inputs violate the cardinality preconditions."""


@dataclass(frozen=True)
class PartitionClasses:
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> "PartitionClasses":
        return cls(tuple(tuple(sorted(c)) for c in classes))

    def validate(self, n: int) -> None:
        seen = set()
        for c in self.classes:
            for v in c:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two classes")
                seen.add(v)
        if len(seen) != n:
            raise ValueError("classes do not cover every vertex")

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


@dataclass(frozen=True)
class DeficitReport:
    inner_edges: int
    cross_missing: int
    deficit: int
    bound: int

    @property
    def within_bound(self) -> bool:
        return self.deficit <= self.bound


def dominates_with_deficiency(g: Graph, x: Iterable[int], y: Iterable[int], b: int) -> bool:
    x, y = list(x), list(y)
    ym = mask_of(y)
    if mask_of(x) & ym:
        raise ValueError("x and y overlap")
    need = len(y) - b
    return all((g.adj[v] & ym).bit_count() >= need for v in x)


def is_deficiency_complete(g: Graph, parts: Sequence[Iterable[int]], b: int) -> bool:
    parts = [list(p) for p in parts]
    return all(
        dominates_with_deficiency(g, parts[i], parts[j], b)
        for i in range(len(parts))
        for j in range(len(parts))
        if i != j
    )


def _least_common_neighbor(g: Graph, members: Iterable[int], pool: int) -> int:
    cand = pool
    for u in members:
        cand &= g.adj[u]
    if not cand:
        return -1
    return (cand & -cand).bit_length() - 1


def extend_cliques(g: Graph, parts: Sequence[Iterable[int]], seeds: Sequence[Iterable[int]], b: int) -> list[tuple[int, ...]]:
    """Grow each seed clique into a transversal of ``parts``.

    Each result ``D_i`` contains its seed ``C_i``, meets every part in exactly
    one vertex except the (at most one) part the seed already meets twice, and
    the added sets ``D_i - C_i`` are pairwise disjoint.
    """
    part_masks = [mask_of(p) for p in parts]
    reserved = 0
    out = []
    for seed in seeds:
        members = sorted(set(seed))
        sm = mask_of(members)
        for a, u in enumerate(members):
            for v in members[a + 1:]:
                if not g.has_edge(u, v):
                    raise ValueError(f"seed {members} is not a clique")
        doubles = sum(1 for pm in part_masks if (pm & sm).bit_count() == 2)
        if any((pm & sm).bit_count() > 2 for pm in part_masks) or doubles > 1:
            raise ValueError(f"seed {members} meets the parts too often")
        for pm in part_masks:
            if pm & sm:
                continue
            v = _least_common_neighbor(g, members, pm & ~reserved)
            if v < 0:
                raise ExtensionError(f"cannot extend {members} into part {sorted(bits(pm))}")
            members.append(v)
            reserved |= 1 << v
        out.append(tuple(sorted(members)))
    return out


def build_disjoint_cliques(g: Graph, classes: Sequence[Iterable[int]], b: int, k: int, y0: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """k vertex-disjoint cliques with one vertex in every class.

    Cliques are filled one at a time, class by class in the given order,
    always with the least admissible vertex; ``y0`` (when given) is filled
    last, giving cliques of size ``len(classes) + 1``.
    """
    masks = [mask_of(c) for c in classes]
    if y0 is not None:
        masks.append(mask_of(y0))
    used = 0
    cliques = []
    for _ in range(k):
        members: list[int] = []
        for cm in masks:
            v = _least_common_neighbor(g, members, cm & ~used)
            if v < 0:
                raise ExtensionError(f"no vertex of class {sorted(bits(cm))} extends {members}")
            members.append(v)
            used |= 1 << v
        cliques.append(tuple(sorted(members)))
    return cliques


def check_extension(g: Graph, parts: Sequence[Iterable[int]], seeds: Sequence[Iterable[int]], result: Sequence[Sequence[int]]) -> list[str]:
    """Structural postconditions of :func:`extend_cliques`; empty when all hold."""
    issues = []
    part_masks = [mask_of(p) for p in parts]
    added = []
    for seed, d in zip(seeds, result):
        sm, dm = mask_of(seed), mask_of(d)
        if sm & ~dm:
            issues.append(f"{sorted(d)} does not contain seed {sorted(seed)}")
        vs = sorted(d)
        if any(not g.has_edge(u, v) for a, u in enumerate(vs) for v in vs[a + 1:]):
            issues.append(f"{vs} is not a clique")
        for pm in part_masks:
            hit = (pm & dm).bit_count()
            if hit != 1 and not (hit == 2 and (pm & sm).bit_count() == 2):
                issues.append(f"{vs} meets part {sorted(bits(pm))} {hit} times")
        added.append(dm & ~sm)
    for i in range(len(added)):
        for j in range(i + 1, len(added)):
            if added[i] & added[j]:
                issues.append(f"extensions {i} and {j} overlap")
    return issues


def edgelow_deficit(g: Graph, parts: Sequence[Iterable[int]], k: int) -> DeficitReport:
    """Inner edges minus missing cross edges, reported against f(k, k)."""
    masks = [mask_of(p) for p in parts]
    sizes = [m.bit_count() for m in masks]
    inner = 0
    for pm in masks:
        inner += sum((g.adj[v] & pm).bit_count() for v in bits(pm)) // 2
    cross_present = g.num_edges - inner
    cross_total = (sum(sizes) ** 2 - sum(s * s for s in sizes)) // 2
    missing = cross_total - cross_present
    return DeficitReport(inner, missing, inner - missing, f_diag(k))


def verify_partition_properties(g: Graph, parts: Sequence[Iterable[int]], k: int) -> dict[str, bool]:
    """Check the three structural conditions on an (r-1)-class partition.

    (i)   every class has at least n/(r-1) - (k+1)(2r-3) vertices;
    (ii)  for every i, sum of nu(G[V_j]) over j != i is <= k and Delta(G[V_i]) <= k;
    (iii) for every x in V_i, d_{G[V_i]}(x) + sum over j != i of nu(G[N(x) & V_j]) <= k.
    """
    classes = [sorted(p) for p in parts]
    r = len(classes) + 1
    n = g.n
    sizes_ok = all((r - 1) * len(c) >= n - (k + 1) * (2 * r - 3) * (r - 1) for c in classes)

    inner = [g.induced(c) for c in classes]
    nus = [matching_number(h) for h in inner]
    total_nu = sum(nus)
    matching_ok = all(total_nu - nus[i] <= k and max_degree(inner[i]) <= k for i in range(len(classes)))

    masks = [mask_of(c) for c in classes]
    local_ok = True
    for i, c in enumerate(classes):
        for x in c:
            load = (g.adj[x] & masks[i]).bit_count()
            for j, cj in enumerate(classes):
                if j != i and load <= k:
                    load += matching_number(g.induced(list(bits(g.adj[x] & masks[j]))))
            if load > k:
                local_ok = False
                break
        if not local_ok:
            break
    return {"i": sizes_ok, "ii": matching_ok, "iii": local_ok}


def degenerate_peel(g: Graph, k: int, r: int) -> tuple[Graph, int, list[int]]:
    """Delete minimum-degree vertices while delta <= (r-2)/(r-1) * |G| - (k+1).

    Ties go to the least current index. Removed vertices are reported by
    their index in ``g``.
    """
    if r < 3:
        raise ValueError("peeling needs r >= 3")
    labels = list(range(g.n))
    removed = []
    while g.n:
        degs = g.degrees()
        low = min(degs)
        if (r - 1) * low > (r - 2) * g.n - (k + 1) * (r - 1):
            break
        x = degs.index(low)
        removed.append(labels.pop(x))
        g = g.remove_vertex(x)
    return g, len(removed), removed


def heuristic_partition(g: Graph, parts: int, rounds: int = 50) -> PartitionClasses:
    """Local search lowering the number of inner edges; no optimality claim.

    Starts from contiguous balanced classes and moves single vertices to the
    class where they have fewest neighbours until nothing improves.
    """
    n = g.n
    label = [min(v * parts // max(n, 1), parts - 1) for v in range(n)]
    for _ in range(rounds):
        moved = False
        for v in range(n):
            masks = [mask_of(u for u in range(n) if label[u] == c and u != v) for c in range(parts)]
            loads = [(g.adj[v] & m).bit_count() for m in masks]
            best = min(range(parts), key=lambda c: (loads[c], c))
            if loads[best] < loads[label[v]]:
                label[v] = best
                moved = True
        if not moved:
            break
    return PartitionClasses.of([u for u in range(n) if label[u] == c] for c in range(parts))


# -- text format: one class per line, space-separated vertices ---------------

def format_partition(parts: Iterable[Iterable[int]]) -> str:
    return "".join(" ".join(str(v) for v in sorted(c)) + "\n" for c in parts)


def parse_partition(text: str, n: int | None = None) -> PartitionClasses:
    classes = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        classes.append([int(x) for x in line.split()])
    while classes and not classes[-1]:
        classes.pop()
    parts = PartitionClasses.of(classes)
    if n is not None:
        parts.validate(n)
    return parts


def read_partition(path, n: int | None = None) -> PartitionClasses:
    with open(path) as fh:
        return parse_partition(fh.read(), n)


def write_partition(parts: Iterable[Iterable[int]], path) -> None:
    with open(path, "w") as fh:
        fh.write(format_partition(parts))
