"""Random instance generators shared by the partition and acceptance tests."""

import random
from itertools import combinations

from fanramsey.detection import find_fan
from fanramsey.formulas import construct_extremal_fan_free, extremal_construction_fits
from fanramsey.graph import FanSpec, Graph, complete_multipartite, turan_parts
from fanramsey.partition import verify_partition_properties


def layout(sizes):
    parts, start = [], 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    return parts


def deficient_multipartite(sizes, b, rng, inner_p=0.0, delete_p=0.5):
    """Complete multipartite graph minus cross edges, each vertex missing at most b per part."""
    parts = layout(sizes)
    g = complete_multipartite(sizes)
    owner = {v: i for i, p in enumerate(parts) for v in p}
    missing = {}
    deleted = []
    cross = [(u, v) for u, v in combinations(range(g.n), 2) if owner[u] != owner[v]]
    rng.shuffle(cross)
    for u, v in cross:
        if rng.random() >= delete_p:
            continue
        if missing.get((u, owner[v]), 0) < b and missing.get((v, owner[u]), 0) < b:
            missing[u, owner[v]] = missing.get((u, owner[v]), 0) + 1
            missing[v, owner[u]] = missing.get((v, owner[u]), 0) + 1
            deleted.append((u, v))
    g = g.remove_edges(deleted)
    inner = [(u, v) for p in parts for u, v in combinations(p, 2) if rng.random() < inner_p]
    return g.add_edges(inner), parts


def random_seed_clique(g, parts, rng):
    """A clique meeting each part at most twice, and at most one part twice."""
    members = []
    order = list(range(len(parts)))
    rng.shuffle(order)
    allow_double = rng.random() < 0.5
    for i in order[: rng.randint(0, len(parts))]:
        cands = [v for v in parts[i] if all(g.has_edge(v, u) for u in members)]
        if not cands:
            continue
        v = rng.choice(cands)
        members.append(v)
        if allow_double:
            twin = [u for u in parts[i] if u != v and all(g.has_edge(u, w) for w in members)]
            if twin:
                members.append(rng.choice(twin))
                allow_double = False
    return sorted(members)


def extension_instance(rng):
    m = rng.randint(2, 4)
    b = rng.randint(0, 2)
    t = rng.randint(1, 3)
    sizes = [m * b + 2 * t + rng.randint(0, 2) for _ in range(m)]
    g, parts = deficient_multipartite(sizes, b, rng, inner_p=0.3)
    seeds = [random_seed_clique(g, parts, rng) for _ in range(t)]
    return g, parts, seeds, b


def transversal_instance(rng, with_y0):
    m = rng.randint(2, 4)
    b = rng.randint(0, 2)
    k = rng.randint(1, 3)
    sizes = [(i - 1) * b + k + rng.randint(0, 1) for i in range(1, m + 1)]
    if with_y0:
        sizes.append(m * b + k + rng.randint(0, 1))
    # per-vertex deficiency bounded by b towards every class, both directions
    g, parts = deficient_multipartite(sizes, b, rng)
    if with_y0:
        return g, parts[:-1], parts[-1], b, k
    return g, parts, None, b, k


def fan_free_corpus(rng, target=200):
    """F(k+1, r)-free graphs (n <= 13) with a partition passing the structural checks."""
    corpus = []
    bases = []
    for r in (3, 4, 5):
        for k in (1, 2, 3):
            spec = FanSpec(k + 1, r)
            for n in range(3 * (r - 1), 14):
                if extremal_construction_fits(n, spec):
                    bases.append((construct_extremal_fan_free(n, spec), turan_parts(n, r - 1), k, r))
    for g, parts, k, r in bases:
        corpus.append((g, parts, k, r))
    attempts = 0
    while len(corpus) < target and attempts < 50 * target:
        attempts += 1
        g, parts, k, r = rng.choice(bases)
        edges = g.edges()
        drop = rng.sample(edges, rng.randint(1, max(1, len(edges) // 6)))
        h = g.remove_edges(drop)
        if rng.random() < 0.5:
            # add a few inner edges; the checks below decide admissibility
            inner = [e for p in parts for e in combinations(p, 2) if not h.has_edge(*e)]
            h = h.add_edges(rng.sample(inner, min(len(inner), rng.randint(1, 2))))
        if find_fan(h, FanSpec(k + 1, r)) is not None:
            continue
        if not all(verify_partition_properties(h, parts, k).values()):
            continue
        corpus.append((h, parts, k, r))
    return corpus
