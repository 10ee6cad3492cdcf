"""Closed-form extremal quantities for fans and the graphs attaining them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import FanSpec, Graph, disjoint_union, embed_in_part, turan, turan_parts


@dataclass(frozen=True)
class BoundedPair:
    """Matching-number bound ``nu`` and maximum-degree bound ``delta``."""

    nu: int
    delta: int

    def __post_init__(self):
        if self.nu < 1 or self.delta < 1:
            raise ValueError(f"nu and delta must be >= 1, got ({self.nu}, {self.delta})")


@dataclass(frozen=True)
class ExtremalValue:
    value: int
    parity_branch: str
    below_threshold: bool = False
    threshold: int = 0


def turan_count(n: int, p: int) -> int:
    """Edge count of the Turán graph T(n, p)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    sizes = [len(part) for part in turan_parts(n, p)]
    return (n * n - sum(s * s for s in sizes)) // 2


def f_bounded(pair: BoundedPair) -> int:
    """Most edges in a graph with matching number <= nu and max degree <= delta."""
    nu, delta = pair.nu, pair.delta
    value = nu * delta + (delta // 2) * (nu // -(-delta // 2))
    assert value <= nu * delta + nu
    return value


def f_diag(k: int) -> int:
    """f(k, k), with f(0, 0) = 0 for the empty graph."""
    return 0 if k == 0 else f_bounded(BoundedPair(k, k))


def turan_epsilon(n: int, r: int) -> Fraction:
    """Gap between (r-2)/(2(r-1)) n^2 and ex(n, K_r)."""
    l = n % (r - 1)
    return Fraction(l * (r - 1 - l), 2 * (r - 1))


def ex_clique(n: int, r: int) -> int:
    """ex(n, K_r), i.e. t_{r-1}(n)."""
    if r < 2:
        raise ValueError("clique size must be >= 2")
    value = turan_count(n, r - 1)
    if r >= 3:
        closed = Fraction(r - 2, 2 * (r - 1)) * n * n - turan_epsilon(n, r)
        assert closed == value, (n, r, closed, value)
    return value


def fan_threshold(spec: FanSpec) -> int:
    return 16 * spec.k ** 3 * spec.r ** 8


def ar_threshold(kplus1: int, r: int) -> int:
    return 256 * kplus1 ** 5 * r ** 16


def ex_fan(n: int, spec: FanSpec) -> ExtremalValue:
    """ex(n, F(k, r)) for r >= 3: ex(n, K_r) + k^2 - k (k odd) or + k^2 - 3k/2 (k even)."""
    k, r = spec.k, spec.r
    if r < 3:
        raise ValueError("closed form needs r >= 3; F(k, 2) is the star K_{1,k}")
    if k % 2:
        branch, extra = "odd", k * k - k
    else:
        branch, extra = "even", k * k - 3 * k // 2
    threshold = fan_threshold(spec)
    return ExtremalValue(ex_clique(n, r) + extra, branch, n < threshold, threshold)


def ar_fan(n: int, kplus1: int, r: int) -> ExtremalValue:
    """ar(n, F(k+1, r)) = ex(n, F(k, r)) + 2."""
    if kplus1 < 2:
        raise ValueError("ar_fan needs k+1 >= 2")
    base = ex_fan(n, FanSpec(kplus1 - 1, r))
    threshold = ar_threshold(kplus1, r)
    return ExtremalValue(base.value + 2, base.parity_branch, n < threshold, threshold)


def turan_decrement(n: int, r: int) -> int:
    """ex(n, K_r) - ex(n-1, K_r)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ex_clique(n, r) - ex_clique(n - 1, r)


def _block(delta: int) -> Graph:
    # factor-critical piece with nu = ceil(delta/2), max degree delta and
    # delta*ceil(delta/2) + floor(delta/2) edges
    if delta % 2 == 0:
        size = delta + 1
        return Graph.from_edges(size, [(u, v) for u in range(size) for v in range(u + 1, size)])
    size = delta + 2
    missing = {(0, 1), (0, 2)}
    missing.update((v, v + 1) for v in range(3, size, 2))
    edges = [(u, v) for u in range(size) for v in range(u + 1, size) if (u, v) not in missing]
    g = Graph.from_edges(size, edges)
    if delta == 1:
        g = g.induced([v for v in range(size) if g.degree(v)])
    return g


def construct_bounded_max(pair: BoundedPair) -> Graph:
    """A graph with nu <= nu, Delta <= delta and exactly f(nu, delta) edges.

    Copies of a factor-critical block with matching number ceil(delta/2),
    then stars K_{1,delta} for the leftover matching budget.
    """
    nu, delta = pair.nu, pair.delta
    half = -(-delta // 2)
    copies, leftover = divmod(nu, half)
    g = Graph.empty(0)
    block = _block(delta)
    for _ in range(copies):
        g = disjoint_union(g, block)
    star = Graph.from_edges(delta + 1, [(0, v) for v in range(1, delta + 1)])
    for _ in range(leftover):
        g = disjoint_union(g, star)
    return g


def extremal_pattern(k: int) -> Graph:
    """The graph embedded into one Turán part: empty for k = 1, else extremal for f(k-1, k-1)."""
    if k == 1:
        return Graph.empty(0)
    return construct_bounded_max(BoundedPair(k - 1, k - 1))


def extremal_host_part(n: int, r: int) -> list[int]:
    parts = turan_parts(n, r - 1)
    return max(parts, key=len)  # first largest


def construct_extremal_fan_free(n: int, spec: FanSpec) -> Graph:
    """T(n, r-1) with the f(k-1, k-1) extremal graph inside its first largest part."""
    k, r = spec.k, spec.r
    if r < 3:
        raise ValueError("construction needs r >= 3")
    pattern = extremal_pattern(k)
    part = extremal_host_part(n, r)
    if pattern.n > len(part):
        raise ValueError(f"part of size {len(part)} cannot host the {pattern.n}-vertex pattern")
    return embed_in_part(turan(n, r - 1), part, pattern)


def extremal_construction_fits(n: int, spec: FanSpec) -> bool:
    if n < 1:
        return False
    return extremal_pattern(spec.k).n <= len(extremal_host_part(n, spec.r))
