"""Exact maximum average degree via densest-subgraph min-cut tests.

All arithmetic is integral or rational; the 8/3 sparseness threshold is a
strict comparison, so floating point is never used.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .graph import GraphError, OrientedGraph


class _Dinic:
    def __init__(self, size: int):
        self.size = size
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rcap: int = 0) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.size
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for e in self.head[u]:
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.size

            def push(u: int, limit: int) -> int:
                if u == t:
                    return limit
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        got = push(v, min(limit, self.cap[e]))
                        if got > 0:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = push(s, 1 << 62)
                if pushed == 0:
                    break
                flow += pushed

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def _denser_subgraph(g: OrientedGraph, num: int, den: int) -> list[int] | None:
    """Vertices of some S with e(S)/|S| > num/den, or None if no such S exists.

    Goldberg's network: source -> v with capacity den*deg(v), v -> sink with
    capacity 2*num, and both directions of every underlying edge with
    capacity den.  A min cut strictly below den*sum(deg) witnesses S.
    """
    edges = g.edges()
    if not edges:
        return None
    net = _Dinic(g.n + 2)
    source, sink = g.n, g.n + 1
    total = 0
    for v in range(g.n):
        d = g.degree(v)
        total += den * d
        net.add_edge(source, v, den * d)
        net.add_edge(v, sink, 2 * num)
    for u, v in edges:
        net.add_edge(u, v, den, den)
    if net.max_flow(source, sink) >= total:
        return None
    side = net.source_side(source)
    chosen = sorted(v for v in side if v < g.n)
    if not chosen:
        raise AssertionError("min cut below total flow must expose a subgraph")
    return chosen


def _density(g: OrientedGraph, vertices: list[int]) -> Fraction:
    inside = set(vertices)
    edge_count = sum(1 for u, v in g.edges() if u in inside and v in inside)
    return Fraction(edge_count, len(vertices))


def max_average_degree(g: OrientedGraph) -> Fraction:
    """Exact mad(g) = max over non-empty subgraphs H of 2|E(H)|/|V(H)|."""
    if g.n < 1:
        raise GraphError("max_average_degree requires at least one vertex")
    if not g.arcs:
        return Fraction(0)
    n = g.n
    lo = _density(g, list(range(n)))  # achieved by the whole graph
    hi = Fraction(n, 2)  # e(S)/|S| <= (|S|-1)/2 < n/2
    gap = Fraction(1, n * n)  # distinct densities p/q, q <= n differ by more
    while hi - lo > gap:
        mid = (lo + hi) / 2
        found = _denser_subgraph(g, mid.numerator, mid.denominator)
        if found is None:
            hi = mid
        else:
            lo = _density(g, found)
    return 2 * lo


def mad_less_than(g: OrientedGraph, bound: Fraction) -> bool:
    """Exact test mad(g) < bound with a single min-cut computation.

    Uses the threshold num/den = (a*n - 1)/(2*b*n) for bound a/b: an integer
    density e/|S| exceeds it exactly when 2b*e >= a*|S|, i.e. mad >= bound.
    """
    if g.n < 1:
        raise GraphError("mad_less_than requires at least one vertex")
    if bound <= 0:
        return False
    if not g.arcs:
        return True
    a, b = bound.numerator, bound.denominator
    return _denser_subgraph(g, a * g.n - 1, 2 * b * g.n) is None
