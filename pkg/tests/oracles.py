"""Independent brute-force oracles the tests check the library against.

Everything here is deliberately naive (permutations, subset enumeration,
full mapping enumeration) and shares no code with the implementation paths
it validates.
"""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from itertools import combinations, permutations, product

from pushgraph import OrientedGraph


def random_oriented_graph(rng: random.Random, n: int, p: float = 0.4) -> OrientedGraph:
    arcs = []
    for u, v in combinations(range(n), 2):
        roll = rng.random()
        if roll < p / 2:
            arcs.append((u, v))
        elif roll < p:
            arcs.append((v, u))
    return OrientedGraph(n, tuple(arcs))


def girth_by_edge_removal(g: OrientedGraph):
    """min over edges of 1 + shortest path between its endpoints without it."""
    edges = g.edges()
    best = float("inf")
    for skip in edges:
        adj = {v: set() for v in range(g.n)}
        for e in edges:
            if e == skip:
                continue
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        start, goal = skip
        dist = {start: 0}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if goal in dist:
            best = min(best, dist[goal] + 1)
    return best


def mad_by_subset_enumeration(g: OrientedGraph) -> Fraction:
    edges = g.edges()
    edge_masks = [(1 << u) | (1 << v) for u, v in edges]
    best = Fraction(0)
    for subset in range(1, 1 << g.n):
        inside = sum(1 for m in edge_masks if m & subset == m)
        best = max(best, Fraction(2 * inside, subset.bit_count()))
    return best


def iso_by_permutations(g: OrientedGraph, h: OrientedGraph):
    if g.n != h.n or len(g.arcs) != len(h.arcs):
        return None
    target = set(h.arcs)
    for perm in permutations(range(g.n)):
        if {(perm[u], perm[v]) for u, v in g.arcs} == target:
            return perm
    return None


def hom_by_enumeration(g: OrientedGraph, h: OrientedGraph):
    if g.n == 0:
        return ()
    if h.n == 0:
        return None
    for image in product(range(h.n), repeat=g.n):
        if all(h.has_arc(image[u], image[v]) for u, v in g.arcs):
            return image
    return None


def push_by_hand(g: OrientedGraph, pushed) -> OrientedGraph:
    pushed = set(pushed)
    arcs = []
    for u, v in g.arcs:
        if (u in pushed) + (v in pushed) == 1:
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    return OrientedGraph(g.n, tuple(arcs))


def push_hom_by_double_enumeration(g: OrientedGraph, h: OrientedGraph):
    """All push vectors times all mappings; returns a witness or None."""
    for bits in range(1 << g.n):
        vector = frozenset(v for v in range(g.n) if bits >> v & 1)
        presented = push_by_hand(g, vector)
        image = hom_by_enumeration(presented, h)
        if image is not None:
            return vector, image
    return None


def all_push_homs(g: OrientedGraph, h: OrientedGraph):
    """Every (push vector, mapping) pair that works; for soundness checks."""
    found = []
    for bits in range(1 << g.n):
        vector = frozenset(v for v in range(g.n) if bits >> v & 1)
        presented = push_by_hand(g, vector)
        for image in product(range(h.n), repeat=g.n):
            if all(h.has_arc(image[u], image[v]) for u, v in presented.arcs):
                found.append((vector, image))
    return found
