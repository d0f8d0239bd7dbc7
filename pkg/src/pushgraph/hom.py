"""Homomorphism and push-homomorphism search, homomorphism transfer under
target pushing, and exact oriented/push chromatic numbers.

A push homomorphism of g into h is found by searching an ordinary
homomorphism of g into the anti-twinned graph of h, pushing the preimages of
the primed half, and folding anti-twins onto their base vertices.  Chromatic
numbers enumerate tournament targets only: adding arcs to a target never
destroys a homomorphism and every oriented graph extends to a tournament, so
tournaments suffice for the minimum order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graph import GraphError, OrientedGraph
from .isomorphism import canonical_code, is_homomorphism
from .push import anti_twinned, push

_FOUND = 1
_EXHAUSTED = 0
_BUDGET = -1


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one logical search; the seed only matters to randomized callers."""

    max_nodes: int = 10_000_000
    max_seconds: float = 60.0
    seed: int | None = None

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise GraphError("search budget limits must be positive")


class _Tracker:
    """Mutable node/time accounting shared by the searches of one operation."""

    def __init__(self, budget: SearchBudget | None):
        budget = budget or SearchBudget()
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_seconds
        self.start = time.monotonic()
        self.nodes = 0

    def spend(self) -> bool:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            return False
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            return False
        return True

    @property
    def seconds(self) -> float:
        return time.monotonic() - self.start


@dataclass(frozen=True)
class HomSearchResult:
    """Outcome of a homomorphism search.

    complete distinguishes a proven absence (search space exhausted) from a
    budget-truncated search; a mapping is always verified before release.
    """

    mapping: tuple[int, ...] | None
    complete: bool
    nodes: int
    seconds: float

    @property
    def status(self) -> str:
        if self.mapping is not None:
            return "found"
        return "none" if self.complete else "budget-exhausted"


@dataclass(frozen=True)
class PushHomWitness:
    """Push vector on the source plus a verified mapping of the pushed source."""

    push_vector: frozenset[int]
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class PushHomResult:
    witness: PushHomWitness | None
    complete: bool
    nodes: int
    seconds: float

    @property
    def status(self) -> str:
        if self.witness is not None:
            return "found"
        return "none" if self.complete else "budget-exhausted"


def _solve(g: OrientedGraph, h: OrientedGraph, tracker: _Tracker):
    """Backtracking search that keeps every arc constraint consistent.

    Candidate domains live in bitmasks; assigning a vertex re-propagates arc
    consistency to a fixpoint, so an unsatisfiable remnant (for instance one
    forced path among many satisfiable ones) wipes a domain immediately
    instead of being rediscovered once per combination of the others.
    Variable order is deterministic smallest-domain-first with ties broken by
    maximum degree and then vertex id; candidate values ascend by target id.
    Returns (mapping | None, verdict) where verdict is _FOUND, _EXHAUSTED or
    _BUDGET.
    """
    n = g.n
    if n == 0:
        return (), _FOUND
    if h.n == 0:
        return None, _EXHAUSTED
    degree = [g.degree(v) for v in range(n)]
    h_out, h_in = h.out_masks, h.in_masks
    constraints: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for u, v in g.arcs:
        # stored on each endpoint: (other side, and whether the arc leaves it)
        constraints[u].append((v, True))
        constraints[v].append((u, False))

    full = (1 << h.n) - 1
    domains = [full] * n

    def propagate(changed: list[int], trail: list[tuple[int, int]]) -> bool:
        while changed:
            b = changed.pop()
            dom_b = domains[b]
            for a, b_to_a in constraints[b]:
                da = domains[a]
                new = 0
                rem = da
                while rem:
                    low = rem & -rem
                    rem ^= low
                    x = low.bit_length() - 1
                    if (h_in[x] if b_to_a else h_out[x]) & dom_b:
                        new |= low
                if new != da:
                    trail.append((a, da))
                    domains[a] = new
                    if new == 0:
                        return False
                    changed.append(a)
        return True

    root_trail: list[tuple[int, int]] = []
    if not propagate(list(range(n)), root_trail):
        return None, _EXHAUSTED

    def pick() -> int:
        best = -1
        best_key = None
        for v in range(n):
            count = domains[v].bit_count()
            if count > 1:
                key = (count, -degree[v], v)
                if best_key is None or key < best_key:
                    best, best_key = v, key
        return best

    def backtrack() -> int:
        v = pick()
        if v < 0:
            return _FOUND
        cand = saved = domains[v]
        while cand:
            if not tracker.spend():
                return _BUDGET
            low = cand & -cand
            cand ^= low
            trail = [(v, saved)]
            domains[v] = low
            if propagate([v], trail):
                verdict = backtrack()
                if verdict != _EXHAUSTED:
                    return verdict
            for a, old in reversed(trail):
                domains[a] = old
        return _EXHAUSTED

    verdict = backtrack()
    if verdict == _FOUND:
        return tuple(d.bit_length() - 1 for d in domains), _FOUND
    return None, verdict


def find_hom(
    g: OrientedGraph,
    h: OrientedGraph,
    budget: SearchBudget | None = None,
    _tracker: _Tracker | None = None,
) -> HomSearchResult:
    """Search for a homomorphism g -> h within the budget.

    An absent mapping with complete=True is a proof of absence; with
    complete=False the budget ran out first.
    """
    tracker = _tracker or _Tracker(budget)
    mapping, verdict = _solve(g, h, tracker)
    if mapping is not None and not is_homomorphism(g, h, mapping):
        raise AssertionError("solver produced a non-homomorphism")
    return HomSearchResult(mapping, verdict != _BUDGET, tracker.nodes, tracker.seconds)


def fold_to_push_witness(
    g: OrientedGraph, h: OrientedGraph, mapping: tuple[int, ...]
) -> PushHomWitness:
    """Turn a homomorphism g -> anti_twinned(h) into a verified push witness.

    Push the preimages of the primed half, then fold every primed image onto
    its base vertex.
    """
    vector = frozenset(v for v in range(g.n) if mapping[v] >= h.n)
    folded = tuple(w - h.n if w >= h.n else w for w in mapping)
    witness = PushHomWitness(vector, folded)
    if not is_homomorphism(push(g, vector), h, folded):
        raise AssertionError("push witness failed re-verification")
    return witness


def find_push_hom(
    g: OrientedGraph,
    h: OrientedGraph,
    budget: SearchBudget | None = None,
    _tracker: _Tracker | None = None,
) -> PushHomResult:
    """Search for a push homomorphism of g into h via the anti-twin reduction."""
    tracker = _tracker or _Tracker(budget)
    inner = find_hom(g, anti_twinned(h), _tracker=tracker)
    if inner.mapping is None:
        return PushHomResult(None, inner.complete, tracker.nodes, tracker.seconds)
    witness = fold_to_push_witness(g, h, inner.mapping)
    return PushHomResult(witness, True, tracker.nodes, tracker.seconds)


def brute_force_push_hom(
    g: OrientedGraph, h: OrientedGraph, budget: SearchBudget | None = None
) -> PushHomResult:
    """Independent oracle: try find_hom from every one of the 2^n presentations.

    Complementary push vectors produce the same presentation, so vectors
    containing the last vertex are skipped.
    """
    if g.n > 16:
        raise GraphError(f"brute_force_push_hom size limit exceeded: n={g.n}")
    tracker = _Tracker(budget)
    for bits in range(1 << max(g.n - 1, 0)):
        vector = frozenset(v for v in range(g.n) if bits >> v & 1)
        presented = push(g, vector)
        res = find_hom(presented, h, _tracker=tracker)
        if res.mapping is not None:
            witness = PushHomWitness(vector, res.mapping)
            if not is_homomorphism(presented, h, witness.mapping):
                raise AssertionError("brute-force witness failed re-verification")
            return PushHomResult(witness, True, tracker.nodes, tracker.seconds)
        if not res.complete:
            return PushHomResult(None, False, tracker.nodes, tracker.seconds)
    return PushHomResult(None, True, tracker.nodes, tracker.seconds)


def transfer(
    g: OrientedGraph,
    h: OrientedGraph,
    mapping: tuple[int, ...],
    push_on_target: Iterable[int],
) -> frozenset[int]:
    """Push vector on g making mapping a homomorphism onto the pushed target.

    Pushing the preimages of the pushed target vertices works; the
    postcondition is re-verified before returning.
    """
    if not is_homomorphism(g, h, mapping):
        raise GraphError("transfer requires a verified homomorphism")
    target_set = set(push_on_target)
    for w in target_set:
        h._check_vertex(w)
    source_set = frozenset(v for v in range(g.n) if mapping[v] in target_set)
    if not is_homomorphism(push(g, source_set), push(h, target_set), mapping):
        raise AssertionError("transferred presentation failed re-verification")
    return source_set


@lru_cache(maxsize=None)
def enumerate_tournaments(k: int) -> tuple[OrientedGraph, ...]:
    """One representative per isomorphism class of tournaments on k vertices."""
    if k < 0:
        raise GraphError("tournament order must be non-negative")
    if k > 7:
        raise GraphError(f"tournament enumeration limit exceeded: k={k} > 7")
    if k == 0:
        return (OrientedGraph(0),)
    classes: dict[bytes, OrientedGraph] = {}
    for base in enumerate_tournaments(k - 1):
        new = k - 1
        for bits in range(1 << new):
            arcs = list(base.arcs)
            for i in range(new):
                arcs.append((i, new) if bits >> i & 1 else (new, i))
            t = OrientedGraph(k, tuple(arcs))
            classes.setdefault(canonical_code(t), t)
    return tuple(classes[code] for code in sorted(classes))


@dataclass(frozen=True)
class ChromaticResult:
    """Exact chromatic value with a verified witness, or a proven lower bound.

    value is None when no target of order <= the requested maximum admits a
    homomorphism; lower_bound then reports max_k + 1 provided the searches
    were complete.
    """

    value: int | None
    target: OrientedGraph | None
    witness: object | None
    lower_bound: int
    complete: bool
    nodes: int
    seconds: float


def _chromatic(g: OrientedGraph, max_k: int, budget: SearchBudget | None, pushy: bool):
    if not 0 <= max_k <= 7:
        raise GraphError("chromatic search supports target orders 0..7 only")
    tracker = _Tracker(budget)
    all_complete = True
    for k in range(max_k + 1):
        for target in enumerate_tournaments(k):
            if pushy:
                res = find_push_hom(g, target, _tracker=tracker)
                hit = res.witness
            else:
                res = find_hom(g, target, _tracker=tracker)
                hit = res.mapping
            if hit is not None:
                return ChromaticResult(
                    k, target, hit, k, all_complete, tracker.nodes, tracker.seconds
                )
            if not res.complete:
                all_complete = False
                return ChromaticResult(
                    None, None, None, k, False, tracker.nodes, tracker.seconds
                )
    return ChromaticResult(
        None, None, None, max_k + 1, all_complete, tracker.nodes, tracker.seconds
    )


def oriented_chromatic_number(
    g: OrientedGraph, max_k: int = 7, budget: SearchBudget | None = None
) -> ChromaticResult:
    """Smallest tournament order <= max_k admitting a homomorphism from g."""
    return _chromatic(g, max_k, budget, pushy=False)


def push_chromatic_number(
    g: OrientedGraph, max_k: int = 7, budget: SearchBudget | None = None
) -> ChromaticResult:
    """Smallest tournament order <= max_k admitting a push homomorphism from g."""
    return _chromatic(g, max_k, budget, pushy=True)
