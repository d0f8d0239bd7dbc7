"""Digraph isomorphism and canonical codes for desk-scale oriented graphs.

Both routines run degree-pair color refinement first and backtrack only
inside refined color classes, which keeps exhaustive-quality answers fast at
the sizes this package works with.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphError, OrientedGraph, _bits

CANONICAL_SIZE_LIMIT = 16


@dataclass(frozen=True)
class IsoCertificate:
    """Arc-preserving bijection; mapping[v] is the image of source vertex v."""

    mapping: tuple[int, ...]


def is_homomorphism(g: OrientedGraph, h: OrientedGraph, mapping: tuple[int, ...]) -> bool:
    """True iff mapping sends every arc of g onto an arc of h."""
    if len(mapping) != g.n:
        return False
    if any(not (0 <= w < h.n) for w in mapping):
        return False
    out = h.out_masks
    return all(out[mapping[u]] >> mapping[v] & 1 for u, v in g.arcs)


def is_isomorphism(g: OrientedGraph, h: OrientedGraph, mapping: tuple[int, ...]) -> bool:
    """True iff mapping is a bijective homomorphism whose inverse also preserves arcs."""
    if g.n != h.n or len(g.arcs) != len(h.arcs):
        return False
    if sorted(mapping) != list(range(g.n)):
        return False
    return is_homomorphism(g, h, mapping)


def refine_colors(g: OrientedGraph) -> tuple[int, ...]:
    """Iterated (out, in)-degree refinement; colors are renumbered canonically.

    The final coloring is an isomorphism invariant: corresponding vertices of
    isomorphic graphs receive equal colors, and colors are dense from 0.
    """
    n = g.n
    if n == 0:
        return ()
    outs = [list(_bits(m)) for m in g.out_masks]
    ins = [list(_bits(m)) for m in g.in_masks]
    colors = [0] * n
    while True:
        signature = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in outs[v])),
                tuple(sorted(colors[w] for w in ins[v])),
            )
            for v in range(n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signature)))}
        new_colors = [palette[signature[v]] for v in range(n)]
        if new_colors == colors:
            return tuple(colors)
        colors = new_colors


def is_isomorphic(g: OrientedGraph, h: OrientedGraph) -> IsoCertificate | None:
    """Search for an arc-preserving bijection g -> h.

    Prunes with refined color classes, then backtracks over color-compatible
    images, checking exact adjacency (both senses) against mapped neighbors.
    The returned certificate is re-verified.
    """
    if g.n != h.n or len(g.arcs) != len(h.arcs):
        return None
    n = g.n
    if n == 0:
        return IsoCertificate(())
    gcol = refine_colors(g)
    hcol = refine_colors(h)
    if sorted(gcol) != sorted(hcol):
        return None

    h_by_color: dict[int, list[int]] = {}
    for w in range(n):
        h_by_color.setdefault(hcol[w], []).append(w)

    g_out, g_in = g.out_masks, g.in_masks
    h_out, h_in = h.out_masks, h.in_masks

    mapping = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def pick_next() -> int:
        # most already-mapped neighbors first; ties by color class size, then id
        best_v, best_key = -1, None
        for v in range(n):
            if mapping[v] != -1:
                continue
            mapped_nbrs = sum(
                1 for w in assigned if g_out[v] >> w & 1 or g_in[v] >> w & 1
            )
            key = (-mapped_nbrs, len(h_by_color[gcol[v]]), v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def consistent(v: int, w: int) -> bool:
        for u in assigned:
            x = mapping[u]
            if (g_out[u] >> v & 1) != (h_out[x] >> w & 1):
                return False
            if (g_in[u] >> v & 1) != (h_in[x] >> w & 1):
                return False
        return True

    def extend() -> bool:
        if len(assigned) == n:
            return True
        v = pick_next()
        for w in h_by_color[gcol[v]]:
            if used[w] or not consistent(v, w):
                continue
            mapping[v] = w
            used[w] = True
            assigned.append(v)
            if extend():
                return True
            assigned.pop()
            used[w] = False
            mapping[v] = -1
        return False

    if not extend():
        return None
    cert = IsoCertificate(tuple(mapping))
    if not is_isomorphism(g, h, cert.mapping):
        raise AssertionError("isomorphism search produced an invalid certificate")
    return cert


def canonical_code(g: OrientedGraph, limit: int = CANONICAL_SIZE_LIMIT) -> bytes:
    """Canonical byte string: equal codes iff the graphs are isomorphic.

    Minimizes the layered adjacency-bit string over every vertex order that
    lists refined colors in nondecreasing order.  Branch and bound with exact
    prefix pruning: a branch is cut only when its prefix already exceeds the
    best complete string, so the reported minimum is exhaustive.
    """
    n = g.n
    if n > limit:
        raise GraphError(f"canonical_code limit exceeded: n={n} > {limit}")
    if n == 0:
        return b"0|"
    colors = refine_colors(g)
    out, inn = g.out_masks, g.in_masks

    order: list[int] = []
    layers: list[int] = []
    taken = [False] * n
    best: list[int] | None = None

    def layer_of(v: int) -> int:
        # arcs between v and the already-ordered vertices, oldest first
        bits = 1  # sentinel keeps leading zero-bits significant
        for u in order:
            bits = bits << 2 | (out[u] >> v & 1) << 1 | (inn[u] >> v & 1)
        return bits

    def dfs() -> None:
        nonlocal best
        k = len(order)
        if k == n:
            if best is None or layers < best:
                best = layers.copy()
            return
        remaining = [v for v in range(n) if not taken[v]]
        min_color = min(colors[v] for v in remaining)
        cands = sorted(
            (layer_of(v), v) for v in remaining if colors[v] == min_color
        )
        for layer, v in cands:
            # layers[:k] <= best[:k] always holds here; prune only on a tie
            if best is not None and layers == best[:k] and layer > best[k]:
                break
            layers.append(layer)
            taken[v] = True
            order.append(v)
            dfs()
            order.pop()
            taken[v] = False
            layers.pop()

    dfs()
    assert best is not None
    return (f"{n}|" + ",".join(map(str, best))).encode()
