"""Generators for the named graphs this package studies and for random
verification corpora.

Gadget constructors carry transcribed arc lists as data but are accepted only
after their stated structural properties check out at construction time; a
failing property aborts loudly instead of shipping a wrong gadget.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from .density import mad_less_than
from .graph import GraphError, OrientedGraph, underlying_girth
from .push import agree_disagree, cannot_identify, in_common_uc4

PathPattern = Sequence[bool]


def parse_pattern(pattern: str | Iterable[bool]) -> tuple[bool, ...]:
    """Normalize a path pattern; '+'/True means the arc follows the path."""
    if isinstance(pattern, str):
        bits = []
        for ch in pattern:
            if ch == "+":
                bits.append(True)
            elif ch == "-":
                bits.append(False)
            else:
                raise GraphError(f"pattern characters must be '+' or '-', got {ch!r}")
        result = tuple(bits)
    else:
        result = tuple(bool(b) for b in pattern)
    if not result:
        raise GraphError("path pattern must have length at least 1")
    return result


def directed_cycle(n: int) -> OrientedGraph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return OrientedGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def c3() -> OrientedGraph:
    return directed_cycle(3)


def oriented_path(pattern: str | Iterable[bool]) -> OrientedGraph:
    """Path on len(pattern)+1 vertices; pattern[i] orients the arc at step i."""
    bits = parse_pattern(pattern)
    arcs = tuple(
        (i, i + 1) if forward else (i + 1, i) for i, forward in enumerate(bits)
    )
    return OrientedGraph(len(bits) + 1, arcs)


def uc4() -> OrientedGraph:
    """The 4-cycle with exactly one arc against the cyclic direction."""
    return OrientedGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))


def paley_plus() -> OrientedGraph:
    """Directed triangle 0->1->2->0 plus apex 3 dominating all three.

    Both two-step covering identities are checked for every vertex before the
    graph is released: same-sense pairs reach everything except the start,
    and mixed-sense pairs reach everything.
    """
    g = OrientedGraph(4, ((0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)))
    from .coloring import two_step_neighborhoods

    everything = frozenset(range(4))
    for v in range(4):
        steps = two_step_neighborhoods(g, v)
        if steps.out_out | steps.in_in != everything - {v}:
            raise GraphError("apex-triangle graph fails the same-sense covering identity")
        if steps.out_in | steps.in_out != everything:
            raise GraphError("apex-triangle graph fails the mixed-sense covering identity")
    return g


def zielonka(k: int) -> OrientedGraph:
    """Star-marked binary vectors; arcs decided by coordinate agreement and
    index order.

    Vertices are the vectors with one starred position i and binary entries
    elsewhere; x in class i beats y in class j > i exactly when x agrees with
    y on the exchanged coordinates (x[j] == y[i]), and loses otherwise.
    """
    if not 2 <= k <= 6:
        raise GraphError("zielonka order parameter must be between 2 and 6")
    labels = list(_zielonka_labels(k))
    index = {lab: pos for pos, lab in enumerate(labels)}
    arcs: list[tuple[int, int]] = []
    for i, xc in labels:
        for j, yc in labels:
            if i >= j:
                continue
            if xc[j] == yc[i]:
                arcs.append((index[(i, xc)], index[(j, yc)]))
            else:
                arcs.append((index[(j, yc)], index[(i, xc)]))
    return OrientedGraph(len(labels), tuple(arcs))


def _zielonka_labels(k: int):
    for i in range(k):
        for bits in range(1 << (k - 1)):
            coords = []
            pos = 0
            for slot in range(k):
                if slot == i:
                    coords.append(None)
                else:
                    coords.append(bits >> pos & 1)
                    pos += 1
            yield (i, tuple(coords))


def _zielonka_complement(label):
    i, coords = label
    return (i, tuple(None if c is None else 1 - c for c in coords))


def zielonka_half(k: int) -> OrientedGraph:
    """Induced half of the star-vector graph on a transversal of complement pairs.

    The transversal keeps the vertices whose first non-starred coordinate is
    0, one from each pair {x, complement(x)}.  Anti-twinning the half must
    reproduce the full graph; the reconstruction is checked arc-for-arc
    through the explicit pairing, and a failure aborts construction.
    """
    from .push import anti_twinned

    full = zielonka(k)
    labels = list(_zielonka_labels(k))
    index = {lab: pos for pos, lab in enumerate(labels)}
    chosen = [
        index[lab]
        for lab in labels
        if next(c for c in lab[1] if c is not None) == 0
    ]
    half, new_id = full.induced(chosen)
    size = len(chosen)
    image = [0] * (2 * size)
    for lab in labels:
        v = index[lab]
        if v in new_id:
            image[new_id[v]] = v
            image[new_id[v] + size] = index[_zielonka_complement(lab)]
    rebuilt = anti_twinned(half)
    mapped = {(image[u], image[v]) for u, v in rebuilt.arcs}
    if mapped != set(full.arcs):
        raise GraphError("anti-twinning the half does not rebuild the full graph")
    return half


def zielonka_weight_split_report(k: int) -> dict:
    """Status of the weight-threshold split (coordinate sum >= ceil(k/2)).

    Reported, never asserted: the threshold split does not bisect complement
    pairs for odd k, while the complement transversal always does.
    """
    labels = list(_zielonka_labels(k))
    threshold = -(-k // 2)
    heavy = [lab for lab in labels if sum(c for c in lab[1] if c is not None) >= threshold]
    heavy_set = set(heavy)
    complement_leaves = all(_zielonka_complement(lab) not in heavy_set for lab in heavy)
    return {
        "k": k,
        "order": len(labels),
        "heavy_size": len(heavy),
        "light_size": len(labels) - len(heavy),
        "equal_halves": 2 * len(heavy) == len(labels),
        "complement_maps_heavy_to_light": complement_leaves,
    }


def b0() -> OrientedGraph:
    """8-vertex, 17-arc planar gadget whose push class needs 8 colors.

    Vertex i is x_{i+1} of the drawing: 3 receives from 4, 5, 6 and sends to
    0, 1, 2; paths 0->1->2 and 4->5->6; vertex 7 sends to everything else.
    Accepted only if every non-adjacent pair spans a one-reversed-arc
    4-cycle and some pair with vertex 7 agrees and disagrees on >= 3
    vertices each.
    """
    g = OrientedGraph(
        8,
        (
            (4, 3), (5, 3), (6, 3),
            (3, 0), (3, 1), (3, 2),
            (0, 1), (1, 2),
            (4, 5), (5, 6),
            (7, 0), (7, 1), (7, 2), (7, 3), (7, 4), (7, 5), (7, 6),
        ),
    )
    for x in range(8):
        for y in range(x + 1, 8):
            if g.has_arc(x, y) or g.has_arc(y, x):
                continue
            if not in_common_uc4(g, x, y):
                raise GraphError(f"non-adjacent pair ({x}, {y}) spans no reversed 4-cycle")
    if not any(row["meets_bound"] for row in b0_pair_report(g)):
        raise GraphError("no pair with the dominating vertex has agree/disagree >= 3")
    return g


def b0_pair_report(g: OrientedGraph | None = None) -> list[dict]:
    """Agree/disagree statistics of every pair with the dominating vertex 7.

    The drawing's prose names one such pair with both sets of size >= 3 but
    mislabels it; the report computes all candidates instead of guessing.
    """
    if g is None:
        g = b0()
    rows = []
    for x in range(7):
        stats = agree_disagree(g, x, 7)
        rows.append(
            {
                "pair": (x, 7),
                "agree": sorted(stats.agree),
                "disagree": sorted(stats.disagree),
                "meets_bound": len(stats.agree) >= 3 and len(stats.disagree) >= 3,
            }
        )
    return rows


def y_gadget() -> OrientedGraph:
    """11-vertex planar gadget: apex 0 dominating an 8-vertex ring, with
    special vertices 1 and 2 attached so that the common neighborhoods of
    (0, 1) and of (0, 2) each induce a directed 5-cycle.

    Accepted only if 0, 1, 2 are pairwise non-identifiable, both common
    neighborhoods induce directed 5-cycles, and each 5-cycle's vertices are
    pairwise non-identifiable.
    """
    apex, x, y = 0, 1, 2
    a, b, c, d, e, f, gg, h = range(3, 11)
    g = OrientedGraph(
        11,
        tuple((apex, w) for w in range(3, 11))
        + (
            (x, a), (x, b), (x, c), (x, e), (d, x),
            (y, e), (y, gg), (y, d), (y, f), (h, y),
            (a, b), (b, c), (c, d), (d, e), (e, a),
            (e, f), (f, gg), (gg, h), (h, d),
        ),
    )
    for p, q in ((apex, x), (apex, y), (x, y)):
        if not cannot_identify(g, p, q):
            raise GraphError(f"special vertices {p} and {q} are identifiable")
    for special in (x, y):
        ring = sorted(g.neighbors(apex) & g.neighbors(special))
        if not _induces_directed_cycle(g, ring) or len(ring) != 5:
            raise GraphError(
                f"common neighbors of the apex and {special} are not a directed 5-cycle"
            )
        for i, p in enumerate(ring):
            for q in ring[i + 1:]:
                if not cannot_identify(g, p, q):
                    raise GraphError(f"5-cycle vertices {p} and {q} are identifiable")
    return g


def _induces_directed_cycle(g: OrientedGraph, vertices: list[int]) -> bool:
    inside = set(vertices)
    succ = {}
    for v in vertices:
        outs = [w for w in g.out_neighbors(v) if w in inside]
        ins = [w for w in g.in_neighbors(v) if w in inside]
        if len(outs) != 1 or len(ins) != 1:
            return False
        succ[v] = outs[0]
    seen = []
    v = vertices[0]
    while v not in seen:
        seen.append(v)
        v = succ[v]
    return len(seen) == len(vertices)


def girth8_witness() -> OrientedGraph:
    """Directed 9-cycle plus an apex, each cycle vertex tied to the apex by a
    fully directed 4-path and by a 4-path with one reversed arc.

    64 vertices, 81 arcs, underlying girth exactly 8 (checked).  In every
    presentation each path pair keeps one path with an odd number of
    reversed arcs, which blocks 3-colorability of the push class.
    """
    arcs: list[tuple[int, int]] = [(u, (u + 1) % 9) for u in range(9)]
    apex = 9
    # both chains of a cycle vertex get consecutive ids: under the solver's
    # static order, whichever of the pair is infeasible is then reached
    # before the later cycle vertices' chains multiply the search
    for u in range(9):
        q1 = 10 + 6 * u
        arcs += [(u, q1), (q1, q1 + 1), (q1 + 1, q1 + 2), (apex, q1 + 2)]
        p1 = q1 + 3
        arcs += [(u, p1), (p1, p1 + 1), (p1 + 1, p1 + 2), (p1 + 2, apex)]
    g = OrientedGraph(64, tuple(arcs))
    if underlying_girth(g) != 8:
        raise GraphError("witness construction lost its girth")
    return g


def random_outerplanar(n: int, min_girth: int, seed: int) -> OrientedGraph:
    """Random outerplanar graph with underlying girth >= min_girth.

    Grown constructively: an outer cycle of length min_girth, then ears
    subdividing the outer boundary (long enough to keep the girth) and
    pendant paths, so outerplanarity and girth hold by construction.
    Orientation is uniform per edge.
    """
    if not (n >= min_girth >= 3):
        raise GraphError(f"infeasible parameters n={n}, min_girth={min_girth}")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = [(i, (i + 1) % min_girth) for i in range(min_girth)]
    boundary = list(range(min_girth))
    count = min_girth
    while count < n:
        remaining = n - count
        if remaining >= min_girth - 2 and rng.random() < 0.6:
            interior = rng.randint(min_girth - 2, min(remaining, min_girth + 2))
            idx = rng.randrange(len(boundary))
            u = boundary[idx]
            w = boundary[(idx + 1) % len(boundary)]
            chain = [u] + [count + i for i in range(interior)] + [w]
            edges.extend(zip(chain, chain[1:]))
            boundary[idx + 1:idx + 1] = chain[1:-1]
            count += interior
        else:
            length = rng.randint(1, min(remaining, 3))
            anchor = rng.randrange(count)
            chain = [anchor] + [count + i for i in range(length)]
            edges.extend(zip(chain, chain[1:]))
            count += length
    arcs = tuple((u, v) if rng.random() < 0.5 else (v, u) for u, v in edges)
    return OrientedGraph(n, arcs)


def random_sparse(n: int, seed: int, max_attempts: int = 50) -> OrientedGraph:
    """Random graph with maximum average degree provably below 8/3.

    A random tree plus a few extra connections, each subdivided at least
    twice; candidates failing the exact density check are resampled.
    """
    if n < 1:
        raise GraphError("random_sparse needs at least one vertex")
    rng = random.Random(seed)
    bound = Fraction(8, 3)
    for _ in range(max_attempts):
        extras = rng.randint(0, max(0, n // 12))
        interior = [rng.randint(2, 4) for _ in range(extras)]
        while sum(interior) > n - 2 and interior:
            interior.pop()
        tree_size = n - sum(interior)
        edges: list[tuple[int, int]] = [
            (rng.randrange(i), i) for i in range(1, tree_size)
        ]
        fresh = tree_size
        for size in interior:
            u = rng.randrange(tree_size)
            w = rng.randrange(tree_size)
            while w == u and tree_size > 1:
                w = rng.randrange(tree_size)
            chain = [u] + [fresh + i for i in range(size)] + [w]
            edges.extend(zip(chain, chain[1:]))
            fresh += size
        arcs = tuple((u, v) if rng.random() < 0.5 else (v, u) for u, v in edges)
        g = OrientedGraph(n, arcs)
        if mad_less_than(g, bound):
            return g
    raise GraphError("resample limit exceeded while drawing a sparse instance")
