"""The push operation, anti-twinned graphs, push equivalence, splitability,
and push-invariant pair statistics.

Pushing a vertex set reverses exactly the arcs with one endpoint inside the
set.  The anti-twinned graph doubles the vertex set, giving vertex i an
anti-twin i + n whose incident arcs are all reversed; two oriented graphs are
push-equivalent exactly when their anti-twinned graphs are isomorphic, and
the isomorphism can be repaired into one that respects anti-twin pairs, from
which a concrete push vector and vertex bijection are read off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import FormatError, GraphError, OrientedGraph
from .isomorphism import (
    IsoCertificate,
    canonical_code,
    is_isomorphic,
    is_isomorphism,
)


@dataclass(frozen=True)
class AgreeDisagreeStats:
    """Common-neighbor statistics of a vertex pair.

    agree holds the common neighbors seen with the same arc sense from both
    vertices, disagree those seen with opposite senses.  max_count and
    min_count are push-invariant; the two sets swap when exactly one of the
    pair is pushed.
    """

    agree: frozenset[int]
    disagree: frozenset[int]

    @property
    def max_count(self) -> int:
        return max(len(self.agree), len(self.disagree))

    @property
    def min_count(self) -> int:
        return min(len(self.agree), len(self.disagree))


@dataclass(frozen=True)
class SplitCertificate:
    """Partition (part_one, part_two) with partner[i] in part_two swapping the
    in/out neighborhoods of part_one[i]."""

    part_one: tuple[int, ...]
    part_two: tuple[int, ...]

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.part_one, self.part_two))


@dataclass(frozen=True)
class PushEquivCertificate:
    """Push vector on the source plus a bijection of the pushed source onto
    the target."""

    push_vector: frozenset[int]
    mapping: tuple[int, ...]


def push(g: OrientedGraph, vertices: Iterable[int]) -> OrientedGraph:
    """Reverse every arc with exactly one endpoint in the pushed set."""
    pushed = set(vertices)
    for v in pushed:
        g._check_vertex(v)
    arcs = tuple(
        (v, u) if (u in pushed) != (v in pushed) else (u, v) for u, v in g.arcs
    )
    return OrientedGraph(g.n, arcs)


def anti_twin(v: int, n: int) -> int:
    """Positional anti-twin: i and i + n swap under the map."""
    return v + n if v < n else v - n


def anti_twinned(g: OrientedGraph) -> OrientedGraph:
    """The 2n-vertex graph with arcs {(i,j), (i',j'), (j,i'), (j',i)} per arc (i,j)."""
    n = g.n
    arcs: list[tuple[int, int]] = []
    for i, j in g.arcs:
        arcs.extend([(i, j), (i + n, j + n), (j, i + n), (j + n, i)])
    return OrientedGraph(2 * n, tuple(arcs))


def repair_isomorphism(
    g: OrientedGraph, h: OrientedGraph, cert: IsoCertificate
) -> IsoCertificate:
    """Turn an isomorphism of anti-twinned graphs into an anti-twin-respecting one.

    While some vertex v has f(v') != f(v)', swap the images of v' and of the
    preimage of f(v)'; every swap strictly enlarges the respecting set, so at
    most n swaps happen.  The output is re-verified.
    """
    rg, rh = anti_twinned(g), anti_twinned(h)
    if not is_isomorphism(rg, rh, cert.mapping):
        raise GraphError("repair_isomorphism requires an isomorphism of the anti-twinned graphs")
    n = g.n
    f = list(cert.mapping)
    inverse = [-1] * (2 * n)
    for v, w in enumerate(f):
        inverse[w] = v
    swaps = 0
    progress = True
    while progress:
        progress = False
        for v in range(n):
            expected = anti_twin(f[v], n)
            if f[v + n] == expected:
                continue
            other = inverse[expected]
            f[v + n], f[other] = expected, f[v + n]
            inverse[f[v + n]] = v + n
            inverse[f[other]] = other
            swaps += 1
            progress = True
            if swaps > n:
                raise AssertionError("repair loop exceeded the guaranteed swap bound")
    repaired = IsoCertificate(tuple(f))
    if not is_isomorphism(rg, rh, repaired.mapping):
        raise AssertionError("repair produced a non-isomorphism")
    return repaired


def push_equivalent(g: OrientedGraph, h: OrientedGraph) -> PushEquivCertificate | None:
    """Certificate that h is reachable from g by pushing a vertex set, if it is.

    Decides by testing anti_twinned(g) against anti_twinned(h), repairs the
    isomorphism, pushes the base vertices whose repaired image lands in the
    primed half, and re-verifies the extracted witness before returning it.
    """
    if g.n != h.n or len(g.arcs) != len(h.arcs):
        return None
    found = is_isomorphic(anti_twinned(g), anti_twinned(h))
    if found is None:
        return None
    repaired = repair_isomorphism(g, h, found)
    n = g.n
    vector = frozenset(v for v in range(n) if repaired.mapping[v] >= n)
    mapping = tuple(
        repaired.mapping[v] - n if repaired.mapping[v] >= n else repaired.mapping[v]
        for v in range(n)
    )
    if not is_isomorphism(push(g, vector), h, mapping):
        raise AssertionError("push-equivalence witness failed re-verification")
    return PushEquivCertificate(vector, mapping)


def is_splitable(g: OrientedGraph) -> SplitCertificate | None:
    """Partition V into halves with a bijection swapping in/out neighborhoods.

    A partner of u must satisfy N+(w) = N-(u) and N-(w) = N+(u) exactly, so
    partners group by neighborhood profile: the class of profile (O, I) pairs
    off against the class of (I, O), and the isolated vertices pair among
    themselves.  A perfect pairing exists iff those class sizes match.
    """
    n = g.n
    if n % 2:
        return None
    if n == 0:
        return SplitCertificate((), ())
    classes: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        classes.setdefault((g.out_masks[v], g.in_masks[v]), []).append(v)
    part_one: list[int] = []
    part_two: list[int] = []
    for profile, members in sorted(classes.items()):
        swapped = (profile[1], profile[0])
        if profile == swapped:
            # isolated vertices pair among themselves
            if len(members) % 2:
                return None
            half = len(members) // 2
            part_one.extend(members[:half])
            part_two.extend(members[half:])
        elif profile < swapped:
            partners = classes.get(swapped)
            if partners is None or len(partners) != len(members):
                return None
            part_one.extend(members)
            part_two.extend(partners)
        else:
            if (profile[1], profile[0]) not in classes:
                return None
    cert = SplitCertificate(tuple(part_one), tuple(part_two))
    _validate_split(g, cert)
    return cert


def _validate_split(g: OrientedGraph, cert: SplitCertificate) -> None:
    n = g.n
    one, two = cert.part_one, cert.part_two
    if len(one) != len(two) or len(one) + len(two) != n:
        raise GraphError("split certificate does not describe equal halves")
    if sorted(one + two) != list(range(n)):
        raise GraphError("split certificate is not a partition of the vertex set")
    for u, w in zip(one, two):
        if g.out_masks[u] != g.in_masks[w] or g.in_masks[u] != g.out_masks[w]:
            raise GraphError(f"pair ({u}, {w}) does not swap neighborhoods")


def split_graph(g: OrientedGraph, cert: SplitCertificate) -> OrientedGraph:
    """Induced subgraph on the first half; anti-twinning it reproduces g.

    The reproduction is checked arc-for-arc through the explicit bijection
    (part_one in order, then the partner of each), not by isomorphism search.
    """
    _validate_split(g, cert)
    half, _ = g.induced(cert.part_one)
    # position i of part_one becomes vertex i; its partner becomes i + k
    sorted_one = sorted(cert.part_one)
    position = {v: sorted_one.index(v) for v in cert.part_one}
    k = len(cert.part_one)
    image = [0] * g.n
    for u, w in zip(cert.part_one, cert.part_two):
        image[u] = position[u]
        image[w] = position[u] + k
    rebuilt = anti_twinned(half)
    mapped = {(image[u], image[v]) for u, v in g.arcs}
    if mapped != set(rebuilt.arcs) or len(mapped) != len(g.arcs):
        raise GraphError("split certificate does not reconstruct the graph")
    return half


def agree_disagree(g: OrientedGraph, x: int, y: int) -> AgreeDisagreeStats:
    """Agree/disagree sets of a vertex pair over their common neighbors."""
    if x == y:
        raise GraphError("agree_disagree requires two distinct vertices")
    g._check_vertex(x)
    g._check_vertex(y)
    ox, ix = g.out_masks[x], g.in_masks[x]
    oy, iy = g.out_masks[y], g.in_masks[y]
    agree = (ox & oy) | (ix & iy)
    disagree = (ox & iy) | (ix & oy)
    return AgreeDisagreeStats(
        frozenset(_mask_bits(agree)), frozenset(_mask_bits(disagree))
    )


def _mask_bits(mask: int):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def in_common_uc4(g: OrientedGraph, x: int, y: int) -> bool:
    """True iff some 4-vertex subgraph containing non-adjacent x, y is the
    4-cycle with exactly one reversed arc.

    Computed two ways (min_count >= 1 and exhaustive 4-cycle search) and the
    answers are asserted equal.
    """
    if x == y:
        raise GraphError("in_common_uc4 requires two distinct vertices")
    if g.has_arc(x, y) or g.has_arc(y, x):
        raise GraphError("in_common_uc4 is defined for non-adjacent pairs only")
    stats = agree_disagree(g, x, y)
    by_stats = stats.min_count >= 1
    by_search = _uc4_subgraph_search(g, x, y)
    if by_stats != by_search:
        raise AssertionError("agree/disagree statistics disagree with subgraph search")
    return by_stats


def _uc4_subgraph_search(g: OrientedGraph, x: int, y: int) -> bool:
    common = sorted(g.neighbors(x) & g.neighbors(y))
    for z in common:
        for w in common:
            if z == w:
                continue
            # cycle x-z-y-w; odd number of arcs against one traversal sense
            backward = (
                (1 if g.has_arc(z, x) else 0)
                + (1 if g.has_arc(y, z) else 0)
                + (1 if g.has_arc(w, y) else 0)
                + (1 if g.has_arc(x, w) else 0)
            )
            if backward % 2 == 1:
                return True
    return False


def cannot_identify(g: OrientedGraph, x: int, y: int) -> bool:
    """Sound test that no push homomorphism can merge x and y.

    Adjacent pairs can never merge (targets are loop-free); non-adjacent
    pairs cannot merge when they agree and disagree simultaneously, because
    they then span a push-invariant 4-cycle whose vertices stay distinct.
    """
    if x == y:
        raise GraphError("cannot_identify requires two distinct vertices")
    if g.has_arc(x, y) or g.has_arc(y, x):
        return True
    return agree_disagree(g, x, y).min_count >= 1


def push_orbit(g: OrientedGraph, limit: int = 16) -> list[bytes]:
    """Sorted canonical codes of every push of g, deduplicated.

    Pushing a set and its complement coincide, so only vectors avoiding
    vertex 0 are enumerated.
    """
    if g.n > limit:
        raise GraphError(f"push_orbit limit exceeded: n={g.n} > {limit}")
    if g.n == 0:
        return [canonical_code(g)]
    codes = {canonical_code(g)}
    for bits in range(1 << (g.n - 1)):
        vector = [v for v in range(g.n - 1) if bits >> v & 1]
        if vector:
            codes.add(canonical_code(push(g, vector)))
    return sorted(codes)


def parse_push_vector(text: str) -> frozenset[int]:
    """Parse the push-vector format: `push <k>` then k lines `v <id>`."""
    count: int | None = None
    vertices: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if count is None:
            if fields[0] != "push" or len(fields) != 2:
                raise FormatError("expected header 'push <k>'", line_no)
            try:
                count = int(fields[1])
            except ValueError:
                raise FormatError(f"bad vertex count {fields[1]!r}", line_no) from None
            continue
        if fields[0] != "v" or len(fields) != 2:
            raise FormatError(f"expected vertex line 'v <id>', got {line!r}", line_no)
        try:
            vertices.append(int(fields[1]))
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}", line_no) from None
    if count is None:
        raise FormatError("missing 'push <k>' header")
    if count != len(vertices):
        raise FormatError(f"header announced {count} vertices, found {len(vertices)}")
    return frozenset(vertices)


def emit_push_vector(vertices: Iterable[int]) -> str:
    ordered = sorted(set(vertices))
    lines = [f"push {len(ordered)}"]
    lines.extend(f"v {v}" for v in ordered)
    return "\n".join(lines) + "\n"
