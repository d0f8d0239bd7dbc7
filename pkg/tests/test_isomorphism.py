import random
from itertools import combinations

import pytest

from pushgraph import (
    GraphError,
    OrientedGraph,
    canonical_code,
    is_isomorphic,
    is_isomorphism,
    push,
)
from pushgraph.families import directed_cycle, uc4
from pushgraph.verify import enumerate_oriented_graphs

from oracles import iso_by_permutations, random_oriented_graph


def test_identity_isomorphism():
    g = random_oriented_graph(random.Random(1), 6)
    cert = is_isomorphic(g, g)
    assert cert is not None
    assert is_isomorphism(g, g, cert.mapping)


def test_arc_count_mismatch():
    path2 = OrientedGraph(3, ((0, 1), (1, 2)))
    assert is_isomorphic(directed_cycle(3), path2) is None


def test_c4_not_isomorphic_to_uc4():
    assert is_isomorphic(directed_cycle(4), uc4()) is None
    assert iso_by_permutations(directed_cycle(4), uc4()) is None


def test_isomorphic_after_relabeling():
    rng = random.Random(2)
    for _ in range(30):
        g = random_oriented_graph(rng, rng.randint(1, 7))
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        cert = is_isomorphic(g, h)
        assert cert is not None
        assert is_isomorphism(g, h, cert.mapping)


def test_search_agrees_with_permutation_oracle():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 6)
        g = random_oriented_graph(rng, n)
        h = random_oriented_graph(rng, n)
        assert (is_isomorphic(g, h) is not None) == (iso_by_permutations(g, h) is not None)


def test_canonical_code_is_relabeling_invariant():
    rng = random.Random(4)
    for _ in range(30):
        g = random_oriented_graph(rng, rng.randint(0, 8))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_code(g) == canonical_code(g.relabel(perm))


def test_canonical_code_separates_all_labeled_four_vertex_graphs():
    # every labeled oriented graph on 4 vertices, grouped by code, must match
    # the pairwise isomorphism verdicts
    graphs = []
    pairs = list(combinations(range(4), 2))
    for assignment in range(3 ** len(pairs)):
        arcs = []
        value = assignment
        for u, v in pairs:
            value, kind = divmod(value, 3)
            if kind == 1:
                arcs.append((u, v))
            elif kind == 2:
                arcs.append((v, u))
        graphs.append(OrientedGraph(4, tuple(arcs)))
    by_code = {}
    for g in graphs:
        by_code.setdefault(canonical_code(g), []).append(g)
    assert len(by_code) == 42  # oriented graph classes on 4 vertices
    reps = [members[0] for members in by_code.values()]
    for members in by_code.values():
        for g in members[1:]:
            assert is_isomorphic(members[0], g) is not None
    for a, b in combinations(reps, 2):
        assert is_isomorphic(a, b) is None


def test_canonical_code_separates_all_five_vertex_classes():
    # dedup by code produced 582 classes; pairwise search confirms every one
    # of the 169071 cross pairs really is non-isomorphic
    classes = enumerate_oriented_graphs(5)
    assert len(classes) == 582
    assert len({canonical_code(g) for g in classes}) == 582
    for g, h in combinations(classes, 2):
        assert is_isomorphic(g, h) is None


def test_canonical_code_push_invariant_quadrilateral():
    base = canonical_code(uc4())
    for bits in range(16):
        vector = [v for v in range(4) if bits >> v & 1]
        assert canonical_code(push(uc4(), vector)) == base


def test_canonical_code_distinguishes_triangles():
    transitive = OrientedGraph(3, ((0, 1), (0, 2), (1, 2)))
    assert canonical_code(directed_cycle(3)) != canonical_code(transitive)


def test_canonical_code_size_limit():
    with pytest.raises(GraphError, match="limit"):
        canonical_code(OrientedGraph(20), limit=16)


def test_canonical_code_on_symmetric_doubled_graphs():
    # anti-twinned graphs carry a global twin-swap automorphism and lifted
    # push symmetries; codes must still collapse exactly the push classes
    from pushgraph import anti_twinned

    rng = random.Random(6)
    for _ in range(12):
        g = random_oriented_graph(rng, rng.randint(1, 5))
        s = [v for v in range(g.n) if rng.random() < 0.5]
        h = push(g, s)
        perm = list(range(2 * g.n))
        rng.shuffle(perm)
        assert canonical_code(anti_twinned(g)) == canonical_code(
            anti_twinned(h).relabel(perm)
        )
