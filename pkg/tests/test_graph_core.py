import math
import random
from fractions import Fraction

import pytest

from pushgraph import (
    FormatError,
    GraphError,
    OrientedGraph,
    disjoint_union,
    emit_graph,
    identify_vertices,
    max_average_degree,
    parse_graph,
    underlying_girth,
)
from pushgraph.density import mad_less_than
from pushgraph.families import b0, directed_cycle, girth8_witness

from oracles import girth_by_edge_removal, mad_by_subset_enumeration, random_oriented_graph


def test_triangle_construction():
    g = OrientedGraph(3, ((0, 1), (1, 2), (2, 0)))
    assert g.n == 3 and len(g.arcs) == 3


def test_rejects_two_cycle():
    with pytest.raises(GraphError, match="2-cycle"):
        OrientedGraph(2, ((0, 1), (1, 0)))


def test_rejects_loop():
    with pytest.raises(GraphError, match="loop"):
        OrientedGraph(1, ((0, 0),))


def test_rejects_out_of_range():
    with pytest.raises(GraphError, match="range"):
        OrientedGraph(2, ((0, 5),))


def test_arcs_deduplicated():
    g = OrientedGraph(2, ((0, 1), (0, 1)))
    assert g.arcs == ((0, 1),)


def test_neighbors_on_triangle():
    g = directed_cycle(3)
    assert g.out_neighbors(0) == {1}
    assert g.in_neighbors(0) == {2}


def test_neighbors_isolated_vertex():
    g = OrientedGraph(1)
    assert g.out_neighbors(0) == frozenset()
    assert g.in_neighbors(0) == frozenset()


def test_neighbors_out_of_range():
    with pytest.raises(GraphError):
        directed_cycle(3).out_neighbors(5)


def test_neighborhoods_disjoint_everywhere():
    rng = random.Random(7)
    for _ in range(40):
        g = random_oriented_graph(rng, rng.randint(1, 9))
        for v in range(g.n):
            assert not g.out_neighbors(v) & g.in_neighbors(v)
            assert v not in g.out_neighbors(v) | g.in_neighbors(v)


def test_girth_directed_cycle():
    assert underlying_girth(directed_cycle(9)) == 9


def test_girth_tree_is_infinite():
    tree = OrientedGraph(5, ((0, 1), (0, 2), (2, 3), (3, 4)))
    assert underlying_girth(tree) == math.inf


def test_girth_of_witness_is_eight():
    assert underlying_girth(girth8_witness()) == 8


def test_girth_matches_edge_removal_oracle():
    rng = random.Random(11)
    for _ in range(60):
        g = random_oriented_graph(rng, rng.randint(2, 12), p=rng.uniform(0.1, 0.7))
        assert underlying_girth(g) == girth_by_edge_removal(g)


def test_mad_directed_cycle():
    assert max_average_degree(directed_cycle(9)) == 2


def test_mad_tree_value():
    # a path on n vertices: densest subgraph is the whole tree
    for n in (2, 5, 9):
        path = OrientedGraph(n, tuple((i, i + 1) for i in range(n - 1)))
        assert max_average_degree(path) == Fraction(2 * (n - 1), n)


def test_mad_witness_below_eight_thirds():
    w = girth8_witness()
    value = max_average_degree(w)
    assert value < Fraction(8, 3)
    assert mad_less_than(w, Fraction(8, 3))
    # planar girth-8 graphs obey the Euler bound 2g/(g-2) = 8/3


def test_mad_single_vertex_and_empty_errors():
    assert max_average_degree(OrientedGraph(1)) == 0
    with pytest.raises(GraphError):
        max_average_degree(OrientedGraph(0))


def test_mad_matches_subset_enumeration():
    rng = random.Random(13)
    for _ in range(25):
        g = random_oriented_graph(rng, rng.randint(1, 10), p=rng.uniform(0.2, 0.9))
        assert max_average_degree(g) == mad_by_subset_enumeration(g)
    for _ in range(3):
        g = random_oriented_graph(rng, 14, p=0.5)
        assert max_average_degree(g) == mad_by_subset_enumeration(g)


def test_mad_threshold_agrees_with_exact_value():
    rng = random.Random(17)
    bound = Fraction(8, 3)
    for _ in range(30):
        g = random_oriented_graph(rng, rng.randint(1, 9), p=rng.uniform(0.1, 0.9))
        assert mad_less_than(g, bound) == (max_average_degree(g) < bound)


def test_disjoint_union_counts():
    two = disjoint_union([directed_cycle(3), directed_cycle(3)])
    assert two.n == 6 and len(two.arcs) == 6
    assert disjoint_union([directed_cycle(4)]) == directed_cycle(4)
    assert disjoint_union([]) == OrientedGraph(0)


def test_identify_identity_partition():
    g = directed_cycle(4)
    same = identify_vertices(g, [[0], [1], [2], [3]])
    assert same == g


def test_identify_adjacent_pair_is_loop():
    with pytest.raises(GraphError, match="loop"):
        identify_vertices(directed_cycle(3), [[0, 1], [2]])


def test_identify_two_cycle_rejected():
    # 0->1 and 2->3 become opposite arcs after merging {0,3} and {1,2}
    g = OrientedGraph(4, ((0, 1), (2, 3)))
    with pytest.raises(GraphError, match="2-cycle"):
        identify_vertices(g, [[0, 3], [1, 2]])


def test_identify_gluing_counts():
    # gluing the rigid 8-vertex gadget onto a triangle vertex by one vertex
    gadget = b0()
    host = directed_cycle(3)
    glued = disjoint_union([host, gadget])
    merged = identify_vertices(
        glued, [[0, 3 + 7]] + [[v] for v in range(1, glued.n) if v != 3 + 7]
    )
    assert merged.n == host.n + gadget.n - 1


def test_parse_emit_round_trip():
    rng = random.Random(19)
    for _ in range(25):
        g = random_oriented_graph(rng, rng.randint(0, 10))
        assert parse_graph(emit_graph(g)) == g


def test_parse_empty_graph():
    assert parse_graph("oriented 0\n") == OrientedGraph(0)


def test_parse_comments_and_blanks():
    text = "# named vertices may live here\noriented 2\n\na 0 1  # arc\n"
    assert parse_graph(text) == OrientedGraph(2, ((0, 1),))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("oriented 1\na 0 0\n", "loop"),
        ("oriented 2\na 0 1\na 1 0\n", "2-cycle"),
        ("oriented 2\na 0 1\na 0 1\n", "duplicate"),
        ("oriented 2\na 0 7\n", "range"),
        ("oriented 2\nb 0 1\n", "arc line"),
        ("a 0 1\n", "header"),
        ("", "header"),
    ],
)
def test_parse_errors_carry_context(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_graph(text)


def test_parse_error_line_number():
    try:
        parse_graph("oriented 3\na 0 1\na 1 1\n")
    except FormatError as exc:
        assert exc.line_no == 3
    else:
        pytest.fail("expected a format error")


def test_emit_orders_arcs():
    g = OrientedGraph(3, ((2, 0), (0, 1)))
    assert emit_graph(g).splitlines() == ["oriented 3", "a 0 1", "a 2 0"]
