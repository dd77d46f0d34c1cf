import pytest

from conftest import random_connected_graph
from wedgehom.errors import InvalidParameterError, SizeLimitError
from wedgehom.graph import (
    MAX_VERTICES,
    Graph,
    WedgeSpec,
    canonical_form,
    chromatic_number,
    complete_graph,
    connected_components,
    cycle,
    disjoint_union,
    is_isomorphic,
    neighborhood,
    path,
    star,
    wedge,
    wedge_point,
)


def test_path_small_cases():
    assert path(3).sorted_edges() == [(0, 1), (1, 2)]
    assert path(1).vertex_count == 1 and not path(1).edges
    assert path(0).vertex_count == 0 and not path(0).edges


def test_cycle():
    assert len(cycle(3).edges) == 3
    c4 = cycle(4)
    assert c4.vertex_count == 4 and len(c4.edges) == 4
    assert chromatic_number(c4) == 2
    with pytest.raises(InvalidParameterError):
        cycle(2)


def test_graph_rejects_bad_edges():
    with pytest.raises(InvalidParameterError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(InvalidParameterError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(SizeLimitError):
        Graph(MAX_VERTICES + 1, frozenset())


def test_edges_are_normalized():
    g = Graph(3, frozenset({(2, 1), (1, 0)}))
    assert g.sorted_edges() == [(0, 1), (1, 2)]


def test_terminal_wedge_of_paths_is_a_path():
    g = wedge([(path(3), 2), (path(4), 0)])
    assert g.sorted_edges() == path(6).sorted_edges()
    assert is_isomorphic(g, path(6))


def test_wedge_of_two_squares():
    spec = WedgeSpec(((cycle(4), 0), (cycle(4), 0)))
    g = wedge(spec)
    a = wedge_point(spec)
    assert g.vertex_count == 7 and len(g.edges) == 8
    assert g.degree(a) == 4
    assert g.label(a) == "a"
    assert g.label(1) == "a_2^1" and g.label(4) == "a_2^2"


def test_wedge_validation():
    with pytest.raises(InvalidParameterError):
        WedgeSpec(((path(3), 0),))
    with pytest.raises(InvalidParameterError):
        wedge([(path(3), 3), (path(2), 0)])


def test_wedge_vertex_and_degree_counts(rng):
    for _ in range(30):
        parts = [(random_connected_graph(rng, rng.randint(1, 6)), 0) for _ in range(rng.randint(2, 4))]
        parts = [(g, rng.randrange(g.vertex_count)) for g, _ in parts]
        g = wedge(parts)
        assert g.vertex_count == sum(h.vertex_count for h, _ in parts) - (len(parts) - 1)
        assert g.degree(wedge_point(parts)) == sum(h.degree(b) for h, b in parts)
        assert len(g.edges) == sum(len(h.edges) for h, _ in parts)


def test_wedge_is_associative_up_to_isomorphism(rng):
    for _ in range(10):
        gs = [random_connected_graph(rng, rng.randint(2, 4)) for _ in range(3)]
        bs = [rng.randrange(g.vertex_count) for g in gs]
        flat = wedge(list(zip(gs, bs)))
        inner = wedge([(gs[0], bs[0]), (gs[1], bs[1])])
        nested = wedge([(inner, bs[0]), (gs[2], bs[2])])
        assert canonical_form(flat) == canonical_form(nested)


def test_terminal_path_pairs_are_paths():
    for m in range(1, 6):
        for n in range(1, 6):
            g = wedge([(path(m), m - 1), (path(n), 0)])
            assert canonical_form(g) == canonical_form(path(m + n - 1))


def test_neighborhood():
    assert neighborhood(path(3), 1) == {0, 2}
    assert neighborhood(cycle(4), 0) == {1, 3}
    assert neighborhood(path(1), 0) == set()
    with pytest.raises(InvalidParameterError):
        neighborhood(path(2), 5)


def test_disjoint_union():
    g = disjoint_union(path(2), path(2))
    assert g.vertex_count == 4 and len(g.edges) == 2
    assert disjoint_union(path(0), cycle(3)) == cycle(3)
    h = disjoint_union(path(1), cycle(3))
    assert h.vertex_count == 4 and len(h.edges) == 3
    assert connected_components(h) == [[0], [1, 2, 3]]


def test_chromatic_numbers():
    assert chromatic_number(cycle(3)) == 3
    assert chromatic_number(path(4)) == 2
    assert chromatic_number(wedge([(cycle(3), 0), (cycle(5), 0)])) == 3
    assert chromatic_number(complete_graph(5)) == 5
    assert chromatic_number(path(1)) == 1
    with pytest.raises(InvalidParameterError):
        chromatic_number(path(0))
    with pytest.raises(SizeLimitError):
        chromatic_number(path(13))


def test_isomorphism_helpers():
    assert is_isomorphic(star(3), Graph(4, frozenset({(3, 0), (3, 1), (3, 2)})))
    assert not is_isomorphic(path(4), star(3))
    assert canonical_form(cycle(5)) != canonical_form(path(5))
