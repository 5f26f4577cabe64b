"""Tests for the named example graphs."""

import networkx as nx
import pytest

from hierdim.core.distances import is_bipartite
from hierdim.core.errors import BadParameter
from hierdim.models.gallery import Expectation, NamedGraph

# Exact local dimension of the dodecahedron and its lexicographically least basis.
DODECAHEDRON_LOCAL_DIMENSION = 2
DODECAHEDRON_LOCAL_BASIS = [0, 2]


def test_standard_graphs(client):
    gallery = client.gallery
    assert (gallery.path(2).n, gallery.path(2).m) == (2, 1)
    assert (gallery.cycle(5).n, gallery.cycle(5).m) == (5, 5)
    assert (gallery.complete(4).n, gallery.complete(4).m) == (4, 6)
    grid = gallery.grid(4, 5)
    assert (grid.n, grid.m) == (20, 31)
    assert grid.has_edge(0, 1) and grid.has_edge(0, 5)


@pytest.mark.parametrize("call", [
    lambda g: g.path(0),
    lambda g: g.cycle(2),
    lambda g: g.complete(0),
    lambda g: g.path_cycle_product(0, 4),
    lambda g: g.path_cycle_product(1, 2),
    lambda g: g.by_name("petersen"),
    lambda g: g.by_name("cycle"),
    lambda g: g.by_name("truncated-cube", stage="X"),
])
def test_bad_parameters(client, call):
    with pytest.raises(BadParameter):
        call(client.gallery)


def test_path_cycle_sizes(client):
    named = client.gallery.path_cycle_product(2, 5)
    assert named.graph.n == 25
    assert named.name == "path-cycle-2-5"
    assert named.decomposition[0].u == (0, 2, 4)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_path_cycle_local_dimension(client, n, k):
    """1 for even k, 2 for odd k."""
    named = client.gallery.path_cycle_product(n, k)
    assert client.dimension.local_dimension(named.graph).value == (1 if k % 2 == 0 else 2)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", range(3, 9))
def test_path_cycle_bipartite_iff_k_even(client, n, k):
    assert is_bipartite(client.gallery.path_cycle_product(n, k).graph) == (k % 2 == 0)


def test_dodecahedron_structure(client):
    named = client.gallery.dodecahedron()
    check = client.gallery.self_check(named)
    assert check.passed
    assert (check.order, check.size, check.regular_degree, check.girth) == (20, 30, 3, 5)
    assert nx.is_isomorphic(named.graph.to_networkx(), nx.dodecahedral_graph())


def test_dodecahedron_local_dimension(client):
    graph = client.gallery.dodecahedron().graph
    result = client.dimension.local_dimension(graph)
    assert result.value == DODECAHEDRON_LOCAL_DIMENSION
    assert result.basis == DODECAHEDRON_LOCAL_BASIS
    assert client.dimension.is_local_metric_generator(graph, result.basis)


def test_truncated_cube_structure(client):
    w, g, h = client.gallery.truncated_cube_chain()
    assert (w.graph.n, w.graph.m) == (6, 7)
    assert (g.graph.n, g.graph.m) == (12, 16)
    check = client.gallery.self_check(h)
    assert check.passed
    assert (check.order, check.size, check.regular_degree, check.triangles, check.girth) == (24, 36, 3, 8, 3)


def test_truncated_cube_local_dimensions(client):
    """dim_l(W) = dim_l(G) = 2, the b-fibre is a basis of W, dim_l(H) <= 4."""
    w, g, h = client.gallery.truncated_cube_chain()
    dimension = client.dimension
    assert dimension.local_dimension(w.graph).value == 2
    assert dimension.is_local_metric_generator(w.graph, list(g.decomposition[1].u))
    assert dimension.local_dimension(g.graph).value == 2
    assert dimension.local_dimension(h.graph).value <= 4


def test_truncated_cube_bound_for_last_step(client):
    """The last step has no basis vertex of G in U and bounds dim_l(H) by 4."""
    _, _, h = client.gallery.truncated_cube_chain()
    general = client.bounds.general_upper_bound(h.decomposition[-1])
    assert any(entry.k == 0 and entry.bound == 4 for entry in general.per_basis)
    assert general.bound <= 4


def test_replay_reproduces_stored_graphs(client):
    gallery = client.gallery
    for named in (*gallery.truncated_cube_chain(), gallery.path_cycle_product(2, 3)):
        assert gallery.replay(named).edges == named.graph.edges


def test_by_name(client):
    gallery = client.gallery
    assert gallery.by_name("cycle", n=5).graph == gallery.cycle(5)
    assert gallery.by_name("grid", n=2, k=3).graph.n == 6
    assert gallery.by_name("path-cycle", n=1, k=4).name == "path-cycle-1-4"
    assert gallery.by_name("gamma", n=1, k=4) == gallery.by_name("path-cycle", n=1, k=4)
    assert gallery.by_name("truncated-cube", stage="W").graph.n == 6
    assert gallery.by_name("truncated-cube").graph.n == 24


def test_self_check_reports_mismatch(client):
    named = NamedGraph(name="wrong", graph=client.gallery.cycle(5), expected=Expectation(order=5, girth=4, bipartite=True))
    check = client.gallery.self_check(named)
    assert not check.passed
    assert len(check.failures) == 2


def test_grid_plan_roster(client):
    roster = client.gallery.grid_plan_roster()
    assert len(roster.customers) == 20
    assert roster.customers[0].letter_key == roster.customers[19].letter_key
    assert len({c.letter_key for c in roster.customers}) == 19
