"""Tests for hierarchical, Cartesian, join and corona products."""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs, product_specs
from hierdim.core.distances import all_pairs_distances
from hierdim.core.errors import EmptySubset, PreconditionViolated, UnknownVertex
from hierdim.models.graph import Graph
from hierdim.models.product import ProductSpec


def isomorphic(first: Graph, second: Graph) -> bool:
    return nx.is_isomorphic(first.to_networkx(), second.to_networkx())


def test_triangle_with_one_rung(client):
    """C3({0}) ⊓ P2 is two triangles joined by one edge."""
    spec = client.products.spec(client.gallery.cycle(3), [0], client.gallery.path(2))
    product = client.products.hierarchical_product(spec)
    assert product.graph.n == 6
    assert product.graph.m == 7
    assert product.graph.has_edge(product.vertex(0, 0), product.vertex(0, 1))
    assert not product.graph.has_edge(product.vertex(1, 0), product.vertex(1, 1))
    assert product.graph.label(product.vertex(2, 1)) == "2,1"


def test_full_u_gives_cartesian_product(client):
    g, h = client.gallery.cycle(4), client.gallery.path(3)
    hier = client.products.hierarchical_product(client.products.spec(g, range(4), h))
    cart = client.products.cartesian_product(g, h)
    assert hier.graph == cart.graph
    assert isomorphic(cart.graph, Graph.from_networkx(nx.cartesian_product(g.to_networkx(), h.to_networkx())))


def test_path_with_one_rung_is_p4(client):
    p2 = client.gallery.path(2)
    product = client.products.hierarchical_product(client.products.spec(p2, [0], p2))
    assert isomorphic(product.graph, client.gallery.path(4))


def test_product_spec_validation(client):
    c3 = client.gallery.cycle(3)
    with pytest.raises(EmptySubset):
        ProductSpec(g=c3, u=(), h=c3)
    with pytest.raises(UnknownVertex):
        ProductSpec(g=c3, u=(3,), h=c3)
    assert ProductSpec(g=c3, u=(2, 0), h=c3).u == (0, 2)


def test_hierarchical_distance_examples(client):
    spec = client.products.spec(client.gallery.cycle(3), [0], client.gallery.path(2))
    products = client.products
    assert products.hierarchical_distance(spec, (1, 0), (1, 1)) == 3
    assert products.hierarchical_distance(spec, (1, 0), (2, 0)) == 1
    assert products.hierarchical_distance(spec, (2, 1), (2, 1)) == 0


def test_cartesian_examples(client):
    products, gallery = client.products, client.gallery
    assert isomorphic(products.cartesian_product(gallery.path(2), gallery.path(2)).graph, gallery.cycle(4))
    prism = products.cartesian_product(gallery.complete(3), gallery.path(2)).graph
    assert (prism.n, prism.m) == (6, 9)
    torus = products.cartesian_product(gallery.cycle(5), gallery.cycle(5)).graph
    assert (torus.n, torus.m) == (25, 50)


def test_join_examples(client):
    products, gallery = client.products, client.gallery
    assert isomorphic(products.join(gallery.path(2), gallery.complete(2)), gallery.complete(4))
    fan = products.join(gallery.complete(1), gallery.cycle(4))
    assert (fan.n, fan.m) == (5, 8)
    joined = products.join(gallery.path(3), gallery.complete(2))
    assert (joined.n, joined.m) == (5, 9)


def test_corona_examples(client):
    products, gallery = client.products, client.gallery
    k1 = gallery.complete(1)
    assert isomorphic(products.corona(k1, k1), gallery.path(2))
    assert isomorphic(products.corona(gallery.path(2), k1), gallery.path(4))
    crown = products.corona(gallery.cycle(3), gallery.complete(2))
    assert (crown.n, crown.m) == (9, 12)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=4), connected_graphs(max_n=3))
def test_corona_matches_direct_definition(client, g, h):
    """The product-built corona uses exactly the direct layout."""
    via_product = client.products.corona(g, h)
    direct = client.products.corona_direct(g, h)
    assert via_product == direct
    assert isomorphic(via_product, direct)


def test_diagonal_generator_examples(client):
    products, gallery = client.products, client.gallery
    c5, p2, p3 = gallery.cycle(5), gallery.path(2), gallery.path(3)

    spec = products.spec(c5, range(5), p2)
    s = products.diagonal_generator(spec, [0, 1], [0])
    assert s == (0, 2)
    assert client.dimension.is_local_metric_generator(products.hierarchical_product(spec).graph, s)

    spec = products.spec(p3, [0], c5)
    s = products.diagonal_generator(spec, [0], [0, 1])
    assert s == (0, 1)
    assert client.dimension.is_local_metric_generator(products.hierarchical_product(spec).graph, s)

    assert products.diagonal_generator(products.spec(p3, [1], p2), [1], [0]) == (2,)


def test_diagonal_generator_preconditions(client):
    products, gallery = client.products, client.gallery
    c5, p2 = gallery.cycle(5), gallery.path(2)
    with pytest.raises(PreconditionViolated):
        products.diagonal_generator(products.spec(c5, [0], p2), [0, 1], [0])
    with pytest.raises(PreconditionViolated):
        products.diagonal_generator(products.spec(gallery.complete(3), [0, 1, 2], p2), [0], [0])


def test_fibered_generator_with_no_landmark_in_u(client):
    """K3 with U={0}, S_G={1,2}: both fibres over P2, four vertices."""
    products = client.products
    spec = products.spec(client.gallery.complete(3), [0], client.gallery.path(2))
    s = products.fibered_generator(spec, [1, 2], [0])
    assert s == (2, 3, 4, 5)
    assert client.dimension.is_local_metric_generator(products.hierarchical_product(spec).graph, s)


def test_fibered_generator_with_all_landmarks_in_u(client):
    """With S_G inside U the fibres vanish and the diagonal is returned."""
    products, gallery = client.products, client.gallery
    spec = products.spec(gallery.path(3), range(3), gallery.cycle(5))
    assert products.fibered_generator(spec, [0], [0, 1]) == products.diagonal_generator(spec, [0], [0, 1])


def test_fibered_generator_rejects_non_generator(client):
    products = client.products
    spec = products.spec(client.gallery.complete(3), [0], client.gallery.path(2))
    with pytest.raises(PreconditionViolated):
        products.fibered_generator(spec, [1], [0])


@settings(max_examples=200, deadline=None)
@given(product_specs())
def test_hierarchical_distance_matches_product_distances(client, spec):
    """Distances from the factors equal BFS distances on the built product."""
    product = client.products.hierarchical_product(spec)
    d = all_pairs_distances(product.graph).d
    for a in range(product.graph.n):
        for b in range(product.graph.n):
            assert client.products.hierarchical_distance(spec, product.coords(a), product.coords(b)) == d[a, b]


@settings(max_examples=60, deadline=None)
@given(product_specs())
def test_product_edge_count(client, spec):
    product = client.products.hierarchical_product(spec)
    assert product.graph.m == spec.g.m * spec.h.n + len(spec.u) * spec.h.m
    assert product.graph.n == spec.order


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=4), connected_graphs(max_n=4))
def test_cartesian_product_commutes(client, g, h):
    assert isomorphic(
        client.products.cartesian_product(g, h).graph,
        client.products.cartesian_product(h, g).graph,
    )


@settings(max_examples=60, deadline=None)
@given(product_specs(), st.data())
def test_fibered_generator_resolves_product(client, spec, data):
    """Every local metric basis of G yields a generator of the product."""
    g_bases = client.dimension.local_dimension(spec.g, enumerate_all=True).all_minimum_bases
    s_g = data.draw(st.sampled_from(g_bases))
    s_h = client.dimension.local_dimension(spec.h).basis
    product = client.products.hierarchical_product(spec)
    s = client.products.fibered_generator(spec, s_g, s_h)
    assert client.dimension.is_local_metric_generator(product.graph, s)
