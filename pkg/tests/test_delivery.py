"""Tests for customer graphs and landmark codes."""

import numpy as np
import pytest

from hierdim.core.distances import all_pairs_distances
from hierdim.core.errors import BadParameter, DuplicateLocation, UnknownVertex
from hierdim.models.delivery import CodeBook, Customer, CustomerRoster, EdgeOrigin
from hierdim.models.graph import INFINITE, Graph


def make_roster(ambient, *placements):
    customers = [
        Customer(id=f"c{i}", family_name=name, location=location)
        for i, (name, location) in enumerate(placements)
    ]
    return CustomerRoster(ambient=ambient, customers=customers)


def test_two_customers_are_route_adjacent(client):
    roster = make_roster(client.gallery.path(4), ("Baker", 0), ("Chen", 3))
    cg = client.delivery.build_customer_graph(roster)
    assert cg.graph.edges == ((0, 1),)
    assert cg.graph.weights == (3.0,)
    assert cg.origin(0, 1) is EdgeOrigin.GEODESIC


def test_customer_between_blocks_the_route(client):
    roster = make_roster(client.gallery.path(3), ("Baker", 0), ("Chen", 1), ("Dubois", 2))
    cg = client.delivery.build_customer_graph(roster)
    assert cg.graph.edges == ((0, 1), (1, 2))


def test_shared_initial_on_a_route_gives_both(client):
    roster = make_roster(client.gallery.path(5), ("Ahmadi", 0), ("arnold", 4))
    cg = client.delivery.build_customer_graph(roster)
    assert cg.origin(0, 1) is EdgeOrigin.BOTH
    assert cg.graph.weights == (4.0,)


def test_shared_initial_without_route_is_name_only(client):
    roster = make_roster(client.gallery.path(3), ("Kowalski", 0), ("Baker", 1), ("Kovač", 2))
    cg = client.delivery.build_customer_graph(roster)
    assert cg.origin(0, 2) is EdgeOrigin.NAME_ONLY
    assert cg.graph.weight(cg.graph.edges.index((0, 2))) == INFINITE
    assert cg.name_only_edges() == [(0, 2)]


def test_geodesic_rule_any_versus_all(client):
    """On a square, 0 and 2 have one free geodesic and one through customer 1."""
    roster = make_roster(client.gallery.cycle(4), ("Baker", 0), ("Chen", 1), ("Dubois", 2))
    any_rule = client.delivery.build_customer_graph(roster, "any")
    all_rule = client.delivery.build_customer_graph(roster, "all")
    assert any_rule.graph.edges == ((0, 1), (0, 2), (1, 2))
    assert all_rule.graph.edges == ((0, 1), (1, 2))
    with pytest.raises(BadParameter):
        client.delivery.build_customer_graph(roster, "some")


def test_roster_validation(client):
    p3 = client.gallery.path(3)
    with pytest.raises(DuplicateLocation):
        make_roster(p3, ("Baker", 0), ("Chen", 0))
    with pytest.raises(UnknownVertex):
        make_roster(p3, ("Baker", 3))
    with pytest.raises(UnknownVertex):
        make_roster(p3, ("Baker", -1))
    with pytest.raises(BadParameter):
        make_roster(p3, ("  ", 0))


def test_single_customer(client):
    roster = make_roster(Graph(n=1), ("Baker", 0))
    cg = client.delivery.build_customer_graph(roster)
    book = client.delivery.assign_codes(cg)
    assert book.basis == [0]
    assert book.codes[0].letter == "B"
    assert book.codes[0].code == [0]


def test_five_cycle_of_customers(client):
    """Customers on every vertex of C5 form C5 itself; the shared initial sits on an edge."""
    roster = make_roster(
        client.gallery.cycle(5),
        ("Ahmadi", 0), ("Arnold", 1), ("Baker", 2), ("Chen", 3), ("Dubois", 4),
    )
    cg = client.delivery.build_customer_graph(roster)
    assert cg.graph.m == 5
    assert cg.origin(0, 1) is EdgeOrigin.BOTH
    book = client.delivery.assign_codes(cg)
    assert len(book.basis) == 2
    assert client.delivery.validate_codebook(cg, book).valid


def test_grid_plan_codes(client):
    """On the bipartite floor plan one landmark suffices; metric codes need two or more."""
    cg = client.delivery.build_customer_graph(client.gallery.grid_plan_roster())
    assert cg.name_only_edges() == [(0, 19)]
    assert cg.graph.m == 32

    book = client.delivery.assign_codes(cg)
    assert book.basis == [0]
    report = client.delivery.validate_codebook(cg, book)
    assert report.valid
    assert report.local == 1
    assert report.metric >= 2

    metric_book = client.delivery.assign_metric_codes(cg)
    assert len(metric_book.basis) == report.metric
    assert all(len(code.code) == report.metric for code in metric_book.codes)


def test_adjacent_customers_have_distinct_codes(client):
    """Including the name-only pair, whose letters match."""
    cg = client.delivery.build_customer_graph(client.gallery.grid_plan_roster())
    book = client.delivery.assign_codes(cg)
    for u, v in cg.graph.edges:
        first, second = book.codes[u], book.codes[v]
        assert (first.letter, first.code) != (second.letter, second.code)
    assert book.codes[0].letter == book.codes[19].letter
    assert book.codes[0].code != book.codes[19].code


def test_name_only_edges_do_not_change_distances(client):
    cg = client.delivery.build_customer_graph(client.gallery.grid_plan_roster())
    kept = [i for i, edge in enumerate(cg.graph.edges) if edge not in cg.name_only_edges()]
    stripped = Graph(
        n=cg.graph.n,
        edges=[cg.graph.edges[i] for i in kept],
        weights=[cg.graph.weights[i] for i in kept],
    )
    assert np.array_equal(all_pairs_distances(stripped).d, all_pairs_distances(cg.graph).d)


def test_tampered_codebook_fails(client):
    cg = client.delivery.build_customer_graph(client.gallery.grid_plan_roster())
    book = client.delivery.assign_codes(cg)
    emptied = CodeBook(basis=[], codes=[code.model_copy(update={"code": []}) for code in book.codes])
    report = client.delivery.validate_codebook(cg, emptied)
    assert not report.valid
    assert not report.basis_is_generator


def test_roster_document(client):
    roster = client.gallery.grid_plan_roster()
    data = client.delivery.roster_to_dict(roster)
    assert data["customers"][19] == {"id": "c19", "family_name": "Arnold", "location": 19}
    assert client.delivery.roster_from_dict(data) == roster
