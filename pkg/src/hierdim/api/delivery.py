"""Customer graphs and landmark codes for a delivery service.

Customers u and v are adjacent when

- a shortest u,v-route in the road network has no other customer as an
  intermediate stop (``any``), or every shortest route avoids them (``all``);
- or their family names share a first letter.

Route-adjacent customers are joined by their road distance; name-only pairs
get an INFINITE edge. A local metric basis S then gives every customer the
code (F, r(v|S)), and adjacent customers always receive different codes.

Roster file format::

    {"ambient": <graph document>,
     "customers": [{"id": "c00", "family_name": "Ahmadi", "location": 0}, ...]}
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import networkx as nx
import numpy as np

from ..core import resolving
from ..core.client import HierDimService
from ..core.distances import all_pairs_distances
from ..core.errors import BadParameter, Disconnected, DisconnectedResult
from ..models.delivery import (
    CodeBook,
    CodeBookReport,
    Customer,
    CustomerCode,
    CustomerEdge,
    CustomerGraph,
    CustomerRoster,
    EdgeOrigin,
)
from ..models.dimension import DimensionResult
from ..models.graph import INFINITE, Graph
from .graphs import plain_number

logger = logging.getLogger(__name__)

GEODESIC_RULES = ("any", "all")


class DeliveryAPI(HierDimService):
    """Service for the customer coding model."""

    def roster_from_dict(self, data: Dict[str, Any]) -> CustomerRoster:
        ambient = self.client.graphs.graph_from_dict(data["ambient"])
        customers = [Customer.model_validate(item) for item in data.get("customers", [])]
        return CustomerRoster(ambient=ambient, customers=customers)

    def roster_to_dict(self, roster: CustomerRoster) -> Dict[str, Any]:
        return {
            "ambient": self.client.graphs.graph_to_dict(roster.ambient),
            "customers": [c.model_dump() for c in roster.customers],
        }

    def read_roster(self, path: Union[str, Path]) -> CustomerRoster:
        """Read a roster document from a file, or from stdin when ``path`` is '-'."""
        if str(path) == "-":
            return self.roster_from_dict(json.load(sys.stdin))
        with open(path) as handle:
            return self.roster_from_dict(json.load(handle))

    def _route_free(self, roster: CustomerRoster, rule: str, ambient_d: np.ndarray) -> np.ndarray:
        """Boolean matrix: is the customer pair joined by the route rule?"""
        tol = self.settings.tolerance
        locations = [c.location for c in roster.customers]
        count = len(locations)
        result = np.zeros((count, count), dtype=bool)

        if rule == "all":
            sub = ambient_d[np.ix_(locations, locations)].astype(np.float64)
            for i in range(count):
                for j in range(i + 1, count):
                    through = sub[i, :] + sub[:, j]
                    through[[i, j]] = np.inf
                    result[i, j] = result[j, i] = bool((through > sub[i, j] + tol).all())
            return result

        # Arcs leave a vertex only if it is the source or holds no customer,
        # so other customers can end a route but never relay it.
        occupied = set(locations)
        ambient = roster.ambient.to_networkx()
        for i, source in enumerate(locations):
            routes = nx.DiGraph()
            routes.add_nodes_from(ambient.nodes)
            for x, y, data in ambient.edges(data=True):
                for a, b in ((x, y), (y, x)):
                    if a == source or a not in occupied:
                        routes.add_edge(a, b, weight=data["weight"])
            reach = nx.single_source_dijkstra_path_length(routes, source, weight="weight")
            for j, target in enumerate(locations):
                if j != i and target in reach and reach[target] <= ambient_d[source, target] + tol:
                    result[i, j] = True
        return result | result.T

    def build_customer_graph(self, roster: CustomerRoster, geodesic_rule: Optional[str] = None) -> CustomerGraph:
        """Apply the route rule and the shared-initial rule to a roster.

        Args:
            roster: Validated roster
            geodesic_rule: 'any' or 'all'; defaults to the configured rule

        Returns:
            CustomerGraph whose vertex i is ``roster.customers[i]``

        Raises:
            BadParameter: Unknown geodesic rule
            DisconnectedResult: The finite-weight customer graph is disconnected
        """
        rule = geodesic_rule or self.settings.geodesic_rule
        if rule not in GEODESIC_RULES:
            raise BadParameter(f"geodesic rule must be one of {GEODESIC_RULES}, got {rule!r}")

        ambient_d = all_pairs_distances(roster.ambient).d
        routed = self._route_free(roster, rule, ambient_d)
        customers = roster.customers

        edges: List[List[int]] = []
        weights: List[Union[float, str]] = []
        origins: List[CustomerEdge] = []
        for i in range(len(customers)):
            for j in range(i + 1, len(customers)):
                same_initial = customers[i].letter_key == customers[j].letter_key
                if routed[i, j]:
                    origin = EdgeOrigin.BOTH if same_initial else EdgeOrigin.GEODESIC
                    weight: Union[float, str] = float(ambient_d[customers[i].location, customers[j].location])
                elif same_initial:
                    origin, weight = EdgeOrigin.NAME_ONLY, INFINITE
                else:
                    continue
                edges.append([i, j])
                weights.append(weight)
                origins.append(CustomerEdge(u=i, v=j, origin=origin))

        try:
            graph = Graph(
                n=len(customers),
                edges=edges,
                weights=weights,
                labels={i: c.id for i, c in enumerate(customers)},
            )
        except Disconnected as e:
            logger.error("Customer graph under rule %r is disconnected", rule)
            raise DisconnectedResult(str(e)) from e

        name_only = sum(1 for o in origins if o.origin is EdgeOrigin.NAME_ONLY)
        logger.info("Customer graph %r under rule %r with %d name-only edges", graph, rule, name_only)
        return CustomerGraph(roster=roster, graph=graph, origins=origins, geodesic_rule=rule)

    def _codebook(self, cg: CustomerGraph, result: DimensionResult) -> CodeBook:
        dm = all_pairs_distances(cg.graph)
        codes = [
            CustomerCode(
                customer=customer.id,
                letter=customer.initial,
                code=[plain_number(x) for x in resolving.representation(dm, result.basis, v)],
            )
            for v, customer in enumerate(cg.roster.customers)
        ]
        return CodeBook(kind=result.kind.value, basis=list(result.basis), codes=codes)

    def assign_codes(self, cg: CustomerGraph) -> CodeBook:
        """Codes (F, r(v|S)) with S the least local metric basis of the customer graph."""
        return self._codebook(cg, self.client.dimension.local_dimension(cg.graph))

    def assign_metric_codes(self, cg: CustomerGraph) -> CodeBook:
        """Codes r(v|S) with S the least metric basis, for code-length comparison."""
        return self._codebook(cg, self.client.dimension.metric_dimension(cg.graph))

    def _same_code(self, first: CustomerCode, second: CustomerCode) -> bool:
        if first.letter.casefold() != second.letter.casefold() or len(first.code) != len(second.code):
            return False
        return all(abs(a - b) <= self.settings.tolerance for a, b in zip(first.code, second.code))

    def validate_codebook(self, cg: CustomerGraph, cb: CodeBook) -> CodeBookReport:
        """Check that adjacent customers get different codes and the basis is a generator.

        Failures are reported, not raised. The report also carries the metric
        dimension of the customer graph next to the book's code length.
        """
        failures: List[str] = []
        dimension = self.client.dimension

        basis_ok = bool(cb.basis) and all(0 <= v < cg.graph.n for v in cb.basis)
        if basis_ok:
            basis_ok = dimension.is_local_metric_generator(cg.graph, cb.basis)
        if not basis_ok:
            failures.append(f"basis {cb.basis} is not a local metric generator")

        if len(cb.codes) != cg.graph.n:
            failures.append(f"{len(cb.codes)} codes for {cg.graph.n} customers")
        else:
            for u, v in cg.graph.edges:
                if self._same_code(cb.codes[u], cb.codes[v]):
                    failures.append(f"customers {cb.codes[u].customer} and {cb.codes[v].customer} share a code")

        metric = dimension.metric_dimension(cg.graph).value
        if failures:
            logger.error("Code book failed validation: %s", failures)
        return CodeBookReport(
            valid=not failures,
            basis_is_generator=basis_ok,
            local=len(cb.basis),
            metric=metric,
            failures=failures,
        )

    def codebook_to_dict(self, cg: CustomerGraph, cb: CodeBook, report: Optional[CodeBookReport] = None) -> Dict[str, Any]:
        """CLI document: basis customer ids, codes by id and the dimension comparison."""
        data: Dict[str, Any] = {
            "basis": [cg.roster.customers[v].id for v in cb.basis],
            "codes": {code.customer: {"letter": code.letter, "code": list(code.code)} for code in cb.codes},
        }
        if report is not None:
            data["dimension_comparison"] = {"local": report.local, "metric": report.metric}
            data["valid"] = report.valid
        return data
