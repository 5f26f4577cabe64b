"""Named example graphs with structural self-checks.

Every constructor returns a NamedGraph that has already passed its
self-check. Graphs built as hierarchical products keep their product steps so
the construction can be replayed.
"""

import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..core.client import HierDimService
from ..core.distances import is_bipartite
from ..core.errors import BadParameter, SelfCheckFailed
from ..models.delivery import Customer, CustomerRoster
from ..models.gallery import Expectation, NamedGraph, SelfCheck
from ..models.graph import Graph

logger = logging.getLogger(__name__)

NAMES = ("path", "cycle", "complete", "grid", "path-cycle", "gamma", "dodecahedron", "truncated-cube")
TRUNCATED_CUBE_STAGES = ("W", "G", "H")

# Floor-plan customers in row-major cell order. The two corner customers share
# an initial; every other initial is unique.
GRID_PLAN_NAMES = (
    "Ahmadi", "Baker", "Castro", "Dubois", "Eriksen",
    "Fischer", "Garcia", "Horvat", "Ito", "Jensen",
    "Kowalski", "Lindqvist", "Moreau", "Novak", "Okafor",
    "Petrov", "Quinn", "Rossi", "Silva", "Arnold",
)


class GalleryAPI(HierDimService):
    """Service for standard graphs and the product-built examples."""

    def _require(self, name: str, value: Optional[int], minimum: int) -> int:
        if value is None or isinstance(value, bool) or int(value) < minimum:
            raise BadParameter(f"{name} must be an integer >= {minimum}, got {value!r}")
        return int(value)

    def path(self, n: int) -> Graph:
        """P_n on 0..n-1 in path order."""
        n = self._require("n", n, 1)
        return Graph.from_networkx(nx.path_graph(n))

    def cycle(self, n: int) -> Graph:
        """C_n on 0..n-1 in cyclic order."""
        n = self._require("n", n, 3)
        return Graph.from_networkx(nx.cycle_graph(n))

    def complete(self, n: int) -> Graph:
        n = self._require("n", n, 1)
        return Graph.from_networkx(nx.complete_graph(n))

    def grid(self, rows: int, cols: int) -> Graph:
        """Unit grid; cell (r, c) is vertex r·cols + c."""
        rows = self._require("rows", rows, 1)
        cols = self._require("cols", cols, 1)
        return Graph.from_networkx(nx.grid_2d_graph(rows, cols))

    def self_check(self, named: NamedGraph) -> SelfCheck:
        """Measure order, size, regularity, girth, triangles and bipartiteness."""
        g = named.graph.to_networkx()
        degrees = set(named.graph.degrees())
        girth = nx.girth(g)
        measured = {
            "order": named.graph.n,
            "size": named.graph.m,
            "regular_degree": degrees.pop() if len(degrees) == 1 else None,
            "girth": None if girth == float("inf") else int(girth),
            "triangles": sum(nx.triangles(g).values()) // 3,
            "bipartite": is_bipartite(named.graph),
        }
        failures = [
            f"{field}: expected {expected}, measured {measured[field]}"
            for field, expected in named.expected.model_dump().items()
            if expected is not None and measured[field] != expected
        ]
        if failures:
            logger.error("Self-check of %s failed: %s", named.name, failures)
        return SelfCheck(name=named.name, expected=named.expected, passed=not failures, failures=failures, **measured)

    def _checked(self, named: NamedGraph) -> NamedGraph:
        report = self.self_check(named)
        if not report.passed:
            raise SelfCheckFailed(f"{named.name}: {'; '.join(report.failures)}")
        return named

    def replay(self, named: NamedGraph) -> Graph:
        """Rebuild a product-built graph from its decomposition chain."""
        if not named.decomposition:
            return named.graph
        products = self.client.products
        current = products.hierarchical_product(named.decomposition[0]).graph
        for step in named.decomposition[1:]:
            current = products.hierarchical_product(products.spec(current, step.u, step.h)).graph
        return current

    def path_cycle_product(self, n: int, k: int) -> NamedGraph:
        """P_{2n+1}(U) ⊓ C_k with U the even-position vertices 0, 2, ..., 2n.

        The result has (2n+1)k vertices; it is bipartite exactly when k is
        even.
        """
        n = self._require("n", n, 1)
        k = self._require("k", k, 3)
        spec = self.client.products.spec(self.path(2 * n + 1), range(0, 2 * n + 1, 2), self.cycle(k))
        product = self.client.products.hierarchical_product(spec)
        return self._checked(NamedGraph(
            name=f"path-cycle-{n}-{k}",
            graph=product.graph,
            parameters={"n": n, "k": k},
            decomposition=[spec],
            expected=Expectation(order=(2 * n + 1) * k, size=2 * n * k + (n + 1) * k, bipartite=k % 2 == 0),
        ))

    def dodecahedron(self) -> NamedGraph:
        """The 20-vertex dodecahedral fullerene."""
        return self._checked(NamedGraph(
            name="dodecahedron",
            graph=Graph.from_networkx(nx.dodecahedral_graph()),
            expected=Expectation(order=20, size=30, regular_degree=3, girth=5, triangles=0, bipartite=False),
        ))

    def truncated_cube_chain(self) -> Tuple[NamedGraph, NamedGraph, NamedGraph]:
        """Truncated cube grown from a triangle in three product steps.

        With the triangle on a=0, b=1, c=2:

        - W = C3({a}) ⊓ P2
        - G = W({b-fibre}) ⊓ P2
        - H = G({c-fibre}) ⊓ P2

        Returns:
            (W, G, H), H being the 3-regular truncated cube
        """
        products = self.client.products
        p2 = self.path(2)

        w_spec = products.spec(self.cycle(3), [0], p2)
        w = products.hierarchical_product(w_spec)
        b_fibre = [w.vertex(1, h) for h in range(2)]
        g_spec = products.spec(w.graph, b_fibre, p2)
        g = products.hierarchical_product(g_spec)
        c_fibre = [g.vertex(w.vertex(2, h1), h2) for h1 in range(2) for h2 in range(2)]
        h_spec = products.spec(g.graph, c_fibre, p2)
        h = products.hierarchical_product(h_spec)

        w_named = self._checked(NamedGraph(
            name="truncated-cube-W",
            graph=w.graph,
            decomposition=[w_spec],
            expected=Expectation(order=6, size=7, girth=3, triangles=2),
        ))
        g_named = self._checked(NamedGraph(
            name="truncated-cube-G",
            graph=g.graph,
            decomposition=[w_spec, g_spec],
            expected=Expectation(order=12, size=16, girth=3, triangles=4),
        ))
        h_named = self._checked(NamedGraph(
            name="truncated-cube-H",
            graph=h.graph,
            decomposition=[w_spec, g_spec, h_spec],
            expected=Expectation(order=24, size=36, regular_degree=3, girth=3, triangles=8),
        ))
        return w_named, g_named, h_named

    def grid_plan_roster(self) -> CustomerRoster:
        """Floor plan of 20 customers, one on each cell of a 4 x 5 unit grid.

        Customers 0 and 19 sit in opposite corners and share an initial, so
        the customer graph gets exactly one name-only edge and stays bipartite.
        """
        ambient = self.grid(4, 5)
        customers = [
            Customer(id=f"c{i:02d}", family_name=name, location=i)
            for i, name in enumerate(GRID_PLAN_NAMES)
        ]
        return CustomerRoster(ambient=ambient, customers=customers)

    def by_name(self, name: str, n: Optional[int] = None, k: Optional[int] = None, stage: str = "H") -> NamedGraph:
        """Registry lookup used by the CLI.

        ``n`` sizes path, cycle and complete; grid takes ``n`` rows and ``k``
        columns; path-cycle (alias gamma) takes both; truncated-cube takes a
        stage W, G or H.

        Raises:
            BadParameter: Unknown name or stage, or missing/out-of-range size
        """
        if name == "path":
            n = self._require("n", n, 1)
            return self._checked(NamedGraph(
                name=f"path-{n}", graph=self.path(n), parameters={"n": n},
                expected=Expectation(order=n, size=n - 1, bipartite=True),
            ))
        if name == "cycle":
            n = self._require("n", n, 3)
            return self._checked(NamedGraph(
                name=f"cycle-{n}", graph=self.cycle(n), parameters={"n": n},
                expected=Expectation(order=n, size=n, regular_degree=2, girth=n, bipartite=n % 2 == 0),
            ))
        if name == "complete":
            n = self._require("n", n, 1)
            return self._checked(NamedGraph(
                name=f"complete-{n}", graph=self.complete(n), parameters={"n": n},
                expected=Expectation(order=n, size=n * (n - 1) // 2, regular_degree=n - 1),
            ))
        if name == "grid":
            rows, cols = self._require("n", n, 1), self._require("k", k, 1)
            return self._checked(NamedGraph(
                name=f"grid-{rows}-{cols}", graph=self.grid(rows, cols), parameters={"n": rows, "k": cols},
                expected=Expectation(order=rows * cols, size=rows * (cols - 1) + cols * (rows - 1), bipartite=True),
            ))
        if name in ("path-cycle", "gamma"):
            return self.path_cycle_product(n, k)
        if name == "dodecahedron":
            return self.dodecahedron()
        if name == "truncated-cube":
            stages: Dict[str, NamedGraph] = dict(zip(TRUNCATED_CUBE_STAGES, self.truncated_cube_chain()))
            if stage not in stages:
                raise BadParameter(f"Unknown truncated-cube stage {stage!r}; expected one of {TRUNCATED_CUBE_STAGES}")
            return stages[stage]
        raise BadParameter(f"Unknown gallery graph {name!r}; expected one of {NAMES}")

    def names(self) -> List[str]:
        return list(NAMES)
