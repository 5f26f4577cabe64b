"""Graph products built from the generalized hierarchical product.

Cartesian products are the case U = V(G); the corona G ⊙ H is built as
(H + K1)({apex}) ⊓ G and relabelled to the direct layout. The two generator
constructions turn local metric generators of the factors into a local
metric generator of the product.
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from ..core import resolving
from ..core.client import HierDimService
from ..core.distances import all_pairs_distances, u_distance
from ..core.errors import PreconditionViolated
from ..models.graph import Graph, VertexSubset, check_subset, check_vertex
from ..models.product import ProductGraph, ProductSpec

logger = logging.getLogger(__name__)

WeightedEdge = Tuple[int, int, Union[float, str]]


def _assemble(n: int, edges: List[WeightedEdge], weighted: bool, labels: Optional[dict] = None) -> Graph:
    pairs = [(u, v) for u, v, _ in edges]
    weights = [w for _, _, w in edges] if weighted else None
    return Graph(n=n, edges=pairs, weights=weights, labels=labels or {})


def _weighted_edges(graph: Graph, offset: int = 0) -> List[WeightedEdge]:
    return [(u + offset, v + offset, graph.weight(i)) for i, (u, v) in enumerate(graph.edges)]


class ProductsAPI(HierDimService):
    """Service for product constructions and product distances."""

    def spec(self, g: Graph, u: Sequence[int], h: Graph) -> ProductSpec:
        """Validated ProductSpec for G(U) ⊓ H."""
        return ProductSpec(g=g, u=tuple(u), h=h)

    def hierarchical_product(self, spec: ProductSpec) -> ProductGraph:
        """Build G(U) ⊓ H.

        Edges are {(g,h)(g',h): gg' in E(G)} and {(g,h)(g,h'): g in U, hh' in E(H)},
        so the product has m(G)·n(H) + |U|·m(H) edges.

        Args:
            spec: The (G, U, H) triple

        Returns:
            ProductGraph with vertex (g, h) at id g·n(H) + h and labels "g,h"
        """
        g, h = spec.g, spec.h
        nh = h.n
        edges: List[WeightedEdge] = []
        for layer in range(nh):
            for a, b, w in _weighted_edges(g):
                edges.append((a * nh + layer, b * nh + layer, w))
        for base in spec.u:
            for x, y, w in _weighted_edges(h):
                edges.append((base * nh + x, base * nh + y, w))
        labels = {gv * nh + hv: f"{gv},{hv}" for gv in range(g.n) for hv in range(nh)}
        graph = _assemble(g.n * nh, edges, g.is_weighted or h.is_weighted, labels)
        logger.info("Built hierarchical product with |U|=%d: %r", len(spec.u), graph)
        return ProductGraph(graph=graph, n_g=g.n, n_h=nh)

    def hierarchical_distance(self, spec: ProductSpec, first: Tuple[int, int], second: Tuple[int, int]) -> Union[int, float]:
        """Distance in G(U) ⊓ H from the factor distances.

        d((g,h),(g',h')) = d_{G(U)}(g,g') + d_H(h,h') when h != h', else d_G(g,g').
        """
        g1, h1 = check_vertex(spec.g.n, first[0]), check_vertex(spec.h.n, first[1])
        g2, h2 = check_vertex(spec.g.n, second[0]), check_vertex(spec.h.n, second[1])
        if h1 == h2:
            return all_pairs_distances(spec.g).distance(g1, g2)
        return u_distance(spec.g, spec.u, g1, g2) + all_pairs_distances(spec.h).distance(h1, h2)

    def cartesian_product(self, g: Graph, h: Graph) -> ProductGraph:
        """G □ H, the hierarchical product with U = V(G)."""
        return self.hierarchical_product(self.spec(g, range(g.n), h))

    def join(self, g: Graph, h: Graph) -> Graph:
        """G + H: disjoint union plus every edge between the two sides.

        G keeps ids 0..n(G)-1, H is shifted by n(G).
        """
        edges = _weighted_edges(g) + _weighted_edges(h, offset=g.n)
        edges += [(a, g.n + b, 1.0) for a in range(g.n) for b in range(h.n)]
        return _assemble(g.n + h.n, edges, g.is_weighted or h.is_weighted)

    def corona(self, g: Graph, h: Graph) -> Graph:
        """G ⊙ H built as (H + K1)({apex}) ⊓ G.

        Output layout: G on 0..n(G)-1, the i-th copy of H on
        n(G) + i·n(H) .. n(G) + (i+1)·n(H) - 1.
        """
        cone = self.join(h, Graph(n=1))
        apex = h.n
        product = self.hierarchical_product(self.spec(cone, [apex], g))

        def relabel(v: int) -> int:
            x, i = product.coords(v)
            return i if x == apex else g.n + i * h.n + x

        edges = [(relabel(a), relabel(b), product.graph.weight(idx)) for idx, (a, b) in enumerate(product.graph.edges)]
        return _assemble(product.graph.n, edges, product.graph.is_weighted)

    def corona_direct(self, g: Graph, h: Graph) -> Graph:
        """G ⊙ H from the definition: vertex i of G joined to all of the i-th copy of H."""
        edges = _weighted_edges(g)
        for i in range(g.n):
            offset = g.n + i * h.n
            edges += _weighted_edges(h, offset=offset)
            edges += [(i, offset + j, 1.0) for j in range(h.n)]
        return _assemble(g.n + g.n * h.n, edges, g.is_weighted or h.is_weighted)

    def _require_local_generator(self, graph: Graph, landmarks: Sequence[int], name: str) -> VertexSubset:
        members = check_subset(graph.n, landmarks)
        if not resolving.is_local_metric_generator(graph, None, members, self.settings.tolerance):
            raise PreconditionViolated(f"{name}={list(members)} is not a local metric generator")
        return members

    def diagonal_generator(self, spec: ProductSpec, s_g: Sequence[int], s_h: Sequence[int]) -> VertexSubset:
        """Local metric generator of G(U) ⊓ H from generators S_G ⊆ U and S_H.

        Pairs the i-th landmark of S_G with the i-th of S_H for
        i < max(|S_G|, |S_H|), cycling the shorter list.

        Raises:
            PreconditionViolated: S_G not inside U, or either set not a generator
        """
        s_g = self._require_local_generator(spec.g, s_g, "S_G")
        s_h = self._require_local_generator(spec.h, s_h, "S_H")
        outside = [x for x in s_g if x not in spec.u]
        if outside:
            raise PreconditionViolated(f"S_G vertices {outside} are not in U")
        k = max(len(s_g), len(s_h))
        ids = {s_g[i % len(s_g)] * spec.h.n + s_h[i % len(s_h)] for i in range(k)}
        return tuple(sorted(ids))

    def fibered_generator(self, spec: ProductSpec, s_g: Sequence[int], s_h: Sequence[int]) -> VertexSubset:
        """Local metric generator of G(U) ⊓ H for an arbitrary S_G.

        Landmarks of S_G outside U contribute their whole H-fibre; the k
        landmarks inside U are paired diagonally with S_H (cycled modulo
        |S_H|), for n(H)(|S_G| - k) + k vertices. When S_G lies inside U the
        fibres are absent and the full diagonal pairing is returned instead.

        Raises:
            PreconditionViolated: Either set is not a local metric generator
        """
        s_g = self._require_local_generator(spec.g, s_g, "S_G")
        s_h = self._require_local_generator(spec.h, s_h, "S_H")
        inside = [x for x in s_g if x in spec.u]
        outside = [x for x in s_g if x not in spec.u]
        if not outside:
            logger.info("S_G lies inside U; falling back to the diagonal pairing")
            return self.diagonal_generator(spec, s_g, s_h)
        ids = {x * spec.h.n + y for x in outside for y in range(spec.h.n)}
        ids |= {inside[i] * spec.h.n + s_h[i % len(s_h)] for i in range(len(inside))}
        return tuple(sorted(ids))
