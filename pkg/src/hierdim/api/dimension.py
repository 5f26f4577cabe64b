"""Representations, generator predicates and exact dimensions.

This module exposes dim(G), dim_l(G) and dim_l(G|U) through exhaustive search
in increasing cardinality, reporting the lexicographically least basis.
"""

import logging
import time
from typing import Optional, Sequence, Set, Tuple, Union

from ..core import resolving
from ..core.client import HierDimService
from ..core.cover import solve
from ..core.distances import all_pairs_distances
from ..models.dimension import DimensionKind, DimensionResult
from ..models.graph import DistanceMatrix, Edge, Graph, Representation, VertexSubset, check_subset

logger = logging.getLogger(__name__)


class DimensionAPI(HierDimService):
    """Service for metric, local and U-metric local dimensions."""

    def representation(self, dm: DistanceMatrix, landmarks: Sequence[int], v: int) -> Representation:
        """r(v|S) over the distance matrix ``dm``.

        Raises:
            EmptySubset: If ``landmarks`` is empty
        """
        return resolving.representation(dm, landmarks, v)

    def u_representation(self, graph: Graph, u: Sequence[int], landmarks: Sequence[int], v: int) -> Representation:
        """r_{G(U)}(v|S); a coordinate is 0 only when v is that landmark and lies in U."""
        return resolving.u_representation(graph, u, landmarks, v)

    def is_metric_generator(self, dm: DistanceMatrix, landmarks: Sequence[int]) -> bool:
        return resolving.is_metric_generator(dm, landmarks, self.settings.tolerance)

    def is_local_metric_generator(self, graph: Graph, landmarks: Sequence[int], dm: Optional[DistanceMatrix] = None) -> bool:
        return resolving.is_local_metric_generator(graph, dm, landmarks, self.settings.tolerance)

    def is_u_local_generator(self, graph: Graph, u: Sequence[int], landmarks: Sequence[int]) -> bool:
        return resolving.is_u_local_generator(graph, u, landmarks, self.settings.tolerance)

    def is_generator(
        self,
        graph: Graph,
        kind: Union[DimensionKind, str],
        landmarks: Sequence[int],
        u: Optional[Sequence[int]] = None,
    ) -> bool:
        """Dispatch to the predicate for ``kind``."""
        kind = DimensionKind(kind)
        if kind is DimensionKind.METRIC:
            return self.is_metric_generator(all_pairs_distances(graph), landmarks)
        if kind is DimensionKind.LOCAL:
            return self.is_local_metric_generator(graph, landmarks)
        return self.is_u_local_generator(graph, u or (), landmarks)

    def distinguishing_pairs(
        self,
        graph: Graph,
        v: int,
        kind: Union[DimensionKind, str],
        u: Optional[Sequence[int]] = None,
    ) -> Set[Edge]:
        """Pairs (METRIC) or edges (LOCAL, U_LOCAL) separated by landmark ``v``."""
        return resolving.distinguishing_pairs(graph, v, DimensionKind(kind), u, self.settings.tolerance)

    def find_dimension(
        self,
        graph: Graph,
        kind: Union[DimensionKind, str],
        u: Optional[Sequence[int]] = None,
        enumerate_all: bool = False,
        strategy: str = "pruned",
        workers: Optional[int] = None,
    ) -> DimensionResult:
        """Exact dimension of ``kind`` with the lexicographically least basis.

        Args:
            graph: Host graph
            kind: metric, local or u_local
            u: The subset U, required for u_local
            enumerate_all: Also return every minimum generator
            strategy: 'pruned' (bitset branch and bound) or 'naive' (plain scan)
            workers: Parallel workers; defaults to the configured value

        Returns:
            DimensionResult; identical for every strategy and worker count

        Raises:
            EmptySubset: u_local without a nonempty U
            NoGeneratorExists: u_local where even V(G) fails
        """
        kind = DimensionKind(kind)
        u_members: Optional[VertexSubset] = None
        if kind is DimensionKind.U_LOCAL:
            u_members = check_subset(graph.n, u or ())
        workers = self.settings.workers if workers is None else workers

        started = time.perf_counter()
        problem = resolving.cover_problem(graph, kind, u_members, self.settings.tolerance)
        solution = solve(problem, enumerate_all=enumerate_all, strategy=strategy, workers=workers)
        logger.info(
            "%s dimension of %r is %d (%s, %d workers, %.3fs)",
            kind.value, graph, solution.value, strategy, workers, time.perf_counter() - started,
        )
        return DimensionResult(
            kind=kind,
            value=solution.value,
            basis=list(solution.first),
            u=list(u_members) if u_members is not None else None,
            all_minimum_bases=[list(c) for c in solution.all_covers] if solution.all_covers is not None else None,
        )

    def metric_dimension(self, graph: Graph, **kwargs) -> DimensionResult:
        return self.find_dimension(graph, DimensionKind.METRIC, **kwargs)

    def local_dimension(self, graph: Graph, **kwargs) -> DimensionResult:
        return self.find_dimension(graph, DimensionKind.LOCAL, **kwargs)

    def u_local_dimension(self, graph: Graph, u: Sequence[int], **kwargs) -> DimensionResult:
        return self.find_dimension(graph, DimensionKind.U_LOCAL, u=u, **kwargs)

    def project_onto_factors(self, n_h: int, landmarks: Sequence[int]) -> Tuple[VertexSubset, VertexSubset]:
        """Projections of a product landmark set onto G and H (ids g*n_h + h).

        Returns:
            (sorted G-coordinates, sorted H-coordinates)
        """
        g_side = sorted({v // n_h for v in landmarks})
        h_side = sorted({v % n_h for v in landmarks})
        return tuple(g_side), tuple(h_side)
