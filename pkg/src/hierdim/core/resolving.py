"""Representations and generator predicates.

A landmark ``w`` separates an element ``(a, b)`` when the distances from
``w`` to ``a`` and to ``b`` differ. Metric generators must separate every
vertex pair, local generators every edge, and U-metric local generators every
edge under walk-through-U distances. Hop counts are compared exactly,
weighted distances with a tolerance.
"""

import logging
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from ..models.dimension import DimensionKind
from ..models.graph import DistanceMatrix, Edge, Graph, Representation, check_subset, check_vertex
from .config import DEFAULT_TOLERANCE
from .cover import CoverProblem
from .distances import all_pairs_distances, u_distance_matrix

logger = logging.getLogger(__name__)


def _as_numbers(values: np.ndarray, weighted: bool) -> Representation:
    if weighted:
        return tuple(float(x) for x in values)
    return tuple(int(x) for x in values)


def _differs(dist: np.ndarray, weighted: bool, tolerance: float, a, b) -> np.ndarray:
    """Boolean array over landmarks: does each landmark separate a from b?"""
    if weighted:
        return np.abs(dist[:, a] - dist[:, b]) > tolerance
    return dist[:, a] != dist[:, b]


def elements_for(graph: Graph, kind: DimensionKind) -> List[Edge]:
    """The pairs a generator of ``kind`` must separate, sorted."""
    if kind is DimensionKind.METRIC:
        return [(a, b) for a in range(graph.n) for b in range(a + 1, graph.n)]
    return list(graph.edges)


def distance_view(graph: Graph, kind: DimensionKind, u: Optional[Sequence[int]] = None) -> Tuple[np.ndarray, bool]:
    """Distance matrix used by ``kind`` and whether it is weighted."""
    dm = all_pairs_distances(graph)
    if kind is DimensionKind.U_LOCAL:
        if u is None:
            u = ()
        return u_distance_matrix(graph, u), dm.weighted
    return dm.d, dm.weighted


def representation(dm: DistanceMatrix, landmarks: Sequence[int], v: int) -> Representation:
    """r(v|S): distances from ``v`` to the landmarks, in landmark order."""
    members = list(check_subset(dm.n, landmarks))
    v = check_vertex(dm.n, v)
    return _as_numbers(dm.d[v, members], dm.weighted)


def u_representation(graph: Graph, u: Sequence[int], landmarks: Sequence[int], v: int) -> Representation:
    """r_{G(U)}(v|S): walk-through-U distances from ``v`` to the landmarks."""
    members = list(check_subset(graph.n, landmarks))
    v = check_vertex(graph.n, v)
    du = u_distance_matrix(graph, u)
    return _as_numbers(du[v, members], graph.is_weighted)


def separates(
    dist: np.ndarray,
    weighted: bool,
    landmarks: Sequence[int],
    pairs: Sequence[Edge],
    tolerance: float = DEFAULT_TOLERANCE,
) -> bool:
    """True iff every pair differs in at least one landmark coordinate."""
    if not pairs:
        return True
    rows = dist[list(landmarks)]
    a = np.fromiter((p[0] for p in pairs), dtype=np.int64, count=len(pairs))
    b = np.fromiter((p[1] for p in pairs), dtype=np.int64, count=len(pairs))
    return bool(_differs(rows, weighted, tolerance, a, b).any(axis=0).all())


def is_metric_generator(dm: DistanceMatrix, landmarks: Sequence[int], tolerance: float = DEFAULT_TOLERANCE) -> bool:
    members = check_subset(dm.n, landmarks)
    pairs = [(a, b) for a in range(dm.n) for b in range(a + 1, dm.n)]
    return separates(dm.d, dm.weighted, members, pairs, tolerance)


def is_local_metric_generator(
    graph: Graph,
    dm: Optional[DistanceMatrix],
    landmarks: Sequence[int],
    tolerance: float = DEFAULT_TOLERANCE,
) -> bool:
    """Every edge (INFINITE ones included) has distinct endpoint representations."""
    members = check_subset(graph.n, landmarks)
    dm = dm if dm is not None else all_pairs_distances(graph)
    return separates(dm.d, dm.weighted, members, graph.edges, tolerance)


def is_u_local_generator(
    graph: Graph,
    u: Sequence[int],
    landmarks: Sequence[int],
    tolerance: float = DEFAULT_TOLERANCE,
) -> bool:
    members = check_subset(graph.n, landmarks)
    du = u_distance_matrix(graph, u)
    return separates(du, graph.is_weighted, members, graph.edges, tolerance)


def distinguishing_pairs(
    graph: Graph,
    v: int,
    kind: DimensionKind,
    u: Optional[Sequence[int]] = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> Set[Edge]:
    """Elements of ``kind`` whose representations differ in landmark ``v``."""
    v = check_vertex(graph.n, v)
    dist, weighted = distance_view(graph, kind, u)
    pairs = elements_for(graph, kind)
    if not pairs:
        return set()
    a = np.array([p[0] for p in pairs])
    b = np.array([p[1] for p in pairs])
    row = _differs(dist[v:v + 1], weighted, tolerance, a, b)[0]
    return {pair for pair, hit in zip(pairs, row) if hit}


def cover_problem(
    graph: Graph,
    kind: DimensionKind,
    u: Optional[Sequence[int]] = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> CoverProblem:
    """Bitset form of the generator condition: one mask per candidate landmark."""
    dist, weighted = distance_view(graph, kind, u)
    pairs = elements_for(graph, kind)
    masks = [0] * graph.n
    if pairs:
        a = np.array([p[0] for p in pairs])
        b = np.array([p[1] for p in pairs])
        hits = _differs(dist, weighted, tolerance, a, b)
        for w in range(graph.n):
            mask = 0
            for e in np.flatnonzero(hits[w]):
                mask |= 1 << int(e)
            masks[w] = mask
    return CoverProblem(masks=tuple(masks), n_elements=len(pairs))
