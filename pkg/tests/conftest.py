"""Shared fixtures and hypothesis strategies for the hierdim tests."""

import pytest
from hypothesis import strategies as st

from hierdim import HierDimClient, Settings
from hierdim.models.graph import Graph
from hierdim.models.product import ProductSpec


@pytest.fixture(scope="session")
def client() -> HierDimClient:
    """Client with explicit settings so HIERDIM_* variables cannot leak in."""
    return HierDimClient(settings=Settings(max_exact_vertices=64, workers=1, geodesic_rule="any"))


@st.composite
def connected_graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 8) -> Graph:
    """Random spanning tree plus random chords."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = {(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)}
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))))
    return Graph(n=n, edges=sorted(edges))


@st.composite
def product_specs(draw: st.DrawFn, max_g: int = 6, max_h: int = 5) -> ProductSpec:
    """(G, U, H) with n(G) <= max_g, n(H) <= max_h and a random nonempty U."""
    g = draw(connected_graphs(min_n=1, max_n=max_g))
    h = draw(connected_graphs(min_n=1, max_n=max_h))
    u = draw(st.lists(st.integers(min_value=0, max_value=g.n - 1), min_size=1, unique=True))
    return ProductSpec(g=g, u=tuple(u), h=h)
