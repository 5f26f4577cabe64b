"""Generalized hierarchical product models.

G(U) ⊓ H has vertex set V(G) x V(H). G-edges are copied into every H-layer;
H-edges appear only above the vertices of U. Product vertex (g, h) has id
g * n(H) + h.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from ..core.errors import EmptySubset
from .graph import Graph, VertexSubset, check_subset


class ProductSpec(BaseModel):
    """A (G, U, H) triple with a nonempty U inside V(G)."""

    model_config = ConfigDict(frozen=True)

    g: Graph = Field(..., description="First factor")
    u: VertexSubset = Field(..., description="Vertices of G that carry copies of H")
    h: Graph = Field(..., description="Second factor")

    @field_validator("u", mode="after")
    @classmethod
    def check_u(cls, v: VertexSubset, info: ValidationInfo) -> VertexSubset:
        """U is nonempty, inside V(G), and stored sorted."""
        if not v:
            raise EmptySubset("U must be a nonempty subset of V(G)")
        g = info.data.get("g")
        if g is not None:
            v = check_subset(g.n, v)
        return tuple(sorted(v))

    @property
    def order(self) -> int:
        return self.g.n * self.h.n


class ProductGraph(BaseModel):
    """A constructed product with its (g, h) <-> id bijection."""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    n_g: int = Field(..., ge=1)
    n_h: int = Field(..., ge=1)

    def vertex(self, g: int, h: int) -> int:
        return g * self.n_h + h

    def coords(self, v: int) -> Tuple[int, int]:
        g, h = divmod(v, self.n_h)
        return g, h
