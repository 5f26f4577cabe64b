"""Bound report models.

These documents tie the product dimension bounds to the exact value found by
search, so that regression files carry every input and every derived number.
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class SandwichBounds(BaseModel):
    """max(dim_l(G|U), dim_l(H)) <= dim_l(G(U) ⊓ H) <= max(dim_l(G), dim_l(H)).

    The bounds hold when some local metric basis of G lies inside U;
    ``lower`` and ``upper`` are None otherwise.
    """
    applicable: bool = Field(..., description="Some local metric basis of G lies inside U")
    lower: Optional[int] = Field(None, description="max(dim_l(G|U), dim_l(H))")
    upper: Optional[int] = Field(None, description="max(dim_l(G), dim_l(H))")
    basis_in_u: Optional[List[int]] = Field(None, description="Least local metric basis of G inside U")
    u_local: Optional[int] = Field(None, description="dim_l(G|U) when applicable")


class BasisBound(BaseModel):
    """The general upper bound evaluated for one local metric basis S_G."""
    basis: List[int]
    k: int = Field(..., ge=0, description="|S_G ∩ U|")
    bound: int = Field(..., ge=1)


class GeneralBound(BaseModel):
    """General upper bound n(H)(dim_l(G) - k) + k, minimised over local metric bases of G.

    A basis lying inside U is bounded by max(|S_G|, dim_l(H)) instead.
    """
    bound: int = Field(..., ge=1)
    best_k: int = Field(..., ge=0)
    witness: List[int] = Field(..., description="Basis of G attaining the bound")
    per_basis: List[BasisBound] = Field(default_factory=list)


class BoundsReport(BaseModel):
    """Bounds for one product next to its exact local metric dimension.

    Required Fields:
    - n_g, n_h, u: the instance
    - g_local, h_local: factor local metric dimensions
    - general_upper, best_k: the general bound and its k
    - exact: dim_l(G(U) ⊓ H) by search
    - consistent: no bound is violated
    """
    n_g: int
    n_h: int
    u: List[int]
    g_local: int
    h_local: int
    u_local: Optional[int] = None
    sandwich_applicable: bool
    sandwich_lower: Optional[int] = None
    sandwich_upper: Optional[int] = None
    general_upper: int
    best_k: int
    exact: int
    g_witness: List[int] = Field(..., description="Basis of G behind general_upper")
    h_witness: List[int] = Field(..., description="Least local metric basis of H")
    product_basis: List[int] = Field(..., description="Least local metric basis of the product")
    constructed_generator: List[int] = Field(..., description="Generator built from g_witness and h_witness")
    constructed_valid: bool
    consistent: bool
    violations: List[str] = Field(default_factory=list)


class CoronaBound(BaseModel):
    """Corona G ⊙ H read as (H + K1)({apex}) ⊓ G."""
    n_g: int
    n_h: int
    cone_local: int = Field(..., description="dim_l(H + K1)")
    apex_in_some_basis: bool
    apex_free_basis: bool = Field(..., description="Some local metric basis of H + K1 avoids the apex")
    bound: int
    best_k: int
    exact: Optional[int] = Field(None, description="dim_l(G ⊙ H) when within the size guard")


class JoinWitness(BaseModel):
    """Exact dim_l(H + K_t) next to the value n(H)(t - 1)."""
    n_h: int
    t: int
    exact: int
    quoted: int
    agrees: bool
    basis: List[int]
