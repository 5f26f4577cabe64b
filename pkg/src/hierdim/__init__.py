"""hierdim: exact local metric dimensions and generalized hierarchical products.

This package computes metric, local metric and U-metric local dimensions of
small graphs by exact search, builds hierarchical, Cartesian, join and corona
products, checks product dimension bounds, and assigns landmark codes to
delivery customers.
"""

__version__ = "0.3.0"

from .core.client import HierDimClient, HierDimService
from .core.config import Settings

__all__ = [
    "HierDimClient",
    "HierDimService",
    "Settings",
]
# Expose the core models
from .models.graph import INFINITE, DistanceMatrix, Graph
from .models.dimension import DimensionKind, DimensionResult
from .models.product import ProductGraph, ProductSpec
