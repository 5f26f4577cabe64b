"""Models for the hierdim toolkit."""

# Expose graph and dimension models
from .graph import INFINITE, DistanceMatrix, Graph, VertexSubset, check_subset, check_vertex
from .dimension import DimensionKind, DimensionResult

# Expose product and bound models
from .product import ProductGraph, ProductSpec
from .bounds import BoundsReport, CoronaBound, GeneralBound, JoinWitness, SandwichBounds

# Expose gallery and delivery models
from .gallery import Expectation, NamedGraph, SelfCheck
from .delivery import CodeBook, CodeBookReport, Customer, CustomerGraph, CustomerRoster, EdgeOrigin
