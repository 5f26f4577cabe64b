"""Service modules for the hierdim toolkit.

Each module contains one HierDimService subclass; the client registers it
under the module name.
"""

__all__ = [
    "graphs",  # graph construction and JSON format
    "dimension",  # representations, predicates, exact dimensions
    "products",  # hierarchical / Cartesian / join / corona
    "bounds",  # product bounds against exact search
    "gallery",  # named example graphs
    "delivery",  # customer graphs and codes
]
