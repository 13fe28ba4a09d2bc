"""Exact integer combinatorics of Weyl groups, tau-tilting lattices, Lusztig data, MV polytopes
and the crystal B(-infinity) for symmetrizable Cartan matrices of finite type."""
from . import cartan, crystal, gmatrix, layers, lusztig, mvpolytope, weyl
from .errors import MvkitError

__all__ = ["cartan", "weyl", "gmatrix", "layers", "lusztig", "mvpolytope", "crystal", "MvkitError"]
__version__ = "0.1.0"
