"""Exact computations in the double twisted bialgebras of set compositions, graphs and
finite topologies, their characters, and their images under the Fock functors."""
from . import characters, fock, graphs, setcomp, topology
from .errors import CapacityError, DomainError, NotInvertibleError
from .fock import Polynomial, chromatic_polynomial, ehrhart_polynomial
from .kernels import BACKEND
from .lincomb import LinComb

__all__ = [
    "BACKEND",
    "CapacityError",
    "DomainError",
    "LinComb",
    "NotInvertibleError",
    "Polynomial",
    "characters",
    "chromatic_polynomial",
    "ehrhart_polynomial",
    "fock",
    "graphs",
    "setcomp",
    "topology",
]
