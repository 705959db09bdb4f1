"""liedouble: Lie bialgebras, Drinfel'd doubles, classical r-matrices and
coisotropic Poisson homogeneous structures, with an exact-arithmetic core
and a numerical chart layer for Sklyanin brackets."""

__version__ = "0.1.0"

from .exactalg import PolyExpr, Q

__all__ = ["PolyExpr", "Q", "__version__"]
