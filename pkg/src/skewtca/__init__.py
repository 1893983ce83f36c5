"""Exact finite-rank computations for Sym(Sym^2(V)[1]) and the periplectic superalgebra."""
from skewtca.partition import Partition

__version__ = "0.1.0"
__all__ = ["Partition", "__version__"]
