"""Exact rational linear algebra: dense matrices, elimination backends,
and the internal sparse format used for module actions."""

from .backend import COMPILED, backend_name
from .matrix import ExactMatrix, Rational
from .sparse import SparseMatrix

__all__ = ["ExactMatrix", "Rational", "SparseMatrix", "COMPILED", "backend_name"]
