"""Workbench for finite seminearrings: Green's relations, regularity classes, H+ decompositions."""
from .construct import example_L, example_S, left_zero_T, matrix_ring, two_semilattice_L
from .core import FiniteSeminearring, classify, make_seminearring
from .decompose import h_plus_decomposition
from .tables import OpTable, make_table
from .theorems import verify_all

__all__ = [
    "FiniteSeminearring",
    "OpTable",
    "classify",
    "example_L",
    "example_S",
    "h_plus_decomposition",
    "left_zero_T",
    "make_seminearring",
    "make_table",
    "matrix_ring",
    "two_semilattice_L",
    "verify_all",
]
