"""Signature-indexed Catalan combinatorics.

Seven object families indexed by a composition (the signature), the
bijections between them, exact counting, parking-function decorations, the
rational specialization, and a service/CLI front end.
"""

from .signatures import (
    Composition,
    Partition,
    WeakComposition,
    concat,
    dominance_diff,
    dominance_leq,
    lambda_of,
    rational_signature,
    refines,
)
from .trees import PlanarTree, enumerate_trees, signature
from .paths import DyckPath, area, area_vector, enumerate_paths, path_word
from .counting import count_determinant, count_recurrence, classical_narayana, narayana_distribution
from .stirling import Multipermutation, enumerate_stirling, s_factorial
from .noncrossing import SetPartition, is_noncrossing
from .polygons import Angulation, Parenthesization
from .parking import ParkingFunction, count_parking, enumerate_parking, is_parking
from .arw import compare_constructions, laser_partition

__version__ = "0.1.0"

__all__ = [
    "Angulation",
    "Composition",
    "DyckPath",
    "Multipermutation",
    "Parenthesization",
    "ParkingFunction",
    "Partition",
    "PlanarTree",
    "SetPartition",
    "WeakComposition",
    "area",
    "area_vector",
    "classical_narayana",
    "compare_constructions",
    "concat",
    "count_determinant",
    "count_parking",
    "count_recurrence",
    "dominance_diff",
    "dominance_leq",
    "enumerate_parking",
    "enumerate_paths",
    "enumerate_stirling",
    "enumerate_trees",
    "is_noncrossing",
    "is_parking",
    "lambda_of",
    "laser_partition",
    "narayana_distribution",
    "path_word",
    "rational_signature",
    "refines",
    "s_factorial",
    "signature",
]
