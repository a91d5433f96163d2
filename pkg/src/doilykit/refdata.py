"""Canonical reference data, hardcoded.

Everything the pipeline verifies is recomputed from scratch; the constants
below pin down the labeling convention and the expected values the
computation is checked against: the 16-matrix labeling, the two coordinate
ideals, the layout of the nine nonunimodular free cyclic submodules, and
the duad-vector dictionary for the doily points.
"""

from __future__ import annotations

# Labels 0-15, each matrix as three row tuples.  Label 0 is the zero matrix
# and label 1 the identity; the remaining labels follow the canonical list.
CANONICAL_MATRICES: tuple[tuple[tuple[int, int, int], ...], ...] = (
    ((0, 0, 0), (0, 0, 0), (0, 0, 0)),  # 0
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),  # 1
    ((1, 1, 0), (0, 1, 0), (0, 0, 1)),  # 2
    ((0, 1, 0), (0, 0, 0), (0, 0, 0)),  # 3
    ((1, 1, 1), (0, 1, 0), (0, 0, 1)),  # 4
    ((0, 1, 1), (0, 0, 0), (0, 0, 0)),  # 5
    ((0, 0, 1), (0, 0, 0), (0, 0, 0)),  # 6
    ((1, 0, 1), (0, 1, 0), (0, 0, 1)),  # 7
    ((0, 0, 0), (0, 1, 0), (0, 0, 1)),  # 8
    ((1, 0, 0), (0, 0, 0), (0, 0, 0)),  # 9
    ((1, 1, 0), (0, 0, 0), (0, 0, 0)),  # 10
    ((0, 1, 0), (0, 1, 0), (0, 0, 1)),  # 11
    ((1, 1, 1), (0, 0, 0), (0, 0, 0)),  # 12
    ((0, 1, 1), (0, 1, 0), (0, 0, 1)),  # 13
    ((0, 0, 1), (0, 1, 0), (0, 0, 1)),  # 14
    ((1, 0, 1), (0, 0, 0), (0, 0, 0)),  # 15
)

# The four invertible elements and the Jacobson radical.
REFERENCE_UNITS = frozenset({1, 2, 4, 7})
REFERENCE_RADICAL = frozenset({0, 3, 5, 6})

# The two maximal two-sided ideals.  Coordinates of the nine left-module
# nonunimodular submodules lie in the first, right-module ones in the second.
LEFT_COORDINATE_IDEAL = frozenset({0, 3, 5, 6, 8, 11, 13, 14})
RIGHT_COORDINATE_IDEAL = frozenset({0, 3, 5, 6, 9, 10, 12, 15})

# Column headers of the reference table: the generators of the nine
# nonunimodular free cyclic submodules of the free left module.
REFERENCE_GENERATORS: tuple[tuple[int, int], ...] = (
    (3, 8), (5, 8), (6, 8), (8, 11), (8, 13), (8, 14), (8, 6), (8, 5), (8, 3),
)

# Row alpha, column j: the vector alpha * REFERENCE_GENERATORS[j].
# The alpha = 11 cells in the R(8,11) and R(8,3) columns are (11,11) and
# (11,0); both values are forced by the alpha-action arithmetic.
REFERENCE_SUBMODULE_TABLE: tuple[tuple[tuple[int, int], ...], ...] = (
    ((0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)),
    ((3, 8), (5, 8), (6, 8), (8, 11), (8, 13), (8, 14), (8, 6), (8, 5), (8, 3)),
    ((3, 11), (5, 11), (6, 11), (11, 8), (11, 14), (11, 13), (11, 6), (11, 5), (11, 3)),
    ((0, 3), (0, 3), (0, 3), (3, 3), (3, 3), (3, 3), (3, 0), (3, 0), (3, 0)),
    ((3, 13), (5, 13), (6, 13), (13, 14), (13, 8), (13, 11), (13, 6), (13, 5), (13, 3)),
    ((0, 5), (0, 5), (0, 5), (5, 5), (5, 5), (5, 5), (5, 0), (5, 0), (5, 0)),
    ((0, 6), (0, 6), (0, 6), (6, 6), (6, 6), (6, 6), (6, 0), (6, 0), (6, 0)),
    ((3, 14), (5, 14), (6, 14), (14, 13), (14, 11), (14, 8), (14, 6), (14, 5), (14, 3)),
    ((0, 8), (0, 8), (0, 8), (8, 8), (8, 8), (8, 8), (8, 0), (8, 0), (8, 0)),
    ((3, 0), (5, 0), (6, 0), (0, 3), (0, 5), (0, 6), (0, 6), (0, 5), (0, 3)),
    ((3, 3), (5, 3), (6, 3), (3, 0), (3, 6), (3, 5), (3, 6), (3, 5), (3, 3)),
    ((0, 11), (0, 11), (0, 11), (11, 11), (11, 11), (11, 11), (11, 0), (11, 0), (11, 0)),
    ((3, 5), (5, 5), (6, 5), (5, 6), (5, 0), (5, 3), (5, 6), (5, 5), (5, 3)),
    ((0, 13), (0, 13), (0, 13), (13, 13), (13, 13), (13, 13), (13, 0), (13, 0), (13, 0)),
    ((0, 14), (0, 14), (0, 14), (14, 14), (14, 14), (14, 14), (14, 0), (14, 0), (14, 0)),
    ((3, 6), (5, 6), (6, 6), (6, 5), (6, 3), (6, 0), (6, 6), (6, 5), (6, 3)),
)

# Duad {i,j} of {1..6} mapped to a nonzero vector with both coordinates in
# the Jacobson radical {0,3,5,6}; a bijection onto the 15 such vectors.
DUAD_VECTOR_PAIRS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((1, 2), (3, 3)),
    ((1, 3), (5, 3)),
    ((1, 4), (0, 6)),
    ((1, 5), (3, 6)),
    ((1, 6), (5, 0)),
    ((2, 3), (6, 0)),
    ((2, 4), (3, 5)),
    ((2, 5), (0, 5)),
    ((2, 6), (6, 3)),
    ((3, 4), (5, 5)),
    ((3, 5), (6, 5)),
    ((3, 6), (0, 3)),
    ((4, 5), (3, 0)),
    ((4, 6), (5, 6)),
    ((5, 6), (6, 6)),
)
