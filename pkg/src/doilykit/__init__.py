"""doilykit: an order-16 matrix ring, its cyclic submodules, and the doily.

The package reconstructs a specific 16-element ring of upper-triangular
3x3 matrices over GF(2), classifies the cyclic submodules of its rank-2
free modules, and verifies that the nine nonunimodular free submodules
embed into the generalized quadrangle GQ(2,2) through their Jacobson
traces. Every claim is checked exhaustively; `doilykit verify-all`
emits the machine-readable proof.
"""

from __future__ import annotations

from .correspondence import (
    core_geometry,
    duad_vector_bijection,
    jacobson_trace,
    module_geometry,
    relabel_doily,
    right_module_mirror,
    triple_partition,
)
from .errors import (
    ClosureViolation,
    CoreShapeViolation,
    DoilykitError,
    InvalidBijection,
    MethodDisagreement,
    PartitionViolation,
    RingTooLarge,
    TraceShapeViolation,
    UnimodularNotFree,
    UnknownFormat,
    UnknownTarget,
)
from .exports import export_artifact, render_export
from .incidence import (
    IncidenceStructure,
    build_doily,
    build_grid_gq21,
    check_gq,
    find_isomorphism,
)
from .modules import census, cyclic_submodule, is_unimodular, reference_table_check
from .report import VerificationReport, build_verification_report
from .ring import FiniteRing, canonical_ring, ring_from_matrices, verify_ring_axioms
from .structure import (
    enumerate_ideals,
    jacobson_radical,
    maximal_two_sided_ideals,
    structure_report,
    units,
)

__version__ = "0.1.0"

__all__ = [
    "ClosureViolation",
    "CoreShapeViolation",
    "DoilykitError",
    "FiniteRing",
    "IncidenceStructure",
    "InvalidBijection",
    "MethodDisagreement",
    "PartitionViolation",
    "RingTooLarge",
    "TraceShapeViolation",
    "UnimodularNotFree",
    "UnknownFormat",
    "UnknownTarget",
    "VerificationReport",
    "build_doily",
    "build_grid_gq21",
    "build_verification_report",
    "canonical_ring",
    "census",
    "check_gq",
    "core_geometry",
    "cyclic_submodule",
    "duad_vector_bijection",
    "enumerate_ideals",
    "export_artifact",
    "find_isomorphism",
    "is_unimodular",
    "jacobson_radical",
    "jacobson_trace",
    "maximal_two_sided_ideals",
    "module_geometry",
    "reference_table_check",
    "relabel_doily",
    "render_export",
    "right_module_mirror",
    "ring_from_matrices",
    "structure_report",
    "triple_partition",
    "units",
    "verify_ring_axioms",
]
