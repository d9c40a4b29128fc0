"""Surface embeddings: rotation systems, face tracing, exact genus/crosscap."""

from .blocks import block_vertex_sets, blocks
from .bounds import (
    euler_lower_bounds,
    formula_crosscap_bipartite,
    formula_crosscap_complete,
    formula_genus_bipartite,
    formula_genus_complete,
)
from .certificates import (
    KIND_BLOCKS,
    KIND_EMBEDDING,
    KIND_EULER,
    KIND_SUBDIVISION,
    STATUS_BUDGET,
    STATUS_COMPLETE,
    SurfaceCertificate,
    verify_certificate,
)
from .compose import (
    crosscap_of,
    genus_of,
    is_orientably_simple,
    mu_value,
    subdivision_lower_bound,
)
from .rotations import (
    RotationSystem,
    SignedRotationSystem,
    canonical_rotation,
    crosscap_of_signed,
    genus_of_rotation,
    is_orientable_signature,
    trace_faces,
    trace_faces_signed,
    validate_rotation,
)
from .search import Budget, crosscap_exact, genus_exact, search_embedding_level

__all__ = [
    "Budget",
    "KIND_BLOCKS",
    "KIND_EMBEDDING",
    "KIND_EULER",
    "KIND_SUBDIVISION",
    "RotationSystem",
    "STATUS_BUDGET",
    "STATUS_COMPLETE",
    "SignedRotationSystem",
    "SurfaceCertificate",
    "block_vertex_sets",
    "blocks",
    "canonical_rotation",
    "crosscap_exact",
    "crosscap_of",
    "crosscap_of_signed",
    "euler_lower_bounds",
    "formula_crosscap_bipartite",
    "formula_crosscap_complete",
    "formula_genus_bipartite",
    "formula_genus_complete",
    "genus_exact",
    "genus_of",
    "genus_of_rotation",
    "is_orientable_signature",
    "is_orientably_simple",
    "mu_value",
    "search_embedding_level",
    "subdivision_lower_bound",
    "trace_faces",
    "trace_faces_signed",
    "validate_rotation",
    "verify_certificate",
]
