"""Workbench for prime ideal sum graphs of finite non-local commutative rings.

Rings are modelled as products of local rings, each given by its ideal
join-semilattice.  The package builds the prime ideal sum graph, recognises
the classical graph classes, computes exact genus and crosscap by rotation
system search with certificates, classifies rings by shape, and verifies
the classification empirically over enumerated families.
"""

from .classifier import PredictedProfile, classify
from .errors import (
    BadIndex,
    BadParameter,
    BudgetExhausted,
    CorruptLedger,
    Disconnected,
    EmptyProduct,
    LocalRing,
    MalformedRotation,
    NotASemilattice,
    NotLocal,
    OutOfRange,
    PisError,
    ShapeMismatch,
)
from .harness import FamilyConfig, VerificationReport, enumerate_family, verify
from .patterns import (
    PatternWitness,
    find_induced,
    find_subdivision,
    is_cactus,
    is_cograph,
    is_split,
    is_threshold,
    is_unicyclic,
    verify_witness,
)
from .pis_graph import (
    LabeledGraph,
    build_pis,
    complete_bipartite,
    complete_graph,
    export_dot,
    graph_from_edges,
    graph_stats,
    parse_edge_list,
)
from .ring_model import (
    FactorShape,
    IdealLattice,
    RingShape,
    RingSpec,
    canonical_key,
    enumerate_vertices,
    ideal_join,
    is_prime_ideal,
    load_ring,
    make_builtin,
    product_ring,
    ring_from_config,
    shape_summary,
    validate_lattice,
)
from .surface import (
    SurfaceCertificate,
    crosscap_exact,
    crosscap_of,
    euler_lower_bounds,
    formula_crosscap_bipartite,
    formula_crosscap_complete,
    formula_genus_bipartite,
    formula_genus_complete,
    genus_exact,
    genus_of,
    trace_faces,
    trace_faces_signed,
    verify_certificate,
)

__version__ = "0.1.0"
