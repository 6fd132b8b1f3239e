"""Matching-theory toolkit for minimal k-factor-critical claw-free graphs."""

from .criticality import (
    CriticalityVerdict,
    MinimalityVerdict,
    is_brick,
    is_k_factor_critical,
    is_minimal_brick,
    is_minimal_k_factor_critical,
)
from .graph import (
    ComponentPartition,
    Edge,
    Graph,
    components,
    delete_edge,
    delete_vertices,
    edge_connectivity,
    find_claw,
    vertex_connectivity,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .harness import StreamConfig, VerificationReport, degree_partition, enumerate_labeled_graphs, verify_stream
from .kernels import BACKEND
from .matching import (
    Matching,
    TutteCertificate,
    brute_force_maximum_matching,
    has_perfect_matching,
    maximum_matching,
    tutte_certificate,
)
from .structure import (
    EdgeClassification,
    EdgeType,
    PropertyQCut,
    StructuralViolation,
    WitnessSet,
    check_structural_propositions,
    classify_edge,
    derive_property_q_cuts,
    find_witness,
    type1_forest_check,
    verify_property_q,
    verify_witness,
)

__version__ = "0.1.0"
