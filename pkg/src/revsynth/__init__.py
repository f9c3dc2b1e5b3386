"""Reversible circuit synthesis, costing, decomposition, and graph analysis.

The package turns a permutation of {0, ..., 2^n - 1} (a reversible n-line
function) into a gate cascade two different ways, prices cascades under a
quantum-cost model with three garbage policies, expands wide controlled
gates into verified Toffoli-sized networks, and computes exact distance
tables over the Cayley graphs the two gate libraries induce on the
symmetric group.
"""

from .cayley import (
    BfsResult,
    BipartiteReport,
    DistanceHistogram,
    HammingAuditReport,
    bfs,
    bfs_histogram,
    bipartite_check,
    distance,
    hamming_distance_audit,
)
from .cost import (
    CostReport,
    GarbagePolicy,
    circuit_cost,
    cost_report,
    gate_cost,
    max_gate_cost,
    synthesis_gate_bound,
    worst_case_qc,
)
from .decompose import (
    AncillaCircuit,
    AncillaMode,
    VerificationResult,
    expand_circuit,
    expand_one_garbage,
    ladder_borrowed,
    ladder_zeroed,
    split_one_borrowed,
    verify_circuit_equivalence,
    verify_equivalence,
)
from .elementary import (
    QuantumGate,
    build_unitary,
    verify_elementary,
    x_root,
)
from .gates import (
    Circuit,
    Gate,
    GeneratorSet,
    apply_circuit,
    apply_gate,
    enumerate_ch,
    enumerate_ci,
    gate_perm,
    generator_set,
    invert_circuit,
    parse_circuit,
)
from .hypercube import hc_bidirectional, hc_synthesize
from .mmd import mmd_synthesize
from .perm import TruthVector, compose, hamming, identity, inverse, rank, reverse_perm, unrank

__version__ = "0.1.0"

__all__ = [
    "AncillaCircuit",
    "AncillaMode",
    "BfsResult",
    "BipartiteReport",
    "Circuit",
    "CostReport",
    "DistanceHistogram",
    "Gate",
    "GarbagePolicy",
    "GeneratorSet",
    "HammingAuditReport",
    "QuantumGate",
    "TruthVector",
    "VerificationResult",
    "apply_circuit",
    "apply_gate",
    "bfs",
    "bfs_histogram",
    "bipartite_check",
    "build_unitary",
    "circuit_cost",
    "compose",
    "cost_report",
    "distance",
    "enumerate_ch",
    "enumerate_ci",
    "expand_circuit",
    "expand_one_garbage",
    "gate_cost",
    "gate_perm",
    "generator_set",
    "hamming",
    "hamming_distance_audit",
    "hc_bidirectional",
    "hc_synthesize",
    "identity",
    "inverse",
    "invert_circuit",
    "ladder_borrowed",
    "ladder_zeroed",
    "max_gate_cost",
    "mmd_synthesize",
    "parse_circuit",
    "rank",
    "reverse_perm",
    "split_one_borrowed",
    "synthesis_gate_bound",
    "unrank",
    "verify_circuit_equivalence",
    "verify_elementary",
    "verify_equivalence",
    "worst_case_qc",
    "x_root",
]
