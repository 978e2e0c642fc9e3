"""Quantum counting circuits for the Jaccard similarity of binary vectors."""

from .circuits import (
    BitVector,
    JaccardResult,
    build_controlled_increment,
    build_intersection_circuit,
    build_state_prep,
    build_union_circuit,
    counter_value,
    counter_width,
    run_counter,
    run_jaccard,
)
from .oracle import ClassicalJaccard, jaccard_classical, popcount_and, popcount_or, popcount_xor
from .qasm import CircuitStats, UnsupportedExportError, circuit_stats, to_qasm
from .qcore import (
    BackendCapacityError,
    BasisState,
    GateOp,
    InvalidGateError,
    MeasurementResult,
    QuantumCircuit,
    RegisterLayout,
    StateVector,
    apply_gate,
    apply_gate_basis,
    measure_register,
    run,
)

__version__ = "0.1.0"
