"""Intersection and union counting circuits, and Jaccard similarity from their counters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .qcore import (
    DEFAULT_DENSE_CAP,
    CX,
    GateOp,
    QuantumCircuit,
    RegisterLayout,
    X,
    measure_register,
    resolve_backend,
    run,
)


@dataclass(frozen=True)
class BitVector:
    """Binary vector of length ``length``; bit ``i`` of ``bits`` is element ``x_i``.

    Printed and parsed MSB-first: the leftmost character is ``x_{N-1}``.
    """

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("bit vector length must be >= 1")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(f"value {self.bits} does not fit in {self.length} bits")

    @classmethod
    def parse(cls, text: str) -> BitVector:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(len(text), int(text, 2))

    def __str__(self):
        return format(self.bits, f"0{self.length}b")

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def popcount(self) -> int:
        return self.bits.bit_count()


def as_bitvector(v: BitVector | str) -> BitVector:
    return v if isinstance(v, BitVector) else BitVector.parse(v)


def _pair(x, y) -> tuple[BitVector, BitVector]:
    x, y = as_bitvector(x), as_bitvector(y)
    if x.length != y.length:
        raise ValueError(f"vector lengths differ: {x.length} != {y.length}")
    return x, y


def counter_width(n: int) -> int:
    """Qubits needed to hold any count in ``0..n``: floor(log2 n) + 1."""
    if n < 1:
        raise ValueError(f"vector length must be >= 1, got {n}")
    return n.bit_length()


def layout_for(n: int) -> RegisterLayout:
    return RegisterLayout(n, counter_width(n))


def build_state_prep(x: BitVector, y: BitVector, layout: RegisterLayout) -> list[GateOp]:
    x, y = _pair(x, y)
    if x.length != layout.n:
        raise ValueError(f"vectors have length {x.length}, layout expects {layout.n}")
    gates = [X(layout.x(i)) for i in range(x.length) if x[i]]
    gates += [X(layout.y(i)) for i in range(y.length) if y[i]]
    return gates


def build_controlled_increment(extra_controls: Sequence[int], counter: Sequence[int]) -> list[GateOp]:
    """Add 1 (mod 2**m) to ``counter`` when every qubit in ``extra_controls`` is 1.

    Targets run from the most significant counter qubit down; the gate on
    ``c_k`` is additionally controlled by ``c_0..c_{k-1}``, so a bit flips
    exactly when every lower bit is 1.
    """
    overlap = set(extra_controls) & set(counter)
    if overlap:
        raise ValueError(f"controls overlap the counter on qubits {sorted(overlap)}")
    return [CX([*extra_controls, *counter[:k]], counter[k]) for k in range(len(counter) - 1, -1, -1)]


def _intersection_gates(x: BitVector, y: BitVector, layout: RegisterLayout) -> list[GateOp]:
    counter = layout.qubits("c")
    gates = build_state_prep(x, y, layout)
    for i in range(layout.n):
        gates += build_controlled_increment([layout.x(i), layout.y(i)], counter)
    return gates


def build_intersection_circuit(x: BitVector | str, y: BitVector | str) -> QuantumCircuit:
    x, y = _pair(x, y)
    layout = layout_for(x.length)
    return QuantumCircuit(layout, _intersection_gates(x, y, layout), "c")


def xor_layer(layout: RegisterLayout) -> list[GateOp]:
    """CNOTs x_i -> y_i, leaving y_i = x_i XOR y_i."""
    return [CX([layout.x(i)], layout.y(i)) for i in range(layout.n)]


def build_union_circuit(x: BitVector | str, y: BitVector | str) -> QuantumCircuit:
    x, y = _pair(x, y)
    layout = layout_for(x.length)
    counter = layout.qubits("c")
    gates = _intersection_gates(x, y, layout)
    gates += xor_layer(layout)
    for i in range(layout.n):
        gates += build_controlled_increment([layout.y(i)], counter)
    return QuantumCircuit(layout, gates, "c")


@dataclass(frozen=True)
class JaccardResult:
    intersection_count: int
    union_count: int

    @property
    def defined(self) -> bool:
        return self.union_count > 0

    @property
    def value(self) -> Fraction | None:
        """Reduced ``a/b``, or None when the union is empty."""
        if not self.defined:
            return None
        return Fraction(self.intersection_count, self.union_count)

    def __str__(self):
        j = self.value
        shown = "undefined (empty union)" if j is None else f"{j.numerator}/{j.denominator}"
        return f"a={self.intersection_count} b={self.union_count} J={shown}"


def counter_value(circuit: QuantumCircuit, backend: str = "auto", *,
                  dense_cap: int = DEFAULT_DENSE_CAP) -> int:
    """Simulate and decode the measured register, without sampling."""
    state = run(circuit, backend, dense_cap=dense_cap)
    if hasattr(state, "to_basis"):
        state = state.to_basis()
    return circuit.layout.read(state.bits, circuit.measured_register)


def run_counter(circuit: QuantumCircuit, backend: str = "auto", shots: int = 1024, seed: int = 0, *,
                dense_cap: int = DEFAULT_DENSE_CAP):
    state = run(circuit, backend, dense_cap=dense_cap)
    return measure_register(state, circuit.layout, circuit.measured_register, shots, seed)


def run_jaccard(x: BitVector | str, y: BitVector | str, backend: str = "auto", *,
                dense_cap: int = DEFAULT_DENSE_CAP) -> JaccardResult:
    x, y = _pair(x, y)
    backend = resolve_backend(backend, layout_for(x.length).width, dense_cap)
    a = counter_value(build_intersection_circuit(x, y), backend, dense_cap=dense_cap)
    b = counter_value(build_union_circuit(x, y), backend, dense_cap=dense_cap)
    return JaccardResult(a, b)
