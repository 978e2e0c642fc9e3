"""Gate-level circuit IR and two simulation backends.

Only X and multi-controlled X gates exist here, so every circuit is a
permutation of computational basis states. The dense backend tracks all
``2**n`` complex amplitudes; the basis backend tracks a single bitmask and is
exact for any width.

Convention: global qubit ``j`` is bit ``j`` of the basis index (qubit 0 is the
least-significant bit).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _accel

DEFAULT_DENSE_CAP = 24


class InvalidGateError(ValueError):
    """A gate references a qubit outside the state or overlaps target and controls."""


class BackendCapacityError(RuntimeError):
    """The dense backend was asked to hold more qubits than its cap."""


@dataclass(frozen=True)
class GateOp:
    """X on ``target``, conditioned on every qubit in ``controls`` being 1.

    No controls is a plain X, one control a CNOT, two or more an MCX.
    Controls are stored sorted so equal gates compare and serialize equally.
    """

    target: int
    controls: tuple[int, ...] = ()

    def __post_init__(self):
        ctrls = tuple(sorted(set(int(c) for c in self.controls)))
        if len(ctrls) != len(self.controls):
            raise InvalidGateError(f"duplicate control qubits in {self.controls}")
        if self.target in ctrls:
            raise InvalidGateError(f"target {self.target} is also a control")
        if self.target < 0 or any(c < 0 for c in ctrls):
            raise InvalidGateError("qubit indices must be non-negative")
        object.__setattr__(self, "controls", ctrls)

    @property
    def kind(self) -> str:
        return "x" if not self.controls else "mcx"

    @property
    def ctrl_mask(self) -> int:
        mask = 0
        for c in self.controls:
            mask |= 1 << c
        return mask

    @property
    def max_qubit(self) -> int:
        return max((self.target, *self.controls))

    def check_width(self, width: int):
        if self.max_qubit >= width:
            raise InvalidGateError(f"{self} addresses qubit {self.max_qubit} but width is {width}")

    def __str__(self):
        if not self.controls:
            return f"X({self.target})"
        return f"CX({list(self.controls)} -> {self.target})"


def X(target: int) -> GateOp:
    return GateOp(target)


def CX(controls: Iterable[int], target: int) -> GateOp:
    return GateOp(target, tuple(controls))


@dataclass(frozen=True)
class RegisterLayout:
    """Placement of the x, y and counter registers on global qubits.

    x occupies qubits ``0..N-1``, y ``N..2N-1`` and the counter ``c``
    ``2N..2N+m-1``, each with its element 0 on the lowest qubit. This is the
    declaration order of the exported QASM.
    """

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"register sizes must be positive, got n={self.n}, m={self.m}")

    @property
    def width(self) -> int:
        return 2 * self.n + self.m

    def x(self, i: int) -> int:
        return self._checked(i, self.n, 0)

    def y(self, i: int) -> int:
        return self._checked(i, self.n, self.n)

    def c(self, j: int) -> int:
        return self._checked(j, self.m, 2 * self.n)

    @staticmethod
    def _checked(i, size, offset):
        if not 0 <= i < size:
            raise IndexError(f"register index {i} out of range [0, {size})")
        return offset + i

    @property
    def registers(self) -> dict[str, tuple[int, ...]]:
        n, m = self.n, self.m
        return {
            "x": tuple(range(n)),
            "y": tuple(range(n, 2 * n)),
            "c": tuple(range(2 * n, 2 * n + m)),
        }

    def qubits(self, register: str) -> tuple[int, ...]:
        try:
            return self.registers[register]
        except KeyError:
            raise ValueError(f"unknown register {register!r}; expected one of x, y, c") from None

    def read(self, bits: int, register: str) -> int:
        """Decode a register's integer value (element 0 = weight 1) from a basis index."""
        value = 0
        for k, q in enumerate(self.qubits(register)):
            value |= ((bits >> q) & 1) << k
        return value


@dataclass(frozen=True)
class QuantumCircuit:
    layout: RegisterLayout
    gates: tuple[GateOp, ...] = ()
    measured_register: str = "c"

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        self.layout.qubits(self.measured_register)
        for g in self.gates:
            g.check_width(self.width)

    @property
    def width(self) -> int:
        return self.layout.width

    def __len__(self):
        return len(self.gates)

    def inverse(self) -> QuantumCircuit:
        # every gate here is self-inverse
        return QuantumCircuit(self.layout, self.gates[::-1], self.measured_register)

    def then(self, gates: Iterable[GateOp]) -> QuantumCircuit:
        return QuantumCircuit(self.layout, self.gates + tuple(gates), self.measured_register)


@dataclass
class StateVector:
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        size = self.amplitudes.shape[0]
        if self.amplitudes.ndim != 1 or size < 2 or size & (size - 1):
            raise ValueError("amplitude vector length must be a power of two >= 2")

    @classmethod
    def zeros(cls, width: int) -> StateVector:
        amps = np.zeros(1 << width, dtype=np.complex128)
        amps[0] = 1.0
        return cls(amps)

    @classmethod
    def from_basis(cls, state: BasisState) -> StateVector:
        amps = np.zeros(1 << state.width, dtype=np.complex128)
        amps[state.bits] = 1.0
        return cls(amps)

    @property
    def width(self) -> int:
        return self.amplitudes.shape[0].bit_length() - 1

    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def to_basis(self, atol: float = 1e-9) -> BasisState:
        """Collapse to the unique basis state holding all the weight; fail if there is none."""
        probs = self.probabilities()
        idx = int(np.argmax(probs))
        if probs[idx] < 1 - atol:
            raise ValueError("state is not a computational basis state")
        return BasisState(self.width, idx)

    def copy(self) -> StateVector:
        return StateVector(self.amplitudes.copy())


@dataclass(frozen=True)
class BasisState:
    width: int
    bits: int = 0

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be positive")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bits {self.bits:#x} do not fit in {self.width} qubits")

    def bit(self, q: int) -> int:
        return (self.bits >> q) & 1


def apply_gate(state: StateVector, gate: GateOp) -> StateVector:
    gate.check_width(state.width)
    out = state.copy()
    _accel.mcx_inplace(out.amplitudes, gate.ctrl_mask, gate.target)
    return out


def apply_gate_basis(state: BasisState, gate: GateOp) -> BasisState:
    gate.check_width(state.width)
    mask = gate.ctrl_mask
    if state.bits & mask == mask:
        return BasisState(state.width, state.bits ^ (1 << gate.target))
    return state


def _dense_cap_check(width: int, cap: int):
    if width > cap:
        raise BackendCapacityError(
            f"dense backend holds at most {cap} qubits, circuit has {width}; use the basis backend"
        )


def run(circuit: QuantumCircuit, backend: str = "dense", *, dense_cap: int = DEFAULT_DENSE_CAP,
        initial: StateVector | BasisState | None = None):
    """Apply the circuit's gates in order to ``|0...0>`` (or ``initial``)."""
    backend = resolve_backend(backend, circuit.width, dense_cap)
    if backend == "dense":
        _dense_cap_check(circuit.width, dense_cap)
        if initial is None:
            state = StateVector.zeros(circuit.width)
        elif isinstance(initial, BasisState):
            state = StateVector.from_basis(initial)
        else:
            state = initial.copy()
        if state.width != circuit.width:
            raise ValueError("initial state width does not match circuit")
        amps = state.amplitudes
        for g in circuit.gates:
            _accel.mcx_inplace(amps, g.ctrl_mask, g.target)
        return state

    if initial is None:
        bits = 0
    elif isinstance(initial, StateVector):
        bits = initial.to_basis().bits
    else:
        bits = initial.bits
    if initial is not None and initial.width != circuit.width:
        raise ValueError("initial state width does not match circuit")
    for g in circuit.gates:
        mask = g.ctrl_mask
        if bits & mask == mask:
            bits ^= 1 << g.target
    return BasisState(circuit.width, bits)


def resolve_backend(backend: str, width: int, dense_cap: int = DEFAULT_DENSE_CAP) -> str:
    if backend == "auto":
        return "dense" if width <= dense_cap else "basis"
    if backend not in ("dense", "basis"):
        raise ValueError(f"unknown backend {backend!r}; expected dense, basis or auto")
    return backend


def permute_basis_batch(gates: Sequence[GateOp], states: np.ndarray) -> np.ndarray:
    """Run many basis states (uint64 bitmasks, width <= 64) through ``gates`` at once."""
    states = np.array(states, dtype=np.uint64, copy=True)
    if any(g.max_qubit >= 64 for g in gates):
        raise InvalidGateError("batch permutation supports at most 64 qubits")
    ctrl = np.array([g.ctrl_mask for g in gates], dtype=np.uint64)
    flip = np.array([1 << g.target for g in gates], dtype=np.uint64)
    return _accel.permute_basis(states, ctrl, flip)


@dataclass
class MeasurementResult:
    """Shot histogram of one register, keyed MSB-first (``c_{m-1}..c_0``)."""

    register: str
    histogram: dict[str, int]
    shots: int
    seed: int
    samples: np.ndarray = field(repr=False)

    @property
    def bitstring(self) -> str:
        # modal outcome; ties go to the smaller bitstring
        return min(self.histogram, key=lambda k: (-self.histogram[k], k))

    @property
    def value(self) -> int:
        return int(self.bitstring, 2)


def register_distribution(state: StateVector | BasisState, qubits: Sequence[int]) -> np.ndarray:
    """Marginal probability of every register value (element 0 = weight 1)."""
    dist = np.zeros(1 << len(qubits))
    if isinstance(state, BasisState):
        value = sum(state.bit(q) << k for k, q in enumerate(qubits))
        dist[value] = 1.0
        return dist
    idx = np.arange(state.amplitudes.shape[0], dtype=np.int64)
    values = np.zeros_like(idx)
    for k, q in enumerate(qubits):
        values |= ((idx >> q) & 1) << k
    return np.bincount(values, weights=state.probabilities(), minlength=dist.shape[0])


def measure_register(state: StateVector | BasisState, layout: RegisterLayout, register: str = "c",
                     shots: int = 1024, seed: int = 0) -> MeasurementResult:
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    qubits = layout.qubits(register)
    if max(qubits) >= state.width:
        raise ValueError(f"register {register!r} does not fit in a {state.width}-qubit state")
    dist = register_distribution(state, qubits)
    dist = dist / dist.sum()
    rng = np.random.default_rng(seed)
    samples = rng.choice(dist.shape[0], size=shots, p=dist)
    values, counts = np.unique(samples, return_counts=True)
    width = len(qubits)
    histogram = {format(int(v), f"0{width}b"): int(c) for v, c in zip(values, counts)}
    return MeasurementResult(register, dict(sorted(histogram.items())), shots, seed, samples)
