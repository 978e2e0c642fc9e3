"""OpenQASM 2.0 export and gate accounting."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .qcore import QuantumCircuit

MAX_QASM_CONTROLS = 4
_GATE_NAMES = {0: "x", 1: "cx", 2: "ccx", 3: "c3x", 4: "c4x"}


class UnsupportedExportError(ValueError):
    """The circuit holds a gate qelib1.inc cannot express."""


@dataclass
class CircuitStats:
    x_gates: int = 0
    cx_gates: int = 0
    mcx_gates: dict[int, int] = field(default_factory=dict)  # control count -> gates
    width: int = 0

    @property
    def total_gates(self) -> int:
        return self.x_gates + self.cx_gates + sum(self.mcx_gates.values())

    @property
    def multi_controlled(self) -> int:
        return sum(self.mcx_gates.values())

    def as_dict(self) -> dict:
        return {
            "x_gates": self.x_gates,
            "cx_gates": self.cx_gates,
            "mcx_gates": {str(k): v for k, v in sorted(self.mcx_gates.items())},
            "total_gates": self.total_gates,
            "width": self.width,
        }


def circuit_stats(circuit: QuantumCircuit) -> CircuitStats:
    by_controls = Counter(len(g.controls) for g in circuit.gates)
    return CircuitStats(
        x_gates=by_controls.pop(0, 0),
        cx_gates=by_controls.pop(1, 0),
        mcx_gates=dict(sorted(by_controls.items())),
        width=circuit.width,
    )


def _qubit_names(circuit: QuantumCircuit) -> dict[int, str]:
    names = {}
    for reg, qubits in circuit.layout.registers.items():
        for k, q in enumerate(qubits):
            names[q] = f"{reg}[{k}]"
    return names


def to_qasm(circuit: QuantumCircuit) -> str:
    """Render ``circuit`` as OpenQASM 2.0 using only x, cx, ccx, c3x and c4x."""
    names = _qubit_names(circuit)
    layout = circuit.layout
    m = len(layout.qubits(circuit.measured_register))
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";']
    for reg, qubits in layout.registers.items():
        lines.append(f"qreg {reg}[{len(qubits)}];")
    lines.append(f"creg out[{m}];")
    for pos, g in enumerate(circuit.gates):
        if len(g.controls) > MAX_QASM_CONTROLS:
            raise UnsupportedExportError(
                f"gate #{pos} {g} has {len(g.controls)} controls; qelib1.inc stops at "
                f"{MAX_QASM_CONTROLS} (c4x). Simulate it with the dense or basis backend instead."
            )
        operands = ",".join(names[q] for q in (*g.controls, g.target))
        lines.append(f"{_GATE_NAMES[len(g.controls)]} {operands};")
    reg = circuit.measured_register
    for j in range(m):
        lines.append(f"measure {reg}[{j}] -> out[{j}];")
    return "\n".join(lines) + "\n"


_GATE_LINE = re.compile(r"^(x|cx|ccx|c3x|c4x) ([a-z]\[\d+\])(,[a-z]\[\d+\])*;$")
_QREG = re.compile(r"^qreg ([a-z]+)\[(\d+)\];$")
_CREG = re.compile(r"^creg ([a-z]+)\[(\d+)\];$")
_MEASURE = re.compile(r"^measure [a-z]+\[\d+\] -> [a-z]+\[\d+\];$")


def check_qasm_structure(text: str) -> dict:
    """Line-level structural read of exported text: register sizes and gate/measure counts.

    Not a QASM parser; it only accepts the subset ``to_qasm`` writes.
    """
    lines = text.split("\n")
    if lines[-1] != "":
        raise ValueError("text is not newline-terminated")
    lines = lines[:-1]
    if lines[:2] != ['OPENQASM 2.0;', 'include "qelib1.inc";']:
        raise ValueError("missing OPENQASM 2.0 header")
    out = {"qregs": {}, "cregs": {}, "gates": Counter(), "measures": 0}
    for n, line in enumerate(lines[2:], start=3):
        if line != line.rstrip():
            raise ValueError(f"line {n}: trailing whitespace")
        if mq := _QREG.match(line):
            out["qregs"][mq[1]] = int(mq[2])
        elif mc := _CREG.match(line):
            out["cregs"][mc[1]] = int(mc[2])
        elif mg := _GATE_LINE.match(line):
            out["gates"][mg[1]] += 1
        elif _MEASURE.match(line):
            out["measures"] += 1
        else:
            raise ValueError(f"line {n}: unrecognised {line!r}")
    out["gate_lines"] = sum(out["gates"].values())
    return out
