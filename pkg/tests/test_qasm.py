from pathlib import Path

import pytest

from qjaccard.circuits import build_intersection_circuit, build_union_circuit, layout_for
from qjaccard.qasm import UnsupportedExportError, check_qasm_structure, circuit_stats, to_qasm
from qjaccard.qcore import QuantumCircuit

GOLDEN = Path(__file__).parent / "golden"


def test_empty_circuit_export():
    text = to_qasm(QuantumCircuit(layout_for(1)))
    assert text == (
        'OPENQASM 2.0;\n'
        'include "qelib1.inc";\n'
        'qreg x[1];\n'
        'qreg y[1];\n'
        'qreg c[1];\n'
        'creg out[1];\n'
        'measure c[0] -> out[0];\n'
    )


@pytest.mark.parametrize("name,builder", [
    ("fig1_intersection.qasm", build_intersection_circuit),
    ("fig2_union.qasm", build_union_circuit),
])
def test_golden_files(name, builder):
    expected = (GOLDEN / name).read_bytes()
    assert to_qasm(builder("1010", "1101")).encode() == expected


def test_figure1_gate_lines():
    info = check_qasm_structure(to_qasm(build_intersection_circuit("1010", "1101")))
    assert dict(info["gates"]) == {"x": 5, "c4x": 4, "c3x": 4, "ccx": 4}
    assert info["qregs"] == {"x": 4, "y": 4, "c": 3}
    assert info["cregs"] == {"out": 3}
    assert info["measures"] == 3


def test_stats_figure1():
    s = circuit_stats(build_intersection_circuit("1010", "1101"))
    assert s.x_gates == 5 and s.cx_gates == 0
    assert s.mcx_gates == {2: 4, 3: 4, 4: 4}
    assert s.multi_controlled == 12 and s.width == 11 and s.total_gates == 17


def test_stats_figure2():
    s = circuit_stats(build_union_circuit("1010", "1101"))
    # xor layer (4) + the c_0 step of each union increment (4) are single-control
    assert s.x_gates == 5 and s.cx_gates == 8
    assert s.mcx_gates == {2: 8, 3: 8, 4: 4}
    assert s.total_gates == 33


def test_stats_empty():
    s = circuit_stats(QuantumCircuit(layout_for(3)))
    assert (s.x_gates, s.cx_gates, s.mcx_gates, s.total_gates) == (0, 0, {}, 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_export_succeeds_up_to_seven_bits(n):
    x, y = "1" * n, "0" * (n - 1) + "1"
    for builder in (build_intersection_circuit, build_union_circuit):
        circ = builder(x, y)
        text = to_qasm(circ)
        info = check_qasm_structure(text)
        stats = circuit_stats(circ)
        assert info["gate_lines"] == stats.total_gates
        assert info["qregs"] == {"x": n, "y": n, "c": circ.layout.m}
        assert max(stats.mcx_gates) <= 4
        assert not any(line != line.rstrip() for line in text.splitlines())


@pytest.mark.parametrize("n", [8, 9, 12])
def test_export_fails_beyond_seven_bits(n):
    with pytest.raises(UnsupportedExportError, match="controls"):
        to_qasm(build_intersection_circuit("1" * n, "1" * n))


def test_structure_checker_rejects_garbage():
    with pytest.raises(ValueError):
        check_qasm_structure("OPENQASM 2.0;\n")
    with pytest.raises(ValueError):
        check_qasm_structure('OPENQASM 2.0;\ninclude "qelib1.inc";\nh x[0];\n')
