import itertools

import pytest


def all_pairs(n):
    """Every (x, y) bitstring pair of length n."""
    words = ["".join(bits) for bits in itertools.product("01", repeat=n)]
    return [(x, y) for x in words for y in words]


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # numba compiles (or loads its cache) on first call; keep that out of timed tests
    from qjaccard import build_intersection_circuit, run

    run(build_intersection_circuit("1", "1"), "dense")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in mod.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({detail})")
