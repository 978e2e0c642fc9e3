"""Compare the numba and pure-numpy kernels.

    python benchmarks/bench_kernels.py [--qubits 20 22] [--repeat 5]

Dense: one 3-control MCX over a full statevector. Batch: every 16-bit input
pair pushed through an N=8 intersection circuit's gate list at once.
"""

import argparse
import time

import numpy as np

from qjaccard import _accel
from qjaccard.circuits import build_intersection_circuit


def best_of(fn, repeat):
    fn()  # warm-up / JIT
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_dense(n, repeat):
    rng = np.random.default_rng(0)
    amps = (rng.normal(size=1 << n) + 0j).astype(np.complex128)
    mask, target = (1 << 1) | (1 << (n // 2)) | (1 << (n - 1)), 3
    rows = []
    for name, kernel in (("numpy", _accel.mcx_inplace_numpy), ("numba", _accel.mcx_inplace_numba)):
        if kernel is None:
            continue
        rows.append((f"dense mcx, {n} qubits", name, best_of(lambda k=kernel: k(amps, mask, target), repeat)))
    return rows


def bench_batch(repeat):
    n = 8
    circ = build_intersection_circuit("0" * n, "0" * n)
    ctrl = np.array([g.ctrl_mask for g in circ.gates], dtype=np.uint64)
    flip = np.array([1 << g.target for g in circ.gates], dtype=np.uint64)
    # x on qubits 0..7, y on 8..15: every input pair, counter cleared
    states = np.arange(1 << (2 * n), dtype=np.uint64)
    rows = []
    for name, kernel in (("numpy", _accel.permute_basis_numpy), ("numba", _accel.permute_basis_numba)):
        if kernel is None:
            continue
        t = best_of(lambda k=kernel: k(states.copy(), ctrl, flip), repeat)
        rows.append((f"basis batch, {states.size} states x {len(ctrl)} gates", name, t))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qubits", type=int, nargs="+", default=[16, 20, 22])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rows = []
    for n in args.qubits:
        rows += bench_dense(n, args.repeat)
    rows += bench_batch(args.repeat)
    print(f"active kernels: {_accel.backend_name()}")
    w = max(len(r[0]) for r in rows)
    for case, name, t in rows:
        print(f"{case:<{w}}  {name:>5}  {t * 1e3:9.3f} ms")


if __name__ == "__main__":
    main()
