"""Hot kernels for the simulators.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy one with
the same signature and in-place semantics. The numba path is used when numba
imports cleanly, unless ``QJACCARD_DISABLE_NUMBA`` is set to a truthy value.
"""

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an optional speedup
    njit = None

_FALSY = ("", "0", "false", "no", "off")
NUMBA_AVAILABLE = njit is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("QJACCARD_DISABLE_NUMBA", "").strip().lower() in _FALSY


def mcx_inplace_numpy(amps, ctrl_mask, target):
    """Swap amplitude pairs across ``target`` wherever every bit of ``ctrl_mask`` is set."""
    n = amps.shape[0].bit_length() - 1
    view = amps.reshape((2,) * n)
    # C order: qubit q lives on axis n - 1 - q.
    idx = [slice(None)] * n
    q = 0
    mask = int(ctrl_mask)
    while mask:
        if mask & 1:
            idx[n - 1 - q] = 1
        mask >>= 1
        q += 1
    idx0 = list(idx)
    idx1 = list(idx)
    idx0[n - 1 - target] = 0
    idx1[n - 1 - target] = 1
    idx0, idx1 = tuple(idx0), tuple(idx1)
    tmp = view[idx0].copy()
    view[idx0] = view[idx1]
    view[idx1] = tmp
    return amps


def permute_basis_numpy(states, ctrl_masks, flip_masks):
    """Push a batch of basis states (uint64 bitmasks) through a gate list in place."""
    for cm, fm in zip(ctrl_masks, flip_masks):
        hit = (states & cm) == cm
        states ^= np.where(hit, fm, np.uint64(0))
    return states


if NUMBA_AVAILABLE:

    @njit(cache=True, nogil=True)
    def mcx_inplace_numba(amps, ctrl_mask, target):
        tbit = 1 << target
        low = tbit - 1
        half = amps.shape[0] >> 1
        for g in range(half):
            i = ((g >> target) << (target + 1)) | (g & low)
            if (i & ctrl_mask) == ctrl_mask:
                j = i | tbit
                tmp = amps[i]
                amps[i] = amps[j]
                amps[j] = tmp
        return amps

    @njit(cache=True, nogil=True)
    def permute_basis_numba(states, ctrl_masks, flip_masks):
        n_gates = ctrl_masks.shape[0]
        for s in range(states.shape[0]):
            b = states[s]
            for g in range(n_gates):
                cm = ctrl_masks[g]
                if (b & cm) == cm:
                    b ^= flip_masks[g]
            states[s] = b
        return states

else:  # pragma: no cover
    mcx_inplace_numba = None
    permute_basis_numba = None


if USE_NUMBA:
    mcx_inplace = mcx_inplace_numba
    permute_basis = permute_basis_numba
else:
    mcx_inplace = mcx_inplace_numpy
    permute_basis = permute_basis_numpy


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
