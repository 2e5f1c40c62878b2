"""Dense statevector simulation of small qubit registers.

Basis convention: bit i of a basis index encodes qubit i, with qubit 0 the
least significant bit. All amplitudes are complex128. The public API works
on single :class:`Statevector` values; the ``*_batch`` kernels evolve a
whole batch of states at once (shape ``(batch, 2**n_qubits)``) and accept a
per-sample angle vector, which is what the hybrid layers use.

Simulation is exact: no sampling, no noise, no density matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import ArgumentError, CapacityError, QubitIndexError

# Dense simulation memory guard: 2**20 complex amplitudes per state.
MAX_QUBITS = 20

AXES = ("X", "Y", "Z")


@dataclass
class Statevector:
    """Complex amplitude vector of a q-qubit register."""

    n_qubits: int
    amplitudes: np.ndarray  # complex128, length 2**n_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def new_statevector(n_qubits: int) -> Statevector:
    """Fresh register in |0...0>."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise CapacityError(
            f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}"
        )
    amp = np.zeros(1 << n_qubits, dtype=np.complex128)
    amp[0] = 1.0
    return Statevector(n_qubits, amp)


def zero_states(batch: int, n_qubits: int) -> np.ndarray:
    """Batch of |0...0> states, shape (batch, 2**n_qubits)."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise CapacityError(
            f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}"
        )
    states = np.zeros((batch, 1 << n_qubits), dtype=np.complex128)
    states[:, 0] = 1.0
    return states


def _check_qubit(qubit: int, n_qubits: int) -> None:
    if not 0 <= qubit < n_qubits:
        raise QubitIndexError(f"qubit {qubit} out of range for {n_qubits} qubits")


def _rotation_coeffs(axis: str, theta: np.ndarray):
    """Entries (a, b, c, d) of the single-qubit rotation exp(-i*theta*P/2)."""
    half = theta / 2.0
    c, s = np.cos(half), np.sin(half)
    if axis == "X":
        return c, -1j * s, -1j * s, c
    if axis == "Y":
        return c, -s, s, c
    if axis == "Z":
        return c - 1j * s, 0.0, 0.0, c + 1j * s
    raise ArgumentError(f"rotation axis must be one of {AXES}, got {axis!r}")


def rotate_batch(
    states: np.ndarray, n_qubits: int, qubit: int, axis: str, theta
) -> np.ndarray:
    """Apply R_axis(theta) to one qubit of every state in the batch.

    ``theta`` may be a scalar (same angle everywhere) or a length-batch
    vector (per-sample angles, as used by angle embedding).
    """
    _check_qubit(qubit, n_qubits)
    theta = np.asarray(theta, dtype=np.float64)
    if not np.all(np.isfinite(theta)):
        raise ArgumentError("rotation angle must be finite")
    a, b, c, d = _rotation_coeffs(axis, theta)
    if theta.ndim == 1:
        a, b, c, d = (np.reshape(x, (-1, 1, 1)) for x in np.broadcast_arrays(a, b, c, d))
    lo = 1 << qubit
    hi = 1 << (n_qubits - 1 - qubit)
    v = states.reshape(states.shape[0], hi, 2, lo)
    v0, v1 = v[:, :, 0, :], v[:, :, 1, :]
    out = np.empty_like(v)
    out[:, :, 0, :] = a * v0 + b * v1
    out[:, :, 1, :] = c * v0 + d * v1
    return out.reshape(states.shape)


@lru_cache(maxsize=None)
def _cnot_pairs(n_qubits: int, control: int, target: int):
    """Basis index pairs swapped by CNOT: control bit 1, target bit 0 vs 1."""
    idx = np.arange(1 << n_qubits)
    sel = (((idx >> control) & 1) == 1) & (((idx >> target) & 1) == 0)
    src = idx[sel]
    return src, src | (1 << target)


def cnot_batch(
    states: np.ndarray, n_qubits: int, control: int, target: int
) -> np.ndarray:
    """Apply CNOT(control -> target) to every state in the batch."""
    _check_qubit(control, n_qubits)
    _check_qubit(target, n_qubits)
    if control == target:
        raise ArgumentError("CNOT control and target must differ")
    i0, i1 = _cnot_pairs(n_qubits, control, target)
    out = states.copy()
    out[:, i0] = states[:, i1]
    out[:, i1] = states[:, i0]
    return out


@lru_cache(maxsize=None)
def _z_signs(n_qubits: int, qubit: int) -> np.ndarray:
    """+1/-1 per basis index according to the qubit's bit."""
    return 1.0 - 2.0 * ((np.arange(1 << n_qubits) >> qubit) & 1).astype(np.float64)


def z_expectations_batch(
    states: np.ndarray, n_qubits: int, qubits
) -> np.ndarray:
    """<Z_q> for each requested qubit, shape (batch, len(qubits))."""
    for q in qubits:
        _check_qubit(q, n_qubits)
    probs = np.abs(states) ** 2
    return np.stack([probs @ _z_signs(n_qubits, q) for q in qubits], axis=1)


# Single-state wrappers around the batched kernels.

def apply_rotation(state: Statevector, qubit: int, axis: str, theta: float) -> Statevector:
    """Rotate one qubit by theta radians around the given axis."""
    amps = rotate_batch(state.amplitudes[None, :], state.n_qubits, qubit, axis, float(theta))
    return Statevector(state.n_qubits, amps[0])


def apply_cnot(state: Statevector, control: int, target: int) -> Statevector:
    """Flip the target qubit on every basis state whose control bit is 1."""
    amps = cnot_batch(state.amplitudes[None, :], state.n_qubits, control, target)
    return Statevector(state.n_qubits, amps[0])


def expval_z(state: Statevector, qubit: int) -> float:
    """Pauli-Z expectation of one qubit; always in [-1, 1]."""
    return float(
        z_expectations_batch(state.amplitudes[None, :], state.n_qubits, (qubit,))[0, 0]
    )
