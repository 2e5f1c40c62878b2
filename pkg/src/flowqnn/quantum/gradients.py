"""Analytic gradients for circuit expectation values.

Weights and angle-embedded inputs each enter exactly one rotation gate
exp(-i*theta*P/2), so the two-point shift rule is exact:

    d<Z>/d theta = [f(theta + pi/2) - f(theta - pi/2)] / 2

Amplitude-embedded inputs do not sit in a rotation; their gradient is the
analytic Jacobian of pad-then-normalize chained with d<Z>/d psi0, computed
by one forward and one adjoint circuit application per measured qubit.
"""

from __future__ import annotations

import numpy as np

from ..errors import ArgumentError, UsageError
from .circuits import (
    AMPLITUDE,
    ANGLE,
    QuantumLayerSpec,
    apply_pqc_adjoint_batch,
    apply_pqc_batch,
    check_weights,
    embed_batch,
    expectations_from_states,
    run_circuit,
)
from .statevector import _z_signs

SHIFT = np.pi / 2.0


def parameter_shift_grad(features, spec: QuantumLayerSpec, weights, weight_index) -> np.ndarray:
    """d(measured expectations)/d weights[weight_index] for one sample."""
    if not spec.trainable:
        raise UsageError("parameter-shift gradient requested for a non-trainable layer")
    weights = check_weights(spec, weights)
    layer, qubit = weight_index
    if not (0 <= layer < spec.n_pqc_layers and 0 <= qubit < spec.n_qubits):
        raise ArgumentError(f"weight index {weight_index} out of range")
    plus = weights.copy()
    minus = weights.copy()
    plus[layer, qubit] += SHIFT
    minus[layer, qubit] -= SHIFT
    return (run_circuit(features, spec, plus) - run_circuit(features, spec, minus)) / 2.0


def weight_gradients_batch(features, spec: QuantumLayerSpec, weights) -> np.ndarray:
    """Shift-rule Jacobian over all weights, shape (layers, qubits, batch, outputs)."""
    weights = check_weights(spec, weights)
    states0 = embed_batch(features, spec)
    out = np.empty(spec.weight_shape + (states0.shape[0], spec.n_outputs))
    for layer in range(spec.n_pqc_layers):
        for qubit in range(spec.n_qubits):
            plus = weights.copy()
            minus = weights.copy()
            plus[layer, qubit] += SHIFT
            minus[layer, qubit] -= SHIFT
            f_plus = expectations_from_states(states0, spec, plus)
            f_minus = expectations_from_states(states0, spec, minus)
            out[layer, qubit] = (f_plus - f_minus) / 2.0
    return out


def angle_input_gradients_batch(features, spec: QuantumLayerSpec, weights) -> np.ndarray:
    """Shift-rule Jacobian over angle-embedded inputs, shape (batch, features, outputs)."""
    if spec.embedding != ANGLE:
        raise UsageError("angle input gradients require an angle-embedding spec")
    weights = check_weights(spec, weights)
    feats = np.asarray(features, dtype=np.float64)
    batch, width = feats.shape
    out = np.empty((batch, width, spec.n_outputs))
    for j in range(width):
        plus = feats.copy()
        minus = feats.copy()
        plus[:, j] += SHIFT
        minus[:, j] -= SHIFT
        f_plus = expectations_from_states(embed_batch(plus, spec), spec, weights)
        f_minus = expectations_from_states(embed_batch(minus, spec), spec, weights)
        out[:, j, :] = (f_plus - f_minus) / 2.0
    return out


def amplitude_input_gradients_batch(
    features, spec: QuantumLayerSpec, weights, cotangent: np.ndarray
) -> np.ndarray:
    """Input gradient for amplitude embedding, contracted with a cotangent.

    For psi = z/|z| (z the zero-padded features, real) and f_k = <psi|M_k|psi>
    with M_k = U^dag Z_k U: df_k/dpsi = 2 Re(M_k psi) and
    df_k/dz = (2 Re(M_k psi) - 2 f_k psi) / |z|. Returns sum_k cot_k * df_k/dz
    restricted to the real feature columns, shape (batch, n_features).
    """
    if spec.embedding != AMPLITUDE:
        raise UsageError("amplitude input gradients require an amplitude-embedding spec")
    weights = check_weights(spec, weights)
    feats = np.asarray(features, dtype=np.float64)
    batch, width = feats.shape
    dim = 1 << spec.n_qubits
    norms = np.linalg.norm(feats, axis=1)
    psi = np.zeros((batch, dim))
    psi[:, :width] = feats / norms[:, None]
    evolved = apply_pqc_batch(psi.astype(np.complex128), spec, weights)
    probs = np.abs(evolved) ** 2
    dz = np.zeros((batch, dim))
    for k, qubit in enumerate(spec.measured_qubits):
        signs = _z_signs(spec.n_qubits, qubit)
        f_k = probs @ signs
        m_psi = apply_pqc_adjoint_batch(evolved * signs, spec, weights)
        df_dz = (2.0 * m_psi.real - 2.0 * f_k[:, None] * psi) / norms[:, None]
        dz += cotangent[:, k][:, None] * df_dz
    return dz[:, :width]
