"""Classical-to-quantum data embeddings.

Angle embedding writes feature i into a rotation of qubit i (N features need
at least N qubits, surplus qubits stay |0>). Amplitude embedding writes an
L2-normalized feature vector directly into the amplitudes (n qubits hold up
to 2**n features, shorter vectors are zero-padded).

Feature values are consumed as raw radians; upstream normalization keeps
flow features in [0, 1] so no angle wrap-around occurs.
"""

from __future__ import annotations

import numpy as np

from ..errors import ArgumentError, NormalizationError, WidthError
from .statevector import Statevector, rotate_batch, zero_states


def _as_batch(features) -> np.ndarray:
    feats = np.asarray(features, dtype=np.float64)
    if feats.ndim == 1:
        feats = feats[None, :]
    if feats.ndim != 2:
        raise ArgumentError(f"features must be 1-D or 2-D, got shape {feats.shape}")
    if not np.all(np.isfinite(feats)):
        raise ArgumentError("features must be finite")
    return feats


def angle_embed_batch(features, axis: str, n_qubits: int) -> np.ndarray:
    """Embed a (batch, n_features) block; returns states (batch, 2**n_qubits)."""
    feats = _as_batch(features)
    batch, width = feats.shape
    if width > n_qubits:
        raise WidthError(f"{width} features do not fit on {n_qubits} qubits")
    states = zero_states(batch, n_qubits)
    for i in range(width):
        states = rotate_batch(states, n_qubits, i, axis, feats[:, i])
    return states


def amplitude_embed_batch(features, n_qubits: int) -> np.ndarray:
    """Embed a (batch, n_features) block as normalized amplitudes."""
    feats = _as_batch(features)
    batch, width = feats.shape
    dim = 1 << n_qubits
    if not 1 <= width <= dim:
        raise WidthError(f"{width} features do not fit in {dim} amplitudes")
    norms = np.linalg.norm(feats, axis=1)
    if np.any(norms == 0.0):
        raise NormalizationError("all-zero feature vector cannot be amplitude-embedded")
    states = np.zeros((batch, dim), dtype=np.complex128)
    states[:, :width] = feats / norms[:, None]
    return states


def angle_embed(features, axis: str, n_qubits: int) -> Statevector:
    """Single-sample angle embedding."""
    states = angle_embed_batch(np.atleast_1d(np.asarray(features, dtype=np.float64)), axis, n_qubits)
    return Statevector(n_qubits, states[0])


def amplitude_embed(features, n_qubits: int) -> Statevector:
    """Single-sample amplitude embedding."""
    states = amplitude_embed_batch(np.atleast_1d(np.asarray(features, dtype=np.float64)), n_qubits)
    return Statevector(n_qubits, states[0])
