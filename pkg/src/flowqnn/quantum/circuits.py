"""Parameterized quantum circuits: per-qubit rotations plus a closed CNOT ring.

A circuit is described by :class:`QuantumLayerSpec` and a weight matrix of
shape ``(n_pqc_layers, n_qubits)`` in radians. Each PQC layer applies one
rotation per qubit followed by the entangler ring CNOT(i -> (i+1) mod n).

Ring conventions fixed here so oracles and gradients agree:
  - n_qubits == 1: no entangler (CNOT needs two distinct qubits);
  - n_qubits == 2: both CNOT(0 -> 1) and CNOT(1 -> 0) are applied.

Readout measures <Z> on every qubit not in the disregard set, in ascending
qubit order. Disregarded qubits shrink the output width without changing
the evolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ArgumentError, ShapeError
from .embeddings import amplitude_embed_batch, angle_embed_batch
from .statevector import (
    AXES,
    MAX_QUBITS,
    Statevector,
    cnot_batch,
    rotate_batch,
    z_expectations_batch,
)

ANGLE = "angle"
AMPLITUDE = "amplitude"


@dataclass(frozen=True)
class QuantumLayerSpec:
    """Circuit blueprint: register size, embedding, PQC shape, readout."""

    n_qubits: int
    n_pqc_layers: int = 1
    rotation_axes: tuple[str, ...] = ()
    embedding: str = ANGLE
    embedding_axis: str = "Y"
    disregard: frozenset[int] = field(default_factory=frozenset)
    trainable: bool = True

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ArgumentError(f"n_qubits must be in [1, {MAX_QUBITS}]")
        if self.n_pqc_layers < 1:
            raise ArgumentError("n_pqc_layers must be >= 1")
        axes = self.rotation_axes or ("Y",) * self.n_pqc_layers
        if len(axes) != self.n_pqc_layers or any(a not in AXES for a in axes):
            raise ArgumentError(f"need one axis from {AXES} per PQC layer")
        object.__setattr__(self, "rotation_axes", tuple(axes))
        object.__setattr__(self, "disregard", frozenset(self.disregard))
        if self.embedding not in (ANGLE, AMPLITUDE):
            raise ArgumentError(f"unknown embedding {self.embedding!r}")
        if self.embedding_axis not in AXES:
            raise ArgumentError(f"embedding axis must be one of {AXES}")
        bad = [q for q in self.disregard if not 0 <= q < self.n_qubits]
        if bad:
            raise ArgumentError(f"disregarded qubits out of range: {bad}")
        if len(self.disregard) >= self.n_qubits:
            raise ArgumentError("at least one qubit must be measured")

    @property
    def measured_qubits(self) -> tuple[int, ...]:
        return tuple(q for q in range(self.n_qubits) if q not in self.disregard)

    @property
    def n_outputs(self) -> int:
        return self.n_qubits - len(self.disregard)

    @property
    def max_features(self) -> int:
        return self.n_qubits if self.embedding == ANGLE else 1 << self.n_qubits

    @property
    def weight_shape(self) -> tuple[int, int]:
        return (self.n_pqc_layers, self.n_qubits)


def init_weights(spec: QuantumLayerSpec, rng: np.random.Generator) -> np.ndarray:
    """Uniform weights in [0, 2*pi): covers the full rotation period."""
    return rng.uniform(0.0, 2.0 * np.pi, size=spec.weight_shape)


def check_weights(spec: QuantumLayerSpec, weights) -> np.ndarray:
    weights = np.asarray(weights, dtype=np.float64)
    if weights.shape != spec.weight_shape:
        raise ShapeError(
            f"weights shape {weights.shape} does not match spec {spec.weight_shape}"
        )
    if not np.all(np.isfinite(weights)):
        raise ArgumentError("weights must be finite")
    return weights


def embed_batch(features, spec: QuantumLayerSpec) -> np.ndarray:
    if spec.embedding == ANGLE:
        return angle_embed_batch(features, spec.embedding_axis, spec.n_qubits)
    return amplitude_embed_batch(features, spec.n_qubits)


def apply_pqc_batch(states: np.ndarray, spec: QuantumLayerSpec, weights: np.ndarray) -> np.ndarray:
    """Rotation layer + CNOT ring, repeated n_pqc_layers times."""
    n = spec.n_qubits
    for layer in range(spec.n_pqc_layers):
        axis = spec.rotation_axes[layer]
        for q in range(n):
            states = rotate_batch(states, n, q, axis, weights[layer, q])
        if n > 1:
            for q in range(n):
                states = cnot_batch(states, n, q, (q + 1) % n)
    return states


def apply_pqc_adjoint_batch(states: np.ndarray, spec: QuantumLayerSpec, weights: np.ndarray) -> np.ndarray:
    """Inverse of :func:`apply_pqc_batch` (gates reversed, angles negated)."""
    n = spec.n_qubits
    for layer in reversed(range(spec.n_pqc_layers)):
        if n > 1:
            for q in reversed(range(n)):
                states = cnot_batch(states, n, q, (q + 1) % n)
        axis = spec.rotation_axes[layer]
        for q in range(n):
            states = rotate_batch(states, n, q, axis, -weights[layer, q])
    return states


def run_batch(features, spec: QuantumLayerSpec, weights) -> np.ndarray:
    """Embed, evolve, measure: (batch, n_features) -> (batch, n_outputs)."""
    weights = check_weights(spec, weights)
    states = embed_batch(features, spec)
    states = apply_pqc_batch(states, spec, weights)
    return z_expectations_batch(states, spec.n_qubits, spec.measured_qubits)


def expectations_from_states(states: np.ndarray, spec: QuantumLayerSpec, weights: np.ndarray) -> np.ndarray:
    """Like run_batch but starting from already-embedded states."""
    evolved = apply_pqc_batch(states, spec, weights)
    return z_expectations_batch(evolved, spec.n_qubits, spec.measured_qubits)


def pqc_layer(state: Statevector, spec: QuantumLayerSpec, weights) -> Statevector:
    """Apply the parameterized layers to a single state."""
    weights = check_weights(spec, weights)
    amps = apply_pqc_batch(state.amplitudes[None, :], spec, weights)
    return Statevector(state.n_qubits, amps[0])


def run_circuit(features, spec: QuantumLayerSpec, weights) -> np.ndarray:
    """Single-sample circuit evaluation; returns the measured <Z> vector."""
    feats = np.atleast_1d(np.asarray(features, dtype=np.float64))
    return run_batch(feats[None, :], spec, weights)[0]
