"""Quantum circuits wrapped as network layers.

Every output component is a Pauli-Z expectation, so quantum stages always
emit values in [-1, 1]. Weight gradients use the parameter-shift rule;
input gradients use the shift rule for angle embedding and the analytic
normalization Jacobian for amplitude embedding, so a dense layer feeding a
quantum layer trains end to end.
"""

from __future__ import annotations

import numpy as np

from ..errors import ShapeError
from ..nn.layers import Layer, Parameter
from ..quantum.circuits import AMPLITUDE, QuantumLayerSpec, run_batch
from ..quantum.gradients import (
    amplitude_input_gradients_batch,
    angle_input_gradients_batch,
    weight_gradients_batch,
)


class QuantumLayer(Layer):
    """One circuit evaluated per sample: (batch, features) -> (batch, outputs)."""

    def __init__(self, spec: QuantumLayerSpec, weights: np.ndarray, name: str = "quantum"):
        self.spec = spec
        self.name = name
        self._param = Parameter(f"{name}.weights", weights) if spec.trainable else None
        self._fixed = None if spec.trainable else np.asarray(weights, dtype=np.float64)
        self._x = None

    @property
    def weights(self) -> np.ndarray:
        return self._param.value if self._param is not None else self._fixed

    def set_weights(self, weights: np.ndarray) -> None:
        if self._param is not None:
            self._param.value[...] = weights
        else:
            self._fixed = np.asarray(weights, dtype=np.float64)

    def params(self) -> list[Parameter]:
        return [self._param] if self._param is not None else []

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        if x.ndim != 2:
            raise ShapeError(f"{self.name}: expected (batch, features), got {x.shape}")
        self._x = x
        return run_batch(x, self.spec, self.weights)

    def backward(self, dout: np.ndarray) -> np.ndarray:
        if self._param is not None:
            jac = weight_gradients_batch(self._x, self.spec, self.weights)
            self._param.grad += np.einsum("lqbm,bm->lq", jac, dout)
        if self.spec.embedding == AMPLITUDE:
            return amplitude_input_gradients_batch(self._x, self.spec, self.weights, dout)
        jac_x = angle_input_gradients_batch(self._x, self.spec, self.weights)
        return np.einsum("bfm,bm->bf", jac_x, dout)


class ParallelQuantumLayer(Layer):
    """Partition the input into equal groups, one circuit per group.

    No cross-group (and hence no cross-sample) mixing: outputs are the
    concatenated expectations of the sub-circuits in group order.
    """

    def __init__(self, sublayers: list[QuantumLayer], name: str = "quantum_parallel"):
        self.sublayers = sublayers
        self.name = name
        self._in_widths = [sub.spec.n_qubits for sub in sublayers]
        self._out_widths = [sub.spec.n_outputs for sub in sublayers]

    def params(self) -> list[Parameter]:
        return [p for sub in self.sublayers for p in sub.params()]

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        if x.ndim != 2 or x.shape[1] != sum(self._in_widths):
            raise ShapeError(
                f"{self.name}: expected (batch, {sum(self._in_widths)}), got {x.shape}"
            )
        outs = []
        start = 0
        for sub, width in zip(self.sublayers, self._in_widths):
            outs.append(sub.forward(x[:, start:start + width], training=training))
            start += width
        return np.concatenate(outs, axis=1)

    def backward(self, dout: np.ndarray) -> np.ndarray:
        pieces = []
        start = 0
        for sub, width in zip(self.sublayers, self._out_widths):
            pieces.append(sub.backward(dout[:, start:start + width]))
            start += width
        return np.concatenate(pieces, axis=1)


class QuanvolutionLayer(Layer):
    """Fixed sliding-window circuits over the length axis.

    Each non-overlapping window of ``window`` features is angle-embedded on
    ``window`` qubits and run through the PQC; the measured expectations
    become the channels of one output position, halving the length for
    window 2. Weights are frozen at construction (non-trainable contract),
    so the transform is a pure function of the input and may be cached as a
    dataset-preprocessing pass.
    """

    static = True

    def __init__(self, spec: QuantumLayerSpec, weights: np.ndarray, name: str = "quanvolution"):
        if spec.trainable:
            raise ShapeError("quanvolution spec must be non-trainable")
        self.spec = spec
        self.window = spec.n_qubits
        self.weights = np.asarray(weights, dtype=np.float64)
        self.name = name

    def set_weights(self, weights: np.ndarray) -> None:
        self.weights = np.asarray(weights, dtype=np.float64)

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        if x.ndim != 3 or x.shape[1] != 1:
            raise ShapeError(f"{self.name}: expected (batch, 1, length), got {x.shape}")
        length = x.shape[2]
        if length % self.window:
            raise ShapeError(f"{self.name}: length {length} not divisible by window {self.window}")
        out_len = length // self.window
        out = np.empty((x.shape[0], self.spec.n_outputs, out_len))
        for w in range(out_len):
            window = x[:, 0, w * self.window:(w + 1) * self.window]
            out[:, :, w] = run_batch(window, self.spec, self.weights)
        return out

    # Alias emphasizing the cacheable-preprocessing reading.
    transform = forward

    def backward(self, dout: np.ndarray) -> np.ndarray:
        batch, _, out_len = dout.shape
        return np.zeros((batch, 1, out_len * self.window))
