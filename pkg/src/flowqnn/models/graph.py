"""Ordered layer stacks for the six detector variants."""

from __future__ import annotations

import numpy as np

from ..nn.layers import Layer, Parameter
from .quantum_layers import ParallelQuantumLayer, QuantumLayer, QuanvolutionLayer


class ModelGraph:
    """Sequential model; adjacent widths are checked at construction.

    The builder runs one zero-filled sample through the stack, so any width
    mismatch raises at construction time, never during training.
    """

    def __init__(self, variant: str, seed: int, arch, layers: list[Layer]):
        self.variant = variant
        self.seed = seed
        self.arch = arch
        self.layers = layers

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        for layer in self.layers:
            x = layer.forward(x, training=training)
        return x

    def backward(self, dout: np.ndarray) -> np.ndarray:
        for layer in reversed(self.layers):
            dout = layer.backward(dout)
        return dout

    def params(self) -> list[Parameter]:
        return [p for layer in self.layers for p in layer.params()]

    def param_count(self) -> int:
        return sum(p.value.size for p in self.params())

    def quantum_sublayers(self) -> list[QuantumLayer]:
        found = []
        for layer in self.layers:
            if isinstance(layer, QuantumLayer):
                found.append(layer)
            elif isinstance(layer, ParallelQuantumLayer):
                found.extend(layer.sublayers)
        return found

    def quanvolution_layer(self) -> QuanvolutionLayer | None:
        for layer in self.layers:
            if isinstance(layer, QuanvolutionLayer):
                return layer
        return None

    def total_quantum_qubits(self) -> int:
        total = sum(sub.spec.n_qubits for sub in self.quantum_sublayers())
        quanv = self.quanvolution_layer()
        if quanv is not None:
            total += quanv.spec.n_qubits
        return total

    def disregard_set(self) -> list[int] | None:
        for sub in self.quantum_sublayers():
            if sub.spec.disregard:
                return sorted(sub.spec.disregard)
        return None

    def pqc_depth(self) -> int | None:
        subs = self.quantum_sublayers()
        quanv = self.quanvolution_layer()
        if subs:
            return subs[0].spec.n_pqc_layers
        if quanv is not None:
            return quanv.spec.n_pqc_layers
        return None

    def static_prefix_split(self) -> tuple[list[Layer], list[Layer]]:
        """Leading run of fixed preprocessing layers vs the trainable rest."""
        split = 0
        for layer in self.layers:
            if not layer.static:
                break
            split += 1
        return self.layers[:split], self.layers[split:]
