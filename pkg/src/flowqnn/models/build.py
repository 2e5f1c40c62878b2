"""Wire up the six detector architectures.

All variants share the same two-stage conv block (kernel 3, padding 1,
pool 2). Hybrid variants end the classical stage with a projection to the
quantum input width; the amplitude variant instead keeps a non-learned
truncation to 16 features, since amplitude embedding removes the need for
a trained reduction layer. Widths are configurable through ModelConfig.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..errors import ShapeError
from ..nn.layers import (
    AddChannelDim,
    Conv1d,
    Dense,
    Flatten,
    MaxPool1d,
    ReLU,
    Sigmoid,
    TruncatePad,
)
from ..quantum.circuits import AMPLITUDE, ANGLE, QuantumLayerSpec, init_weights
from . import variants as V
from .graph import ModelGraph
from .quantum_layers import ParallelQuantumLayer, QuantumLayer, QuanvolutionLayer


@dataclass(frozen=True)
class ModelConfig:
    """Widths and depths shared by all variants."""

    input_width: int = 28
    conv_channels: int = 32
    kernel_size: int = 3
    padding: int = 1
    pool_window: int = 2
    hidden_dense: int = 64
    pqc_layers: int = 2
    rotation_axis: str = "Y"
    angle_qubits: int = 4
    amplitude_qubits: int = 4
    mlayer_groups: int = 4
    mlayer_group_qubits: int = 4
    quanconv_qubits: int = 6
    quanconv_disregard: int = 2
    quanvolution_window: int = 2

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ModelConfig":
        return cls(**d)


def _conv_out_len(length: int, cfg: ModelConfig) -> int:
    for _ in range(2):
        length = (length + 2 * cfg.padding - cfg.kernel_size) + 1
        length //= cfg.pool_window
    return length


def _conv_block(cfg: ModelConfig, rng, in_channels: int):
    return [
        Conv1d(in_channels, cfg.conv_channels, cfg.kernel_size, rng,
               padding=cfg.padding, name="conv1"),
        ReLU(),
        MaxPool1d(cfg.pool_window, name="pool1"),
        Conv1d(cfg.conv_channels, cfg.conv_channels, cfg.kernel_size, rng,
               padding=cfg.padding, name="conv2"),
        ReLU(),
        MaxPool1d(cfg.pool_window, name="pool2"),
        Flatten(),
    ]


def _angle_spec(n_qubits: int, cfg: ModelConfig, disregard=frozenset(), trainable=True):
    return QuantumLayerSpec(
        n_qubits=n_qubits,
        n_pqc_layers=cfg.pqc_layers,
        rotation_axes=(cfg.rotation_axis,) * cfg.pqc_layers,
        embedding=ANGLE,
        embedding_axis=cfg.rotation_axis,
        disregard=frozenset(disregard),
        trainable=trainable,
    )


def _head(width: int, rng):
    return [Dense(width, 1, rng, name="dense_out"), Sigmoid()]


def _build_cnn(cfg: ModelConfig, rng):
    flat = cfg.conv_channels * _conv_out_len(cfg.input_width, cfg)
    return [
        AddChannelDim(),
        *_conv_block(cfg, rng, 1),
        Dense(flat, cfg.hidden_dense, rng, name="dense_hidden"),
        ReLU(),
        *_head(cfg.hidden_dense, rng),
    ]


def _build_qcnn_angle(cfg: ModelConfig, rng):
    flat = cfg.conv_channels * _conv_out_len(cfg.input_width, cfg)
    spec = _angle_spec(cfg.angle_qubits, cfg)
    return [
        AddChannelDim(),
        *_conv_block(cfg, rng, 1),
        Dense(flat, cfg.angle_qubits, rng, name="proj"),
        QuantumLayer(spec, init_weights(spec, rng)),
        *_head(spec.n_outputs, rng),
    ]


def _build_qcnn_amplitude(cfg: ModelConfig, rng):
    spec = QuantumLayerSpec(
        n_qubits=cfg.amplitude_qubits,
        n_pqc_layers=cfg.pqc_layers,
        rotation_axes=(cfg.rotation_axis,) * cfg.pqc_layers,
        embedding=AMPLITUDE,
    )
    return [
        AddChannelDim(),
        *_conv_block(cfg, rng, 1),
        TruncatePad(1 << cfg.amplitude_qubits),
        QuantumLayer(spec, init_weights(spec, rng)),
        *_head(spec.n_outputs, rng),
    ]


def _build_qcnn_mlayer(cfg: ModelConfig, rng):
    flat = cfg.conv_channels * _conv_out_len(cfg.input_width, cfg)
    group_width = cfg.mlayer_groups * cfg.mlayer_group_qubits
    subs = []
    for g in range(cfg.mlayer_groups):
        spec = _angle_spec(cfg.mlayer_group_qubits, cfg)
        subs.append(QuantumLayer(spec, init_weights(spec, rng), name=f"quantum{g}"))
    return [
        AddChannelDim(),
        *_conv_block(cfg, rng, 1),
        Dense(flat, group_width, rng, name="proj"),
        ParallelQuantumLayer(subs),
        *_head(sum(s.spec.n_outputs for s in subs), rng),
    ]


def _build_quanconv(cfg: ModelConfig, rng):
    flat = cfg.conv_channels * _conv_out_len(cfg.input_width, cfg)
    disregard = frozenset(
        int(q) for q in rng.choice(cfg.quanconv_qubits, size=cfg.quanconv_disregard, replace=False)
    )
    spec = _angle_spec(cfg.quanconv_qubits, cfg, disregard=disregard)
    return [
        AddChannelDim(),
        *_conv_block(cfg, rng, 1),
        Dense(flat, cfg.quanconv_qubits, rng, name="proj"),
        QuantumLayer(spec, init_weights(spec, rng)),
        *_head(spec.n_outputs, rng),
    ]


def _build_quanvolution(cfg: ModelConfig, rng):
    spec = _angle_spec(cfg.quanvolution_window, cfg, trainable=False)
    quanv = QuanvolutionLayer(spec, init_weights(spec, rng))
    conv_in_len = cfg.input_width // cfg.quanvolution_window
    flat = cfg.conv_channels * _conv_out_len(conv_in_len, cfg)
    return [
        AddChannelDim(),
        quanv,
        *_conv_block(cfg, rng, spec.n_outputs),
        Dense(flat, cfg.hidden_dense, rng, name="dense_hidden"),
        ReLU(),
        *_head(cfg.hidden_dense, rng),
    ]


_BUILDERS = {
    V.CNN: _build_cnn,
    V.QCNN_ANGLE: _build_qcnn_angle,
    V.QCNN_AMPLITUDE: _build_qcnn_amplitude,
    V.QCNN_MULTILAYER: _build_qcnn_mlayer,
    V.QUANCONV: _build_quanconv,
    V.QUANVOLUTION: _build_quanvolution,
}


def _shape_probe(model: ModelGraph, input_width: int) -> None:
    """Trace one dummy sample through the stack to catch width mismatches.

    Quantum layers are checked structurally (feature capacity, window
    divisibility) rather than by running circuits, so the probe never
    depends on activation values.
    """
    x = np.zeros((1, input_width))
    for layer in model.layers:
        if isinstance(layer, QuantumLayer):
            if x.ndim != 2 or x.shape[1] > layer.spec.max_features:
                raise ShapeError(
                    f"{layer.name}: width {x.shape} exceeds capacity "
                    f"{layer.spec.max_features} of {layer.spec.n_qubits} qubits"
                )
            x = np.zeros((1, layer.spec.n_outputs))
        elif isinstance(layer, ParallelQuantumLayer):
            if x.ndim != 2 or x.shape[1] != sum(s.spec.n_qubits for s in layer.sublayers):
                raise ShapeError(f"{layer.name}: bad input width {x.shape}")
            x = np.zeros((1, sum(s.spec.n_outputs for s in layer.sublayers)))
        elif isinstance(layer, QuanvolutionLayer):
            if x.ndim != 3 or x.shape[1] != 1 or x.shape[2] % layer.window:
                raise ShapeError(f"{layer.name}: bad input shape {x.shape}")
            x = np.zeros((1, layer.spec.n_outputs, x.shape[2] // layer.window))
        else:
            x = layer.forward(x)
    if x.shape != (1, 1):
        raise ShapeError(f"model head must emit (batch, 1), got {x.shape}")


def build_model(variant: str, seed: int, arch: ModelConfig | None = None) -> ModelGraph:
    """Construct a wired, width-checked model for the given variant."""
    canonical = V.canonical_variant(variant)
    arch = arch or ModelConfig()
    rng = np.random.default_rng(seed)
    layers = _BUILDERS[canonical](arch, rng)
    model = ModelGraph(canonical, seed, arch, layers)
    _shape_probe(model, arch.input_width)
    return model
