"""The six detector architectures and their training loop."""

from .build import ModelConfig, build_model
from .checkpoint import checkpoint_payload, load_checkpoint, save_checkpoint
from .graph import ModelGraph
from .quantum_layers import ParallelQuantumLayer, QuantumLayer, QuanvolutionLayer
from .train import TrainConfig, evaluate, train
from .variants import ALL_VARIANTS, CLI_NAMES, DESCRIPTIONS, canonical_variant

__all__ = [
    "ALL_VARIANTS",
    "CLI_NAMES",
    "DESCRIPTIONS",
    "ModelConfig",
    "ModelGraph",
    "ParallelQuantumLayer",
    "QuantumLayer",
    "QuanvolutionLayer",
    "TrainConfig",
    "build_model",
    "canonical_variant",
    "checkpoint_payload",
    "evaluate",
    "load_checkpoint",
    "save_checkpoint",
    "train",
]
