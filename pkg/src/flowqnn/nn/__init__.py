"""Minimal classical neural-network engine with reverse-mode gradients."""

from .functional import EPS, bce_grad, bce_loss, relu, sigmoid
from .layers import (
    AddChannelDim,
    Conv1d,
    Dense,
    Flatten,
    Layer,
    MaxPool1d,
    Parameter,
    ReLU,
    Sigmoid,
    TruncatePad,
)
from .optim import Adam

__all__ = [
    "Adam",
    "AddChannelDim",
    "Conv1d",
    "Dense",
    "EPS",
    "Flatten",
    "Layer",
    "MaxPool1d",
    "Parameter",
    "ReLU",
    "Sigmoid",
    "TruncatePad",
    "bce_grad",
    "bce_loss",
    "relu",
    "sigmoid",
]
