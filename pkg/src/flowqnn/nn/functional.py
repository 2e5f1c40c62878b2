"""Elementwise activations and the binary cross-entropy loss."""

from __future__ import annotations

import numpy as np

# Probabilities are clamped to [EPS, 1-EPS] before the logs; no log(0).
EPS = 1e-7


def relu(x: np.ndarray) -> np.ndarray:
    return np.maximum(x, 0.0)


def sigmoid(x: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        return 1.0 / (1.0 + np.exp(-x))


def bce_loss(p: np.ndarray, y: np.ndarray) -> float:
    """Mean binary cross-entropy over the batch."""
    p = np.asarray(p, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    pc = np.clip(p, EPS, 1.0 - EPS)
    return float(-np.mean(y * np.log(pc) + (1.0 - y) * np.log(1.0 - pc)))


def bce_grad(p: np.ndarray, y: np.ndarray) -> np.ndarray:
    """d(mean BCE)/dp; zero where the clamp is active."""
    shape = np.shape(p)
    p = np.asarray(p, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    pc = np.clip(p, EPS, 1.0 - EPS)
    grad = (-y / pc + (1.0 - y) / (1.0 - pc)) / p.size
    grad[(p < EPS) | (p > 1.0 - EPS)] = 0.0
    return grad.reshape(shape)
