"""Classical layers with explicit forward/backward passes.

Arrays are plain float64 ndarrays: (batch, channels, length) through the
convolutional stage and (batch, width) after flattening. Each layer caches
what its backward pass needs during forward and accumulates parameter
gradients into ``Parameter.grad``; the caller zeroes grads between batches.

Weights and biases initialize uniformly in [-sqrt(1/fan_in), +sqrt(1/fan_in)].
"""

from __future__ import annotations

import numpy as np

from ..errors import ArgumentError, ShapeError
from .functional import relu, sigmoid


class Parameter:
    """Named trainable array plus its gradient accumulator."""

    __slots__ = ("name", "value", "grad")

    def __init__(self, name: str, value: np.ndarray):
        self.name = name
        self.value = np.asarray(value, dtype=np.float64)
        self.grad = np.zeros_like(self.value)


class Layer:
    """Base layer: stateless unless it owns Parameters or a forward cache."""

    name = "layer"
    static = False  # True for fixed input-preprocessing layers

    def params(self) -> list[Parameter]:
        return []

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        raise NotImplementedError

    def backward(self, dout: np.ndarray) -> np.ndarray:
        raise NotImplementedError


def _uniform_init(rng: np.random.Generator, fan_in: int, shape) -> np.ndarray:
    bound = np.sqrt(1.0 / fan_in)
    return rng.uniform(-bound, bound, size=shape)


class Conv1d(Layer):
    """Cross-correlation over the length axis, plus bias."""

    def __init__(self, in_channels: int, out_channels: int, kernel_size: int,
                 rng: np.random.Generator, stride: int = 1, padding: int = 0,
                 name: str = "conv"):
        if stride < 1:
            raise ArgumentError("stride must be >= 1")
        self.in_channels = in_channels
        self.out_channels = out_channels
        self.kernel_size = kernel_size
        self.stride = stride
        self.padding = padding
        self.name = name
        fan_in = in_channels * kernel_size
        self.weight = Parameter(f"{name}.weight",
                                _uniform_init(rng, fan_in, (out_channels, in_channels, kernel_size)))
        self.bias = Parameter(f"{name}.bias", _uniform_init(rng, fan_in, (out_channels,)))
        self._cache = None

    def params(self) -> list[Parameter]:
        return [self.weight, self.bias]

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        if x.ndim != 3 or x.shape[1] != self.in_channels:
            raise ShapeError(
                f"{self.name}: expected (batch, {self.in_channels}, length), got {x.shape}"
            )
        batch, _, length = x.shape
        padded_len = length + 2 * self.padding
        if padded_len < self.kernel_size:
            raise ShapeError(f"{self.name}: kernel {self.kernel_size} larger than padded input {padded_len}")
        xp = np.pad(x, ((0, 0), (0, 0), (self.padding, self.padding)))
        out_len = (padded_len - self.kernel_size) // self.stride + 1
        starts = np.arange(out_len) * self.stride
        idx = starts[:, None] + np.arange(self.kernel_size)[None, :]
        cols = xp[:, :, idx]                              # (B, C_in, L_out, K)
        cols = cols.transpose(0, 2, 1, 3).reshape(batch, out_len, -1)
        w_flat = self.weight.value.reshape(self.out_channels, -1)
        out = cols @ w_flat.T + self.bias.value           # (B, L_out, C_out)
        self._cache = (cols, x.shape, padded_len, starts)
        return out.transpose(0, 2, 1)

    def backward(self, dout: np.ndarray) -> np.ndarray:
        cols, x_shape, padded_len, starts = self._cache
        batch, _, length = x_shape
        dt = dout.transpose(0, 2, 1)                      # (B, L_out, C_out)
        self.weight.grad += np.einsum("blo,blk->ok", dt, cols).reshape(self.weight.value.shape)
        self.bias.grad += dout.sum(axis=(0, 2))
        w_flat = self.weight.value.reshape(self.out_channels, -1)
        dcols = dt @ w_flat                               # (B, L_out, C_in*K)
        dcols = dcols.reshape(batch, len(starts), self.in_channels, self.kernel_size)
        dcols = dcols.transpose(0, 2, 1, 3)               # (B, C_in, L_out, K)
        dxp = np.zeros((batch, self.in_channels, padded_len))
        for k in range(self.kernel_size):
            dxp[:, :, starts + k] += dcols[:, :, :, k]
        if self.padding:
            return dxp[:, :, self.padding:self.padding + length]
        return dxp


class MaxPool1d(Layer):
    """Non-overlapping max pooling; trailing partial window dropped."""

    def __init__(self, window: int, name: str = "pool"):
        if window < 1:
            raise ArgumentError("pool window must be >= 1")
        self.window = window
        self.name = name
        self._cache = None

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        if x.ndim != 3:
            raise ShapeError(f"{self.name}: expected (batch, channels, length), got {x.shape}")
        length = x.shape[2]
        if self.window > length:
            raise ShapeError(f"{self.name}: window {self.window} exceeds length {length}")
        out_len = length // self.window
        trimmed = x[:, :, :out_len * self.window]
        windows = trimmed.reshape(x.shape[0], x.shape[1], out_len, self.window)
        argmax = windows.argmax(axis=-1)  # first index on ties
        self._cache = (x.shape, argmax)
        return windows.max(axis=-1)

    def backward(self, dout: np.ndarray) -> np.ndarray:
        x_shape, argmax = self._cache
        dx = np.zeros(x_shape)
        out_len = argmax.shape[2]
        view = dx[:, :, :out_len * self.window].reshape(
            x_shape[0], x_shape[1], out_len, self.window
        )
        np.put_along_axis(view, argmax[..., None], dout[..., None], axis=-1)
        return dx


class Dense(Layer):
    """Affine map: out = x @ W.T + b with W of shape (n_out, n_in)."""

    def __init__(self, n_in: int, n_out: int, rng: np.random.Generator, name: str = "dense"):
        self.n_in = n_in
        self.n_out = n_out
        self.name = name
        self.weight = Parameter(f"{name}.weight", _uniform_init(rng, n_in, (n_out, n_in)))
        self.bias = Parameter(f"{name}.bias", _uniform_init(rng, n_in, (n_out,)))
        self._x = None

    def params(self) -> list[Parameter]:
        return [self.weight, self.bias]

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        if x.ndim != 2 or x.shape[1] != self.n_in:
            raise ShapeError(f"{self.name}: expected (batch, {self.n_in}), got {x.shape}")
        self._x = x
        return x @ self.weight.value.T + self.bias.value

    def backward(self, dout: np.ndarray) -> np.ndarray:
        self.weight.grad += dout.T @ self._x
        self.bias.grad += dout.sum(axis=0)
        return dout @ self.weight.value


class ReLU(Layer):
    name = "relu"

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        self._mask = x > 0.0
        return relu(x)

    def backward(self, dout: np.ndarray) -> np.ndarray:
        return dout * self._mask


class Sigmoid(Layer):
    name = "sigmoid"

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        self._out = sigmoid(x)
        return self._out

    def backward(self, dout: np.ndarray) -> np.ndarray:
        return dout * self._out * (1.0 - self._out)


class Flatten(Layer):
    """(batch, channels, length) -> (batch, channels*length), row-major."""

    name = "flatten"

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        self._shape = x.shape
        return x.reshape(x.shape[0], -1)

    def backward(self, dout: np.ndarray) -> np.ndarray:
        return dout.reshape(self._shape)


class AddChannelDim(Layer):
    """(batch, width) -> (batch, 1, width) entering the conv stage."""

    name = "reshape"
    static = True

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        if x.ndim != 2:
            raise ShapeError(f"expected (batch, width), got {x.shape}")
        return x[:, None, :]

    def backward(self, dout: np.ndarray) -> np.ndarray:
        return dout[:, 0, :]


class TruncatePad(Layer):
    """Fix the feature width without learned weights: slice or zero-pad."""

    def __init__(self, width: int, name: str = "truncate"):
        self.width = width
        self.name = name

    def forward(self, x: np.ndarray, training: bool = False) -> np.ndarray:
        if x.ndim != 2:
            raise ShapeError(f"{self.name}: expected (batch, width), got {x.shape}")
        self._in_width = x.shape[1]
        if self._in_width >= self.width:
            return x[:, :self.width].copy()
        out = np.zeros((x.shape[0], self.width))
        out[:, :self._in_width] = x
        return out

    def backward(self, dout: np.ndarray) -> np.ndarray:
        kept = min(self._in_width, self.width)
        dx = np.zeros((dout.shape[0], self._in_width))
        dx[:, :kept] = dout[:, :kept]
        return dx
