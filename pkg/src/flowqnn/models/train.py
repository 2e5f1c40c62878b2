"""Mini-batch training loop with the restart policy for bad quantum inits.

Random quantum weights occasionally put a run in a flat region (stuck near
chance accuracy) or blow up the loss. A run is reinitialized with seed+1
when its train accuracy is below the restart threshold after the check
epoch, or when the loss/gradient turns non-finite; after max_restarts
reinitializations the run is marked unsuccessful. All attempts are logged.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError, TrainingError
from ..nn.functional import bce_grad, bce_loss
from ..nn.optim import Adam
from ..experiments.report import RunReport, tradeoff_point
from .build import build_model
from .graph import ModelGraph


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 30
    batch_size: int = 32
    learning_rate: float = 0.01
    beta1: float = 0.9
    beta2: float = 0.999
    restart_accuracy: float = 0.60
    restart_check_epoch: int = 5
    max_restarts: int = 3
    eval_batch_size: int = 512


def _forward_layers(layers, x: np.ndarray, training: bool = False) -> np.ndarray:
    for layer in layers:
        x = layer.forward(x, training=training)
    return x


def evaluate(layers, x: np.ndarray, y: np.ndarray, batch_size: int = 512) -> tuple[float, float]:
    """(accuracy, mean BCE loss) of a layer stack on labeled samples."""
    correct = 0
    loss_sum = 0.0
    for start in range(0, len(x), batch_size):
        xb = x[start:start + batch_size]
        yb = y[start:start + batch_size]
        p = _forward_layers(layers, xb).ravel()
        correct += int(np.sum((p > 0.5) == (yb > 0.5)))
        loss_sum += bce_loss(p, yb) * len(xb)
    return correct / len(x), loss_sum / len(x)


def _transform_static(prefix, x: np.ndarray) -> np.ndarray:
    # Fixed preprocessing (reshape, quanvolution) is pure: apply once per dataset.
    return _forward_layers(prefix, x) if prefix else x


def _fit(model: ModelGraph, train_data, eval_data, config: TrainConfig,
         allow_restart: bool):
    """One training attempt. Returns (status, curves, diagnostic)."""
    x_train, y_train = train_data
    x_eval, y_eval = eval_data
    prefix, suffix = model.static_prefix_split()
    xt = _transform_static(prefix, x_train)
    xe = _transform_static(prefix, x_eval)
    rng = np.random.default_rng(model.seed)
    opt = Adam(model.params(), learning_rate=config.learning_rate,
               beta1=config.beta1, beta2=config.beta2)
    curves = {"train_acc": [], "test_acc": [], "train_loss": [], "val_loss": []}
    n = len(xt)
    for epoch in range(config.epochs):
        order = rng.permutation(n)
        correct = 0
        loss_sum = 0.0
        for start in range(0, n, config.batch_size):
            idx = order[start:start + config.batch_size]
            xb, yb = xt[idx], y_train[idx]
            out = _forward_layers(suffix, xb, training=True)
            p = out.ravel()
            loss = bce_loss(p, yb)
            if not np.isfinite(loss):
                return "nonfinite", curves, f"non-finite loss at epoch {epoch + 1}"
            opt.zero_grad()
            dout = bce_grad(p, yb).reshape(out.shape)
            for layer in reversed(suffix):
                dout = layer.backward(dout)
            try:
                opt.step()
            except TrainingError as exc:
                return "nonfinite", curves, f"{exc} at epoch {epoch + 1}"
            correct += int(np.sum((p > 0.5) == (yb > 0.5)))
            loss_sum += loss * len(idx)
        curves["train_acc"].append(correct / n)
        curves["train_loss"].append(loss_sum / n)
        test_acc, test_loss = evaluate(suffix, xe, y_eval, config.eval_batch_size)
        curves["test_acc"].append(test_acc)
        curves["val_loss"].append(test_loss)
        if (allow_restart and epoch + 1 == config.restart_check_epoch
                and curves["train_acc"][-1] < config.restart_accuracy):
            return "low_accuracy", curves, (
                f"train accuracy {curves['train_acc'][-1]:.3f} below "
                f"{config.restart_accuracy} after epoch {epoch + 1}"
            )
    return "ok", curves, None


def train(model: ModelGraph, train_data, eval_data,
          config: TrainConfig | None = None) -> tuple[RunReport, ModelGraph]:
    """Train with restarts; returns the report and the final model."""
    config = config or TrainConfig()
    if config.epochs < 1:
        raise ArgumentError("epochs must be >= 1")
    base_seed = model.seed
    started = time.perf_counter()
    restart_log: list[dict] = []
    status, curves, diagnostic = "nonfinite", None, "no attempt ran"
    for attempt in range(config.max_restarts + 1):
        if attempt > 0:
            model = build_model(model.variant, base_seed + attempt, model.arch)
        allow_restart = attempt < config.max_restarts
        status, curves, diagnostic = _fit(model, train_data, eval_data, config, allow_restart)
        restart_log.append({
            "attempt": attempt,
            "seed": model.seed,
            "status": "completed" if status == "ok" else status,
            "epochs_run": len(curves["train_acc"]),
            "diagnostic": diagnostic,
        })
        if status == "ok":
            break

    report = RunReport(
        variant=model.variant,
        seed=base_seed,
        epochs=config.epochs,
        train_acc=curves["train_acc"],
        test_acc=curves["test_acc"],
        train_loss=curves["train_loss"],
        val_loss=curves["val_loss"],
        restart_log=restart_log,
        disregard=model.disregard_set(),
        pqc_depth=model.pqc_depth(),
        successful=status == "ok",
        diagnostic=None if status == "ok" else diagnostic,
        wall_clock_s=time.perf_counter() - started,
    )
    if report.train_acc:
        epoch, tr, te = tradeoff_point(report.train_acc, report.test_acc)
        report.tradeoff_epoch = epoch
        report.tradeoff_train_acc = tr
        report.tradeoff_test_acc = te
    return report, model
