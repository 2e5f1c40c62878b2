"""Versioned model checkpoints (npz key-value dumps; bit-exact round trips).

A checkpoint carries the variant, seed, architecture widths, PQC depth,
disregard set, every parameter array, the fixed quanvolution weights when
present, and optionally the training-set normalization stats so a served
model can score raw flow features on its own.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..errors import DataError
from .build import ModelConfig, build_model
from .graph import ModelGraph

FORMAT_VERSION = 1


def checkpoint_payload(model: ModelGraph, norm_min=None, norm_max=None) -> dict:
    """Arrays plus a JSON meta blob describing the model."""
    meta = {
        "format_version": FORMAT_VERSION,
        "variant": model.variant,
        "seed": model.seed,
        "pqc_depth": model.pqc_depth(),
        "disregard": model.disregard_set() or [],
        "arch": model.arch.to_dict(),
    }
    payload: dict = {"meta": np.array(json.dumps(meta, sort_keys=True))}
    for p in model.params():
        payload[f"param::{p.name}"] = p.value
    quanv = model.quanvolution_layer()
    if quanv is not None:
        payload["fixed::quanvolution.weights"] = quanv.weights
    if norm_min is not None and norm_max is not None:
        payload["norm_min"] = np.asarray(norm_min, dtype=np.float64)
        payload["norm_max"] = np.asarray(norm_max, dtype=np.float64)
    return payload


def save_checkpoint(path, payload: dict) -> None:
    with open(path, "wb") as fh:
        np.savez(fh, **payload)


def load_checkpoint(path) -> tuple[ModelGraph, dict]:
    """Rebuild the model and return (model, meta). Meta includes norm stats."""
    path = Path(path)
    if not path.exists():
        raise DataError(f"checkpoint not found: {path}")
    with np.load(path, allow_pickle=False) as data:
        meta = json.loads(str(data["meta"]))
        if meta.get("format_version") != FORMAT_VERSION:
            raise DataError(f"unsupported checkpoint format: {meta.get('format_version')}")
        arch = ModelConfig.from_dict(meta["arch"])
        model = build_model(meta["variant"], meta["seed"], arch)
        params = {p.name: p for p in model.params()}
        for key in data.files:
            if key.startswith("param::"):
                name = key[len("param::"):]
                if name not in params:
                    raise DataError(f"checkpoint parameter {name!r} has no slot in the model")
                params[name].value[...] = data[key]
        if "fixed::quanvolution.weights" in data.files:
            model.quanvolution_layer().set_weights(data["fixed::quanvolution.weights"])
        if "norm_min" in data.files:
            meta["norm_min"] = data["norm_min"].copy()
            meta["norm_max"] = data["norm_max"].copy()
    return model, meta
