"""Flow-feature datasets: CSV ingestion, subsampling, binary cache.

Ingestion rules: a missing numeric field is imputed as 0 (counted per
field); a non-empty but unparsable numeric field drops the whole row
(counted); rows with unrecognizable label/attack/station values are also
dropped and counted. Benign rows must carry the benign attack type.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from ..errors import ArgumentError, DataError, SchemaError
from .schema import (
    ATTACK_VOCAB,
    BASE_STATIONS,
    BENIGN,
    FEATURE_NAMES,
    N_FEATURES,
    SchemaMap,
    parse_attack,
    parse_label,
    parse_station,
)

_ATTACK_CODE = {name: i for i, name in enumerate(ATTACK_VOCAB)}
_STATION_CODE = {name: i for i, name in enumerate(BASE_STATIONS)}


@dataclass
class FlowRecord:
    """One labeled flow with its 28 features."""

    features: np.ndarray
    label: int
    attack_type: str
    base_station: str


@dataclass
class Dataset:
    """Column-major store of flow records plus pipeline bookkeeping."""

    features: np.ndarray          # (n, 28) float64
    labels: np.ndarray            # (n,) uint8, 1 = malicious
    attacks: np.ndarray           # (n,) int16 codes into ATTACK_VOCAB
    stations: np.ndarray          # (n,) int8 codes into BASE_STATIONS
    norm_min: np.ndarray | None = None
    norm_max: np.ndarray | None = None
    provenance: str = ""
    imputed_counts: dict[str, int] = field(default_factory=dict)
    skipped_rows: int = 0

    def __len__(self) -> int:
        return self.features.shape[0]

    def take(self, indices) -> "Dataset":
        idx = np.asarray(indices)
        return Dataset(
            features=self.features[idx],
            labels=self.labels[idx],
            attacks=self.attacks[idx],
            stations=self.stations[idx],
            norm_min=self.norm_min,
            norm_max=self.norm_max,
            provenance=self.provenance,
            imputed_counts=dict(self.imputed_counts),
            skipped_rows=self.skipped_rows,
        )

    def records(self) -> list[FlowRecord]:
        return [
            FlowRecord(self.features[i].copy(), int(self.labels[i]),
                       ATTACK_VOCAB[self.attacks[i]], BASE_STATIONS[self.stations[i]])
            for i in range(len(self))
        ]

    def label_counts(self) -> dict[str, int]:
        return {
            "benign": int(np.sum(self.labels == 0)),
            "malicious": int(np.sum(self.labels == 1)),
        }

    def attack_counts(self) -> dict[str, int]:
        counts = np.bincount(self.attacks, minlength=len(ATTACK_VOCAB))
        return {name: int(c) for name, c in zip(ATTACK_VOCAB, counts) if c}

    def station_counts(self) -> dict[str, int]:
        counts = np.bincount(self.stations, minlength=len(BASE_STATIONS))
        return {name: int(c) for name, c in zip(BASE_STATIONS, counts)}


def load_flows(path, schema: SchemaMap | None = None) -> Dataset:
    """Parse a flow-feature CSV into a Dataset."""
    schema = schema or SchemaMap()
    path = Path(path)
    if not path.exists():
        raise DataError(f"flow CSV not found: {path}")
    frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)

    required = [schema.column_for(f) for f in FEATURE_NAMES]
    required += [schema.label_column, schema.attack_column]
    if schema.station_default is None:
        required.append(schema.station_column)
    for logical, column in zip(
        list(FEATURE_NAMES) + ["label", "attack", "base station"], required
    ):
        if column not in frame.columns:
            raise SchemaError(f"required column {logical!r} (header {column!r}) is missing")

    n_rows = len(frame)
    feats = np.empty((n_rows, N_FEATURES))
    drop = np.zeros(n_rows, dtype=bool)
    imputed: dict[str, int] = {}
    for j, name in enumerate(FEATURE_NAMES):
        raw = frame[schema.column_for(name)].str.strip()
        missing = (raw == "").to_numpy()
        values = pd.to_numeric(raw, errors="coerce").to_numpy(dtype=np.float64)
        unparsable = np.isnan(values) & ~missing
        drop |= unparsable
        values[missing] = 0.0
        n_imputed = int(missing.sum())
        if n_imputed:
            imputed[name] = n_imputed
        feats[:, j] = values

    labels = frame[schema.label_column].map(lambda v: parse_label(str(v)))
    attacks = frame[schema.attack_column].map(lambda v: parse_attack(str(v)))
    if schema.station_default is not None:
        station_name = parse_station(schema.station_default)
        if station_name is None:
            raise SchemaError(f"bad station_default {schema.station_default!r}")
        stations = pd.Series([station_name] * n_rows)
    else:
        stations = frame[schema.station_column].map(lambda v: parse_station(str(v)))

    drop |= labels.isna().to_numpy()
    drop |= attacks.isna().to_numpy()
    drop |= stations.isna().to_numpy()
    # Label/attack consistency: benign label iff benign attack type.
    consistent = np.array(
        [a is None or l is None or (l == 0) == (a == BENIGN)
         for l, a in zip(labels, attacks)]
    )
    drop |= ~consistent

    keep = ~drop
    dataset = Dataset(
        features=feats[keep],
        labels=labels[keep].to_numpy(dtype=np.uint8),
        attacks=np.array([_ATTACK_CODE[a] for a in attacks[keep]], dtype=np.int16),
        stations=np.array([_STATION_CODE[s] for s in stations[keep]], dtype=np.int8),
        provenance=f"csv:{path.name}",
        imputed_counts=imputed,
        skipped_rows=int(drop.sum()),
    )
    return dataset


def subsample(dataset: Dataset, n: int, seed: int) -> Dataset:
    """Seeded subsample of n records, stratified by attack type."""
    if n <= 0:
        raise ArgumentError("subsample size must be positive")
    total = len(dataset)
    if n >= total:
        return dataset
    rng = np.random.default_rng(seed)
    counts = np.bincount(dataset.attacks, minlength=len(ATTACK_VOCAB))
    exact = counts * (n / total)
    quota = np.floor(exact).astype(int)
    remainder = exact - quota
    # Largest remainder keeps the total exactly n.
    for i in np.argsort(-remainder)[: n - quota.sum()]:
        quota[i] += 1
    picked = []
    for code, k in enumerate(quota):
        if k == 0:
            continue
        pool = np.flatnonzero(dataset.attacks == code)
        picked.append(rng.choice(pool, size=min(k, pool.size), replace=False))
    idx = np.sort(np.concatenate(picked))
    out = dataset.take(idx)
    out.provenance = f"{dataset.provenance}|subsample:{n}:{seed}"
    return out


def save_dataset(dataset: Dataset, path) -> None:
    """Columnar binary cache with embedded stats and provenance."""
    meta = {
        "provenance": dataset.provenance,
        "imputed_counts": dataset.imputed_counts,
        "skipped_rows": dataset.skipped_rows,
        "has_stats": dataset.norm_min is not None,
    }
    arrays = {
        "features": dataset.features,
        "labels": dataset.labels,
        "attacks": dataset.attacks,
        "stations": dataset.stations,
        "meta": np.array(json.dumps(meta, sort_keys=True)),
    }
    if dataset.norm_min is not None:
        arrays["norm_min"] = dataset.norm_min
        arrays["norm_max"] = dataset.norm_max
    with open(path, "wb") as fh:
        np.savez(fh, **arrays)


def load_dataset(path) -> Dataset:
    path = Path(path)
    if not path.exists():
        raise DataError(f"dataset cache not found: {path}")
    with np.load(path, allow_pickle=False) as data:
        meta = json.loads(str(data["meta"]))
        return Dataset(
            features=data["features"].copy(),
            labels=data["labels"].copy(),
            attacks=data["attacks"].copy(),
            stations=data["stations"].copy(),
            norm_min=data["norm_min"].copy() if meta["has_stats"] else None,
            norm_max=data["norm_max"].copy() if meta["has_stats"] else None,
            provenance=meta["provenance"],
            imputed_counts=meta["imputed_counts"],
            skipped_rows=meta["skipped_rows"],
        )


def file_sha256(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()
