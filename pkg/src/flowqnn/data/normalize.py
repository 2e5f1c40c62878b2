"""Per-feature min-max normalization to [0, 1], fitted on the training side.

Test values are normalized with the training min/max and clamped to [0, 1];
features that are constant on the training side map to 0 everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError
from .flows import Dataset


@dataclass(frozen=True)
class NormalizationStats:
    minimum: np.ndarray
    maximum: np.ndarray

    @property
    def span(self) -> np.ndarray:
        return self.maximum - self.minimum


def fit_stats(train: Dataset) -> NormalizationStats:
    if len(train) == 0:
        raise ArgumentError("cannot fit normalization stats on an empty dataset")
    return NormalizationStats(
        minimum=train.features.min(axis=0),
        maximum=train.features.max(axis=0),
    )


def apply_stats(dataset: Dataset, stats: NormalizationStats) -> Dataset:
    span = stats.span.copy()
    constant = span == 0.0
    span[constant] = 1.0
    scaled = (dataset.features - stats.minimum) / span
    scaled[:, constant] = 0.0
    np.clip(scaled, 0.0, 1.0, out=scaled)
    out = dataset.take(np.arange(len(dataset)))
    out.features = scaled
    out.norm_min = stats.minimum.copy()
    out.norm_max = stats.maximum.copy()
    return out


def normalize(train: Dataset, test: Dataset) -> tuple[Dataset, Dataset]:
    """Fit on train, apply to both; test values are clamped to [0, 1]."""
    stats = fit_stats(train)
    return apply_stats(train, stats), apply_stats(test, stats)
