"""The three experiment split protocols.

All splits are deterministic in (data, seed), partition the input (train
and test are disjoint; together they cover it, up to majority-class rows
removed by balancing), and never leak test rows into training.
"""

from __future__ import annotations

import numpy as np

from ..errors import ArgumentError, DataError
from .flows import Dataset
from .schema import ATTACK_VOCAB, BASE_STATIONS, REMAIN_TYPES

_ATTACK_CODE = {name: i for i, name in enumerate(ATTACK_VOCAB)}
_STATION_CODE = {name: i for i, name in enumerate(BASE_STATIONS)}

HELDOUT_CHOICES = ("UDPFlood", "HTTPFlood", "SlowrateDoS", "RemainType")


def _largest_remainder(counts: np.ndarray, total: int) -> np.ndarray:
    """Integer quotas proportional to counts that sum exactly to total."""
    exact = counts * (total / counts.sum())
    quota = np.floor(exact).astype(int)
    for i in np.argsort(-(exact - quota))[: total - quota.sum()]:
        quota[i] += 1
    return quota


def split_exp1(dataset: Dataset, ratio: float = 0.7, seed: int = 0) -> tuple[Dataset, Dataset]:
    """Uniform random split stratified by label; sizes within 1 of ratio*N."""
    if not 0.0 < ratio < 1.0:
        raise ArgumentError("split ratio must be in (0, 1)")
    if len(dataset) == 0:
        raise ArgumentError("cannot split an empty dataset")
    rng = np.random.default_rng(seed)
    n_train = int(round(ratio * len(dataset)))
    groups = [np.flatnonzero(dataset.labels == v) for v in (0, 1)]
    sizes = np.array([g.size for g in groups])
    quotas = _largest_remainder(sizes, n_train)
    train_idx, test_idx = [], []
    for group, quota in zip(groups, quotas):
        if group.size == 0:
            continue
        perm = rng.permutation(group)
        train_idx.append(perm[:quota])
        test_idx.append(perm[quota:])
    return (
        dataset.take(np.sort(np.concatenate(train_idx))),
        dataset.take(np.sort(np.concatenate(test_idx))),
    )


def balance_downsample(dataset: Dataset, seed: int) -> Dataset:
    """Downsample the majority label class to the minority count (seeded)."""
    rng = np.random.default_rng(seed)
    benign = np.flatnonzero(dataset.labels == 0)
    malicious = np.flatnonzero(dataset.labels == 1)
    if benign.size == 0 or malicious.size == 0:
        return dataset
    minority = min(benign.size, malicious.size)
    majority = benign if benign.size > malicious.size else malicious
    keep_major = rng.choice(majority, size=minority, replace=False)
    other = malicious if majority is benign else benign
    return dataset.take(np.sort(np.concatenate([keep_major, other])))


def split_exp2(dataset: Dataset, direction: str, balance: bool = False,
               seed: int = 0) -> tuple[Dataset, Dataset]:
    """Train on one base station, test on the other.

    direction is "BS1->BS2" or "BS2->BS1" (train side first).
    """
    try:
        source, target = direction.replace(" ", "").split("->")
        source_code = _STATION_CODE[source]
        target_code = _STATION_CODE[target]
    except (ValueError, KeyError):
        raise ArgumentError(f"direction must be 'BS1->BS2' or 'BS2->BS1', got {direction!r}")
    if source_code == target_code:
        raise ArgumentError("direction must name two different stations")
    source_idx = np.flatnonzero(dataset.stations == source_code)
    target_idx = np.flatnonzero(dataset.stations == target_code)
    if source_idx.size == 0 or target_idx.size == 0:
        missing = source if source_idx.size == 0 else target
        raise DataError(f"base station {missing} absent from the dataset")
    train = dataset.take(source_idx)
    if balance:
        train = balance_downsample(train, seed)
    return train, dataset.take(target_idx)


def heldout_attack_codes(heldout: str) -> list[int]:
    if heldout == "RemainType":
        return [_ATTACK_CODE[t] for t in REMAIN_TYPES]
    if heldout in HELDOUT_CHOICES:
        return [_ATTACK_CODE[heldout]]
    raise ArgumentError(f"held-out type must be one of {HELDOUT_CHOICES}, got {heldout!r}")


def split_exp3(dataset: Dataset, heldout: str, seed: int = 0) -> tuple[Dataset, Dataset]:
    """Leave one attack type (or the merged rare types) out of training.

    Test = every record of the held-out type(s), all malicious. Train =
    everything else, balanced by downsampling the majority label class.
    """
    codes = heldout_attack_codes(heldout)
    test_mask = np.isin(dataset.attacks, codes)
    if not test_mask.any():
        raise DataError(f"no records of held-out type {heldout} in the dataset")
    test = dataset.take(np.flatnonzero(test_mask))
    train = dataset.take(np.flatnonzero(~test_mask))
    return balance_downsample(train, seed), test


def holdout_slice(dataset: Dataset, fraction: float = 0.1, seed: int = 0) -> tuple[Dataset, Dataset]:
    """Split off a validation slice, stratified by attack type.

    Returns (rest, slice); the slice stays out of training and provides the
    existing-attack accuracy of leave-attack-out runs.
    """
    if not 0.0 < fraction < 1.0:
        raise ArgumentError("holdout fraction must be in (0, 1)")
    rng = np.random.default_rng(seed)
    n_slice = max(1, int(round(fraction * len(dataset))))
    counts = np.bincount(dataset.attacks, minlength=len(ATTACK_VOCAB))
    quotas = _largest_remainder(counts, n_slice)
    slice_idx = []
    for code, k in enumerate(quotas):
        if k == 0:
            continue
        pool = np.flatnonzero(dataset.attacks == code)
        slice_idx.append(rng.choice(pool, size=min(k, pool.size), replace=False))
    slice_idx = np.sort(np.concatenate(slice_idx))
    rest = np.setdiff1d(np.arange(len(dataset)), slice_idx)
    return dataset.take(rest), dataset.take(slice_idx)
