"""Per-run reports, the trade-off rule, and cross-run aggregation."""

from __future__ import annotations

import statistics
from dataclasses import asdict, dataclass, field

import numpy as np

from ..errors import ArgumentError, UsageError


def tradeoff_point(train_acc, test_acc) -> tuple[int, float, float]:
    """Epoch where the train/test accuracy curves cross.

    If (train - test) changes sign between consecutive epochs, the later
    epoch of the first crossing wins; otherwise the earliest epoch with the
    minimum |train - test|. Returns (epoch, train_acc, test_acc).
    """
    train = np.asarray(train_acc, dtype=np.float64)
    test = np.asarray(test_acc, dtype=np.float64)
    if train.shape != test.shape or train.ndim != 1:
        raise ArgumentError("curves must be 1-D and of equal length")
    if train.size == 0:
        raise ArgumentError("curves must be nonempty")
    diff = train - test
    for i in range(1, diff.size):
        if diff[i - 1] * diff[i] < 0.0:
            return i, float(train[i]), float(test[i])
    i = int(np.argmin(np.abs(diff)))  # argmin takes the earliest tie
    return i, float(train[i]), float(test[i])


@dataclass
class RunReport:
    """Everything recorded about one training run."""

    variant: str
    seed: int
    epochs: int
    train_acc: list[float] = field(default_factory=list)
    test_acc: list[float] = field(default_factory=list)
    train_loss: list[float] = field(default_factory=list)
    val_loss: list[float] = field(default_factory=list)
    tradeoff_epoch: int | None = None
    tradeoff_train_acc: float | None = None
    tradeoff_test_acc: float | None = None
    restart_log: list[dict] = field(default_factory=list)
    disregard: list[int] | None = None
    pqc_depth: int | None = None
    successful: bool = True
    diagnostic: str | None = None
    experiment: str = ""
    run_index: int = 0
    unseen_attack_acc: float | None = None
    existing_attack_acc: float | None = None
    wall_clock_s: float = 0.0

    @property
    def final_train_acc(self) -> float | None:
        return self.train_acc[-1] if self.train_acc else None

    @property
    def final_test_acc(self) -> float | None:
        return self.test_acc[-1] if self.test_acc else None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["final_train_acc"] = self.final_train_acc
        d["final_test_acc"] = self.final_test_acc
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        d = {k: v for k, v in d.items() if k in cls.__dataclass_fields__}
        return cls(**d)


def final_epoch_metrics(report: RunReport) -> dict[str, float]:
    """Unseen- and existing-attack accuracy of a leave-attack-out run."""
    if not report.experiment.startswith("e3"):
        raise UsageError("final-epoch attack metrics only apply to e3 runs")
    return {
        "unseen_attack_acc": report.unseen_attack_acc,
        "existing_attack_acc": report.existing_attack_acc,
    }


@dataclass
class AggregateReport:
    """Mean (and, for leave-attack-out, median) across a variant's runs."""

    variant: str
    experiment: str
    n_runs: int
    n_successful: int
    final_test_acc_per_run: list[float]
    mean_final_test_acc: float | None
    median_final_test_acc: float | None
    mean_final_train_acc: float | None
    mean_tradeoff_test_acc: float | None
    mean_tradeoff_train_acc: float | None
    mean_unseen_attack_acc: float | None
    mean_existing_attack_acc: float | None

    def to_dict(self) -> dict:
        return asdict(self)


def _mean(values) -> float | None:
    values = [v for v in values if v is not None]
    return float(np.mean(values)) if values else None


def aggregate_runs(variant: str, experiment: str, reports: list[RunReport]) -> AggregateReport:
    """Aggregate final metrics over successful runs only."""
    ok = [r for r in reports if r.successful]
    finals = [r.final_test_acc for r in ok]
    is_e3 = experiment.startswith("e3")
    return AggregateReport(
        variant=variant,
        experiment=experiment,
        n_runs=len(reports),
        n_successful=len(ok),
        final_test_acc_per_run=[float(v) for v in finals],
        mean_final_test_acc=_mean(finals),
        median_final_test_acc=float(statistics.median(finals)) if is_e3 and finals else None,
        mean_final_train_acc=_mean([r.final_train_acc for r in ok]),
        mean_tradeoff_test_acc=_mean([r.tradeoff_test_acc for r in ok]),
        mean_tradeoff_train_acc=_mean([r.tradeoff_train_acc for r in ok]),
        mean_unseen_attack_acc=_mean([r.unseen_attack_acc for r in ok]) if is_e3 else None,
        mean_existing_attack_acc=_mean([r.existing_attack_acc for r in ok]) if is_e3 else None,
    )
