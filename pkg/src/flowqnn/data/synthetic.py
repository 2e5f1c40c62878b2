"""Synthetic flow traffic for desk-scale runs and tests.

``generate_flows`` mimics the real dataset's shape: nine traffic classes
with realistic proportions, two base stations with shifted distributions,
and a handful of type-specific feature signatures so detectors have
something to learn. ``make_separable`` builds the linearly separable toy
set used by training-sanity checks; its labels come from a fixed threshold
rule, which doubles as the test oracle.
"""

from __future__ import annotations

import numpy as np
import pandas as pd

from .schema import ATTACK_TYPES, BENIGN, FEATURE_NAMES, N_FEATURES

# Rough class proportions of the real capture (benign ~39%, floods dominant).
_CLASS_WEIGHTS = {
    BENIGN: 0.393,
    "UDPFlood": 0.376,
    "HTTPFlood": 0.116,
    "SlowrateDoS": 0.060,
    "TCPConnectScan": 0.0165,
    "SYNScan": 0.0165,
    "UDPScan": 0.0131,
    "SYNFlood": 0.0080,
    "ICMPFlood": 0.0009,
}

_IDX = {name: i for i, name in enumerate(FEATURE_NAMES)}

# Multiplicative signatures on top of the benign baseline.
_SIGNATURES = {
    "UDPFlood": {"Rate": 40.0, "TotPkts": 25.0, "SrcPkts": 30.0, "Load": 35.0,
                 "SrcLoad": 30.0, "TotBytes": 20.0, "SrcBytes": 25.0, "Dur": 0.2},
    "HTTPFlood": {"TotPkts": 8.0, "DstPkts": 6.0, "Load": 10.0, "DstLoad": 8.0,
                  "TcpRtt": 3.0, "AckDat": 5.0, "TotBytes": 9.0},
    "SlowrateDoS": {"Dur": 12.0, "TcpRtt": 8.0, "SynAck": 6.0, "Rate": 0.1,
                    "Load": 0.15, "Loss": 4.0},
    "TCPConnectScan": {"Dur": 0.1, "TotPkts": 0.3, "SynAck": 10.0, "TcpRtt": 2.0,
                       "SrcWin": 3.0, "TotBytes": 0.2},
    "SYNScan": {"Dur": 0.08, "TotPkts": 0.2, "SynAck": 12.0, "SrcWin": 4.0,
                "DstBytes": 0.1},
    "UDPScan": {"Dur": 0.1, "TotPkts": 0.25, "Rate": 5.0, "SrcRate": 6.0,
                "DstBytes": 0.15},
    "SYNFlood": {"Rate": 30.0, "SrcPkts": 20.0, "SynAck": 15.0, "Dur": 0.15,
                 "SrcLoad": 25.0},
    "ICMPFlood": {"Rate": 25.0, "TotPkts": 18.0, "Load": 20.0, "Dur": 0.2,
                  "SrcWin": 0.0, "DstWin": 0.0},
}

# BS2 shifts a few features to emulate site-dependent distributions.
_STATION_SHIFT = {"Load": 1.4, "SrcLoad": 1.3, "Rate": 1.25, "TcpRtt": 0.8,
                  "sMeanpktSz": 1.2, "Offset": 1.5}


def _baseline(rng: np.random.Generator, n: int) -> np.ndarray:
    base = np.abs(rng.lognormal(mean=1.0, sigma=0.8, size=(n, N_FEATURES)))
    # TCP bases are large identifiers; TTL-ish fields small integers.
    base[:, _IDX["SrcTCPBase"]] = rng.integers(0, 2**31, size=n)
    base[:, _IDX["DstTCPBase"]] = rng.integers(0, 2**31, size=n)
    base[:, _IDX["STtl"]] = rng.integers(30, 128, size=n)
    base[:, _IDX["dTtl"]] = rng.integers(30, 128, size=n)
    return base


def generate_flows(n: int, seed: int = 0, bs1_fraction: float = 0.6) -> pd.DataFrame:
    """Synthetic flow table with Label / Attack Type / Base Station columns."""
    rng = np.random.default_rng(seed)
    classes = list(_CLASS_WEIGHTS)
    weights = np.array(list(_CLASS_WEIGHTS.values()))
    weights = weights / weights.sum()
    kinds = rng.choice(len(classes), size=n, p=weights)
    stations = np.where(rng.random(n) < bs1_fraction, "BS1", "BS2")
    feats = _baseline(rng, n)
    for k, name in enumerate(classes):
        rows = kinds == k
        if name == BENIGN or not rows.any():
            continue
        for feat, factor in _SIGNATURES[name].items():
            feats[rows, _IDX[feat]] *= factor * rng.lognormal(0.0, 0.15, size=int(rows.sum()))
    bs2 = stations == "BS2"
    for feat, factor in _STATION_SHIFT.items():
        feats[bs2, _IDX[feat]] *= factor
    attack = np.array([classes[k] for k in kinds])
    frame = pd.DataFrame(feats, columns=list(FEATURE_NAMES))
    frame["Label"] = np.where(attack == BENIGN, "Benign", "Malicious")
    frame["Attack Type"] = attack
    frame["Base Station"] = stations
    return frame


def write_flow_csv(path, n: int, seed: int = 0, bs1_fraction: float = 0.6) -> None:
    generate_flows(n, seed=seed, bs1_fraction=bs1_fraction).to_csv(path, index=False)


# Toy threshold rule on the first two features; the rest is uniform noise.
SEPARABLE_W0, SEPARABLE_W1, SEPARABLE_CUT = 0.6, 0.4, 0.5


def separable_rule(x: np.ndarray) -> np.ndarray:
    """The generating label rule (the oracle for training-sanity checks)."""
    return (SEPARABLE_W0 * x[:, 0] + SEPARABLE_W1 * x[:, 1] > SEPARABLE_CUT).astype(np.uint8)


def make_separable(n: int, seed: int = 0, margin: float = 0.04,
                   n_features: int = N_FEATURES) -> tuple[np.ndarray, np.ndarray]:
    """Separable toy set in [0, 1]^d with a margin around the decision line."""
    rng = np.random.default_rng(seed)
    rows = []
    while sum(len(r) for r in rows) < n:
        cand = rng.random((2 * n, n_features))
        score = SEPARABLE_W0 * cand[:, 0] + SEPARABLE_W1 * cand[:, 1]
        rows.append(cand[np.abs(score - SEPARABLE_CUT) >= margin])
    x = np.concatenate(rows)[:n]
    return x, separable_rule(x)
