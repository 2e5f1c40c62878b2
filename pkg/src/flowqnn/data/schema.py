"""Flow-record vocabulary and the CSV schema map.

The 28 selected flow features, the attack-type inventory, and the two
capture sites are fixed; the schema map binds those logical names to the
concrete column headers of a given CSV export.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import SchemaError

FEATURE_NAMES = (
    "Dur", "STtl", "dTtl", "TotPkts", "SrcPkts", "DstPkts", "TotBytes",
    "SrcBytes", "DstBytes", "Offset", "sMeanpktSz", "dMeanPktSz", "Load",
    "SrcLoad", "DstLoad", "Loss", "SrcLoss", "DstLoss", "SrcWin", "DstWin",
    "TcpRtt", "SynAck", "AckDat", "Rate", "SrcRate", "DstRate",
    "SrcTCPBase", "DstTCPBase",
)

N_FEATURES = len(FEATURE_NAMES)

BENIGN = "Benign"

ATTACK_TYPES = (
    "UDPFlood", "HTTPFlood", "SlowrateDoS", "TCPConnectScan",
    "SYNScan", "UDPScan", "SYNFlood", "ICMPFlood",
)

# Attack classes below 2% of the dataset, merged into one held-out group.
REMAIN_TYPES = ("TCPConnectScan", "SYNScan", "UDPScan", "SYNFlood", "ICMPFlood")

ATTACK_VOCAB = (BENIGN,) + ATTACK_TYPES

BASE_STATIONS = ("BS1", "BS2")

_BENIGN_VALUES = {"benign", "legitimate", "normal", "0"}
_MALICIOUS_VALUES = {"malicious", "attack", "1"}


def _canon(value: str) -> str:
    return re.sub(r"[\s_\-]", "", value).lower()


_ATTACK_LOOKUP = {_canon(name): name for name in ATTACK_VOCAB}
_STATION_LOOKUP = {_canon(name): name for name in BASE_STATIONS}
_STATION_LOOKUP.update({"basestation1": "BS1", "basestation2": "BS2", "1": "BS1", "2": "BS2"})


def parse_label(value: str) -> int | None:
    """1 for malicious, 0 for benign, None if unrecognized."""
    v = value.strip().lower()
    if v in _MALICIOUS_VALUES:
        return 1
    if v in _BENIGN_VALUES:
        return 0
    return None


def parse_attack(value: str) -> str | None:
    return _ATTACK_LOOKUP.get(_canon(value))


def parse_station(value: str) -> str | None:
    return _STATION_LOOKUP.get(_canon(value))


@dataclass
class SchemaMap:
    """Binds logical field names to CSV column headers (JSON-loadable)."""

    label_column: str = "Label"
    attack_column: str = "Attack Type"
    station_column: str = "Base Station"
    feature_columns: dict[str, str] = field(default_factory=dict)
    # For per-station exports without a station column.
    station_default: str | None = None

    def column_for(self, feature: str) -> str:
        return self.feature_columns.get(feature, feature)

    @classmethod
    def from_json(cls, path) -> "SchemaMap":
        raw = json.loads(Path(path).read_text())
        known = {"label_column", "attack_column", "station_column",
                 "feature_columns", "station_default"}
        unknown = set(raw) - known
        if unknown:
            raise SchemaError(f"unknown schema-map keys: {sorted(unknown)}")
        return cls(**raw)
