"""Canonical names of the six detector variants and their CLI aliases."""

CNN = "CNN"
QCNN_ANGLE = "QCNNAnE"
QCNN_AMPLITUDE = "QCNNAmE"
QCNN_MULTILAYER = "QCNNMlayer"
QUANCONV = "QuanConvCNN"
QUANVOLUTION = "QuanvolutionNN"

ALL_VARIANTS = (CNN, QCNN_ANGLE, QCNN_AMPLITUDE, QCNN_MULTILAYER, QUANCONV, QUANVOLUTION)

CLI_NAMES = {
    "cnn": CNN,
    "qcnn-ane": QCNN_ANGLE,
    "qcnn-ame": QCNN_AMPLITUDE,
    "qcnn-mlayer": QCNN_MULTILAYER,
    "quanconv": QUANCONV,
    "quanvolution": QUANVOLUTION,
}

CANONICAL_TO_CLI = {v: k for k, v in CLI_NAMES.items()}

DESCRIPTIONS = {
    CNN: "classical 1D CNN baseline (two conv/pool stages, dense head)",
    QCNN_ANGLE: "conv block, dense projection, angle-embedded quantum layer",
    QCNN_AMPLITUDE: "conv block, 16 features amplitude-embedded on 4 qubits",
    QCNN_MULTILAYER: "conv block, four parallel 4-qubit quantum layers (16 qubits)",
    QUANCONV: "conv block, 6-qubit quantum stage with two disregarded qubits",
    QUANVOLUTION: "fixed 2-qubit quanvolution front end, then the classical CNN",
}


def canonical_variant(name: str) -> str:
    """Resolve a CLI alias or canonical name; raises ValueError otherwise."""
    if name in ALL_VARIANTS:
        return name
    key = name.strip().lower()
    if key in CLI_NAMES:
        return CLI_NAMES[key]
    raise ValueError(f"unknown variant {name!r}; choose from {sorted(CLI_NAMES)}")
