"""Exact statevector simulation of the detectors' quantum layers."""

from .circuits import (
    AMPLITUDE,
    ANGLE,
    QuantumLayerSpec,
    apply_pqc_batch,
    check_weights,
    init_weights,
    pqc_layer,
    run_batch,
    run_circuit,
)
from .embeddings import (
    amplitude_embed,
    amplitude_embed_batch,
    angle_embed,
    angle_embed_batch,
)
from .gradients import (
    amplitude_input_gradients_batch,
    angle_input_gradients_batch,
    parameter_shift_grad,
    weight_gradients_batch,
)
from .statevector import (
    MAX_QUBITS,
    Statevector,
    apply_cnot,
    apply_rotation,
    expval_z,
    new_statevector,
)

__all__ = [
    "AMPLITUDE",
    "ANGLE",
    "MAX_QUBITS",
    "QuantumLayerSpec",
    "Statevector",
    "amplitude_embed",
    "amplitude_embed_batch",
    "amplitude_input_gradients_batch",
    "angle_embed",
    "angle_embed_batch",
    "angle_input_gradients_batch",
    "apply_cnot",
    "apply_pqc_batch",
    "apply_rotation",
    "check_weights",
    "expval_z",
    "init_weights",
    "new_statevector",
    "parameter_shift_grad",
    "pqc_layer",
    "run_batch",
    "run_circuit",
    "weight_gradients_batch",
]
