"""Clifford-circuit IR, encoder synthesis and exact protocol enumeration."""

from .circuit import (
    CliffordCircuit,
    Cnot,
    Hadamard,
    InjectZk,
    MeasureX,
    MeasureZ,
    NonCliffordFrameError,
    PauliFrame,
    PauliX,
    PauliZ,
    PhaseS,
    PhaseSDagger,
    PrepPlus,
    PrepZero,
    circuit_from_text,
    circuit_to_qasm,
    circuit_to_text,
    propagate_frame,
)
from .encoder import EncoderCheck, encoder_plan, synthesize_encoder, verify_encoder
from .distill import DistillationProtocol, build_distillation_circuit, build_zk_teleport
from .enumerate import (
    ProtocolPolynomials,
    enumerate_protocol,
    macwilliams_fastpath,
)

__all__ = [
    "CliffordCircuit",
    "Cnot",
    "Hadamard",
    "InjectZk",
    "MeasureX",
    "MeasureZ",
    "NonCliffordFrameError",
    "PauliFrame",
    "PauliX",
    "PauliZ",
    "PhaseS",
    "PhaseSDagger",
    "PrepPlus",
    "PrepZero",
    "circuit_from_text",
    "circuit_to_qasm",
    "circuit_to_text",
    "propagate_frame",
    "EncoderCheck",
    "encoder_plan",
    "synthesize_encoder",
    "verify_encoder",
    "DistillationProtocol",
    "build_distillation_circuit",
    "build_zk_teleport",
    "ProtocolPolynomials",
    "enumerate_protocol",
    "macwilliams_fastpath",
]
