"""Teleportation and distillation circuit templates.

The distillation template encodes half a Bell pair into the shortened
quantum Reed-Muller code, injects the rotation transversally on every
code qubit, and measures all code qubits in the X basis.  Acceptance is
the trivial X-check syndrome; the all-qubit X parity reads out the
teleported logical, and a flipped readout leaves an uncorrected Z on the
output wire.  On acceptance the output wire carries the inverse-rotated
|+> state (the same circuit distills the conjugate state on conjugate
inputs).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..codes import CssCode, qrm
from .circuit import (
    CliffordCircuit,
    Cnot,
    InjectZk,
    MeasureX,
    MeasureZ,
    PrepPlus,
    PrepZero,
)
from .encoder import EncoderPlan, encoder_plan, synthesize_encoder


def build_zk_teleport(k: int) -> CliffordCircuit:
    """Two-wire teleportation template for the Z(pi/2^k) gate.

    Wire 0 is the data qubit, wire 1 consumes the rotated |+> resource
    state.  After CNOT(data -> resource) and a Z measurement of the
    resource wire, the outcome-1 branch needs the one-step-lower
    rotation as a correction (for k = 2 that correction is the Clifford
    S gate and adds no error).  Averaged over outcomes the correction
    fires half the time.
    """
    if k < 2:
        raise ValueError("teleportation template defined for k >= 2")
    return CliffordCircuit(
        2,
        [
            Cnot(0, (1,)),
            MeasureZ(1),
            InjectZk(0, k - 1, adaptive=True),
        ],
    )


@dataclass(frozen=True)
class DistillationProtocol:
    """A distillation circuit plus its classical accept/readout rules.

    ``error_sites`` lists (op_index, qubit) pairs where the dephasing
    error model may insert a Z fault (one per injected rotation);
    ``check_masks`` are measurement-index masks whose parities form the
    acceptance syndrome, and ``logical_mask`` is the readout parity
    whose flip leaves a Z error on the output wire.
    """

    k: int
    circuit: CliffordCircuit
    code: CssCode
    plan: EncoderPlan
    output_qubit: int
    error_sites: tuple[tuple[int, int], ...]
    check_masks: tuple[int, ...]
    logical_mask: int

    @property
    def n_inputs(self) -> int:
        return len(self.error_sites)


def build_distillation_circuit(k: int) -> DistillationProtocol:
    """Distillation template over the length-(2^(k+2)-1) code.

    Qubits 0..n-1 are the code block, qubit n is the Bell-half output
    wire that carries the distilled state on acceptance.
    """
    code = qrm(1, k + 2, shortened=True)
    n = code.n
    plan = encoder_plan(code)
    output = n

    ops: list = [PrepPlus(output), PrepZero(plan.input_qubit)]
    ops.append(Cnot(output, (plan.input_qubit,)))
    encoder = synthesize_encoder(code, plan)
    ops.extend(encoder.ops)

    error_sites: list[tuple[int, int]] = []
    for q in range(n):
        error_sites.append((len(ops), q))
        ops.append(InjectZk(q, k, adaptive=True))

    meas_index: dict[int, int] = {}
    for q in range(n):
        meas_index[q] = len(meas_index)
        ops.append(MeasureX(q))

    circuit = CliffordCircuit(n + 1, ops)

    check_masks = []
    for row in code.hx.rows:
        mask = 0
        for q in range(n):
            if row[q]:
                mask |= 1 << meas_index[q]
        check_masks.append(mask)
    logical_mask = 0
    for q in range(n):
        logical_mask |= 1 << meas_index[q]

    return DistillationProtocol(
        k=k,
        circuit=circuit,
        code=code,
        plan=plan,
        output_qubit=output,
        error_sites=tuple(error_sites),
        check_masks=tuple(check_masks),
        logical_mask=logical_mask,
    )
