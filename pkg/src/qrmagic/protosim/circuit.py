"""Gate-list circuit IR and Pauli-frame propagation.

The op set mirrors the stabilizer generating set used throughout: Pauli
gates, H, S/S^dagger, X/Z preparations and destructive measurements, the
one-control many-target CNOT, and a magic-state injection op standing
for a teleported Z(pi/2^k) (diagonal, with its adaptive lower-order
correction folded in and treated as error-free).

Pauli frames track accumulated X/Z errors modulo global phase.  An
X-type frame component cannot be pushed through an injection (the
conjugated operator is no longer Pauli), so propagation raises in that
case; the dephasing error model used by the enumeration oracle only ever
sends Z components through injections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from ..gf2 import BitVector


class CircuitError(ValueError):
    """Malformed circuit (bad index, op after destructive measurement, ...)."""


class NonCliffordFrameError(ValueError):
    """An X-type frame component hit a non-Clifford diagonal injection."""


@dataclass(frozen=True)
class PrepZero:
    q: int


@dataclass(frozen=True)
class PrepPlus:
    q: int


@dataclass(frozen=True)
class Cnot:
    control: int
    targets: tuple[int, ...]


@dataclass(frozen=True)
class Hadamard:
    q: int


@dataclass(frozen=True)
class PhaseS:
    q: int


@dataclass(frozen=True)
class PhaseSDagger:
    q: int


@dataclass(frozen=True)
class PauliX:
    q: int


@dataclass(frozen=True)
class PauliZ:
    q: int


@dataclass(frozen=True)
class MeasureX:
    q: int


@dataclass(frozen=True)
class MeasureZ:
    q: int


@dataclass(frozen=True)
class InjectZk:
    """Teleported Z(pi/2^k) on one qubit.

    ``adaptive`` marks that the teleportation's conditional lower-order
    correction is applied (and accounted as error-free here; its
    resource cost lives in the recursion of the resources module).
    """

    q: int
    k: int
    adaptive: bool = True


Op = (
    PrepZero
    | PrepPlus
    | Cnot
    | Hadamard
    | PhaseS
    | PhaseSDagger
    | PauliX
    | PauliZ
    | MeasureX
    | MeasureZ
    | InjectZk
)

_SINGLE_QUBIT = (PrepZero, PrepPlus, Hadamard, PhaseS, PhaseSDagger,
                 PauliX, PauliZ, MeasureX, MeasureZ, InjectZk)


@dataclass(frozen=True)
class PauliFrame:
    """Accumulated X/Z error masks over the circuit's qubits."""

    x_mask: BitVector
    z_mask: BitVector

    @classmethod
    def identity(cls, n: int) -> "PauliFrame":
        return cls(BitVector.zeros(n), BitVector.zeros(n))

    @classmethod
    def z_errors(cls, n: int, qubits: Iterable[int]) -> "PauliFrame":
        bits = 0
        for q in qubits:
            bits |= 1 << q
        return cls(BitVector.zeros(n), BitVector(bits, n))


class CliffordCircuit:
    """Ordered gate list over a fixed register.

    Measurements are destructive: once a qubit is measured, further ops
    on it require a fresh preparation first.
    """

    def __init__(self, qubit_count: int, ops: Iterable[Op]):
        ops = tuple(ops)
        if qubit_count < 0:
            raise CircuitError("negative qubit count")
        measured: set[int] = set()
        n_meas = 0
        for op in ops:
            qubits = ((op.control, *op.targets) if isinstance(op, Cnot)
                      else (op.q,))
            for q in qubits:
                if not 0 <= q < qubit_count:
                    raise CircuitError("qubit %d out of range" % q)
            if isinstance(op, Cnot):
                if len(set(qubits)) != len(qubits):
                    raise CircuitError("CNOT with repeated qubit %r" % (op,))
                if not op.targets:
                    raise CircuitError("CNOT needs at least one target")
            if isinstance(op, (PrepZero, PrepPlus)):
                measured.discard(op.q)
            else:
                stale = [q for q in qubits if q in measured]
                if stale:
                    raise CircuitError(
                        "op %r touches measured qubit %d without re-preparation"
                        % (op, stale[0])
                    )
            if isinstance(op, (MeasureX, MeasureZ)):
                measured.add(op.q)
                n_meas += 1
        self.qubit_count = qubit_count
        self.ops = ops
        self.measurement_count = n_meas

    def __repr__(self) -> str:
        return "CliffordCircuit(%d qubits, %d ops)" % (self.qubit_count, len(self.ops))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CliffordCircuit)
                and self.qubit_count == other.qubit_count
                and self.ops == other.ops)


def _propagate_ints(
    circuit: CliffordCircuit,
    x: int,
    z: int,
    z_after: Mapping[int, int] | None = None,
    start: int = 0,
    meas_offset: int = 0,
) -> tuple[int, int, int]:
    """Core propagation on packed ints.

    ``z_after[i]`` is a Z-error mask XORed in right after op ``i``
    executes (faulty-gate model).  Ops before ``start`` are assumed to
    see a zero frame; ``meas_offset`` counts their measurements so flip
    indices stay aligned with the full circuit.

    Returns (measurement_flips, x, z).
    """
    flips = 0
    meas_idx = meas_offset
    for i in range(start, len(circuit.ops)):
        op = circuit.ops[i]
        if isinstance(op, Cnot):
            cbit = 1 << op.control
            xc = x & cbit
            for t in op.targets:
                tbit = 1 << t
                if xc:
                    x ^= tbit
                if z & tbit:
                    z ^= cbit
        elif isinstance(op, InjectZk):
            if x & (1 << op.q):
                raise NonCliffordFrameError(
                    "X frame component on qubit %d meets a Z_%d injection"
                    % (op.q, op.k)
                )
        elif isinstance(op, MeasureX):
            if z & (1 << op.q):
                flips |= 1 << meas_idx
            x &= ~(1 << op.q)
            z &= ~(1 << op.q)
            meas_idx += 1
        elif isinstance(op, MeasureZ):
            if x & (1 << op.q):
                flips |= 1 << meas_idx
            x &= ~(1 << op.q)
            z &= ~(1 << op.q)
            meas_idx += 1
        elif isinstance(op, (PrepZero, PrepPlus)):
            x &= ~(1 << op.q)
            z &= ~(1 << op.q)
        elif isinstance(op, Hadamard):
            bit = 1 << op.q
            bx = x & bit
            bz = z & bit
            if bool(bx) != bool(bz):
                x ^= bit
                z ^= bit
        elif isinstance(op, (PhaseS, PhaseSDagger)):
            if x & (1 << op.q):
                z ^= 1 << op.q
        # PauliX / PauliZ commute with the frame up to phase: no effect
        if z_after is not None:
            extra = z_after.get(i)
            if extra:
                z ^= extra
    return flips, x, z


def propagate_frame(
    circuit: CliffordCircuit, initial: PauliFrame | None = None
) -> tuple[BitVector, PauliFrame]:
    """Push a Pauli frame through the circuit.

    Returns the measurement flips (bit i set iff recorded outcome i is
    inverted relative to the error-free run) and the residual frame.
    Propagation is linear: flips(e1 XOR e2) = flips(e1) XOR flips(e2).
    """
    n = circuit.qubit_count
    if initial is None:
        initial = PauliFrame.identity(n)
    if initial.x_mask.n != n or initial.z_mask.n != n:
        raise CircuitError("frame length does not match qubit count")
    flips, x, z = _propagate_ints(circuit, initial.x_mask.bits, initial.z_mask.bits)
    return (
        BitVector(flips, circuit.measurement_count),
        PauliFrame(BitVector(x, n), BitVector(z, n)),
    )


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def _op_to_line(op: Op) -> str:
    if isinstance(op, PrepZero):
        return "PREP_ZERO %d" % op.q
    if isinstance(op, PrepPlus):
        return "PREP_PLUS %d" % op.q
    if isinstance(op, Cnot):
        return "CNOT %s" % ",".join(str(q) for q in (op.control, *op.targets))
    if isinstance(op, Hadamard):
        return "H %d" % op.q
    if isinstance(op, PhaseS):
        return "S %d" % op.q
    if isinstance(op, PhaseSDagger):
        return "SDG %d" % op.q
    if isinstance(op, PauliX):
        return "X %d" % op.q
    if isinstance(op, PauliZ):
        return "Z %d" % op.q
    if isinstance(op, MeasureX):
        return "MEASURE_X %d" % op.q
    if isinstance(op, MeasureZ):
        return "MEASURE_Z %d" % op.q
    if isinstance(op, InjectZk):
        suffix = "" if op.adaptive else "_BARE"
        return "INJECT_Z%d%s %d" % (op.k, suffix, op.q)
    raise CircuitError("unknown op %r" % (op,))


def circuit_to_text(circuit: CliffordCircuit) -> str:
    """Plain gate-list export: `QUBITS n` then one `OP q[,q...]` per line."""
    lines = ["QUBITS %d" % circuit.qubit_count]
    lines.extend(_op_to_line(op) for op in circuit.ops)
    return "\n".join(lines) + "\n"


def circuit_from_text(text: str) -> CliffordCircuit:
    """Exact inverse of :func:`circuit_to_text`."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("QUBITS "):
        raise CircuitError("missing QUBITS header")
    n = int(lines[0].split()[1])
    ops: list[Op] = []
    simple = {
        "PREP_ZERO": PrepZero,
        "PREP_PLUS": PrepPlus,
        "H": Hadamard,
        "S": PhaseS,
        "SDG": PhaseSDagger,
        "X": PauliX,
        "Z": PauliZ,
        "MEASURE_X": MeasureX,
        "MEASURE_Z": MeasureZ,
    }
    for line in lines[1:]:
        try:
            name, args = line.split(None, 1)
        except ValueError:
            raise CircuitError("malformed line %r" % line)
        qubits = [int(tok) for tok in args.split(",")]
        if name in simple:
            if len(qubits) != 1:
                raise CircuitError("%s takes one qubit: %r" % (name, line))
            ops.append(simple[name](qubits[0]))
        elif name == "CNOT":
            if len(qubits) < 2:
                raise CircuitError("CNOT needs control and target: %r" % line)
            ops.append(Cnot(qubits[0], tuple(qubits[1:])))
        elif name.startswith("INJECT_Z"):
            body = name[len("INJECT_Z"):]
            adaptive = not body.endswith("_BARE")
            if not adaptive:
                body = body[: -len("_BARE")]
            if len(qubits) != 1:
                raise CircuitError("injection takes one qubit: %r" % line)
            ops.append(InjectZk(qubits[0], int(body), adaptive))
        else:
            raise CircuitError("unknown op %r" % name)
    return CliffordCircuit(n, ops)


def circuit_to_qasm(circuit: CliffordCircuit) -> str:
    """Version-2-style QASM rendering.

    Injections are non-Clifford, so they are emitted as commented
    teleportation macros rather than gates.  This format is one way
    (no parser).
    """
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        "qreg q[%d];" % circuit.qubit_count,
        "creg c[%d];" % max(circuit.measurement_count, 1),
    ]
    meas = 0
    for op in circuit.ops:
        if isinstance(op, PrepZero):
            lines.append("reset q[%d];" % op.q)
        elif isinstance(op, PrepPlus):
            lines.append("reset q[%d];" % op.q)
            lines.append("h q[%d];" % op.q)
        elif isinstance(op, Cnot):
            for t in op.targets:
                lines.append("cx q[%d],q[%d];" % (op.control, t))
        elif isinstance(op, Hadamard):
            lines.append("h q[%d];" % op.q)
        elif isinstance(op, PhaseS):
            lines.append("s q[%d];" % op.q)
        elif isinstance(op, PhaseSDagger):
            lines.append("sdg q[%d];" % op.q)
        elif isinstance(op, PauliX):
            lines.append("x q[%d];" % op.q)
        elif isinstance(op, PauliZ):
            lines.append("z q[%d];" % op.q)
        elif isinstance(op, MeasureX):
            lines.append("h q[%d];" % op.q)
            lines.append("measure q[%d] -> c[%d];" % (op.q, meas))
            meas += 1
        elif isinstance(op, MeasureZ):
            lines.append("measure q[%d] -> c[%d];" % (op.q, meas))
            meas += 1
        elif isinstance(op, InjectZk):
            corr = "adaptive Z_%d correction" % (op.k - 1) if op.adaptive else "no correction"
            lines.append(
                "// inject Z_%d on q[%d] by teleportation: "
                "cx q[%d],magic; measure_z magic; %s" % (op.k, op.q, op.q, corr)
            )
    return "\n".join(lines) + "\n"
