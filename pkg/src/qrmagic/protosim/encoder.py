"""Encoder synthesis for one-logical-qubit CSS codes.

The circuit follows standard symplectic reduction: put the X checks in
reduced row-echelon form, reduce the logical X representative so it
avoids the pivot columns, then (a) fan the input qubit out over the
logical support and (b) fan each pivot qubit (prepared |+>) out over its
check row.  All gates are X-type CNOT fans, so the order between fans of
different controls is immaterial as long as the logical fan comes first.

Correctness is checked by conjugation, not by matching any particular
printed circuit: pushing single-qubit X/Z operators on the input wires
through the circuit must land exactly on the code's stabilizer
generators and logical operators (up to stabilizer multiplication).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..codes import CssCode
from ..gf2 import BitMatrix, BitVector, in_rowspan, row_reduce
from .circuit import CliffordCircuit, Cnot, PauliFrame, PrepPlus, PrepZero, propagate_frame


@dataclass(frozen=True)
class EncoderPlan:
    """Wire roles and reduced rows backing a synthesized encoder."""

    n: int
    pivots: tuple[int, ...]        # one |+> wire per X-check row
    rref_rows: tuple[int, ...]     # X checks in RREF, packed ints
    logical_x_bits: int            # pivot-free logical X representative
    input_qubit: int               # carries the state to be encoded
    ancillas: tuple[int, ...]      # |0> wires


def encoder_plan(code: CssCode) -> EncoderPlan:
    if code.k_logical != 1:
        raise ValueError("encoder synthesis requires exactly one logical qubit")
    red = row_reduce(code.hx)
    rows = red.matrix.row_ints()
    xbar = code.logical_x.bits if code.logical_x is not None else (1 << code.n) - 1
    for row, piv in zip(rows, red.pivot_columns):
        if (xbar >> piv) & 1:
            xbar ^= row
    if xbar == 0:
        raise ValueError("logical X lies in the X-check rowspan")
    input_qubit = (xbar & -xbar).bit_length() - 1
    pivot_set = set(red.pivot_columns)
    ancillas = tuple(
        q for q in range(code.n) if q not in pivot_set and q != input_qubit
    )
    return EncoderPlan(
        n=code.n,
        pivots=red.pivot_columns,
        rref_rows=tuple(rows),
        logical_x_bits=xbar,
        input_qubit=input_qubit,
        ancillas=ancillas,
    )


def _support(bits: int, skip: int) -> tuple[int, ...]:
    out = []
    q = 0
    while bits:
        if bits & 1 and q != skip:
            out.append(q)
        bits >>= 1
        q += 1
    return tuple(out)


def synthesize_encoder(code: CssCode, plan: EncoderPlan | None = None) -> CliffordCircuit:
    """Circuit mapping the input wire's state into the codespace.

    Pivot wires are prepared |+>, ancilla wires |0>; the input wire is
    left untouched (it carries the logical state, e.g. half a Bell
    pair).  A code with no checks yields the identity circuit.
    """
    if plan is None:
        plan = encoder_plan(code)
    ops: list = []
    ops.extend(PrepPlus(p) for p in plan.pivots)
    ops.extend(PrepZero(q) for q in plan.ancillas)
    fan = _support(plan.logical_x_bits, plan.input_qubit)
    if fan:
        ops.append(Cnot(plan.input_qubit, fan))
    for piv, row in zip(plan.pivots, plan.rref_rows):
        fan = _support(row, piv)
        if fan:
            ops.append(Cnot(piv, fan))
    return CliffordCircuit(plan.n, ops)


@dataclass(frozen=True)
class EncoderCheck:
    """Conjugation report for a synthesized encoder."""

    passed: bool
    x_generator_count: int
    z_generator_count: int
    failures: tuple[str, ...] = ()


def _unitary_part(circuit: CliffordCircuit) -> CliffordCircuit:
    """The CNOT network alone; conjugation is defined through the
    unitary, while the preparations fix which input Paulis stabilize."""
    ops = [op for op in circuit.ops if not isinstance(op, (PrepZero, PrepPlus))]
    return CliffordCircuit(circuit.qubit_count, ops)


def _conjugate_single(circuit: CliffordCircuit, n: int, qubit: int, pauli: str) -> PauliFrame:
    x = BitVector(1 << qubit, n) if pauli == "X" else BitVector.zeros(n)
    z = BitVector(1 << qubit, n) if pauli == "Z" else BitVector.zeros(n)
    _, frame = propagate_frame(circuit, PauliFrame(x, z))
    return frame


def verify_encoder(
    code: CssCode, circuit: CliffordCircuit, plan: EncoderPlan | None = None
) -> EncoderCheck:
    """Bit-exact symplectic check of an encoder.

    * X on each pivot wire must map into the X-check rowspan, and the
      images must span it.
    * Z on each ancilla wire must map into the Z-check rowspan, and the
      images must span it.
    * X (Z) on the input wire must map to a representative of the
      logical X (Z) coset: inside the span extended by the stored
      logical, outside the bare check span.
    """
    if plan is None:
        plan = encoder_plan(code)
    n = code.n
    circuit = _unitary_part(circuit)
    failures: list[str] = []
    hx_red = row_reduce(code.hx)
    hz_red = row_reduce(code.hz)

    x_images: list[BitVector] = []
    for piv in plan.pivots:
        frame = _conjugate_single(circuit, n, piv, "X")
        if not frame.z_mask.is_zero():
            failures.append("pivot %d image is not X-type" % piv)
            continue
        if not in_rowspan(code.hx, frame.x_mask, hx_red):
            failures.append("pivot %d image leaves the X-check span" % piv)
        x_images.append(frame.x_mask)
    if x_images and row_reduce(BitMatrix(x_images, n)).rank != hx_red.rank:
        failures.append("pivot images do not span the X checks")

    z_images: list[BitVector] = []
    for q in plan.ancillas:
        frame = _conjugate_single(circuit, n, q, "Z")
        if not frame.x_mask.is_zero():
            failures.append("ancilla %d image is not Z-type" % q)
            continue
        if not in_rowspan(code.hz, frame.z_mask, hz_red):
            failures.append("ancilla %d image leaves the Z-check span" % q)
        z_images.append(frame.z_mask)
    if z_images and row_reduce(BitMatrix(z_images, n)).rank != hz_red.rank:
        failures.append("ancilla images do not span the Z checks")

    logical_x = code.logical_x if code.logical_x is not None else BitVector.ones(n)
    logical_z = code.logical_z if code.logical_z is not None else BitVector.ones(n)

    frame = _conjugate_single(circuit, n, plan.input_qubit, "X")
    hx_ext = BitMatrix(list(code.hx.rows) + [logical_x], n)
    if not frame.z_mask.is_zero():
        failures.append("input X image is not X-type")
    elif in_rowspan(code.hx, frame.x_mask, hx_red) or not in_rowspan(hx_ext, frame.x_mask):
        failures.append("input X image is not a logical X representative")

    frame = _conjugate_single(circuit, n, plan.input_qubit, "Z")
    hz_ext = BitMatrix(list(code.hz.rows) + [logical_z], n)
    if not frame.x_mask.is_zero():
        failures.append("input Z image is not Z-type")
    elif in_rowspan(code.hz, frame.z_mask, hz_red) or not in_rowspan(hz_ext, frame.z_mask):
        failures.append("input Z image is not a logical Z representative")

    return EncoderCheck(
        passed=not failures,
        x_generator_count=len(x_images),
        z_generator_count=len(z_images),
        failures=tuple(failures),
    )
