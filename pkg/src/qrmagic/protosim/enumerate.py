"""Exact error enumeration for distillation protocols.

Two independent routes to the protocol's acceptance and output-error
curves:

* ``enumerate_protocol`` walks every pattern of Z faults over the
  injection sites, pushes each one through the circuit as a Pauli frame,
  applies the protocol's classical accept/readout rules, and accumulates
  exact big-integer weight counts.  ``exhaustive`` mode propagates every
  pattern separately (no linearity assumption); ``split`` mode uses the
  XOR-linearity of frame propagation to enumerate two halves of the
  sites and convolve them, which brings the 31-site protocol from 2^31
  propagations down to 2^16 table steps.
* ``macwilliams_fastpath`` never touches the circuit: it computes the
  probability that the fault pattern is invisible to the X checks (and
  to the checks extended by the logical readout) from the exact weight
  distribution of the check rowspan, via the dual-sum identity
  P[e in C-perp] = (1/|C|) * sum_{c in C} (1-2e)^wt(c).

Both must agree symbolically with the closed forms of the distillation
module; the test suite pins that down.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from ..codes import reed_muller, shorten
from ..gf2 import BitMatrix, BitVector, weight_distribution
from ..ratfunc import Polynomial, RationalFunction, affine_power, expand_base_powers
from .circuit import CliffordCircuit, MeasureX, MeasureZ, _propagate_ints
from .distill import DistillationProtocol

EXHAUSTIVE = "exhaustive"
SPLIT = "split"

#: Default cap on 2^sites per-pattern enumeration (2^25 patterns).
DEFAULT_SITE_LIMIT = 25


class EnumerationLimitError(ValueError):
    """Site count exceeds the per-pattern enumeration budget."""


@dataclass(frozen=True)
class ProtocolPolynomials:
    """Exact acceptance and (conditional) output-error curves."""

    acceptance: RationalFunction
    output_error: RationalFunction
    n_inputs: int
    method: str = ""


def _weight_counts_to_poly(counts: list[int], sites: int) -> Polynomial:
    """sum_w counts[w] * e^w * (1-e)^(sites-w), exactly."""
    acc = Polynomial()
    for w, c in enumerate(counts):
        if c:
            acc = acc + affine_power(-1, sites - w).scale(c).shift(w)
    return acc


def _prefix_measurements(circuit: CliffordCircuit) -> list[int]:
    out = [0]
    for op in circuit.ops:
        out.append(out[-1] + (1 if isinstance(op, (MeasureX, MeasureZ)) else 0))
    return out


def _classify(flips: int, check_masks: tuple[int, ...], logical_mask: int) -> tuple[bool, bool]:
    accepted = all((flips & m).bit_count() % 2 == 0 for m in check_masks)
    harmful = accepted and (flips & logical_mask).bit_count() % 2 == 1
    return accepted, harmful


def _count_range(
    proto: DistillationProtocol, lo: int, hi: int
) -> tuple[list[int], list[int]]:
    """Per-pattern counts over the contiguous pattern range [lo, hi)."""
    circuit = proto.circuit
    sites = proto.error_sites
    s = len(sites)
    prefix = _prefix_measurements(circuit)
    acc = [0] * (s + 1)
    harm = [0] * (s + 1)
    for pattern in range(lo, hi):
        z_after: dict[int, int] = {}
        start = len(circuit.ops)
        bits = pattern
        idx = 0
        while bits:
            if bits & 1:
                op_i, q = sites[idx]
                z_after[op_i] = z_after.get(op_i, 0) | (1 << q)
                if op_i < start:
                    start = op_i
            bits >>= 1
            idx += 1
        if not z_after:
            flips = 0
        else:
            flips, _, _ = _propagate_ints(
                circuit, 0, 0, z_after, start=start, meas_offset=prefix[start]
            )
        accepted, harmful = _classify(flips, proto.check_masks, proto.logical_mask)
        if accepted:
            w = pattern.bit_count()
            acc[w] += 1
            if harmful:
                harm[w] += 1
    return acc, harm


def _site_signatures(proto: DistillationProtocol) -> list[int]:
    """Syndrome/logical class of each single-site fault, via one honest
    propagation per site."""
    circuit = proto.circuit
    prefix = _prefix_measurements(circuit)
    n_checks = len(proto.check_masks)
    out = []
    for op_i, q in proto.error_sites:
        flips, _, _ = _propagate_ints(
            circuit, 0, 0, {op_i: 1 << q}, start=op_i, meas_offset=prefix[op_i]
        )
        cls = 0
        for j, m in enumerate(proto.check_masks):
            cls |= ((flips & m).bit_count() & 1) << j
        cls |= ((flips & proto.logical_mask).bit_count() & 1) << n_checks
        out.append(cls)
    return out


def _half_table(signatures: list[int]) -> dict[int, list[int]]:
    """Gray-code walk over all subsets of the given sites, tallying
    (class -> weight histogram)."""
    s = len(signatures)
    table: dict[int, list[int]] = {}
    cls = 0
    gray_prev = 0
    for i in range(1 << s):
        if i:
            tz = (i & -i).bit_length() - 1
            cls ^= signatures[tz]
            gray_prev ^= 1 << tz
        w = gray_prev.bit_count()
        hist = table.get(cls)
        if hist is None:
            hist = [0] * (s + 1)
            table[cls] = hist
        hist[w] += 1
    return table


def _count_split(proto: DistillationProtocol) -> tuple[list[int], list[int]]:
    signatures = _site_signatures(proto)
    s = len(signatures)
    half = s // 2
    left = _half_table(signatures[:half])
    right = _half_table(signatures[half:])
    n_checks = len(proto.check_masks)
    synd_mask = (1 << n_checks) - 1
    logical_bit = 1 << n_checks
    acc = [0] * (s + 1)
    harm = [0] * (s + 1)
    for cls_l, hist_l in left.items():
        synd = cls_l & synd_mask
        for log_r in (0, 1):
            hist_r = right.get(synd | (log_r << n_checks))
            if hist_r is None:
                continue
            harmful = ((cls_l & logical_bit) != 0) ^ (log_r == 1)
            for wl, cl in enumerate(hist_l):
                if not cl:
                    continue
                for wr, cr in enumerate(hist_r):
                    if not cr:
                        continue
                    acc[wl + wr] += cl * cr
                    if harmful:
                        harm[wl + wr] += cl * cr
    return acc, harm


def enumerate_protocol(
    proto: DistillationProtocol,
    mode: str = EXHAUSTIVE,
    site_limit: int = DEFAULT_SITE_LIMIT,
    processes: int = 1,
) -> ProtocolPolynomials:
    """Exact acceptance/output-error curves under i.i.d. Z faults.

    Each injection site independently suffers a Z error with probability
    e (ideal state followed by dephasing).  The returned curves are
    exact rational functions assembled from big-integer pattern counts.
    """
    s = len(proto.error_sites)
    if mode == EXHAUSTIVE:
        if s > site_limit:
            raise EnumerationLimitError(
                "%d sites exceed the per-pattern budget of %d; raise the "
                "limit explicitly or use split mode" % (s, site_limit)
            )
        if processes > 1 and s >= 4:
            chunk_count = min(processes * 4, 1 << (s - 2))
            edges = [
                ((1 << s) * i) // chunk_count for i in range(chunk_count + 1)
            ]
            ranges = list(zip(edges[:-1], edges[1:]))
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(processes) as pool:
                parts = pool.starmap(
                    _count_range, [(proto, lo, hi) for lo, hi in ranges]
                )
            acc = [0] * (s + 1)
            harm = [0] * (s + 1)
            for a, h in parts:  # associative, order-independent merge
                for w in range(s + 1):
                    acc[w] += a[w]
                    harm[w] += h[w]
        else:
            acc, harm = _count_range(proto, 0, 1 << s)
    elif mode == SPLIT:
        acc, harm = _count_split(proto)
    else:
        raise ValueError("unknown enumeration mode %r" % mode)

    acc_poly = _weight_counts_to_poly(acc, s)
    harm_poly = _weight_counts_to_poly(harm, s)
    return ProtocolPolynomials(
        acceptance=RationalFunction.from_polynomial(acc_poly),
        output_error=RationalFunction(harm_poly, acc_poly),
        n_inputs=s,
        method=mode,
    )


def macwilliams_fastpath(k: int) -> ProtocolPolynomials:
    """Curve computation from code weight distributions alone.

    Acceptance is the probability that the fault pattern lies in the
    dual of the X-check rowspan C (dual-sum identity over C); the
    harmless fraction uses C extended by the all-ones logical readout.
    Runs in 2^(k+3) codeword walks, so it covers the whole family;
    only the shortened primal generator is needed, never the (large)
    dual factor.
    """
    hx = shorten(reed_muller(1, k + 2)).generator
    n = hx.col_count
    dist_c = weight_distribution(hx).counts
    size_c = sum(dist_c.values())
    extended = BitMatrix(list(hx.rows) + [BitVector.ones(n)], n)
    dist_ext = weight_distribution(extended).counts

    a_poly = expand_base_powers(dist_c, -2)            # sum over C of x^wt
    b_poly = expand_base_powers(dist_ext, -2)          # sum over C + <1>
    acceptance = RationalFunction(a_poly, Polynomial.constant(size_c))
    # (acc - harmless)/acc with harmless = B / (2*|C|):  (2A - B) / (2A)
    output_error = RationalFunction(
        a_poly.scale(2) - b_poly, a_poly.scale(2)
    )
    return ProtocolPolynomials(
        acceptance=acceptance,
        output_error=output_error,
        n_inputs=n,
        method="macwilliams",
    )
