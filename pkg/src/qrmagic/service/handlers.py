"""Request -> response functions behind every endpoint and subcommand.

Domain failures raise ``DomainError`` with a human-readable message; the
HTTP layer maps it to a 400 response and the CLI to exit code 1.
"""

from __future__ import annotations

from .. import __version__, codes, distillation as dst, resources as res
from ..gf2 import EnumerationBoundError
from ..protosim import (
    build_distillation_circuit,
    build_zk_teleport,
    circuit_to_qasm,
    circuit_to_text,
    enumerate_protocol,
    macwilliams_fastpath,
    synthesize_encoder,
)
from ..protosim.enumerate import EXHAUSTIVE, SPLIT, EnumerationLimitError
from ..transversality import certify_zk
from . import models as m

#: k values whose circuit-level oracle is tractable in split mode.
_SPLIT_CAP_K = 3


class DomainError(ValueError):
    """Invalid parameters for an otherwise well-formed request."""


def _wrap_domain(exc: Exception) -> DomainError:
    return DomainError(str(exc))


def handle_code(req: m.CodeRequest) -> m.CodeResponse:
    try:
        summary = codes.code_summary(req.r, req.m, req.shortened)
    except (codes.CodeConstructionError, EnumerationBoundError) as exc:
        raise _wrap_domain(exc)
    generator = hx = hz = None
    if req.include_matrices:
        primal = codes.reed_muller(req.r, req.m)
        if req.shortened and req.r >= 1:
            primal = codes.shorten(primal)
        generator = primal.generator.to_text()
        try:
            quantum = codes.qrm(req.r, req.m, req.shortened)
            hx = quantum.hx.to_text()
            hz = quantum.hz.to_text()
        except codes.CodeConstructionError:
            pass
    return m.CodeResponse(
        r=summary["r"],
        m=summary["m"],
        shortened=summary["shortened"],
        n=summary["n"],
        k=summary["k"],
        d=summary["d"],
        n_logical=summary["n_logical"],
        dual_r=summary["dual_r"],
        generator=generator,
        hx=hx,
        hz=hz,
    )


def handle_certify(req: m.CertifyRequest) -> m.CertifyResponse:
    try:
        code = codes.qrm(req.r, req.m, shortened=True)
        cert = certify_zk(code, req.k)
    except (codes.CodeConstructionError, ValueError) as exc:
        raise _wrap_domain(exc)
    witness = None
    if cert.witness is not None:
        witness = m.WitnessModel(
            j=cert.witness.j,
            rows=list(cert.witness.rows),
            weight=cert.witness.weight,
            modulus=cert.witness.modulus,
        )
    return m.CertifyResponse(
        passed=cert.passed, k=cert.k, a=cert.a, x=cert.x, witness=witness
    )


def handle_poly(req: m.PolyRequest) -> m.PolyResponse:
    try:
        out = dst.distillation_polynomial(req.k)
        acc = dst.acceptance_probability(req.k)
        series = dst.distillation_series(req.k, req.series_order)
    except dst.DistillationDomainError as exc:
        raise _wrap_domain(exc)
    return m.PolyResponse(
        k=req.k,
        output_error=m.RationalFunctionModel.from_ratfunc(out),
        acceptance=m.RationalFunctionModel.from_ratfunc(acc),
        series={
            i: m.RationalNumber.from_fraction(c) for i, c in enumerate(series)
        },
        leading_coefficient=str(dst.leading_coefficient(req.k)),
    )


def handle_threshold(req: m.ThresholdRequest) -> m.ThresholdResponse:
    try:
        th = dst.distillation_threshold(req.k, req.tol)
    except dst.DistillationDomainError as exc:
        raise _wrap_domain(exc)
    return m.ThresholdResponse(
        k=req.k,
        threshold=th,
        percent=th * 100.0,
        percent_rounded="%.2f" % (th * 100.0),
    )


def handle_verify(req: m.VerifyRequest) -> m.VerifyResponse:
    closed = dst.distillation_polynomial(req.k)
    closed_acc = dst.acceptance_probability(req.k)
    fast = macwilliams_fastpath(req.k)
    methods = ["closed_form", "macwilliams"]
    agree = fast.output_error == closed and fast.acceptance == closed_acc
    detail_parts = []
    if not agree:
        detail_parts.append("dual-sum fast path disagrees with the closed form")

    circuit_run = False
    n_inputs = (1 << (req.k + 2)) - 1
    if req.method == "exhaustive" or (req.method == "auto" and n_inputs <= req.exhaustive_limit):
        mode = EXHAUSTIVE
    elif req.method == "split" or (req.method == "auto" and req.deep and req.k <= _SPLIT_CAP_K):
        mode = SPLIT
    else:
        mode = None
        detail_parts.append(
            "circuit-level oracle skipped (%d sites; use method=split with "
            "deep for k <= %d or raise exhaustive_limit)" % (n_inputs, _SPLIT_CAP_K)
        )
    if mode is not None:
        if mode == SPLIT and req.k > _SPLIT_CAP_K:
            raise DomainError(
                "split-mode circuit oracle supported up to k = %d" % _SPLIT_CAP_K
            )
        try:
            proto = build_distillation_circuit(req.k)
            enum = enumerate_protocol(
                proto, mode=mode, site_limit=req.exhaustive_limit,
                processes=req.processes,
            )
        except EnumerationLimitError as exc:
            raise _wrap_domain(exc)
        circuit_run = True
        methods.append("circuit_%s" % mode)
        if enum.output_error != closed or enum.acceptance != closed_acc:
            agree = False
            detail_parts.append("circuit enumeration disagrees with the closed form")

    return m.VerifyResponse(
        k=req.k,
        agree=agree,
        methods=methods,
        circuit_oracle_run=circuit_run,
        n_inputs=n_inputs,
        acceptance=m.RationalFunctionModel.from_ratfunc(closed_acc),
        output_error=m.RationalFunctionModel.from_ratfunc(closed),
        detail="; ".join(detail_parts) if detail_parts else "all methods agree",
    )


def _risc_distiller(req: m.RiscRequest | m.SweepRequest, name: str):
    if name == "qrm15":
        return res.qrm15_distiller()
    if req.mek_params_path:
        try:
            return dst.load_mek_params(req.mek_params_path)
        except (OSError, ValueError) as exc:
            raise _wrap_domain(exc)
    return dst.MEK_PLACEHOLDER


def _estimate_model(est: res.ResourceEstimate) -> m.EstimateResponse:
    return m.EstimateResponse(
        architecture=est.architecture,
        k=est.k,
        eps=est.eps,
        eps_target=est.eps_target,
        levels=est.levels,
        expected_states=est.expected_states,
        distiller=est.distiller,
        mode=est.mode,
        t_count=est.t_count,
        notes=list(est.notes),
    )


def handle_estimate_risc(req: m.RiscRequest) -> m.EstimateResponse:
    try:
        budget = res.ErrorBudget(c_qc=req.c_qc, c_t=req.c_t)
        est = res.risc_count(
            req.eps_target, req.eps, budget, _risc_distiller(req, req.distiller)
        )
    except (ValueError, dst.InfeasibleTargetError) as exc:
        raise _wrap_domain(exc)
    return _estimate_model(est)


def handle_estimate_cisc(req: m.CiscRequest) -> m.EstimateResponse:
    try:
        budget = res.ErrorBudget(c_state=req.c_state, c_corr=req.c_corr)
        est = res.cisc_for_target(
            req.k, req.eps, req.eps_target, budget, mode=req.mode
        )
    except (ValueError, dst.InfeasibleTargetError) as exc:
        raise _wrap_domain(exc)
    return _estimate_model(est)


def handle_sweep(req: m.SweepRequest) -> m.SweepResponse:
    try:
        budget = res.ErrorBudget(
            c_qc=req.c_qc, c_t=req.c_t, c_state=req.c_state, c_corr=req.c_corr
        )
        distillers = [_risc_distiller(req, name) for name in req.distillers]
        rows = res.sweep(
            req.k_list, req.eps, req.eps_targets, budget, distillers, mode=req.mode
        )
    except (ValueError, dst.InfeasibleTargetError) as exc:
        raise _wrap_domain(exc)
    return m.SweepResponse(
        rows=[_estimate_model(r) for r in rows], csv=res.sweep_to_csv(rows)
    )


def handle_circuit(req: m.CircuitRequest) -> m.CircuitResponse:
    try:
        if req.kind == "distillation":
            if req.k is None:
                raise DomainError("distillation circuit needs k")
            circuit = build_distillation_circuit(req.k).circuit
        elif req.kind == "teleport":
            if req.k is None:
                raise DomainError("teleport template needs k")
            circuit = build_zk_teleport(req.k)
        else:
            if req.r is None or req.m is None:
                raise DomainError("encoder needs r and m")
            circuit = synthesize_encoder(codes.qrm(req.r, req.m, shortened=True))
    except (codes.CodeConstructionError, ValueError) as exc:
        raise _wrap_domain(exc)
    text = circuit_to_text(circuit) if req.format == "gatelist" else circuit_to_qasm(circuit)
    return m.CircuitResponse(
        kind=req.kind,
        format=req.format,
        qubits=circuit.qubit_count,
        op_count=len(circuit.ops),
        text=text,
    )


ENDPOINTS = [
    "/code",
    "/certify",
    "/poly",
    "/threshold",
    "/verify",
    "/estimate/risc",
    "/estimate/cisc",
    "/sweep",
    "/circuit",
]


def handle_info() -> m.InfoResponse:
    return m.InfoResponse(name="qrmagic", version=__version__, endpoints=ENDPOINTS)
