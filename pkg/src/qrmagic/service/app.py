"""FastAPI wiring: one POST route per handler."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import handlers as h
from . import models as m


def create_app() -> FastAPI:
    app = FastAPI(
        title="qrmagic",
        description=(
            "Exact magic-state distillation analysis: divisible quantum "
            "Reed-Muller codes, transversal-rotation certificates, "
            "distillation curves and RISC/CISC resource estimates."
        ),
    )

    def run(handler, req):
        try:
            return handler(req)
        except h.DomainError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.get("/", response_model=m.InfoResponse)
    def info() -> m.InfoResponse:
        return h.handle_info()

    @app.post("/code", response_model=m.CodeResponse)
    def code(req: m.CodeRequest) -> m.CodeResponse:
        return run(h.handle_code, req)

    @app.post("/certify", response_model=m.CertifyResponse)
    def certify(req: m.CertifyRequest) -> m.CertifyResponse:
        return run(h.handle_certify, req)

    @app.post("/poly", response_model=m.PolyResponse)
    def poly(req: m.PolyRequest) -> m.PolyResponse:
        return run(h.handle_poly, req)

    @app.post("/threshold", response_model=m.ThresholdResponse)
    def threshold(req: m.ThresholdRequest) -> m.ThresholdResponse:
        return run(h.handle_threshold, req)

    @app.post("/verify", response_model=m.VerifyResponse)
    def verify(req: m.VerifyRequest) -> m.VerifyResponse:
        return run(h.handle_verify, req)

    @app.post("/estimate/risc", response_model=m.EstimateResponse)
    def estimate_risc(req: m.RiscRequest) -> m.EstimateResponse:
        return run(h.handle_estimate_risc, req)

    @app.post("/estimate/cisc", response_model=m.EstimateResponse)
    def estimate_cisc(req: m.CiscRequest) -> m.EstimateResponse:
        return run(h.handle_estimate_cisc, req)

    @app.post("/sweep", response_model=m.SweepResponse)
    def sweep(req: m.SweepRequest) -> m.SweepResponse:
        return run(h.handle_sweep, req)

    @app.post("/circuit", response_model=m.CircuitResponse)
    def circuit(req: m.CircuitRequest) -> m.CircuitResponse:
        return run(h.handle_circuit, req)

    return app


app = create_app()
