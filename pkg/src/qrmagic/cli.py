"""Command-line front end.

Every subcommand builds a request model, executes it either in process
(default) or against a running service (``--server``), and renders the
response as text, JSON or CSV.  Exit codes: 0 success, 1 domain error or
failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from pydantic import BaseModel, ValidationError

from .config import CliConfig, ConfigError, load_config
from .service import handlers as h
from .service import models as m

_HANDLERS: dict[str, tuple[Callable, type[BaseModel]]] = {
    "/code": (h.handle_code, m.CodeResponse),
    "/certify": (h.handle_certify, m.CertifyResponse),
    "/poly": (h.handle_poly, m.PolyResponse),
    "/threshold": (h.handle_threshold, m.ThresholdResponse),
    "/verify": (h.handle_verify, m.VerifyResponse),
    "/estimate/risc": (h.handle_estimate_risc, m.EstimateResponse),
    "/estimate/cisc": (h.handle_estimate_cisc, m.EstimateResponse),
    "/sweep": (h.handle_sweep, m.SweepResponse),
    "/circuit": (h.handle_circuit, m.CircuitResponse),
}


def _execute(path: str, request: BaseModel, server: str | None) -> BaseModel:
    handler, response_type = _HANDLERS[path]
    if server is None:
        return handler(request)
    import httpx

    reply = httpx.post(
        server.rstrip("/") + path, json=request.model_dump(mode="json"), timeout=300.0
    )
    if reply.status_code == 400:
        raise h.DomainError(reply.json().get("detail", reply.text))
    reply.raise_for_status()
    return response_type.model_validate(reply.json())


# ---------------------------------------------------------------------------
# text renderings
# ---------------------------------------------------------------------------

def _render_text(resp: BaseModel) -> str:
    if isinstance(resp, m.CodeResponse):
        lines = [
            "RM(%d,%d)%s: [n,k,d] = [%d,%d,%s]  dual order %s  logical qubits %s"
            % (
                resp.r,
                resp.m,
                " shortened" if resp.shortened else "",
                resp.n,
                resp.k,
                resp.d if resp.d is not None else "?",
                resp.dual_r if resp.dual_r is not None else "-",
                resp.n_logical if resp.n_logical is not None else "none (classical)",
            )
        ]
        for label, text in (("generator", resp.generator), ("hx", resp.hx), ("hz", resp.hz)):
            if text:
                lines.append("%s:" % label)
                lines.append(text)
        return "\n".join(lines)
    if isinstance(resp, m.CertifyResponse):
        out = "passed=%s a=%d" % (str(resp.passed).lower(), resp.a)
        if resp.x is not None:
            out += " x=%d" % resp.x
        if resp.witness is not None:
            w = resp.witness
            out += "\nwitness: j=%d rows=%s weight=%d modulus=%d" % (
                w.j, w.rows, w.weight, w.modulus,
            )
        return out
    if isinstance(resp, m.PolyResponse):
        lines = ["k=%d leading e^3 coefficient: %s" % (resp.k, resp.leading_coefficient)]
        for order in sorted(resp.series):
            c = resp.series[order]
            if c.num != "0":
                lines.append("  e^%d: %s/%s" % (order, c.num, c.den))
        lines.append(
            "output error: degree %d / degree %d (full coefficients in JSON output)"
            % (len(resp.output_error.numerator) - 1, len(resp.output_error.denominator) - 1)
        )
        return "\n".join(lines)
    if isinstance(resp, m.ThresholdResponse):
        return "%.4f" % resp.threshold
    if isinstance(resp, m.VerifyResponse):
        return "k=%d agree=%s methods=%s\n%s" % (
            resp.k, str(resp.agree).lower(), ",".join(resp.methods), resp.detail,
        )
    if isinstance(resp, m.EstimateResponse):
        parts = [
            "architecture=%s" % resp.architecture,
            "k=%d" % resp.k,
            "eps=%g" % resp.eps,
            "eps_target=%g" % resp.eps_target,
            "levels=%d" % resp.levels,
            "expected_states=%.6g" % resp.expected_states,
            "distiller=%s" % resp.distiller,
            "mode=%s" % resp.mode,
        ]
        if resp.t_count is not None:
            parts.append("t_count=%d" % resp.t_count)
        out = " ".join(parts)
        for note in resp.notes:
            out += "\nnote: %s" % note
        return out
    if isinstance(resp, m.SweepResponse):
        return resp.csv.rstrip("\n")
    if isinstance(resp, m.CircuitResponse):
        return resp.text.rstrip("\n")
    if isinstance(resp, m.InfoResponse):
        return "%s %s  endpoints: %s" % (resp.name, resp.version, ", ".join(resp.endpoints))
    return resp.model_dump_json(indent=2)


def _emit(resp: BaseModel, fmt: str) -> None:
    if fmt == "json":
        print(resp.model_dump_json(indent=2))
    elif fmt == "csv" and isinstance(resp, m.SweepResponse):
        print(resp.csv.rstrip("\n"))
    else:
        print(_render_text(resp))


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default=None,
                        help="output format (default from config, text)")
    parser.add_argument("--server", default=None,
                        help="execute against a running service at this URL")
    parser.add_argument("--config", default=None, help="config file path")


def _parse_floats(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok]


def _parse_ints(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrmagic",
        description="Divisible quantum Reed-Muller codes and magic-state "
                    "distillation resource analysis, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", aliases=["codes"],
                       help="Reed-Muller / quantum code parameters")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--full", action="store_true", help="unshortened code")
    p.add_argument("--matrices", action="store_true",
                   help="include generator/check matrices (plain text rows)")
    _common(p)

    p = sub.add_parser("certify", help="transversal-rotation certificate")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _common(p)

    p = sub.add_parser("poly", help="exact distillation polynomial and series")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--series", type=int, default=4, help="series order")
    _common(p)

    p = sub.add_parser("threshold", help="distillation threshold by bisection")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=None)
    _common(p)

    p = sub.add_parser("verify", help="cross-check curves against the "
                                      "independent oracles (exit 1 on mismatch)")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--method", choices=("auto", "exhaustive", "split"), default="auto")
    p.add_argument("--deep", action="store_true",
                   help="allow the large split-mode circuit oracle (k=3)")
    p.add_argument("--exhaustive-limit", type=int, default=None)
    p.add_argument("--processes", type=int, default=None)
    _common(p)

    p = sub.add_parser("estimate", help="expected resource-state counts")
    arch = p.add_subparsers(dest="architecture", required=True)

    pr = arch.add_parser("risc", help="compile to T gates, distill T states")
    pr.add_argument("--eps-target", type=float, required=True)
    pr.add_argument("--eps", type=float, required=True)
    pr.add_argument("--c-qc", type=float, default=0.5)
    pr.add_argument("--c-t", type=float, default=0.5)
    pr.add_argument("--distiller", choices=("qrm15", "mek"), default="qrm15")
    pr.add_argument("--mek-params", default=None)
    _common(pr)

    pc = arch.add_parser("cisc", help="distill the rotation's state directly")
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--eps", type=float, required=True)
    pc.add_argument("--eps-target", type=float, required=True)
    pc.add_argument("--c-state", type=float, default=0.5)
    pc.add_argument("--c-corr", type=float, default=0.5)
    pc.add_argument("--mode", choices=("exact", "paper"), default="exact")
    _common(pc)

    p = sub.add_parser("sweep", help="architecture-comparison grid (CSV/JSON)")
    p.add_argument("--ks", type=_parse_ints, required=True,
                   help="comma-separated k values")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--targets", type=_parse_floats, default=None,
                   help="comma-separated target errors")
    p.add_argument("--target-exponents", default=None,
                   help="LO:HI, targets 10^-LO .. 10^-HI")
    p.add_argument("--distillers", default="qrm15",
                   help="comma-separated: qrm15,mek")
    p.add_argument("--mek-params", default=None)
    p.add_argument("--mode", choices=("exact", "paper"), default="exact")
    _common(p)

    p = sub.add_parser("circuit", help="export circuits (gate list or QASM)")
    p.add_argument("--kind", choices=("distillation", "encoder", "teleport"),
                   default="distillation")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--circuit-format", choices=("gatelist", "qasm"),
                   default="gatelist")
    p.add_argument("--out", default=None, help="write to file instead of stdout")
    _common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _build_request(args: argparse.Namespace, cfg: CliConfig) -> tuple[str, BaseModel]:
    cmd = args.command
    if cmd in ("code", "codes"):
        return "/code", m.CodeRequest(
            r=args.r, m=args.m, shortened=not args.full,
            include_matrices=args.matrices,
        )
    if cmd == "certify":
        return "/certify", m.CertifyRequest(r=args.r, m=args.m, k=args.k)
    if cmd == "poly":
        return "/poly", m.PolyRequest(k=args.k, series_order=args.series)
    if cmd == "threshold":
        tol = args.tol if args.tol is not None else cfg.bisection_tol
        return "/threshold", m.ThresholdRequest(k=args.k, tol=tol)
    if cmd == "verify":
        limit = (args.exhaustive_limit if args.exhaustive_limit is not None
                 else cfg.exhaustive_limit)
        procs = args.processes if args.processes is not None else cfg.parallel_degree
        return "/verify", m.VerifyRequest(
            k=args.k, method=args.method, deep=args.deep,
            exhaustive_limit=limit, processes=procs,
        )
    if cmd == "estimate" and args.architecture == "risc":
        return "/estimate/risc", m.RiscRequest(
            eps_target=args.eps_target, eps=args.eps, c_qc=args.c_qc,
            c_t=args.c_t, distiller=args.distiller,
            mek_params_path=args.mek_params or cfg.mek_params_path,
        )
    if cmd == "estimate" and args.architecture == "cisc":
        return "/estimate/cisc", m.CiscRequest(
            k=args.k, eps=args.eps, eps_target=args.eps_target,
            c_state=args.c_state, c_corr=args.c_corr, mode=args.mode,
        )
    if cmd == "sweep":
        targets = list(args.targets or [])
        if args.target_exponents:
            lo, hi = (int(tok) for tok in args.target_exponents.split(":"))
            targets.extend(10.0 ** -e for e in range(lo, hi + 1))
        if not targets:
            raise h.DomainError("sweep needs --targets or --target-exponents")
        return "/sweep", m.SweepRequest(
            k_list=args.ks, eps=args.eps, eps_targets=targets,
            distillers=[tok for tok in args.distillers.split(",") if tok],
            mek_params_path=args.mek_params or cfg.mek_params_path,
            mode=args.mode,
        )
    if cmd == "circuit":
        return "/circuit", m.CircuitRequest(
            kind=args.kind, k=args.k, r=args.r, m=args.m,
            format=args.circuit_format,
        )
    raise AssertionError("unhandled command %r" % cmd)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        cfg = load_config(getattr(args, "config", None))
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 1
    fmt = args.format or cfg.output_format
    server = args.server or cfg.server_url

    try:
        path, request = _build_request(args, cfg)
        response = _execute(path, request, server)
    except (h.DomainError, ValidationError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1

    if args.command == "circuit" and args.out:
        text = response.text if fmt != "json" else response.model_dump_json(indent=2)
        with open(args.out, "w") as fh:
            fh.write(text)
        print("wrote %s" % args.out)
    else:
        _emit(response, fmt)

    if isinstance(response, m.VerifyResponse) and not response.agree:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
