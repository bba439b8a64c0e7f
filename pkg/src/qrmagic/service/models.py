"""Pydantic request/response schemas shared by the service and the CLI.

Exact rationals cross the wire as decimal strings ({"num": ..., "den":
...}) and polynomial coefficient lists as decimal strings in ascending
powers, so no precision is lost to JSON number parsing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, Field

from ..ratfunc import RationalFunction


class RationalNumber(BaseModel):
    num: str
    den: str

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RationalNumber":
        return cls(num=str(f.numerator), den=str(f.denominator))

    def to_fraction(self) -> Fraction:
        return Fraction(int(self.num), int(self.den))


class RationalFunctionModel(BaseModel):
    """Canonical num/den coefficient lists, ascending powers, decimal strings."""

    numerator: list[str]
    denominator: list[str]

    @classmethod
    def from_ratfunc(cls, rf: RationalFunction) -> "RationalFunctionModel":
        return cls(
            numerator=[str(c) for c in rf.num.coeffs],
            denominator=[str(c) for c in rf.den.coeffs],
        )


# -- code -------------------------------------------------------------------

class CodeRequest(BaseModel):
    r: int = Field(ge=0)
    m: int = Field(ge=1, le=16)
    shortened: bool = True
    include_matrices: bool = False


class CodeResponse(BaseModel):
    r: int
    m: int
    shortened: bool
    n: int
    k: int
    d: Optional[int]
    n_logical: Optional[int]
    dual_r: Optional[int]
    generator: Optional[str] = None
    hx: Optional[str] = None
    hz: Optional[str] = None


# -- certify ------------------------------------------------------------------

class CertifyRequest(BaseModel):
    r: int = Field(ge=1)
    m: int = Field(ge=2, le=16)
    k: int = Field(ge=0)


class WitnessModel(BaseModel):
    j: int
    rows: list[int]
    weight: int
    modulus: int


class CertifyResponse(BaseModel):
    passed: bool
    k: int
    a: int
    x: Optional[int]
    witness: Optional[WitnessModel]


# -- poly / threshold ---------------------------------------------------------

class PolyRequest(BaseModel):
    k: int = Field(ge=2, le=12)
    series_order: int = Field(default=4, ge=0, le=64)


class PolyResponse(BaseModel):
    k: int
    output_error: RationalFunctionModel
    acceptance: RationalFunctionModel
    series: dict[int, RationalNumber]
    leading_coefficient: str


class ThresholdRequest(BaseModel):
    k: int = Field(ge=2, le=12)
    tol: float = Field(default=1e-12, gt=0)


class ThresholdResponse(BaseModel):
    k: int
    threshold: float
    percent: float
    percent_rounded: str


# -- verify -------------------------------------------------------------------

class VerifyRequest(BaseModel):
    k: int = Field(default=2, ge=2, le=12)
    method: Literal["auto", "exhaustive", "split"] = "auto"
    deep: bool = False
    exhaustive_limit: int = Field(default=25, ge=1, le=31)
    processes: int = Field(default=1, ge=1)


class VerifyResponse(BaseModel):
    k: int
    agree: bool
    methods: list[str]
    circuit_oracle_run: bool
    n_inputs: int
    acceptance: RationalFunctionModel
    output_error: RationalFunctionModel
    detail: str


# -- estimates ----------------------------------------------------------------

class RiscRequest(BaseModel):
    eps_target: float = Field(gt=0, lt=1)
    eps: float = Field(gt=0, lt=1)
    c_qc: float = Field(default=0.5, gt=0, lt=1)
    c_t: float = Field(default=0.5, gt=0, lt=1)
    distiller: Literal["qrm15", "mek"] = "qrm15"
    mek_params_path: Optional[str] = None


class CiscRequest(BaseModel):
    k: int = Field(ge=2, le=12)
    eps: float = Field(gt=0, lt=1)
    eps_target: float = Field(gt=0, lt=1)
    c_state: float = Field(default=0.5, gt=0, lt=1)
    c_corr: float = Field(default=0.5, gt=0, lt=1)
    mode: Literal["exact", "paper"] = "exact"


class EstimateResponse(BaseModel):
    architecture: str
    k: int
    eps: float
    eps_target: float
    levels: int
    expected_states: float
    distiller: str
    mode: str
    t_count: Optional[int] = None
    notes: list[str] = []


class SweepRequest(BaseModel):
    k_list: list[int] = Field(min_length=1)
    eps: float = Field(gt=0, lt=1)
    eps_targets: list[float] = Field(min_length=1)
    distillers: list[Literal["qrm15", "mek"]] = ["qrm15"]
    mek_params_path: Optional[str] = None
    mode: Literal["exact", "paper"] = "exact"
    c_qc: float = Field(default=0.5, gt=0, lt=1)
    c_t: float = Field(default=0.5, gt=0, lt=1)
    c_state: float = Field(default=0.5, gt=0, lt=1)
    c_corr: float = Field(default=0.5, gt=0, lt=1)


class SweepResponse(BaseModel):
    rows: list[EstimateResponse]
    csv: str


# -- circuits -----------------------------------------------------------------

class CircuitRequest(BaseModel):
    kind: Literal["distillation", "encoder", "teleport"]
    k: Optional[int] = Field(default=None, ge=2, le=12)
    r: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=2, le=16)
    format: Literal["gatelist", "qasm"] = "gatelist"


class CircuitResponse(BaseModel):
    kind: str
    format: str
    qubits: int
    op_count: int
    text: str


class InfoResponse(BaseModel):
    name: str
    version: str
    endpoints: list[str]
