"""Closed-form distillation curves, thresholds, schedules and step models.

The length-(2^(k+2)-1) protocol family has exact output-error and
acceptance curves that are rational functions of the input error.  They
are built here with exact big-integer arithmetic, sparse in the natural
base (1 - 2e) so that even the k = 12 curves expand in milliseconds.

Floating point appears only in the evaluators used for bisection and
schedule composition.  Direct double evaluation of the output-error
curve loses all precision once e^3 drops below machine epsilon, so for
small inputs the evaluator switches to the exact Taylor series (leading
coefficient and correction ratios computed in exact rationals), and
composition is carried in log space.  That keeps multi-level schedules
meaningful down to targets far below 1e-300.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from .ratfunc import Polynomial, RationalFunction, expand_base_powers

K_MIN = 2
K_MAX = 12

#: Number of exact series correction terms carried by the small-input
#: evaluator.  With the switch point below, truncation error is ~1e-16.
_SERIES_TERMS = 8

LOG_ZERO = float("-inf")


class DistillationDomainError(ValueError):
    """Parameter outside the supported family or analytic domain."""


class InfeasibleTargetError(ValueError):
    """The requested target cannot be reached from the given input error."""


def _check_k(k: int) -> None:
    if not K_MIN <= k <= K_MAX:
        raise DistillationDomainError(
            "k must be in [%d, %d], got %d" % (K_MIN, K_MAX, k)
        )


# ---------------------------------------------------------------------------
# Exact closed forms
# ---------------------------------------------------------------------------

def distillation_polynomial(k: int, trunc: int | None = None) -> RationalFunction:
    """Exact output-error curve e_out(e) for the level-k protocol.

    e_out = [1 - (1-2e)^(N-1) * (2e*(M-1) + (1-2e)^N)]
            / (2 * [1 + (M-1) * (1-2e)^N])

    with N = 2^(k+1) and M = 2^(k+2).  The numerator product is carried
    out exactly in the sparse (1-2e) base: 2e = 1 - (1-2e), so the
    bracket is (M-1) - (M-1)*(1-2e) + (1-2e)^N and the product with
    (1-2e)^(N-1) is a four-term sum of base powers.
    """
    _check_k(k)
    big_n = 1 << (k + 1)
    big_m = 1 << (k + 2)
    num_terms = {
        0: 1,
        big_n - 1: -(big_m - 1),
        big_n: big_m - 1,
        2 * big_n - 1: -1,
    }
    den_terms = {0: 2, big_n: 2 * (big_m - 1)}
    num = expand_base_powers(num_terms, -2, trunc)
    den = expand_base_powers(den_terms, -2, trunc)
    return RationalFunction(num, den)


def acceptance_probability(k: int) -> RationalFunction:
    """Exact acceptance curve a(e) = [1 + (M-1)(1-2e)^N] / M."""
    _check_k(k)
    big_n = 1 << (k + 1)
    big_m = 1 << (k + 2)
    num = expand_base_powers({0: 1, big_n: big_m - 1}, -2)
    return RationalFunction(num, Polynomial.constant(big_m))


def expected_repetitions(k: int) -> RationalFunction:
    """Exact repeat-until-success expectation E[t] = 1 / a(e)."""
    return acceptance_probability(k).reciprocal()


def distillation_series(k: int, order: int) -> tuple[Fraction, ...]:
    """Exact Taylor coefficients of e_out around 0 up to ``order``."""
    return distillation_polynomial(k, trunc=order).series(order)


def leading_coefficient(k: int) -> int:
    """Exact e^3 coefficient, (1 - 3*2^(k+1) + 2^(2k+3)) / 3."""
    c3 = distillation_series(k, 3)[3]
    if c3.denominator != 1:
        raise AssertionError("cubic coefficient is not integral: %s" % c3)
    return c3.numerator


# ---------------------------------------------------------------------------
# Float / log-domain evaluators
# ---------------------------------------------------------------------------

def acceptance_float(k: int, eps: float) -> float:
    _check_k(k)
    big_n = 1 << (k + 1)
    big_m = 1 << (k + 2)
    return (1.0 + (big_m - 1) * (1.0 - 2.0 * eps) ** big_n) / big_m


def expected_repetitions_float(k: int, eps: float) -> float:
    big_n = 1 << (k + 1)
    big_m = 1 << (k + 2)
    _check_k(k)
    return big_m / (1.0 + (big_m - 1) * (1.0 - 2.0 * eps) ** big_n)


def output_error_float(k: int, eps: float) -> float:
    """Direct double evaluation of the closed form (accurate for
    moderate inputs; use :func:`output_error_log` for tiny ones)."""
    _check_k(k)
    big_n = 1 << (k + 1)
    big_m = 1 << (k + 2)
    x = 1.0 - 2.0 * eps
    num = 1.0 - x ** (big_n - 1) * (2.0 * eps * (big_m - 1) + x ** big_n)
    den = 2.0 * (1.0 + (big_m - 1) * x ** big_n)
    return num / den


_series_ratio_cache: dict[int, tuple[float, list[float]]] = {}


def _series_ratios(k: int) -> tuple[float, list[float]]:
    """log of the cubic coefficient plus correction ratios c_{3+j}/c_3."""
    cached = _series_ratio_cache.get(k)
    if cached is None:
        coeffs = distillation_series(k, 3 + _SERIES_TERMS)
        c3 = coeffs[3]
        ratios = [float(coeffs[3 + j] / c3) for j in range(1, _SERIES_TERMS + 1)]
        cached = (math.log(float(c3)), ratios)
        _series_ratio_cache[k] = cached
    return cached


def _series_switch(k: int) -> float:
    # below this input the direct double formula cancels catastrophically
    # while the truncated series is accurate to ~1e-16
    return 0.01 / (1 << (k + 1))


def output_error_log(k: int, log_eps: float) -> float:
    """Natural log of e_out(e) given the natural log of e.

    Uses the direct closed form above the series switch point and the
    exact Taylor expansion below it; exact at log_eps = -inf.
    """
    _check_k(k)
    if log_eps == LOG_ZERO:
        return LOG_ZERO
    eps = math.exp(log_eps)
    if eps > _series_switch(k):
        value = output_error_float(k, eps)
        if value <= 0.0:
            raise InfeasibleTargetError("output error evaluated nonpositive")
        return math.log(value)
    log_c3, ratios = _series_ratios(k)
    correction = 0.0
    power = 1.0
    for r in ratios:
        power *= eps
        if power == 0.0:
            break
        correction += r * power
    return log_c3 + 3.0 * log_eps + math.log1p(correction)


# ---------------------------------------------------------------------------
# Threshold
# ---------------------------------------------------------------------------

def distillation_threshold(k: int, tol: float = 1e-12) -> float:
    """Unique fixed point of e_out(e) = e in (0, 1/2), by bisection.

    Below the returned value one round strictly reduces the error.
    """
    _check_k(k)
    if tol <= 0:
        raise DistillationDomainError("tolerance must be positive")
    lo, hi = 1e-12, 0.5 - 1e-12
    f_lo = output_error_float(k, lo) - lo
    f_hi = output_error_float(k, hi) - hi
    if not (f_lo < 0.0 < f_hi):
        raise DistillationDomainError(
            "no sign change on (%g, %g); malformed polynomial" % (lo, hi)
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if output_error_float(k, mid) - mid < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Level schedules
# ---------------------------------------------------------------------------

COMPOSITION = "composition"
PAPER_FORMULA = "paper_formula"
_LEVEL_CAP = 64


@dataclass(frozen=True)
class DistillationSchedule:
    """Level-by-level record of a repeated-distillation plan.

    ``per_level_errors[i]`` is the error after level i+1 (may underflow
    to 0.0 in double precision; ``per_level_log10_errors`` stays finite),
    and ``per_level_repetitions[i]`` is E[t] at that level's input error.
    """

    k: int
    base_error: float
    eps_target: float
    mode: str
    levels: int
    per_level_errors: tuple[float, ...]
    per_level_log10_errors: tuple[float, ...]
    per_level_repetitions: tuple[float, ...]


def levels_required(
    k: int, eps: float, eps_target: float, mode: str = COMPOSITION
) -> DistillationSchedule:
    """Distillation levels needed to push ``eps`` down to ``eps_target``.

    ``composition`` composes the exact curve level by level and returns
    the smallest depth whose composed error meets the target;
    ``paper_formula`` instead uses the closed ceiling expression
    ceil(log(eps_target) / log(e_out(eps))), which agrees with
    composition in most regimes but is not identical.  Either way the
    schedule lists composed per-level errors and repetitions.
    """
    _check_k(k)
    if mode not in (COMPOSITION, PAPER_FORMULA):
        raise DistillationDomainError("unknown mode %r" % mode)
    if eps_target <= 0.0:
        raise InfeasibleTargetError("target error must be positive")
    if eps < 0.0:
        raise DistillationDomainError("input error must be nonnegative")
    if eps > 0.0 and eps >= distillation_threshold(k):
        raise InfeasibleTargetError(
            "input error %g is at or above the distillation threshold" % eps
        )

    if mode == PAPER_FORMULA and eps > eps_target:
        levels = math.ceil(
            math.log(eps_target) / output_error_log(k, math.log(eps))
        )
        levels = max(levels, 0)
    else:
        levels = None  # decided by composition below

    errors: list[float] = []
    log10s: list[float] = []
    reps: list[float] = []
    log_e = math.log(eps) if eps > 0.0 else LOG_ZERO
    log_target = math.log(eps_target)
    depth = 0
    while True:
        if levels is None:
            if log_e <= log_target:
                break
        elif depth >= levels:
            break
        if depth >= _LEVEL_CAP:
            raise InfeasibleTargetError("level cap exceeded; target unreachable")
        reps.append(expected_repetitions_float(k, math.exp(log_e) if log_e > -700 else 0.0))
        log_e = output_error_log(k, log_e)
        errors.append(math.exp(log_e) if log_e > -700 else 0.0)
        log10s.append(log_e / math.log(10.0) if log_e != LOG_ZERO else LOG_ZERO)
        depth += 1

    return DistillationSchedule(
        k=k,
        base_error=eps,
        eps_target=eps_target,
        mode=mode,
        levels=depth,
        per_level_errors=tuple(errors),
        per_level_log10_errors=tuple(log10s),
        per_level_repetitions=tuple(reps),
    )


# ---------------------------------------------------------------------------
# Compiling count and asymptotics
# ---------------------------------------------------------------------------

def selinger_t_count(eps_qc: float) -> int:
    """T-gate count ceil(11 + 4*log2(1/eps_qc)) of the Diophantine
    Z-rotation approximation."""
    if not 0.0 < eps_qc < 1.0:
        raise DistillationDomainError("eps_qc must lie in (0, 1)")
    value = 11.0 + 4.0 * math.log2(1.0 / eps_qc)
    nearest = round(value)
    if abs(value - nearest) < 1e-9:  # snap exact powers of two
        value = nearest
    return math.ceil(value)


def scaling_exponent(k: int) -> float:
    """Asymptotic distillation exponent log_3(2^(k+2) - 1)."""
    if k < 2:
        raise DistillationDomainError("k must be at least 2")
    return math.log((1 << (k + 2)) - 1) / math.log(3.0)


# ---------------------------------------------------------------------------
# Pluggable step models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistillationStepModel:
    """One round of a distillation protocol, as seen by resource chains.

    ``output_error_log`` maps the natural log of the input error to the
    natural log of the output error; ``acceptance`` returns the success
    probability at a given input error.  Anchors: acceptance(0) = 1 and
    output error -> 0 as the input error -> 0.
    """

    label: str
    inputs_per_round: int
    outputs_per_round: int
    acceptance: Callable[[float], float] = field(repr=False)
    output_error_log: Callable[[float], float] = field(repr=False)
    authoritative: bool = True

    def states_per_output(self, eps: float) -> float:
        """Expected input states per output state for one round."""
        return (self.inputs_per_round / self.outputs_per_round) / self.acceptance(eps)


def qrm_step_model(k: int = 2) -> DistillationStepModel:
    """Step model of the length-(2^(k+2)-1) protocol; k=2 is the
    classic 15-to-1 round."""
    _check_k(k)
    return DistillationStepModel(
        label="qrm%d" % ((1 << (k + 2)) - 1),
        inputs_per_round=(1 << (k + 2)) - 1,
        outputs_per_round=1,
        acceptance=lambda eps, _k=k: acceptance_float(_k, eps),
        output_error_log=lambda log_eps, _k=k: output_error_log(_k, log_eps),
    )


def _poly_eval_float(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_log_eval(coeffs: Sequence[float]) -> Callable[[float], float]:
    """Log-domain evaluator for a coefficient polynomial with zero
    constant term: log p(e) from log e, stable for tiny e."""
    lead = next((i for i, c in enumerate(coeffs) if c), None)
    if lead is None or lead == 0:
        raise ValueError("polynomial must vanish at 0 and not be identically 0")
    c_lead = coeffs[lead]
    if c_lead <= 0:
        raise ValueError("leading output-error coefficient must be positive")
    ratios = [c / c_lead for c in coeffs[lead + 1:]]

    def evaluate(log_eps: float) -> float:
        if log_eps == LOG_ZERO:
            return LOG_ZERO
        eps = math.exp(log_eps)
        correction = 0.0
        power = 1.0
        for r in ratios:
            power *= eps
            if power == 0.0:
                break
            correction += r * power
        return math.log(c_lead) + lead * log_eps + math.log1p(correction)

    return evaluate


def coefficient_step_model(
    label: str,
    inputs_per_round: int,
    outputs_per_round: int,
    output_error: Sequence[float],
    acceptance: Sequence[float],
    authoritative: bool = True,
) -> DistillationStepModel:
    """Step model from ascending-power coefficient lists.

    Enforces the anchors output_error(0) = 0 and acceptance(0) = 1.
    """
    if not output_error or output_error[0] != 0:
        raise ValueError("output_error coefficients must start with 0")
    if not acceptance or acceptance[0] != 1:
        raise ValueError("acceptance coefficients must start with 1")
    acc_coeffs = list(acceptance)
    return DistillationStepModel(
        label=label,
        inputs_per_round=inputs_per_round,
        outputs_per_round=outputs_per_round,
        acceptance=lambda eps: _poly_eval_float(acc_coeffs, eps),
        output_error_log=_poly_log_eval(list(output_error)),
        authoritative=authoritative,
    )


MEK_INPUTS = 10
MEK_OUTPUTS = 2


def mek_model(
    output_error: Sequence[float],
    acceptance: Sequence[float],
    source: str,
    authoritative: bool = True,
) -> DistillationStepModel:
    """10-to-2 error-detecting step model with externally supplied curves.

    The round consumes ten states and, on acceptance, yields two with
    error quadratic in the input error; the acceptance and output-error
    polynomials come from the external analysis named in ``source``.
    """
    model = coefficient_step_model(
        label="mek[%s]" % source,
        inputs_per_round=MEK_INPUTS,
        outputs_per_round=MEK_OUTPUTS,
        output_error=output_error,
        acceptance=acceptance,
        authoritative=authoritative,
    )
    # quadratic leading behaviour is part of the protocol's contract
    if len(output_error) < 3 or output_error[1] != 0 or output_error[2] == 0:
        raise ValueError("output error must be quadratic to leading order")
    return model


#: Stand-in curves used only when no external parameter file is supplied.
#: NON-AUTHORITATIVE: the real acceptance/output-error polynomials must be
#: loaded from a parameter file before the numbers mean anything.
MEK_PLACEHOLDER = mek_model(
    output_error=[0.0, 0.0, 6.0],
    acceptance=[1.0, -8.0],
    source="placeholder NON-AUTHORITATIVE",
    authoritative=False,
)


def load_mek_params(path: str | Path) -> DistillationStepModel:
    """Load the 10-to-2 model parameters from a JSON file.

    Schema: {"acceptance": [c0, c1, ...], "output_error": [c0, c1, ...],
    "source": "..."} with coefficients in ascending powers of the input
    error.  The anchor conditions are enforced on load.
    """
    data = json.loads(Path(path).read_text())
    try:
        acceptance = [float(c) for c in data["acceptance"]]
        output_error = [float(c) for c in data["output_error"]]
        source = str(data.get("source", str(path)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError("malformed step-model parameter file %s: %s" % (path, exc))
    return mek_model(output_error, acceptance, source=source)
