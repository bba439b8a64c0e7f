"""Expected resource-state counts for the RISC and CISC architectures.

RISC: compile the rotation into T gates (Diophantine count), teleport
each T from a distilled resource state; the error budget splits the
target between compiling inaccuracy and total teleported-gate error.
The count is the T-gate count times the distillation chain cost per
state and does not depend on which rotation is being synthesized.

CISC: distill the rotated |+> state for the requested k directly on the
matching divisible code and teleport once; the teleportation's adaptive
correction needs the one-step-lower rotation half the time, which
recurses.  Counts follow the level recursion

    n(k, l) = (2^(k+2)-1) * [n(k, l-1) + n(k-1, l-1)/2] * E[t]
              + n(k-1, l)/2

anchored at n(k, 0) = 1 (one bare state), n(1, .) = 0 (the S correction
is a stabilizer operation), and the printed k = 2 base
n(2, l) = E[t(eps)] * 15^l.  ``paper`` mode keeps E[t] evaluated at the
bare input error everywhere, exactly as printed; ``exact`` mode uses the
level-dependent input error for every repetition factor and the
compounded base product for k = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import distillation as dst
from .distillation import (
    COMPOSITION,
    DistillationStepModel,
    InfeasibleTargetError,
    LOG_ZERO,
    PAPER_FORMULA,
)

PAPER = "paper"
EXACT = "exact"

RISC = "risc"
CISC = "cisc"


@dataclass(frozen=True)
class ErrorBudget:
    """Fractions splitting a target error across protocol stages.

    ``c_qc``/``c_t`` split the RISC budget between compiling error and
    total T-gate error; ``c_state``/``c_corr`` split a teleported gate's
    budget between the consumed magic state and its adaptive correction.
    """

    c_qc: float = 0.5
    c_t: float = 0.5
    c_state: float = 0.5
    c_corr: float = 0.5

    def __post_init__(self) -> None:
        for name in ("c_qc", "c_t", "c_state", "c_corr"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ValueError("%s must lie in (0, 1)" % name)
        if self.c_qc + self.c_t > 1.0:
            raise ValueError("c_qc + c_t must not exceed 1")
        if self.c_state + self.c_corr > 1.0:
            raise ValueError("c_state + c_corr must not exceed 1")


DEFAULT_BUDGET = ErrorBudget()


@dataclass(frozen=True)
class ResourceEstimate:
    architecture: str
    k: int
    eps: float
    eps_target: float
    levels: int
    expected_states: float
    distiller: str
    mode: str
    t_count: int | None = None
    notes: tuple[str, ...] = field(default=())


def qrm15_distiller() -> DistillationStepModel:
    return dst.qrm_step_model(2)


def resolve_distiller(spec: str | DistillationStepModel) -> DistillationStepModel:
    if isinstance(spec, DistillationStepModel):
        return spec
    if spec == "qrm15":
        return qrm15_distiller()
    if spec == "mek":
        return dst.MEK_PLACEHOLDER
    raise ValueError("unknown distiller %r" % spec)


def mek_chain(
    target: float, eps: float, model: DistillationStepModel
) -> tuple[int, float]:
    """Rounds and expected bare states per output for a step-model chain.

    Each round multiplies the running cost by
    (inputs/outputs) / acceptance(input error); the chain stops at the
    first depth whose composed error meets the target.
    """
    if target <= 0.0:
        raise InfeasibleTargetError("target must be positive")
    if eps < 0.0:
        raise ValueError("input error must be nonnegative")
    log_e = math.log(eps) if eps > 0.0 else LOG_ZERO
    log_target = math.log(target)
    cost = 1.0
    levels = 0
    while log_e > log_target:
        eps_in = math.exp(log_e) if log_e > -700.0 else 0.0
        next_log = model.output_error_log(log_e)
        if next_log >= log_e:
            raise InfeasibleTargetError(
                "distiller %s does not converge from error %g"
                % (model.label, eps_in)
            )
        cost *= model.states_per_output(eps_in)
        log_e = next_log
        levels += 1
        if levels > 200:
            raise InfeasibleTargetError("chain depth cap exceeded")
    return levels, cost


def risc_count(
    eps_target: float,
    eps: float,
    budget: ErrorBudget = DEFAULT_BUDGET,
    distiller: str | DistillationStepModel = "qrm15",
) -> ResourceEstimate:
    """Expected bare magic states to synthesize one rotation via compiling.

    T count from the compiling budget, per-T-state target from the gate
    budget, then the distillation chain cost per state.  Independent of
    which Z rotation is compiled.
    """
    if not 0.0 < eps_target < 1.0:
        raise ValueError("eps_target must lie in (0, 1)")
    if eps <= 0.0:
        raise ValueError("bare state error must be positive")
    model = resolve_distiller(distiller)
    n_t = dst.selinger_t_count(budget.c_qc * eps_target)
    per_state_target = budget.c_t * eps_target / n_t
    levels, chain_cost = mek_chain(per_state_target, eps, model)
    notes = () if model.authoritative else (
        "distiller curves are NON-AUTHORITATIVE placeholders",
    )
    return ResourceEstimate(
        architecture=RISC,
        k=2,
        eps=eps,
        eps_target=eps_target,
        levels=levels,
        expected_states=n_t * chain_cost,
        distiller=model.label,
        mode=COMPOSITION,
        t_count=n_t,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# CISC recursion
# ---------------------------------------------------------------------------

def _level_error_logs(k: int, eps: float, levels: int) -> list[float]:
    """log error before each level 1..levels (index 0 = bare input)."""
    logs = [math.log(eps) if eps > 0.0 else LOG_ZERO]
    for _ in range(levels):
        logs.append(dst.output_error_log(k, logs[-1]))
    return logs


def _rep_factor(k: int, eps: float, level: int, mode: str,
                cache: dict[tuple[int, int], float]) -> float:
    """E[t] for distilling at ``level`` on the k-code."""
    if mode == PAPER:
        return dst.expected_repetitions_float(k, eps)
    key = (k, level)
    if key not in cache:
        logs = _level_error_logs(k, eps, level)
        eps_in = math.exp(logs[level - 1]) if logs[level - 1] > -700.0 else 0.0
        cache[key] = dst.expected_repetitions_float(k, eps_in)
    return cache[key]


def cisc_count(k: int, levels: int, eps: float, mode: str = PAPER) -> float:
    """Expected bare states for one level-``levels`` teleported rotation."""
    if k < 2:
        raise ValueError("rotations with k < 2 are stabilizer operations")
    if levels < 0:
        raise ValueError("levels must be nonnegative")
    if mode not in (PAPER, EXACT):
        raise ValueError("unknown mode %r" % mode)
    rep_cache: dict[tuple[int, int], float] = {}
    memo: dict[tuple[int, int], float] = {}

    def count(kk: int, ll: int) -> float:
        if kk <= 1:
            return 0.0
        if ll == 0:
            return 1.0
        key = (kk, ll)
        if key in memo:
            return memo[key]
        if kk == 2:
            if mode == PAPER:
                value = dst.expected_repetitions_float(2, eps) * 15.0 ** ll
            else:
                value = 1.0
                for level in range(1, ll + 1):
                    value *= 15.0 * _rep_factor(2, eps, level, mode, rep_cache)
        else:
            big = (1 << (kk + 2)) - 1
            value = (
                big
                * (count(kk, ll - 1) + 0.5 * count(kk - 1, ll - 1))
                * _rep_factor(kk, eps, ll, mode, rep_cache)
                + 0.5 * count(kk - 1, ll)
            )
        memo[key] = value
        return value

    return count(k, levels)


def teleport_only_cost(k: int) -> float:
    """Expected bare states when no distillation is needed: one state
    plus half of the one-step-lower correction chain (S ends it)."""
    if k <= 1:
        return 0.0
    return 1.0 + 0.5 * teleport_only_cost(k - 1)


def cisc_for_target(
    k: int,
    eps: float,
    eps_target: float,
    budget: ErrorBudget = DEFAULT_BUDGET,
    mode: str = EXACT,
    level_mode: str | None = None,
) -> ResourceEstimate:
    """Levels from the state budget, then the count recursion.

    The distilled state gets ``budget.c_state`` of the target; the
    adaptive correction (same distillation depth, strictly smaller
    error) consumes the rest.  ``mode`` selects the repetition-factor
    convention; ``level_mode`` defaults to exact composition
    (``paper_formula`` gives the closed ceiling expression instead).
    """
    if mode not in (PAPER, EXACT):
        raise ValueError("unknown mode %r" % mode)
    if level_mode is None:
        level_mode = COMPOSITION if mode == EXACT else PAPER_FORMULA
    state_target = budget.c_state * eps_target
    if eps <= eps_target:
        # hardware already beats the demand: teleport bare states only
        return ResourceEstimate(
            architecture=CISC,
            k=k,
            eps=eps,
            eps_target=eps_target,
            levels=0,
            expected_states=teleport_only_cost(k),
            distiller="qrm%d" % ((1 << (k + 2)) - 1),
            mode=mode,
        )
    schedule = dst.levels_required(k, eps, state_target, mode=level_mode)
    states = cisc_count(k, schedule.levels, eps, mode=mode)
    return ResourceEstimate(
        architecture=CISC,
        k=k,
        eps=eps,
        eps_target=eps_target,
        levels=schedule.levels,
        expected_states=states,
        distiller="qrm%d" % ((1 << (k + 2)) - 1),
        mode=mode,
    )


def sweep(
    k_list: list[int],
    eps: float,
    eps_target_grid: list[float],
    budget: ErrorBudget = DEFAULT_BUDGET,
    distillers: list[str | DistillationStepModel] = ("qrm15",),
    mode: str = EXACT,
) -> list[ResourceEstimate]:
    """Grid of estimates for architecture comparison plots.

    One RISC row per (distiller, k, target) -- the numbers repeat across
    k by construction -- and one CISC row per (k, target).
    """
    if not k_list or not eps_target_grid:
        raise ValueError("grids must be nonempty")
    rows: list[ResourceEstimate] = []
    for target in eps_target_grid:
        for spec in distillers:
            model = resolve_distiller(spec)
            base = risc_count(target, eps, budget, model)
            for k in k_list:
                rows.append(
                    ResourceEstimate(
                        architecture=base.architecture,
                        k=k,
                        eps=base.eps,
                        eps_target=base.eps_target,
                        levels=base.levels,
                        expected_states=base.expected_states,
                        distiller=base.distiller,
                        mode=base.mode,
                        t_count=base.t_count,
                        notes=base.notes,
                    )
                )
        for k in k_list:
            rows.append(cisc_for_target(k, eps, target, budget, mode=mode))
    return rows


CSV_HEADER = "architecture,k,eps,eps_target,levels,expected_states,distiller,mode"


def sweep_to_csv(rows: list[ResourceEstimate]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            "%s,%d,%.17g,%.17g,%d,%.17g,%s,%s"
            % (r.architecture, r.k, r.eps, r.eps_target, r.levels,
               r.expected_states, r.distiller, r.mode)
        )
    return "\n".join(lines) + "\n"
