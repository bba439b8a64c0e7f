import json
import math
from fractions import Fraction

import pytest

from qrmagic import distillation as dst
from qrmagic.ratfunc import RationalFunction

from conftest import CUBIC_COEFFS, THRESHOLDS_PCT


def test_cubic_coefficients_exact():
    for k, expected in CUBIC_COEFFS.items():
        assert dst.leading_coefficient(k) == expected
        # closed form of the cubic coefficient
        assert expected == (1 - 3 * 2 ** (k + 1) + 2 ** (2 * k + 3)) // 3


def test_quartic_is_three_times_cubic():
    for k in range(2, 11):
        series = dst.distillation_series(k, 4)
        assert series[0] == series[1] == series[2] == 0
        assert series[4] == 3 * series[3]


def test_output_error_vanishes_at_zero():
    for k in (2, 5, 9):
        assert dst.distillation_polynomial(k).evaluate(0) == 0


def test_thresholds_round_to_known_values():
    for k, expected in THRESHOLDS_PCT.items():
        th = dst.distillation_threshold(k)
        assert "%.2f" % (th * 100.0) == expected


def test_threshold_below_ideal_clifford_bound():
    assert dst.distillation_threshold(2) < 0.14645


def test_threshold_strictly_decreasing():
    values = [dst.distillation_threshold(k) for k in range(2, 11)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_threshold_separates_regimes():
    for k in (2, 4, 6):
        th = dst.distillation_threshold(k)
        assert dst.output_error_float(k, 0.9 * th) < 0.9 * th
        assert dst.output_error_float(k, min(1.1 * th, 0.49)) > min(1.1 * th, 0.49)


def test_acceptance_anchors():
    for k in range(2, 13):
        assert dst.acceptance_probability(k).evaluate(0) == 1
        assert dst.expected_repetitions_float(k, 0.0) == 1.0
    # at e = 1/2 only the uniform term survives: acceptance = 2^-(k+2)
    assert dst.acceptance_probability(2).evaluate(Fraction(1, 2)) == Fraction(1, 16)


def test_repetitions_reciprocal_identity():
    for k in (2, 3, 7):
        product = dst.acceptance_probability(k) * dst.expected_repetitions(k)
        assert product.equivalent(RationalFunction.constant(1))


def test_output_error_denominator_identity():
    # denominator of e_out is 2 * [1 + (2^(k+2)-1) * (1-2e)^(2^(k+1))],
    # which is 2^(k+3) times the acceptance curve
    from qrmagic.ratfunc import Polynomial, expand_base_powers

    for k in (2, 5, 9):
        big_n, big_m = 1 << (k + 1), 1 << (k + 2)
        den = expand_base_powers({0: 2, big_n: 2 * (big_m - 1)}, -2)
        curve = dst.distillation_polynomial(k)
        # canonical den differs from the raw expansion only by content
        scale = den.content() // curve.den.content()
        assert curve.den.scale(scale) == den
        ratio = RationalFunction(den, Polynomial.constant(1 << (k + 3)))
        assert ratio.equivalent(dst.acceptance_probability(k))


def test_expected_repetitions_value():
    # independent evaluation of the same closed form
    reference = 16.0 / (1.0 + 15.0 * (1.0 - 2.0e-4) ** 8)
    got = dst.expected_repetitions_float(2, 1e-4)
    assert abs(got - reference) <= 1e-12 * reference
    assert abs(got - 1.0015) < 1e-4


def test_float_evaluator_against_exact():
    for k in (2, 6, 10):
        for eps in (Fraction(1, 100), Fraction(1, 10), Fraction(2, 5)):
            exact = float(dst.distillation_polynomial(k).evaluate(eps))
            approx = dst.output_error_float(k, float(eps))
            assert abs(approx - exact) <= 1e-10 * max(exact, 1e-30)


def test_log_evaluator_against_exact_composition():
    rf = dst.distillation_polynomial(2)
    e1 = rf.evaluate(Fraction(1, 10000))
    e2 = rf.evaluate(e1)

    def frac_log(f):
        scale = max(f.numerator.bit_length(), f.denominator.bit_length()) - 500
        scale = max(scale, 0)
        return math.log((f.numerator >> scale) / (f.denominator >> scale))

    l1 = dst.output_error_log(2, math.log(1e-4))
    l2 = dst.output_error_log(2, l1)
    assert abs(l1 - frac_log(e1)) < 1e-12 * abs(l1)
    assert abs(l2 - frac_log(e2)) < 1e-12 * abs(l2)


def test_log_evaluator_consistent_across_switch():
    for k in (2, 8):
        switch = 0.01 / (1 << (k + 1))
        for eps in (switch * 0.9, switch * 1.1):
            via_log = math.exp(dst.output_error_log(k, math.log(eps)))
            direct = float(dst.distillation_polynomial(k).evaluate(Fraction(eps)))
            # the side above the switch runs on doubles and keeps ~1e-8
            assert abs(via_log - direct) < 1e-7 * direct


def test_output_error_log_at_zero():
    assert dst.output_error_log(2, dst.LOG_ZERO) == dst.LOG_ZERO


def test_monotone_below_threshold():
    for k in (2, 5):
        th = dst.distillation_threshold(k)
        grid = [th * i / 200.0 for i in range(1, 201)]
        values = [dst.output_error_float(k, e) for e in grid]
        assert all(a < b for a, b in zip(values, values[1:]))


def test_levels_required_composition():
    sched = dst.levels_required(2, 1e-4, 1e-10)
    assert sched.levels == 1
    assert abs(sched.per_level_errors[0] - 3.501e-11) < 1e-13
    assert sched.per_level_repetitions[0] == dst.expected_repetitions_float(2, 1e-4)
    assert dst.levels_required(2, 1e-4, 1e-3).levels == 0
    assert dst.levels_required(2, 0.0, 1e-3).levels == 0


def test_levels_required_paper_formula():
    sched = dst.levels_required(2, 1e-4, 1e-20, mode=dst.PAPER_FORMULA)
    assert sched.levels == 2
    # ceiling expression: log(target) / log(eps_out(eps))
    expected = math.ceil(math.log(1e-20) / math.log(dst.output_error_float(2, 1e-4)))
    assert sched.levels == expected


def test_levels_required_deep_target():
    sched = dst.levels_required(2, 1e-4, 1e-200)
    assert sched.levels >= 4
    assert sched.per_level_log10_errors[-1] <= -200


def test_levels_infeasible_above_threshold():
    with pytest.raises(dst.InfeasibleTargetError):
        dst.levels_required(2, 0.2, 1e-10)
    with pytest.raises(dst.InfeasibleTargetError):
        dst.levels_required(2, 1e-4, 0.0)


def test_selinger_t_count():
    assert dst.selinger_t_count(2**-10) == 51
    assert dst.selinger_t_count(0.5) == 15
    assert dst.selinger_t_count(1e-6) == 91
    with pytest.raises(dst.DistillationDomainError):
        dst.selinger_t_count(0.0)
    with pytest.raises(dst.DistillationDomainError):
        dst.selinger_t_count(1.0)


def test_scaling_exponent():
    assert abs(dst.scaling_exponent(2) - math.log(15) / math.log(3)) < 1e-12
    assert abs(dst.scaling_exponent(2) - 2.465) < 1e-3
    assert abs(dst.scaling_exponent(3) - 3.126) < 1e-3
    assert abs(dst.scaling_exponent(6) - 5.044) < 1e-3


def test_k_range_guards():
    for bad in (1, 13):
        with pytest.raises(dst.DistillationDomainError):
            dst.distillation_polynomial(bad)
        with pytest.raises(dst.DistillationDomainError):
            dst.distillation_threshold(bad)


def test_step_model_qrm():
    model = dst.qrm_step_model(2)
    assert model.inputs_per_round == 15 and model.outputs_per_round == 1
    assert model.states_per_output(0.0) == 15.0
    assert model.authoritative


def test_mek_model_anchors():
    model = dst.mek_model([0, 0, 6.0], [1.0, -8.0], source="test")
    assert model.inputs_per_round == 10 and model.outputs_per_round == 2
    assert model.acceptance(0.0) == 1.0
    assert model.states_per_output(0.0) == 5.0
    assert math.exp(model.output_error_log(math.log(1e-3))) == pytest.approx(6e-6)
    with pytest.raises(ValueError):
        dst.mek_model([0.1, 0, 6.0], [1.0], source="bad anchor")
    with pytest.raises(ValueError):
        dst.mek_model([0, 0, 6.0], [0.9], source="bad acceptance")
    with pytest.raises(ValueError):
        dst.mek_model([0, 6.0], [1.0], source="linear leading order")


def test_mek_placeholder_flagged():
    assert not dst.MEK_PLACEHOLDER.authoritative
    assert "NON-AUTHORITATIVE" in dst.MEK_PLACEHOLDER.label


def test_load_mek_params(tmp_path):
    path = tmp_path / "mek.json"
    path.write_text(json.dumps({
        "acceptance": [1.0, -8.0, 20.0],
        "output_error": [0.0, 0.0, 6.0, -30.0],
        "source": "unit-test",
    }))
    model = dst.load_mek_params(path)
    assert model.authoritative
    assert "unit-test" in model.label
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"acceptance": [1.0]}))
    with pytest.raises(ValueError):
        dst.load_mek_params(bad)
    bad.write_text(json.dumps({"acceptance": [0.5], "output_error": [0, 0, 1]}))
    with pytest.raises(ValueError):
        dst.load_mek_params(bad)
