import random
from math import comb

import pytest

from qrmagic import codes
from qrmagic.gf2 import BitMatrix, BitVector, enumerate_codewords, row_reduce, weight_distribution

from conftest import CODE_TABLE, RM14_GENERATOR, RM14_SHORTENED_ROWS, span_of


def test_rm14_generator_bit_exact():
    code = codes.reed_muller(1, 4)
    assert code.generator.to_text() == "\n".join(RM14_GENERATOR)
    assert code.parameters() == (16, 5, 8)


def test_rm_small_parameters():
    assert codes.reed_muller(0, 3).parameters() == (8, 1, 8)
    assert codes.reed_muller(0, 3).generator.row(0) == BitVector.ones(8)
    assert codes.reed_muller(2, 5).parameters() == (32, 16, 8)


def test_rm_rank_formula():
    rng = random.Random(5)
    for _ in range(10):
        m = rng.randint(1, 7)
        r = rng.randint(0, m)
        code = codes.reed_muller(r, m)
        assert code.k == sum(comb(m, i) for i in range(r + 1))
        assert code.n == 2**m


def test_rm_errors():
    with pytest.raises(codes.CodeConstructionError):
        codes.reed_muller(4, 3)
    with pytest.raises(codes.CodeConstructionError):
        codes.reed_muller(1, 0)
    with pytest.raises(codes.CodeConstructionError):
        codes.reed_muller(1, 17)


def test_dual_parameters():
    assert codes.dual_parameters(1, 3) == (1, 3)
    assert codes.dual_parameters(1, 4) == (2, 4)
    assert codes.reed_muller(2, 4).parameters() == (16, 11, 4)
    assert codes.dual_parameters(0, 2) == (1, 2)
    assert codes.reed_muller(1, 2).parameters() == (4, 3, 2)
    with pytest.raises(codes.CodeConstructionError):
        codes.dual_parameters(3, 3)


def test_shorten_rm14():
    short = codes.shorten(codes.reed_muller(1, 4))
    assert (short.n, short.k) == (15, 4)
    assert short.generator.to_text() == "\n".join(RM14_SHORTENED_ROWS)
    assert weight_distribution(short.generator).counts == {0: 1, 8: 15}
    assert short.d == 8


def test_shorten_other_orders():
    assert (codes.shorten(codes.reed_muller(1, 3)).n,
            codes.shorten(codes.reed_muller(1, 3)).k) == (7, 3)
    short5 = codes.shorten(codes.reed_muller(1, 5))
    assert (short5.n, short5.k) == (31, 5)
    assert weight_distribution(short5.generator).counts == {0: 1, 16: 31}


def test_shorten_precondition():
    # two rows supported on the last column
    bad = codes.LinearCode(BitMatrix.from_rows(["1111", "0011"]))
    with pytest.raises(codes.CodeConstructionError):
        codes.shorten(bad)


def test_shorten_then_extend_recovers_punctured():
    for m in (3, 4, 5):
        full = codes.reed_muller(1, m)
        short = codes.shorten(full)
        extended = BitMatrix(
            list(short.generator.rows) + [BitVector.ones(short.n)], short.n
        )
        punctured = BitMatrix(
            [BitVector(r.bits & ((1 << short.n) - 1), short.n) for r in full.generator.rows],
            short.n,
        )
        assert row_reduce(extended).matrix == row_reduce(punctured).matrix


def test_minimum_distance():
    assert codes.minimum_distance(codes.reed_muller(1, 4)) == 8
    assert codes.minimum_distance(codes.reed_muller(3, 4)) == 2
    assert codes.minimum_distance(codes.shorten(codes.reed_muller(1, 4))) == 8


def test_rm26_distance_formula_not_misprint():
    # the published table lists 32 for RM(2,6); enumeration proves 16
    assert codes.minimum_distance(codes.reed_muller(2, 6)) == 16


def test_qrm_shortened_parameters():
    q15 = codes.qrm(1, 4)
    assert (q15.n, q15.k_logical) == (15, 1)
    q31 = codes.qrm(1, 5)
    assert (q31.n, q31.k_logical) == (31, 1)
    assert q15.logical_x == BitVector.ones(15)
    with pytest.raises(codes.EmptyXCodeError):
        codes.qrm(0, 2)


def test_qrm_css_commutation():
    for (r, m) in [(1, 3), (1, 4), (1, 5), (2, 5), (2, 6)]:
        q = codes.qrm(r, m)
        assert q.hx.matmul_transpose(q.hz).is_zero()


def test_qrm_unshortened_is_stabilizer_state():
    q = codes.qrm(1, 4, shortened=False)
    assert q.k_logical == 0


def test_css_commutation_enforced():
    hx = BitMatrix.from_rows(["110"])
    hz = BitMatrix.from_rows(["100"])
    with pytest.raises(codes.CodeConstructionError):
        codes.CssCode(hx, hz)


def test_code_table():
    for (r, m), (dual_r, primal, dual, marker) in CODE_TABLE.items():
        row = codes.rm_table_row(r, m)
        assert row["dual_r"] == dual_r, (r, m)
        assert row["primal"] == primal, (r, m)
        assert row["dual"] == dual, (r, m)
        assert row["quantum"] == marker, (r, m)


def test_constant_weight_family():
    for m in range(3, 13):
        assert codes.constant_weight_check(m)


def test_shortened_rowspan_matches_brute_force():
    short = codes.shorten(codes.reed_muller(1, 4))
    words = {w.to01() for w in enumerate_codewords(short.generator)}
    assert words == span_of(RM14_SHORTENED_ROWS)


def test_code_summary():
    info = codes.code_summary(1, 4, shortened=True)
    assert info == {
        "r": 1, "m": 4, "shortened": True, "n": 15, "k": 4, "d": 8,
        "dual_r": 2, "n_logical": 1,
    }
    info_full = codes.code_summary(1, 4, shortened=False)
    assert (info_full["n"], info_full["k"], info_full["d"]) == (16, 5, 8)
    assert info_full["n_logical"] == 0
