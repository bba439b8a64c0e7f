import random

import pytest
from hypothesis import given, strategies as st

from qrmagic.gf2 import (
    BitMatrix,
    BitVector,
    EnumerationBoundError,
    componentwise_product,
    enumerate_codewords,
    hamming_weight,
    in_rowspan,
    row_reduce,
    weight_distribution,
)

from conftest import RM14_GENERATOR, RM14_SHORTENED_ROWS, and_strings, span_of


def test_hamming_weight_basics():
    assert hamming_weight(BitVector.zeros(15)) == 0
    assert hamming_weight(BitVector.ones(15)) == 15
    # third row of the standard-form RM(1,4) generator
    assert hamming_weight(BitVector.from_string(RM14_GENERATOR[2])) == 8


def test_componentwise_product():
    v = BitVector.from_string("0110101")
    assert componentwise_product([v]) == v
    assert componentwise_product([v, v.complement()]).is_zero()
    # AND of generator rows 2 and 3 is weight 4 on the first four columns
    r2 = BitVector.from_string(RM14_GENERATOR[1])
    r3 = BitVector.from_string(RM14_GENERATOR[2])
    expected = and_strings(RM14_GENERATOR[1], RM14_GENERATOR[2])
    assert expected == "1111000000000000"
    assert componentwise_product([r2, r3]).to01() == expected


def test_componentwise_product_errors():
    with pytest.raises(ValueError):
        componentwise_product([])
    with pytest.raises(ValueError):
        componentwise_product([BitVector.zeros(3), BitVector.zeros(4)])


def test_row_reduce_identity():
    ident = BitMatrix.from_rows(["100", "010", "001"])
    red = row_reduce(ident)
    assert red.rank == 3
    assert red.matrix == ident
    assert red.pivot_columns == (0, 1, 2)


def test_row_reduce_duplicate_row():
    m = BitMatrix.from_rows(["1100", "1100", "0011"])
    assert row_reduce(m).rank == 2


def test_row_reduce_rm14_rank():
    g = BitMatrix.from_rows(RM14_GENERATOR)
    assert row_reduce(g).rank == 5


def test_row_reduce_is_fully_reduced():
    rng = random.Random(7)
    for _ in range(50):
        rows = [
            BitVector(rng.getrandbits(12), 12) for _ in range(rng.randint(1, 6))
        ]
        red = row_reduce(BitMatrix(rows, 12))
        for col in red.pivot_columns:
            column_ones = sum((r.bits >> col) & 1 for r in red.matrix.rows)
            assert column_ones == 1


def test_enumerate_codewords_trivial():
    zero = BitMatrix.from_rows(["0000"])
    assert list(enumerate_codewords(zero)) == [BitVector.zeros(4)]
    single = BitMatrix.from_rows(["0110"])
    words = {w.to01() for w in enumerate_codewords(single)}
    assert words == {"0000", "0110"}


def test_enumerate_codewords_shortened_rows():
    m = BitMatrix.from_rows(RM14_SHORTENED_ROWS)
    words = {w.to01() for w in enumerate_codewords(m)}
    assert words == span_of(RM14_SHORTENED_ROWS)
    assert len(words) == 16
    assert all(w.count("1") == 8 for w in words if w != "0" * 15)


def test_enumeration_is_restartable():
    m = BitMatrix.from_rows(RM14_SHORTENED_ROWS)
    first = [w.to01() for w in enumerate_codewords(m)]
    second = [w.to01() for w in enumerate_codewords(m)]
    assert first == second


def test_enumeration_bound():
    rows = [BitVector(1 << i, 31) for i in range(31)]
    with pytest.raises(EnumerationBoundError):
        list(enumerate_codewords(BitMatrix(rows, 31)))


def test_weight_distribution():
    assert weight_distribution(
        BitMatrix.from_rows(RM14_SHORTENED_ROWS)
    ).counts == {0: 1, 8: 15}
    assert weight_distribution(
        BitMatrix.from_rows(RM14_GENERATOR)
    ).counts == {0: 1, 8: 30, 16: 1}
    empty = BitMatrix([], 9)
    assert weight_distribution(empty).counts == {0: 1}


def test_weight_distribution_total_is_power_of_rank():
    rng = random.Random(3)
    for _ in range(20):
        rows = [BitVector(rng.getrandbits(10), 10) for _ in range(4)]
        m = BitMatrix(rows, 10)
        dist = weight_distribution(m)
        assert dist.total() == 1 << row_reduce(m).rank
        assert dist.counts[0] >= 1


def test_row_reduce_preserves_rowspan():
    rng = random.Random(11)
    for _ in range(30):
        rows = [BitVector(rng.getrandbits(8), 8) for _ in range(3)]
        m = BitMatrix(rows, 8)
        red = row_reduce(m)
        original = {w.to01() for w in enumerate_codewords(m)}
        reduced = {w.to01() for w in enumerate_codewords(red.matrix)}
        assert original == reduced


def test_in_rowspan():
    m = BitMatrix.from_rows(RM14_SHORTENED_ROWS)
    for w in enumerate_codewords(m):
        assert in_rowspan(m, w)
    assert not in_rowspan(m, BitVector.ones(15))


def test_text_round_trip():
    m = BitMatrix.from_rows(RM14_GENERATOR)
    assert BitMatrix.from_text(m.to_text()) == m
    assert m.to_text().splitlines()[0] == RM14_GENERATOR[0]


def test_matmul_transpose():
    a = BitMatrix.from_rows(["110", "011"])
    product = a.matmul_transpose(a)
    # <r0,r0> = 2 = 0, <r0,r1> = 1, <r1,r1> = 2 = 0
    assert product.row(0).to01() == "01"
    assert product.row(1).to01() == "10"


@given(st.integers(0, 2**24 - 1), st.integers(0, 2**24 - 1))
def test_xor_weight_identity(a, b):
    va, vb = BitVector(a, 24), BitVector(b, 24)
    assert hamming_weight(va ^ vb) == (
        hamming_weight(va) + hamming_weight(vb) - 2 * hamming_weight(va & vb)
    )


@given(st.lists(st.integers(0, 2**12 - 1), min_size=1, max_size=5), st.randoms())
def test_product_order_invariance(raw, rng):
    vs = [BitVector(b, 12) for b in raw]
    shuffled = list(vs)
    rng.shuffle(shuffled)
    assert componentwise_product(vs) == componentwise_product(shuffled)


def test_bitvector_validation():
    with pytest.raises(ValueError):
        BitVector(8, 3)  # bit outside length
    with pytest.raises(ValueError):
        BitVector.from_bits([0, 2])
    with pytest.raises(ValueError):
        BitMatrix.from_rows(["10", "100"])
