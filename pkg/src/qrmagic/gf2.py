"""Exact GF(2) linear algebra on bit-packed vectors and matrices.

Vectors are stored as Python integers (bit ``i`` of the integer is
coordinate ``i``), so XOR/AND/popcount run on machine words regardless of
length.  Column index 0 is the leftmost character in the text formats and
the leftmost column of a printed generator matrix.

All values are immutable after construction and safe to share across
threads; codeword enumeration returns independently restartable
generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Largest rank for which exhaustive rowspan enumeration is permitted.
#: Every code this package constructs has rank <= 13; the guard exists
#: only to fail fast on misuse.
ENUMERATION_RANK_BOUND = 30


class EnumerationBoundError(ValueError):
    """Raised when an exhaustive rowspan walk would exceed the rank bound."""


class BitVector:
    """Fixed-length vector over GF(2), packed into one Python int."""

    __slots__ = ("n", "_bits")

    def __init__(self, bits: int, n: int):
        if n < 0:
            raise ValueError("length must be nonnegative")
        if bits < 0 or bits >> n:
            raise ValueError("bits out of range for length %d" % n)
        self.n = n
        self._bits = bits

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(0, n)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls((1 << n) - 1, n)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        value = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError("entries must be 0 or 1")
            value |= b << n
            n += 1
        return cls(value, n)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        return cls.from_bits(int(c) for c in s.strip())

    # -- accessors ----------------------------------------------------

    @property
    def bits(self) -> int:
        """The packed integer value (bit i == coordinate i)."""
        return self._bits

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self._bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        b = self._bits
        for _ in range(self.n):
            yield b & 1
            b >>= 1

    def weight(self) -> int:
        return self._bits.bit_count()

    def is_zero(self) -> bool:
        return self._bits == 0

    # -- algebra ------------------------------------------------------

    def _check_len(self, other: "BitVector") -> None:
        if self.n != other.n:
            raise ValueError("length mismatch: %d vs %d" % (self.n, other.n))

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check_len(other)
        return BitVector(self._bits ^ other._bits, self.n)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check_len(other)
        return BitVector(self._bits & other._bits, self.n)

    def complement(self) -> "BitVector":
        return BitVector(self._bits ^ ((1 << self.n) - 1), self.n)

    def dot(self, other: "BitVector") -> int:
        """GF(2) inner product."""
        self._check_len(other)
        return (self._bits & other._bits).bit_count() & 1

    # -- misc ---------------------------------------------------------

    def to01(self) -> str:
        return "".join("1" if (self._bits >> i) & 1 else "0" for i in range(self.n))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitVector)
            and self.n == other.n
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self._bits))

    def __repr__(self) -> str:
        return "BitVector(%s)" % self.to01()


class BitMatrix:
    """Rectangular matrix over GF(2): an immutable list of equal-length rows."""

    __slots__ = ("n", "_rows", "_reduction")

    def __init__(self, rows: Sequence[BitVector], n: int | None = None):
        rows = list(rows)
        if n is None:
            if not rows:
                raise ValueError("empty matrix needs an explicit column count")
            n = rows[0].n
        for r in rows:
            if r.n != n:
                raise ValueError("rows must all have length %d" % n)
        self.n = n
        self._rows = tuple(rows)
        self._reduction: "RowReduction | None" = None  # memoized by row_reduce

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int] | str | BitVector],
                  n: int | None = None) -> "BitMatrix":
        out = []
        for r in rows:
            if isinstance(r, BitVector):
                out.append(r)
            elif isinstance(r, str):
                out.append(BitVector.from_string(r))
            else:
                out.append(BitVector.from_bits(r))
        return cls(out, n)

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "BitMatrix":
        """Parse the plain-text format: one row per line, characters 0/1."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        return cls.from_rows(lines, n)

    # -- accessors ----------------------------------------------------

    @property
    def rows(self) -> tuple[BitVector, ...]:
        return self._rows

    @property
    def row_count(self) -> int:
        return len(self._rows)

    @property
    def col_count(self) -> int:
        return self.n

    def row(self, i: int) -> BitVector:
        return self._rows[i]

    def row_ints(self) -> list[int]:
        return [r.bits for r in self._rows]

    def to_text(self) -> str:
        return "\n".join(r.to01() for r in self._rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return "BitMatrix(%d x %d)" % (self.row_count, self.n)

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.n):
            bits = 0
            for i, r in enumerate(self._rows):
                bits |= ((r.bits >> j) & 1) << i
            cols.append(BitVector(bits, self.row_count))
        return BitMatrix(cols, self.row_count)

    def matmul_transpose(self, other: "BitMatrix") -> "BitMatrix":
        """self @ other^T over GF(2); entry (i, j) = <row_i, other_row_j>."""
        if self.n != other.n:
            raise ValueError("column counts differ")
        out = []
        for r in self._rows:
            bits = 0
            for j, s in enumerate(other._rows):
                bits |= ((r.bits & s.bits).bit_count() & 1) << j
            out.append(BitVector(bits, other.row_count))
        return BitMatrix(out, other.row_count)

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self._rows)


@dataclass(frozen=True)
class RowReduction:
    """Result of Gaussian elimination over GF(2)."""

    matrix: BitMatrix          # reduced row-echelon form, zero rows dropped
    rank: int
    pivot_columns: tuple[int, ...]


@dataclass(frozen=True)
class WeightDistribution:
    """Exact Hamming-weight histogram of a rowspan."""

    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


def hamming_weight(v: BitVector) -> int:
    """Number of 1 entries of ``v``."""
    return v.weight()


def componentwise_product(vs: Sequence[BitVector]) -> BitVector:
    """Bitwise AND of all vectors; order-independent.

    Raises on an empty list or mismatched lengths.
    """
    if not vs:
        raise ValueError("componentwise product of an empty list")
    acc = vs[0]
    for v in vs[1:]:
        acc = acc & v
    return acc


def row_reduce(m: BitMatrix) -> RowReduction:
    """Reduced row-echelon form over GF(2).

    The rowspan is preserved; pivot columns are returned in ascending
    order and each pivot column has a single 1 (in its own row).  The
    result is memoized on the (immutable) input matrix.
    """
    if m._reduction is not None:
        return m._reduction
    n = m.n
    # forward pass: insertion echelon keyed by pivot column
    pivot_of: dict[int, int] = {}
    for row in m.row_ints():
        r = row
        while r:
            low = (r & -r).bit_length() - 1
            p = pivot_of.get(low)
            if p is None:
                pivot_of[low] = r
                break
            r ^= p
    # backward pass: clear the other pivot columns out of each pivot row
    cols = sorted(pivot_of)
    for c in reversed(cols):
        prow = pivot_of[c]
        for c2 in cols:
            if c2 > c and (prow >> c2) & 1:
                prow ^= pivot_of[c2]
        pivot_of[c] = prow
    reduced = BitMatrix([BitVector(pivot_of[c], n) for c in cols], n)
    result = RowReduction(matrix=reduced, rank=len(cols), pivot_columns=tuple(cols))
    m._reduction = result
    return result


def rank(m: BitMatrix) -> int:
    return row_reduce(m).rank


def in_rowspan(m: BitMatrix, v: BitVector, _reduction: RowReduction | None = None) -> bool:
    """Membership test: is ``v`` a GF(2) combination of the rows of ``m``?"""
    red = _reduction if _reduction is not None else row_reduce(m)
    bits = v.bits
    for row_bits, col in zip(red.matrix.row_ints(), red.pivot_columns):
        if (bits >> col) & 1:
            bits ^= row_bits
    return bits == 0


def enumerate_codewords(m: BitMatrix) -> Iterator[BitVector]:
    """Yield each of the ``2^rank`` rowspan elements exactly once.

    Walks a Gray code over the independent rows of the reduced form, so
    consecutive codewords differ by a single row XOR.
    """
    red = row_reduce(m)
    if red.rank > ENUMERATION_RANK_BOUND:
        raise EnumerationBoundError(
            "rank %d exceeds the enumeration bound %d"
            % (red.rank, ENUMERATION_RANK_BOUND)
        )
    rows = red.matrix.row_ints()
    n = m.n

    def walk() -> Iterator[BitVector]:
        acc = 0
        yield BitVector(0, n)
        for i in range(1, 1 << red.rank):
            acc ^= rows[(i & -i).bit_length() - 1]
            yield BitVector(acc, n)

    return walk()


def weight_distribution(m: BitMatrix) -> WeightDistribution:
    """Exact weight histogram of the rowspan of ``m``."""
    counts: dict[int, int] = {}
    for w in enumerate_codewords(m):
        k = w.weight()
        counts[k] = counts.get(k, 0) + 1
    return WeightDistribution(counts=counts)
