"""Reed-Muller codes, their duals and shortenings, and CSS assembly.

Generator matrices follow one fixed canonical form: rows are Boolean
monomials in degree-ascending order; within degree 1 the variables run
from the slowest-alternating column block (x1) down to the
fastest-alternating (xm); higher degrees use lexicographic subsets.
Column j evaluates the monomials at the point whose i-th coordinate is
``NOT bit_{m-i}(j)``, which makes the first row all-ones, the last column
the all-zero evaluation point, and reproduces the standard printed form
of the first-order length-16 generator bit-exactly.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .gf2 import (
    ENUMERATION_RANK_BOUND,
    BitMatrix,
    BitVector,
    EnumerationBoundError,
    row_reduce,
    weight_distribution,
)

MAX_M = 16  # n = 65535 tops; far beyond any distillation need


class CodeConstructionError(ValueError):
    """Construction parameters violate a structural precondition."""


class EmptyXCodeError(CodeConstructionError):
    """Shortening removed every X generator: the CSS construction is
    classical-only (the empty-set marker in the small-code table)."""


class LinearCode:
    """Classical binary linear code described by a generator matrix.

    ``d`` is lazy: pass the known value when construction guarantees it,
    otherwise the first access computes it exhaustively (rank-bounded).
    """

    def __init__(self, generator: BitMatrix, d: int | None = None):
        self.generator = generator
        self.n = generator.col_count
        self.k = row_reduce(generator).rank
        self._d = d

    @property
    def d(self) -> int:
        if self._d is None:
            self._d = minimum_distance(self)
        return self._d

    def parameters(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)

    def __repr__(self) -> str:
        d = self._d if self._d is not None else "?"
        return "LinearCode[%d,%d,%s]" % (self.n, self.k, d)


class CssCode:
    """CSS code given by X-check and Z-check generator rows.

    Invariants checked at construction: hx @ hz^T == 0 and
    ``k_logical == n - rank(hx) - rank(hz)``.
    """

    def __init__(
        self,
        hx: BitMatrix,
        hz: BitMatrix,
        logical_x: BitVector | None = None,
        logical_z: BitVector | None = None,
        label: str = "",
    ):
        if hx.col_count != hz.col_count:
            raise CodeConstructionError("hx and hz have different lengths")
        if not hx.matmul_transpose(hz).is_zero():
            raise CodeConstructionError("CSS commutation hx @ hz^T != 0")
        self.hx = hx
        self.hz = hz
        self.n = hx.col_count
        self.k_logical = self.n - row_reduce(hx).rank - row_reduce(hz).rank
        self.logical_x = logical_x
        self.logical_z = logical_z
        self.label = label

    def __repr__(self) -> str:
        return "CssCode[[%d,%d]]%s" % (
            self.n,
            self.k_logical,
            " " + self.label if self.label else "",
        )


def _variable_rows(m: int) -> list[int]:
    """Packed evaluation vectors of x_1 .. x_m.

    x_i(column j) = NOT bit_{m-i}(j), so x_i is the periodic pattern of
    2^(m-i) ones followed by 2^(m-i) zeros, built with the repeated-block
    integer trick.
    """
    n = 1 << m
    rows = []
    for i in range(1, m + 1):
        half = 1 << (m - i)
        block = (1 << half) - 1
        period = 2 * half
        rows.append(block * (((1 << n) - 1) // ((1 << period) - 1)))
    return rows


def _monomial_row(variables: tuple[int, ...], var_rows: list[int], n: int) -> BitVector:
    """Evaluation vector of the product of x_i over ``variables`` (1-based)."""
    bits = (1 << n) - 1
    for i in variables:
        bits &= var_rows[i - 1]
    return BitVector(bits, n)


def reed_muller(r: int, m: int) -> LinearCode:
    """Order-r binary Reed-Muller code of length 2^m in canonical form.

    Parameters are [2^m, sum_{i<=r} C(m,i), 2^(m-r)].
    """
    if m < 1 or m > MAX_M:
        raise CodeConstructionError("m must be in [1, %d]" % MAX_M)
    if not 0 <= r <= m:
        raise CodeConstructionError("need 0 <= r <= m")
    var_rows = _variable_rows(m)
    rows = []
    for deg in range(r + 1):
        for variables in combinations(range(1, m + 1), deg):
            rows.append(_monomial_row(variables, var_rows, 1 << m))
    code = LinearCode(BitMatrix(rows, 1 << m), d=1 << (m - r))
    expected_k = sum(comb(m, i) for i in range(r + 1))
    if code.k != expected_k:
        raise AssertionError("rank %d != expected %d" % (code.k, expected_k))
    return code


def dual_parameters(r: int, m: int) -> tuple[int, int]:
    """Order of the dual code: (m-r-1, m), verified by orthogonality."""
    if r > m - 1:
        raise CodeConstructionError("dual order would be negative for r = m")
    primal = reed_muller(r, m)
    dual = reed_muller(m - r - 1, m)
    if not primal.generator.matmul_transpose(dual.generator).is_zero():
        raise AssertionError("dual generator not orthogonal to primal")
    return (m - r - 1, m)


def shorten(code: LinearCode) -> LinearCode:
    """Puncture the last column and expurgate the single row supported on it.

    Requires standard form: exactly one generator row (the all-ones first
    row) is nonzero on the removal column.  The result is the even
    subcode of the punctured code, one bit shorter and one dimension
    smaller.
    """
    col = code.n - 1
    supported = [i for i, row in enumerate(code.generator.rows) if row[col] == 1]
    if len(supported) != 1:
        raise CodeConstructionError(
            "shortening needs exactly one row supported on column %d, found %d"
            % (col, len(supported))
        )
    drop = supported[0]
    new_rows = [
        BitVector(row.bits & ((1 << col) - 1), col)
        for i, row in enumerate(code.generator.rows)
        if i != drop
    ]
    shortened = LinearCode(BitMatrix(new_rows, col))
    if shortened.k != code.k - 1:
        raise AssertionError("shortening did not drop exactly one dimension")
    return shortened


def minimum_distance(code: LinearCode) -> int:
    """Minimum nonzero codeword weight, by exhaustive rowspan walk.

    Walks packed integers along a Gray code, so ranks around 22 (a few
    million codewords) stay in the seconds range.
    """
    red = row_reduce(code.generator)
    if red.rank == 0:
        raise CodeConstructionError("zero code has no nonzero codeword")
    if red.rank > ENUMERATION_RANK_BOUND:
        raise EnumerationBoundError(
            "rank %d exceeds the enumeration bound" % red.rank
        )
    rows = red.matrix.row_ints()
    acc = 0
    best = code.n + 1
    for i in range(1, 1 << red.rank):
        acc ^= rows[(i & -i).bit_length() - 1]
        w = acc.bit_count()
        if w < best:
            best = w
    return best


def qrm(r: int, m: int, shortened: bool = True) -> CssCode:
    """Quantum Reed-Muller CSS code from RM(r, m) and its dual.

    X checks come from the (optionally shortened) primal generator and Z
    checks from the (optionally shortened) dual generator.  The shortened
    family has parameters [[2^m - 1, 1]]; its logical X and Z are stored
    as the all-ones vector.  Unshortened parameters give ``k_logical`` 0
    (a stabilizer state).
    """
    dual_r = m - r - 1
    if dual_r < 0:
        raise CodeConstructionError("dual order negative: r = m")
    primal = reed_muller(r, m)
    dual = reed_muller(dual_r, m)
    if not shortened:
        return CssCode(primal.generator, dual.generator,
                       label="QRM(%d,%d)" % (r, m))
    if r == 0:
        raise EmptyXCodeError(
            "shortened RM(0,%d) has no generators left; the quantum "
            "construction degenerates to a classical code" % m
        )
    if dual_r < 1:
        raise EmptyXCodeError(
            "shortened dual RM(%d,%d) has no generators left" % (dual_r, m)
        )
    hx = shorten(primal).generator
    hz = shorten(dual).generator
    ones = BitVector.ones(hx.col_count)
    code = CssCode(hx, hz, logical_x=ones, logical_z=ones,
                   label="shortened QRM(%d,%d)" % (r, m))
    if code.k_logical != 1:
        raise CodeConstructionError(
            "expected one logical qubit, got %d" % code.k_logical
        )
    return code


def code_summary(r: int, m: int, shortened: bool) -> dict:
    """Parameter record for the CLI/service ``code`` operation.

    Classical [n, k, d] of the (possibly shortened) primal plus the dual
    order and the logical count of the CSS construction (None when the
    quantum construction is empty/degenerate).
    """
    primal = reed_muller(r, m)
    dual_r, _ = dual_parameters(r, m) if r <= m - 1 else (None, m)
    if shortened:
        short = shorten(primal) if primal.k >= 1 and r >= 1 else None
        n = primal.n - 1
        k = primal.k - 1
        d = short.d if short is not None and short.k else None
    else:
        n, k, d = primal.n, primal.k, primal.d
    try:
        quantum = qrm(r, m, shortened)
        n_logical: int | None = quantum.k_logical
    except CodeConstructionError:
        n_logical = None
    return {
        "r": r,
        "m": m,
        "shortened": shortened,
        "n": n,
        "k": k,
        "d": d,
        "dual_r": dual_r,
        "n_logical": n_logical,
    }


def rm_table_row(r: int, m: int) -> dict:
    """One row of the small-code parameter table: primal, dual, quantum."""
    primal = reed_muller(r, m)
    dual_r = m - r - 1
    dual = reed_muller(dual_r, m)
    try:
        quantum = qrm(r, m, shortened=True)
        marker = "[[%d,%d]]" % (quantum.n, quantum.k_logical)
    except EmptyXCodeError:
        marker = None
    return {
        "r": r,
        "m": m,
        "dual_r": dual_r,
        "primal": list(primal.parameters()),
        "dual": list(dual.parameters()),
        "quantum": marker,
    }


def constant_weight_check(m: int) -> bool:
    """Every nonzero codeword of shortened RM(1, m) has weight 2^(m-1)."""
    short = shorten(reed_muller(1, m))
    dist = weight_distribution(short.generator)
    half = 1 << (m - 1)
    return set(dist.counts) == {0, half} and dist.counts[0] == 1
