"""Certification of transversal Z(pi/2^k) gates on CSS codes.

The certificate rests on Ward's divisibility test from classical coding
theory: the code generated by the X-check rows is 2^(k+1)-divisible iff
every componentwise product of j distinct rows has weight divisible by
2^(k+2-j), for 1 <= j <= k+1.  Products with repeated rows reduce (AND is
idempotent) to products of fewer distinct rows, where the required
modulus is stronger, so iterating over distinct subsets is equivalent to
quantifying over all index tuples.

When the test passes for an [[n, 1]] code, applying the single-qubit
rotation to every physical qubit implements the logical rotation raised
to the power ``a = n mod 2^(k+1)``; for odd ``a`` the multiplicative
inverse ``x`` of ``a`` modulo 2^(k+1) converts the power back to a single
logical Z(pi/2^k).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .codes import CssCode
from .gf2 import BitMatrix, enumerate_codewords


@dataclass(frozen=True)
class DivisibilityWitness:
    """First violating subset (by subset size, then lexicographic order)."""

    j: int
    rows: tuple[int, ...]
    weight: int
    modulus: int


@dataclass(frozen=True)
class WardResult:
    passed: bool
    witness: DivisibilityWitness | None = None


@dataclass(frozen=True)
class TransversalityCertificate:
    k: int
    passed: bool
    a: int                      # residue of n mod 2^(k+1)
    x: int | None               # inverse of a when a is odd and test passed
    witness: DivisibilityWitness | None = None


def ward_test(rows: BitMatrix, k: int) -> WardResult:
    """Ward's divisibility test for 2^(k+1)-divisibility.

    Checks weight(product of j distinct rows) % 2^(k+2-j) == 0 for all
    1 <= j <= min(k+1, row count); subset size k+2 would carry modulus
    2^0 and is vacuous.  The result is invariant under row permutation;
    on failure the witness is the first violating subset (smallest j,
    then lexicographic).
    """
    if rows.row_count == 0:
        raise ValueError("ward_test needs at least one row")
    if k < 0:
        raise ValueError("k must be nonnegative")
    ints = rows.row_ints()
    for j in range(1, min(k + 1, len(ints)) + 1):
        modulus = 1 << (k + 2 - j)
        for subset in combinations(range(len(ints)), j):
            prod = ints[subset[0]]
            for i in subset[1:]:
                prod &= ints[i]
            wt = prod.bit_count()
            if wt % modulus:
                return WardResult(
                    passed=False,
                    witness=DivisibilityWitness(
                        j=j, rows=subset, weight=wt, modulus=modulus
                    ),
                )
    return WardResult(passed=True)


def divisibility_direct(rows: BitMatrix, divisor: int) -> bool:
    """Independent oracle: walk the whole rowspan and check every weight."""
    if divisor <= 0:
        raise ValueError("divisor must be positive")
    return all(w.weight() % divisor == 0 for w in enumerate_codewords(rows))


def extended_euclid_inverse(a: int, modulus: int) -> int:
    """Multiplicative inverse of ``a`` modulo ``modulus`` via extended Euclid."""
    if modulus <= 1:
        raise ValueError("modulus must exceed 1")
    old_r, r = a % modulus, modulus
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ValueError("gcd(%d, %d) = %d != 1; no inverse" % (a, modulus, old_r))
    return old_s % modulus


def certify_zk(code: CssCode, k: int) -> TransversalityCertificate:
    """Certify that ``code`` admits the transversal Z(pi/2^k) family gate.

    Requires a one-logical-qubit CSS code whose X-check rows generate the
    divisible classical code under test.
    """
    if code.k_logical != 1:
        raise ValueError(
            "certification is defined for one logical qubit, code has %d"
            % code.k_logical
        )
    result = ward_test(code.hx, k)
    a = code.n % (1 << (k + 1))
    x = None
    if result.passed and a % 2 == 1:
        x = extended_euclid_inverse(a, 1 << (k + 1))
    return TransversalityCertificate(
        k=k, passed=result.passed, a=a, x=x, witness=result.witness
    )
