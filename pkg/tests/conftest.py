"""Shared reference data for the test suite.

The standard-form generator of RM(1,4) is hard-coded here (not taken
from the library) so construction tests compare against an independent
source, and several derived values are brute-forced in the tests from
these strings alone.
"""

RM14_GENERATOR = (
    "1111111111111111",
    "1111111100000000",
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
)

# first row and last column removed
RM14_SHORTENED_ROWS = tuple(row[:-1] for row in RM14_GENERATOR[1:])

# known leading cubic coefficients of the family's output-error curves
CUBIC_COEFFS = {
    2: 35,
    3: 155,
    4: 651,
    5: 2667,
    6: 10795,
    7: 43435,
    8: 174251,
    9: 698027,
    10: 2794155,
}

# distillation thresholds, percent, two decimals
THRESHOLDS_PCT = {
    2: "14.15",
    3: "6.94",
    4: "3.44",
    5: "1.71",
    6: "0.85",
    7: "0.43",
    8: "0.21",
    9: "0.11",
    10: "0.05",
}

# small-code parameter table: (r, m) -> (dual_r, primal [n,k,d],
# dual [n,k,d], quantum marker or None).
# The published table misprints the primal distance of (2,6) as 32 (the
# value of the (1,6) row above); the distance formula 2^(m-r) and
# exhaustive enumeration (test_codes) both give 16, used here.
CODE_TABLE = {
    (0, 1): (0, [2, 1, 2], [2, 1, 2], None),
    (0, 2): (1, [4, 1, 4], [4, 3, 2], None),
    (0, 3): (2, [8, 1, 8], [8, 7, 2], None),
    (1, 3): (1, [8, 4, 4], [8, 4, 4], "[[7,1]]"),
    (0, 4): (3, [16, 1, 16], [16, 15, 2], None),
    (1, 4): (2, [16, 5, 8], [16, 11, 4], "[[15,1]]"),
    (0, 5): (4, [32, 1, 32], [32, 31, 2], None),
    (1, 5): (3, [32, 6, 16], [32, 26, 4], "[[31,1]]"),
    (2, 5): (2, [32, 16, 8], [32, 16, 8], "[[31,1]]"),
    (0, 6): (5, [64, 1, 64], [64, 63, 2], None),
    (1, 6): (4, [64, 7, 32], [64, 57, 4], "[[63,1]]"),
    (2, 6): (3, [64, 22, 16], [64, 42, 8], "[[63,1]]"),
}

MISPRINTED_CELLS = {(2, 6): "primal d printed as 32; formula and enumeration give 16"}


def xor_strings(a: str, b: str) -> str:
    return "".join("1" if x != y else "0" for x, y in zip(a, b))


def and_strings(a: str, b: str) -> str:
    return "".join("1" if x == y == "1" else "0" for x, y in zip(a, b))


def span_of(rows: tuple[str, ...]) -> set[str]:
    """Brute-force rowspan over subsets; independent of the library."""
    n = len(rows[0]) if rows else 0
    out = set()
    for mask in range(1 << len(rows)):
        acc = "0" * n
        for i, row in enumerate(rows):
            if (mask >> i) & 1:
                acc = xor_strings(acc, row)
        out.add(acc)
    return out
