"""Exact-arithmetic toolkit for divisible quantum Reed-Muller codes and
magic-state distillation of small-angle Z rotations.

Subpackages and modules:

* ``gf2`` -- bit-packed GF(2) vectors/matrices, rank, codeword enumeration.
* ``codes`` -- Reed-Muller codes, duals, shortening, CSS assembly.
* ``transversality`` -- Ward divisibility test and transversal-gate
  certification.
* ``ratfunc`` -- exact big-integer polynomial and rational-function
  arithmetic.
* ``distillation`` -- closed-form output-error/acceptance curves,
  thresholds, level schedules, step models.
* ``protosim`` -- Clifford-circuit IR, encoder synthesis, Pauli-frame
  propagation and the exact error-enumeration oracle.
* ``resources`` -- RISC/CISC expected resource-state counts and sweeps.
* ``service`` -- FastAPI wrapper exposing all of the above over HTTP.
* ``cli`` -- command-line front end (thin client of the service layer).
"""

__version__ = "0.1.0"
