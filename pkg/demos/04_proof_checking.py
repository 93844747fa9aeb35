"""Replaying and checking a cutting-planes refutation.

An unsatisfiability certificate derives new constraints from old ones using
four rules: literal axioms, addition, scalar multiplication, and division
with rounding up.  A proof ends by exhibiting a constraint ``0 >= 1``.  The
checker replays every derivation and accepts nothing on faith: a single
altered token makes it reject.
"""

from sbgkit import (
    add,
    axiom_literal,
    divide,
    neg,
    parse_opb,
    parse_proof,
    verify,
    VerifyError,
)
from sbgkit.fixtures import EXAMPLE_UNSAT_OPB, EXAMPLE_UNSAT_PROOF

formula = parse_opb(EXAMPLE_UNSAT_OPB)
print("formula:")
for i, c in enumerate(formula.constraints, start=1):
    print(f"  ({i})  {c}")

# the first derivation of the certificate, by hand:
# constraint 3 plus the axiom ~x3 >= 0 cancels x3, then dividing by 2
# gives x1 + x4 >= 1
step = add(formula.constraints[2], axiom_literal(neg(3)))
print(f"\n(3) + (~x3 >= 0)   = {step}")
step = divide(step, 2)
print(f"divided by 2       = {step}")

print("\nproof file:")
print(EXAMPLE_UNSAT_PROOF)

outcome = verify(formula, parse_proof(EXAMPLE_UNSAT_PROOF))
print(f"verified: contradiction at id {outcome.contradiction_id}, "
      f"{outcome.steps_checked} steps checked")

# tamper with one literal and the chain of derivations no longer reaches
# a contradiction
broken = EXAMPLE_UNSAT_PROOF.replace("p 9 x3 + 0", "p 9 x4 + 0")
try:
    verify(formula, parse_proof(broken))
except VerifyError as err:
    print(f"tampered proof rejected: {err}")
