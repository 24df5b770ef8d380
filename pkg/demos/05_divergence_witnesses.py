"""
Divergence witnesses for anchored pairs
=======================================

Given two distinct anchored sets with the same bounds, a short additive
certificate shows they stay distinct after adding a carefully chosen
helper set.  The recipe depends on where the two sets first diverge:
at the start of a run or at the end of one.
"""

from powermonoid import (
    as_zero_set,
    bdim,
    first_divergence,
    induction_measure,
    run_end_witness,
    run_start_witness,
)

# Case 1: divergence at a run start.  B's third run starts later.
a = as_zero_set([-2, 0, 2, 5])
b = as_zero_set([-2, 0, 3, 5])
print("divergence:", first_divergence(a, b))
w = run_start_witness(a, b)
print("helper:", w.helper)
print("witness point:", w.witness_point)
print("separates:", w.witness_point in w.lhs and w.witness_point not in w.rhs)

# Case 2: divergence at a run end.  A's second run ends later.  The
# helper pads everything right of the divergence into a single block,
# which costs more but drops the boxing dimension of both sides.
a = as_zero_set([-2, 0, 1, 2, 5])
b = as_zero_set([-2, 0, 1, 5])
print()
print("divergence:", first_divergence(a, b))
w = run_end_witness(a, b)
print("helper:", w.helper)
print("lhs:", w.lhs)
print("rhs:", w.rhs)
print("witness point:", w.witness_point)

# The textbook induction runs on the combined run count, which the
# run-end construction strictly decreases.
print()
print("measure before:", induction_measure(a, b))
print("measure after: ", bdim(w.lhs) + bdim(w.rhs))
