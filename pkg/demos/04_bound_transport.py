"""
Bound transport and the absorption identity
===========================================

Any additive map on anchored sets is pinned down on extremes by where
it sends the two step atoms {-1,0} and {0,1}.  This demo replays the
two identities that make that rigidity argument run.
"""

import random

from powermonoid import (
    Identity,
    Negation,
    apply,
    as_zero_set,
    check_absorption_identity,
    kfold,
    predict_bounds,
    sumset,
    transport_from_images,
)
from powermonoid.autos import STEP_DOWN, STEP_UP

# A map sending {0,1} to itself and {-1,0} to itself transports the
# bounds of every anchored set unchanged: min and max are linear in
# the distances to zero.
t_id = transport_from_images(apply(Identity(), STEP_UP), apply(Identity(), STEP_DOWN))
print("identity transport of (3, 5):", predict_bounds(t_id, 3, 5))

# Negation swaps the step atoms, so the predicted bounds flip sign
# and order.
t_neg = transport_from_images(apply(Negation(), STEP_UP), apply(Negation(), STEP_DOWN))
print("negation transport of (3, 5):", predict_bounds(t_neg, 3, 5))

# The absorption identity: once k dominates both distances of X to
# zero, adding k copies of each step atom swallows X entirely.
x = as_zero_set([-2, 0, 3])
k = 3
lhs = sumset(sumset(x, kfold(STEP_DOWN, k)), kfold(STEP_UP, k))
rhs = sumset(kfold(STEP_DOWN, k + 2), kfold(STEP_UP, k + 3))
print("absorb", x, "at k =", k, ":", lhs == rhs)

# check_absorption_identity packages the same comparison and insists
# on the minimal threshold.
rng = random.Random(7)
for _ in range(3):
    pts = {0} | {rng.randint(-9, 9) for _ in range(4)}
    y = as_zero_set(pts)
    k_min = max(-y.min, y.max)
    print(f"minimal k for {y} is {k_min}:", check_absorption_identity(y, k_min))
