"""
Atoms and factorizations in the reduced monoid
==============================================

Restricting to sets containing 0 makes {0} the unit and turns the
power monoid into a reduced commutative monoid.  Because 0 sits in
every factor, each factor is contained in any product it enters, so
factorization is a finite search over anchored subsets.
"""

from powermonoid import UNIT, as_zero_set, candidates_with_bounds, factorizations, is_atom

# The unit and a first factorization.  {-1,0,1,2} splits three ways.
x = as_zero_set([-1, 0, 1, 2])
print("unit =", UNIT)
for y, z in factorizations(x):
    print(f"{x} = {y} + {z}")

# Atoms admit no factorization into two non-units.  Gap sets such as
# {-1,0,2} are atoms: any candidate pair would have to fill the gap.
print("is_atom({-1,0,2}):", is_atom(as_zero_set([-1, 0, 2])))
print("factorizations:   ", factorizations(as_zero_set([-1, 0, 2])))

# Two-sided steps {-1,0} and {0,1} are atoms as well, and they are the
# only factor shapes a one-step set can use.
for pts in ([-1, 0], [0, 1], [0, 5]):
    s = as_zero_set(pts)
    print(f"is_atom({s}):", is_atom(s))

# Factor candidates are cheap to enumerate by bounds alone: a factor
# of a set spanning [lo, hi] is an anchored subset of [lo, hi] hitting
# both endpoints or neither side beyond them.
cands = candidates_with_bounds(-1, 2)
print("candidates with bounds (-1, 2):", cands)

# Interval sets of length at least 2 always factor; the number of
# distinct splits grows with the length.
for n in (2, 3, 4, 5):
    iv = as_zero_set(range(n + 1))
    print(f"[0..{n}] has {len(factorizations(iv))} factorizations")
