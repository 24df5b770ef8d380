"""
Boxing dimension and run profiles
=================================

Every finite integer set splits uniquely into maximal runs of
consecutive integers.  The number of runs is the boxing dimension,
the complexity measure driving the factorization and rigidity
results in this package.
"""

from powermonoid import bdim, from_runs, interval, make_set, reflect, runs, sumset, translate

# A set with four runs: {-5,-4}, {-2}, {0,1}, {5,6,7}.
x = make_set([-5, -4, -2, 0, 1, 5, 6, 7])
profile = runs(x)
print("x =", x)
print("runs =", profile.runs)
print("bdim =", bdim(x))

# Intervals are exactly the sets of boxing dimension 1.
print("bdim of an interval:", bdim(interval(-3, 9)))

# The profile round-trips: rebuilding from the runs recovers the set.
print("round trip ok:", from_runs(profile.runs) == x)

# Summing cannot increase the run count beyond the product of the
# factors' counts, and adding a long enough interval collapses
# everything to one run.
y = make_set([0, 2])
print("bdim(x + y) =", bdim(sumset(x, y)))
pad = interval(0, 12)
print("bdim(x + [0..12]) =", bdim(sumset(x, pad)))

# Translation and reflection are rigid motions: the run count is blind
# to both.
print("invariant under shift:", bdim(translate(x, 100)) == bdim(x))
print("invariant under flip: ", bdim(reflect(x, 0)) == bdim(x))
