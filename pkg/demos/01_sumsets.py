"""
Sumsets of finite integer sets
==============================

A tour of the core object: finite nonempty subsets of the integers
under elementwise addition.
"""

from powermonoid import interval, kfold, make_set, parse_set, sumset

# Build sets from any iterable of ints, or parse the brace notation.
x = make_set([-1, 0, 2])
y = parse_set("{0,1,3}")
print("x =", x)
print("y =", y)

# The sum collects a + b over all pairs.  Here 16 pairs land on 6 values.
print("x + y =", sumset(x, y))

# Addition also works through the + operator.
print("x + y =", x + y)

# Intervals are closed under addition: endpoints simply add.
a = interval(-3, 1)
b = interval(2, 5)
print(a, "+", b, "=", a + b)

# k-fold sums grow linearly in the endpoints.  Summing {0,1} with itself
# k times gives the interval from 0 to k.
step = make_set([0, 1])
for k in range(1, 5):
    print(f"{k} * {step} =", kfold(step, k))

# Doubling a 3-element set can give anywhere from 5 elements
# (arithmetic progressions) up to 6 (all pairwise sums distinct).
ap = make_set([0, 4, 8])
generic = make_set([0, 1, 10])
print("|ap + ap| =", len(sumset(ap, ap)))
print("|generic + generic| =", len(sumset(generic, generic)))
