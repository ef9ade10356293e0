"""Exact causal order on the rational Minkowski lattice.

Every coordinate is a fraction and every comparison is decided by integer
arithmetic, so none of the printed answers involve rounding.
"""

from fractions import Fraction as F

from minkbranch import (
    between,
    common_upper_bound,
    interval,
    leq,
    lift_above,
    lt,
    point,
    slr,
)

x = point(0, 1)
y = point(F(3, 2), 0)
print(f"interval({x}, {y}) = {interval(x, y)}")
print(f"{x} <= {y}: {leq(x, y)}")

# lightlike-related points are causally ordered: a signal can reach them
a, b = point(0, 0), point(1, 1)
print(f"{a} <= {b} (lightlike): {leq(a, b)}")
print(f"{a} space-like to (0, 1): {slr(a, point(0, 1))}")

# any pair has a common upper bound; the repair lifts straight up far
# enough for the light cone to close over both points
wings = (point(1, -3), point(-2, 4))
z = common_upper_bound(*wings)
print(f"over {wings[0]} and {wings[1]}: {z}")
assert leq(wings[0], z) and leq(wings[1], z)

# with an irrational spatial distance the lift picks the least dyadic
# cover of grain 1/2**16, never a float
up = lift_above(point(0, 0, 0), point(0, 1, 1))
print(f"above (0,0,0) clearing (0,1,1): time {up.time}")
assert up.time ** 2 >= 2

# order density, exactly
lo, hi = point(0, 0), point(2, 1)
mid = between(lo, hi)
print(f"between {lo} and {hi}: {mid}")
assert lt(lo, mid) and lt(mid, hi)
