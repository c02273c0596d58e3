"""Counting lattice points inside the ellipses of a quadratic form.

Walks through the basic objects: forms, the enumeration of form values,
all vs. primitive counts, and the error terms P and R left after
subtracting the ellipse areas.
"""

import numpy as np

import qfzeta as qz

# A form is just its three coefficients; sqrt tokens are handy for
# irrational ones. The discriminant D = 4ac - b^2 must be positive.
circle = qz.parse_form("1,0,1")
skew = qz.parse_form("1,sqrt(2),sqrt(3)")
print("circle:", circle, " D =", circle.disc)
print("skew:  ", skew, " D =", skew.disc)

# Counting at a threshold: A includes the origin, B keeps only pairs
# with coprime coordinates.
for x in (1.0, 25.0, 1000.0):
    res = qz.count(circle, x)
    print(f"circle x={x:>6}: A={res.a:>5}  B={res.b:>5}  P={res.p:+.4f}  R={res.r:+.4f}")

# The enumeration behind the counts groups lattice points by form value.
vlist = qz.enumerate_points(circle, 25.0)
print("\nfirst values of the circle form with multiplicities (all/primitive):")
for v, t, p in list(zip(vlist.values, vlist.total_mult, vlist.prim_mult))[:8]:
    print(f"  Q = {v:>4.0f}: {t} points, {p} primitive")

# Two independent routes to B(x): filtering by gcd during enumeration,
# and Moebius inversion over the all-points counts A(x / k^2). They must
# agree exactly.
for x in (10.0, 1000.0, 10000.0):
    direct = qz.count(skew, x).b
    inverted = qz.count_primitive_moebius(skew, x)
    print(f"skew x={x:>7}: gcd-filter B = {direct:>6}, Moebius B = {inverted:>6}")
    assert direct == inverted

# The deviations P and R wobble around zero while the counts explode;
# that wobble is what the rest of the package quantifies.
xs = np.geomspace(10, 1e5, 8)
print("\n       x          A          P           B          R")
for res in qz.count_many(skew, xs):
    print(f"{res.x:>10.0f} {res.a:>10} {res.p:>+10.3f}  {res.b:>10} {res.r:>+10.3f}")
