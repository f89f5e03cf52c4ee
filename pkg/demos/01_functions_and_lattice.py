"""Build piecewise-affine convex functions and combine them.

Everything is exact: points, values, domains and epigraphs are rational, so
equality checks below really are equalities, not approximate comparisons.
"""

from fractions import Fraction as F

import convval as cv

# A coercive function given as a max of affine pieces on all of R^2:
# u(x) = max(|x1|, |x2|), the sup-norm.
u = cv.make([((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)], n=2)
print("u(3/2, -1)      =", u.eval((F(3, 2), -1)))
print("min u           =", u.min_value()[0])
print("{u <= 1} bounded:", u.sublevel(1).is_bounded)

# The cone function of a polytope K containing the origin: its sublevel set
# at t is exactly t*K.
diamond = cv.Polyhedron.from_generators(2, [(1, 0), (-1, 0), (0, 1), (0, -1)])
g = cv.cone_function(diamond)
print("\ngauge of the diamond at (1/2, 1/2):", g.eval((F(1, 2), F(1, 2))))
print("{gauge <= 2} equals 2*diamond:",
      g.sublevel(2) == cv.Polyhedron.from_generators(2, [(2, 0), (-2, 0), (0, 2), (0, -2)]))

# Indicator functions restrict the domain; outside it the value is +inf.
box = cv.indicator_function(cv.Polyhedron.box([(-1, 1), (-1, 1)]))
print("\nindicator inside :", box.eval((0, 0)))
print("indicator outside:", box.eval((2, 0)))

# The pointwise max of two functions is always convex; the pointwise min is
# accepted only when it is provably convex, otherwise a witness is returned.
both = cv.sup(u, g)
print("\nsup(u, gauge)(1, 0) =", both.eval((1, 0)))

w = cv.inf_if_convex(u, cv.sup(u, box))   # min(u, max(u, Ind)) = u: convex
print("certified min equals u:", cv.pwa_equal(w, u))

try:
    shifted = cv.transform(u, [[1, 0], [0, 1]], (3, 0))  # u(x - (3,0))
    cv.inf_if_convex(u, shifted)
except cv.NotConvexMin as exc:
    print("min(u, u(.-3e1)) is not convex; witness point:", exc.witness)

# Volume-preserving (unimodular) changes of variables act exactly.
sheared = cv.transform(u, [[1, 1], [0, 1]], (0, 0))
print("\nvolume of {u <= 1}        =", cv.volume(u.sublevel(1)))
print("volume of sheared sublevel =", cv.volume(sheared.sublevel(1)))
