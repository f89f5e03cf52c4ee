"""Conjugates, infimal convolution, Moreau envelopes and cone lower bounds."""

from fractions import Fraction as F

import convval as cv

# Conjugate of the indicator of the unit box is the l1 norm.
box = cv.Polyhedron.box([(-1, 1), (-1, 1)])
ind = cv.indicator_function(box)
star = cv.conjugate(ind)
print("Ind_box*(2, -3/2) =", star.eval((2, F(-3, 2))), " (expect |2| + |3/2| = 7/2)")
print("biconjugation u** = u:", cv.biconjugate_check(ind))

# Infimal convolution adds epigraphs; conjugation turns it into a sum.
u = cv.make([((1,), 0), ((-1,), 0)], n=1)            # |x|
v = cv.make([((2,), 1), ((-2,), 1)], n=1)            # 2|x| + 1
w = cv.inf_convolution(u, v)
print("\n(u box v)(3) =", w.eval((3,)))
lhs = cv.conjugate(w)
print("conj(u box v)(1/2) = conj(u)(1/2) + conj(v)(1/2):",
      lhs.eval((F(1, 2),)) == cv.conjugate(u).eval((F(1, 2),)) + cv.conjugate(v).eval((F(1, 2),)))

# Epi-scaling: u_t(x) = t u(x/t).
ut = cv.epi_scale(u, F(3, 2))
print("\nepi-scaled |.| at 3:", ut.eval((3,)), " (still |3| for a 1-homogeneous u)")

# The Moreau envelope is computed exactly per rational t and point.
huber = cv.moreau_eval(u, F(1, 2), (F(1, 4),))
print("\nMoreau envelope of |.| at 1/4 (t = 1/2):", huber, " (quadratic zone: x^2/(2t))")
print("Moreau envelope of |.| at 3   (t = 1/2):",
      cv.moreau_eval(u, F(1, 2), (3,)), " (linear zone: |x| - t/2)")

# Every coercive function admits a certified linear-cone lower bound
# u(x) > a|x| + b; the certificate is re-checked exactly on the epigraph.
q = cv.make([((1, 1), 0), ((-1, 1), 1), ((1, -1), 0), ((-1, -1), 0)], n=2)
bound = cv.cone_bound(q)
print("\ncone bound for q: a =", bound.a, " b =", bound.b)
print("holds exactly:", bound.holds_for(q))

# Smoothing by inf-convolution with a steep cone: u_k <= u and u_k -> u.
seq = [cv.smoothing_sequence(q, cv.Polyhedron.box([(-1, 1), (-1, 1)]), 2 ** j)
       for j in range(5)]
x = (F(1), F(1))
print("\nu_k(1,1) increasing to u(1,1) =", q.eval(x), ":",
      [str(s.eval(x)) for s in seq])
uni = cv.uniform_cone_bound(seq + [q])
print("one cone bound for the whole sequence: a =", uni.a, " b =", uni.b)
