"""Weight functions, their moments, and the induced cone profile psi_n."""

from fractions import Fraction as F

import convval as cv
from convval.growth import peval

# A weight is a piecewise-polynomial function with rational breakpoints,
# here the triangular bump 2 - t on [0, 2].
zeta = cv.make_growth([0, 2], [[2, -1]], require_nonnegative=True)
print("zeta(0) =", zeta.eval(0), " zeta(1) =", zeta.eval(1), " zeta(3) =", zeta.eval(3))
print("0th and 1st moments over [0, inf):", cv.moment(zeta, 0), cv.moment(zeta, 1))

# psi_n(t) = n * Integral_t^inf (r - t)^(n-1) zeta(r) dr, computed exactly.
n = 2
psi = cv.psi_from_zeta(zeta, n)
for t in (F(0), F(1, 2), F(1), F(2)):
    print(f"psi_{n}({t}) =", peval(psi.region_at(t)[1], t))

# The weight is recovered from psi by n-fold differentiation (exact check):
print("\nderivative relation zeta = ((-1)^n/n!) psi^(n):",
      cv.check_derivative_relation(zeta, n).passed)
print("psi vanishes beyond the support:", cv.check_psi_vanishes(zeta, n).passed)

# Exponential tails are supported with closed-form tail integrals (floats):
expw = cv.make_growth([0], [], tail=(1, [1]), require_nonnegative=True)  # e^{-t}
print("\ne^{-t}: moments k = 0..3 ->", [round(cv.moment(expw, k), 10) for k in range(4)])
npsi = cv.psi_from_zeta(expw, 1)
print("numeric psi_1(1) for e^{-t}:", round(npsi.eval(1), 10), " (= e^{-1})")
