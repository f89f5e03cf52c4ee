"""The executable law harness: identities that characterize the valuation."""

from fractions import Fraction as F

import convval as cv

zeta0 = cv.make_growth([0, 2], [[2, -1]], require_nonnegative=True)
zetan = cv.make_growth([0, 1], [[1]], require_nonnegative=True)
zfn = lambda u: cv.combined_valuation(zeta0, zetan, u)

# 1. The valuation identity Z(u max v) + Z(u min v) = Z(u) + Z(v), exact,
#    on generated pairs whose minimum is certified convex.
for seed in range(3):
    pair = cv.generate_pair_with_convex_min(seed, 2)
    rep = cv.check_valuation_identity(zfn, pair)
    print(f"valuation identity (seed {seed}): passed={rep.passed} "
          f"left={rep.left} right={rep.right} tolerance={rep.tolerance}")

# 2. Invariance under volume-preserving linear maps and translations.
u = cv.generate_pair_with_convex_min(0, 2).u
rep = cv.check_invariance(zfn, u, trials=5, seed=0, translations=3)
print("\ninvariance:", rep.passed, f"({rep.inputs})")

# 3. The truncation family: cutting a cone function by a slab produces exact
#    lattice identities against translated cones.
u_s, lp, lps, lqs = cv.truncation_fixture(2, F(1))
print("\ntruncation: u_s min l_Ps = l_P:",
      cv.pwa_equal(cv.inf_if_convex(u_s, lps), lp))
print("truncation: u_s max l_Ps = l_Qs:", cv.pwa_equal(cv.sup(u_s, lps), lqs))
print("valuation identity on the family:",
      zfn(u_s) + zfn(lps) == zfn(lp) + zfn(lqs))

# 4. Staircase fixtures interpolate between a cone function and a cube
#    indicator; difference quotients of psi_k recover the weight.
rep = cv.staircase_limit_check(zeta0, 2, F(1, 2),
                               [F(1, 16), F(1, 64), F(1, 256)])
order = rep.details["order"]
print("\nstaircase limit: passed =", rep.passed,
      " empirical order =", "exact at every h" if order is None else round(order, 3))

# 5. Smoothing sequences converge in the level-set metric.
ball = cv.Polyhedron.box([(-1, 1), (-1, 1)])
seq = [cv.smoothing_sequence(u, ball, 2 ** j) for j in range(0, 9, 2)]
rep = cv.check_level_convergence(seq, u, [u.min_value()[0] + 1])
print("level convergence:", rep.passed)
