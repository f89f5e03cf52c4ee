"""Fixture generators and executable checks for the valuation identities.

Everything here is deterministic per seed; exact rational comparisons are
used wherever both sides are rational (tolerance 0), with floats appearing
only in Hausdorff-distance convergence surrogates.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DimensionMismatch
from .functions import (PWAConvex, cone_function, indicator_function,
                        inf_if_convex, level_hausdorff_distance, make,
                        pwa_equal, sup, transform)
from .conjugacy import inf_convolution
from .linalg import vec_scale
from .polyhedra import HRep, Polyhedron, random_unimodular
from .reports import LawReport


@dataclass(frozen=True)
class FixturePair:
    """A pair (u, v) whose pointwise minimum is certified convex."""
    u: PWAConvex
    v: PWAConvex
    certified: bool
    provenance: str
    seed: int | None = None
    wedge: PWAConvex | None = None  # cached u min v (when certified at build time)
    vee: PWAConvex | None = None    # cached u max v

    def lattice(self) -> tuple[PWAConvex, PWAConvex]:
        """(u wedge v, u vee v), computing and certifying if not cached."""
        wedge = self.wedge if self.wedge is not None else inf_if_convex(self.u, self.v)
        vee = self.vee if self.vee is not None else sup(self.u, self.v)
        return wedge, vee


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------

def _compare(left, right, float_tol=1e-9):
    if isinstance(left, Fraction) and isinstance(right, Fraction):
        return left == right, 0
    return abs(float(left) - float(right)) <= float_tol, float_tol


def check_valuation_identity(zfn: Callable[[PWAConvex], object],
                             pair: FixturePair) -> LawReport:
    """Z(u v-join) + Z(u wedge v) = Z(u) + Z(v) on a certified pair."""
    if not pair.certified:
        raise ValueError("valuation identity requires a certified pair")
    wedge, vee = pair.lattice()
    left = zfn(wedge) + zfn(vee)
    right = zfn(pair.u) + zfn(pair.v)
    ok, tol = _compare(left, right)
    return LawReport("valuation_identity", f"{pair.provenance} seed={pair.seed}",
                     ok, left, right, tol)


def check_min_lattice(pair: FixturePair) -> LawReport:
    """min over the lattice: min(u wedge v) = min of minima and
    min(u vee v) = max of minima."""
    mu = pair.u.min_value()[0]
    mv = pair.v.min_value()[0]
    wedge, vee = pair.lattice()
    ok = (wedge.min_value()[0] == min(mu, mv)
          and vee.min_value()[0] == max(mu, mv))
    return LawReport("min_lattice", f"{pair.provenance} seed={pair.seed}", ok,
                     (wedge.min_value()[0], vee.min_value()[0]),
                     (min(mu, mv), max(mu, mv)))


def check_invariance(zfn: Callable[[PWAConvex], object], u: PWAConvex,
                     trials: int, seed: int, translations: int = 1) -> LawReport:
    """Zfn(u after unimodular map + translation) = Zfn(u), exactly, per trial."""
    base = zfn(u)
    rng = random.Random(f"invariance-{seed}")
    n = u.n
    for trial in range(trials):
        phi = random_unimodular(rng.randrange(2 ** 30), n, 6)
        for _ in range(translations):
            tau = tuple(Fraction(rng.randint(-24, 24), rng.randint(1, 5))
                        for _ in range(n))
            moved = zfn(transform(u, phi, tau))
            ok, _ = _compare(base, moved)
            if not ok:
                return LawReport("invariance", f"seed={seed}", False, base, moved,
                                 witness=(phi, tau))
    return LawReport("invariance", f"seed={seed} trials={trials}", True, base, base)


# ---------------------------------------------------------------------------
# Pair generation
# ---------------------------------------------------------------------------

def _random_coercive_base(rng: random.Random, n: int) -> PWAConvex:
    """Coercive max-of-affine with pieces covering every sign orthant."""
    pieces = []
    for mask in range(2 ** n):
        slope = tuple(Fraction(rng.randint(1, 4), rng.randint(1, 2))
                      * (1 if mask >> i & 1 else -1) for i in range(n))
        pieces.append((slope, Fraction(rng.randint(-3, 3), rng.randint(1, 3))))
    return make(pieces, n=n)


def generate_pair_with_convex_min(seed: int, n: int) -> FixturePair:
    """Certified pair built from a base w and an affine cut:
    u = w sup l, v = w sup (2w - l), so u wedge v = w exactly."""
    if not 1 <= n <= 4:
        raise DimensionMismatch("pair generator supports n in 1..4")
    rng = random.Random(f"pair-{seed}-{n}")
    w = _random_coercive_base(rng, n)
    g = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n))
    c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    ell = make([(g, c)], n=n, coercive=False)
    reflected = make([(tuple(2 * a - gg for a, gg in zip(slope, g)), 2 * b - c)
                      for slope, b in w.pieces], n=n, coercive=False)
    u = sup(w, ell)
    v = sup(w, reflected)
    wedge = inf_if_convex(u, v)  # raises NotConvexMin if construction failed
    assert pwa_equal(wedge, w)
    return FixturePair(u, v, True, "sup-reflection", seed, wedge=wedge, vee=sup(u, v))


def random_body(seed: int, n: int, extra_points: int = 3) -> Polyhedron:
    """Random bounded polytope with the origin in its interior."""
    rng = random.Random(f"body-{seed}-{n}")
    pts = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(rng.randint(1, 3))
        pts.append(tuple(e))
        e2 = list(e)
        e2[i] = -Fraction(rng.randint(1, 3))
        pts.append(tuple(e2))
    for _ in range(extra_points):
        pts.append(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                         for _ in range(n)))
    return Polyhedron.from_generators(n, pts)


# ---------------------------------------------------------------------------
# Paper fixtures
# ---------------------------------------------------------------------------

def truncation_fixture(n: int, s):
    """The truncation family: (u_s, l_P, l_{P,s}, l_{Q,s}).

    P = conv{0, (e1+e2)/2, e2, ..., en} and Q = conv{0, e2, ..., en} (so Q has
    zero n-volume).  u_s is l_P restricted to the slab x1 <= s/2 (epigraph
    cut), and l_{P,s}, l_{Q,s} are the cone functions translated by
    s(e1+e2)/2 and lifted by s.  Exact identities:
    u_s wedge l_{P,s} = l_P and u_s vee l_{P,s} = l_{Q,s}.
    """
    if n < 2:
        raise DimensionMismatch("truncation fixture needs n >= 2")
    s = Fraction(s)
    if s <= 0:
        raise ValueError("truncation fixture needs s > 0")
    zero = tuple(Fraction(0) for _ in range(n))

    def e(i):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        return tuple(v)

    half = tuple((x + y) / 2 for x, y in zip(e(0), e(1)))
    p = Polyhedron.from_generators(n, [zero, half] + [e(i) for i in range(1, n)])
    q = Polyhedron.from_generators(n, [zero] + [e(i) for i in range(1, n)])
    lp = cone_function(p)
    lq = cone_function(q)
    slab = make([(zero, 0)], HRep(n, ((e(0), s / 2),)), n=n, coercive=False)
    u_s = sup(lp, slab)
    tau = vec_scale(s, half)
    identity = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    lps = transform(lp, identity, tau, shift=s)
    lqs = transform(lq, identity, tau, shift=s)
    return u_s, lp, lps, lqs


def staircase_fixture(k: int, h: Sequence, i: int) -> PWAConvex:
    """The staircase function u_i^h(x) = sum_{j > i} h_j x_j on
    {0 <= x_j <= 1 for j <= i,  x_j >= 0 for j > i} in R^k.

    u_0^h is the cone function of conv{0, e_j / h_j}; u_k^h is the indicator
    of the unit cube.
    """
    h = tuple(Fraction(x) for x in h)
    if len(h) != k or any(x <= 0 for x in h):
        raise ValueError("need k positive rationals h")
    if not 0 <= i <= k:
        raise ValueError("invalid staircase index i")
    slope = tuple(Fraction(0) if j < i else h[j] for j in range(k))
    rows = []
    for j in range(k):
        e = [Fraction(0)] * k
        e[j] = Fraction(-1)
        rows.append((tuple(e), Fraction(0)))       # x_j >= 0
        if j < i:
            e2 = [Fraction(0)] * k
            e2[j] = Fraction(1)
            rows.append((tuple(e2), Fraction(1)))  # x_j <= 1
    return make([(slope, Fraction(0))], HRep(k, tuple(rows)), n=k)


def staircase_limit_check(zeta, k: int, t, h_values: Sequence) -> LawReport:
    """k-th forward difference quotients of psi_k converge to zeta(t).

    q(h) = ((-1)^k / k!) * Delta_h^k psi(t) / h^k  ->  zeta(t) with O(h) error;
    reports the empirical convergence order (log-log regression) and checks
    the exact symbolic limit ((-1)^k/k!) psi^{(k)}(t) = zeta(t) with zero
    tolerance.
    """
    from .growth import peval, psi_from_zeta
    t = Fraction(t)
    psi = psi_from_zeta(zeta, k)

    def psi_at(x):
        return peval(psi.region_at(x)[1], x)

    sign = Fraction((-1) ** k, math.factorial(k))
    quotients = []
    errors = []
    target = zeta.eval(t)
    for h in h_values:
        h = Fraction(h)
        delta = sum((-1) ** (k - j) * math.comb(k, j) * psi_at(t + j * h)
                    for j in range(k + 1))
        q = sign * delta / h ** k
        quotients.append(q)
        errors.append(abs(q - target))
    exact_limit = sign * peval(psi.derivative_pieces(k).region_at(t)[1], t)
    order = None
    nonzero = [(float(h), float(e)) for h, e in zip(map(Fraction, h_values), errors) if e != 0]
    if len(nonzero) >= 2:
        import numpy as np
        xs = np.log([h for h, _ in nonzero])
        ys = np.log([e for _, e in nonzero])
        order = float(np.polyfit(xs, ys, 1)[0])
    final_error = float(errors[-1])
    ok = exact_limit == target and final_error <= 1e-2 and (order is None or order >= 0.9)
    return LawReport("staircase_limit", f"k={k} t={t}", ok,
                     exact_limit, target,
                     details={"quotients": quotients, "errors": errors,
                              "order": order, "final_error": final_error})


# ---------------------------------------------------------------------------
# Smoothing and convergence
# ---------------------------------------------------------------------------

def smoothing_sequence(u: PWAConvex, k_steep: Polyhedron, k: int) -> PWAConvex:
    """u_k = u inf-convolved with the steepened cone function k * l_K.

    K must contain the origin in its interior so the cone function is finite
    everywhere; then u_k <= u and u_k -> u as k grows.
    """
    if k < 1:
        raise ValueError("steepness index k must be >= 1")
    base = cone_function(k_steep)
    steep = make([(vec_scale(k, a), k * b) for a, b in base.pieces],
                 base.domain, n=u.n, coercive=base.coercive)
    return inf_convolution(u, steep)


def check_level_convergence(sequence: Sequence[PWAConvex], u: PWAConvex,
                            levels: Sequence, threshold: float = 1e-6) -> LawReport:
    """Per-level Hausdorff distances nonincreasing and finally below threshold.

    Levels where both sublevel sets are empty count as distance 0 (the paper's
    empty-set convention); levels where exactly one is empty are recorded as
    failures of that element.
    """
    from .polyhedra import hausdorff_distance
    per_level = {}
    ok = True
    witness = None
    for t in levels:
        su = u.sublevel(t)
        dists = []
        for uk in sequence:
            sk = uk.sublevel(t)
            if su.is_empty and sk.is_empty:
                dists.append(0.0)
            elif su.is_empty or sk.is_empty:
                dists.append(math.inf)
            else:
                dists.append(hausdorff_distance(su, sk))
        per_level[Fraction(t)] = dists
        monotone = all(b <= a + 1e-12 for a, b in zip(dists, dists[1:]))
        if not (monotone and dists[-1] < threshold):
            ok = False
            witness = (Fraction(t), dists)
    return LawReport("level_convergence", f"levels={list(levels)}", ok,
                     witness=witness, tolerance=threshold,
                     details={"distances": per_level})
