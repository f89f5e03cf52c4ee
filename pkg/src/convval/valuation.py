"""Integral valuations of piecewise-affine convex functions.

The central object is the level-volume profile V(t) = vol_n({u <= t}): a
piecewise polynomial of degree <= n whose breakpoints are the levels of the
epigraph vertices of u.  Each interval polynomial is recovered by exact
Lagrange interpolation of the (exactly computed) sublevel-set volumes at
n + 1 rational probes and validated at 2 further probes.

The integral valuation is then the layer-cake sum

    Z_zeta(u) = zeta(t_min) * vol_n(argmin u) + sum_I Integral_I zeta(t) V'(t) dt,

exact over the rationals whenever zeta is polynomial-compact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NotCoercive, UnboundedPolyhedron
from .functions import PWAConvex, cone_function, indicator_function
from .growth import (GrowthFunction, Poly, padd, pdiff, peval, pint, pmul,
                     poly_nonneg_on, pscale, ptrim, tail_integral)
from .polyhedra import Polyhedron, volume
from .reports import LawReport


# ---------------------------------------------------------------------------
# Level-volume profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelVolumeProfile:
    n: int
    t_min: Fraction
    atom: Fraction                      # vol_n(argmin u); 0 unless argmin is full-dim
    breakpoints: tuple[Fraction, ...]   # t_min = s_0 < ... < s_p
    interval_polys: tuple[Poly, ...]    # on [s_i, s_{i+1}]
    final_poly: Poly                    # on [s_p, inf)

    def poly_at(self, t) -> Poly:
        t = Fraction(t)
        for i, p in enumerate(self.interval_polys):
            if t <= self.breakpoints[i + 1]:
                return p
        return self.final_poly

    def value(self, t) -> Fraction:
        t = Fraction(t)
        if t < self.t_min:
            return Fraction(0)
        return peval(self.poly_at(t), t)

    def verify_monotone(self) -> bool:
        """Exact certificate that V is nondecreasing on every interval."""
        for i, p in enumerate(self.interval_polys):
            if not poly_nonneg_on(pdiff(p), self.breakpoints[i], self.breakpoints[i + 1]):
                return False
        return poly_nonneg_on(pdiff(self.final_poly), self.breakpoints[-1], None)


def _lagrange(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    acc: Poly = ()
    for i, yi in enumerate(ys):
        term: Poly = (Fraction(1),)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                term = pmul(term, (-xj, Fraction(1)))
                denom *= xs[i] - xj
        acc = padd(acc, pscale(yi / denom, term))
    return acc


def level_volume_profile(u: PWAConvex) -> LevelVolumeProfile:
    """Exact piecewise-polynomial t -> vol_n({u <= t}); cached on u."""
    if u._profile is not None:
        return u._profile
    if not u.coercive:
        raise NotCoercive("level-volume profile requires a coercive function")
    n = u.n
    levels = sorted({v[n] for v in u.epigraph.vrep.vertices})
    t_min = levels[0]
    atom = volume(u.sublevel(t_min))

    vol_cache: dict[Fraction, Fraction] = {}

    def vol(t: Fraction) -> Fraction:
        if t not in vol_cache:
            vol_cache[t] = volume(u.sublevel(t))
        return vol_cache[t]

    vol_cache[t_min] = atom  # V is right-continuous at the minimum level
    polys = []
    for i in range(len(levels) - 1):
        a, b = levels[i], levels[i + 1]
        step = (b - a) / (n + 2)
        # endpoints are interpolation nodes (sharing volumes across intervals)
        xs = [a] + [a + (j + 1) * step for j in range(n - 1)] + [b]
        p = _lagrange(xs, [vol(x) for x in xs])
        for j in (n, n + 1):  # validation probes
            x = a + j * step
            assert peval(p, x) == vol(x), "volume profile interpolation degree error"
        assert peval(p, a) == (atom if i == 0 else peval(polys[-1], a)), \
            "volume profile discontinuous at breakpoint"
        polys.append(p)
    a = levels[-1]
    xs = [a] + [a + j + 1 for j in range(n)]
    p = _lagrange(xs, [vol(x) for x in xs])
    for x in (a + n + 1, a + n + 2):
        assert peval(p, x) == vol(x), "volume profile interpolation degree error"
    assert peval(p, a) == (atom if len(levels) == 1 else peval(polys[-1], a)), \
        "volume profile discontinuous at last breakpoint"
    prof = LevelVolumeProfile(n, t_min, atom, tuple(levels), tuple(polys), p)
    u._profile = prof
    return prof


# ---------------------------------------------------------------------------
# Integral / minimum / combined valuations
# ---------------------------------------------------------------------------

def _layer_cake(zeta: GrowthFunction, prof: LevelVolumeProfile, start: Fraction):
    """sum of Integral zeta(t) V'(t) dt over [start, inf); Fraction unless the
    tail contributes."""
    cuts = sorted({c for c in prof.breakpoints + zeta.breakpoints if c > start})
    cuts = [start] + cuts
    exact = Fraction(0)
    fl = 0.0
    has_float = False
    for a, b in zip(cuts, cuts[1:]):
        mid = (a + b) / 2
        vp = pdiff(prof.poly_at(mid))
        kind, payload = zeta.region_at(mid)
        if kind in ("left", "piece") and payload and vp:
            exact += pint(pmul(payload, vp), a, b)
        elif kind == "tail" and vp:
            lam, coeffs = payload
            fl += (tail_integral(lam, pmul(coeffs, vp), a)
                   - tail_integral(lam, pmul(coeffs, vp), b))
            has_float = True
    # Final ray [cuts[-1], inf): past every breakpoint of both functions, so
    # V' is the final profile polynomial and zeta is its tail (or zero).
    a = cuts[-1]
    vp = pdiff(prof.final_poly)
    if zeta.tail is not None and vp:
        lam, coeffs = zeta.tail
        fl += tail_integral(lam, pmul(coeffs, vp), a)
        has_float = True
    return float(exact) + fl if has_float else exact


def integral_valuation(zeta: GrowthFunction, u: PWAConvex):
    """Z_zeta(u) = Integral_{dom u} zeta(u(x)) dx, via the level profile."""
    prof = level_volume_profile(u)
    atom_term = zeta.eval(prof.t_min) * prof.atom
    rest = _layer_cake(zeta, prof, prof.t_min)
    if isinstance(atom_term, Fraction) and isinstance(rest, Fraction):
        return atom_term + rest
    return float(atom_term) + float(rest)


def min_valuation(zeta0: GrowthFunction, u: PWAConvex):
    """zeta0(min u)."""
    return zeta0.eval(u.min_value()[0])


def combined_valuation(zeta0: GrowthFunction, zetan: GrowthFunction, u: PWAConvex):
    """zeta0(min u) + Integral zeta_n(u(x)) dx (the classified valuation form)."""
    a = min_valuation(zeta0, u)
    b = integral_valuation(zetan, u)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    return float(a) + float(b)


def tail_mass(zeta: GrowthFunction, u: PWAConvex, t):
    """Integral over {u > t} of zeta(u(x)) dx (the truncated remainder)."""
    t = Fraction(t)
    prof = level_volume_profile(u)
    if t < prof.t_min:
        return integral_valuation(zeta, u)
    return _layer_cake(zeta, prof, t)


def truncation_level(zeta: GrowthFunction, u: PWAConvex, eps: float):
    """Smallest probed t0 (integer steps above t_min) with tail_mass < eps."""
    prof = level_volume_profile(u)
    t = prof.breakpoints[-1]
    for _ in range(10 ** 4):
        if abs(float(tail_mass(zeta, u, t))) < eps:
            return t
        t += 1
    raise ValueError("no truncation level found (moment too heavy for eps)")


# ---------------------------------------------------------------------------
# Growth extraction and the Monte Carlo oracle
# ---------------------------------------------------------------------------

def extract_growth(zfn: Callable[[PWAConvex], object], n: int, tgrid: Sequence):
    """Sample the growth functions of an opaque valuation.

    psi0(t) = Z(Ind_{origin} + t); psi_n(t) = (Z(l_Q + t) - psi0(t)) / vol(Q)
    with Q the unit cube (vol 1).  Returns (psi0 samples, psi_n samples).
    """
    origin = Polyhedron.from_generators(n, [tuple(Fraction(0) for _ in range(n))])
    cube = Polyhedron.box([(0, 1)] * n)
    lq = cone_function(cube)
    psi0, psin = [], []
    for t in tgrid:
        t = Fraction(t)
        z0 = zfn(indicator_function(origin, t))
        zq = zfn(lq.translate_graph(t))
        psi0.append(z0)
        psin.append(zq - z0)
    return psi0, psin


def mc_oracle(zeta: GrowthFunction, u: PWAConvex, samples: int = 10 ** 6,
              seed: int = 0, truncation=None) -> tuple[float, float]:
    """Uniform Monte Carlo estimate of Integral zeta(u) with standard error.

    Samples the bounding box of dom u (bounded domains) or of the sublevel
    set at ``truncation`` (the estimate then covers {u <= truncation} only).
    Deterministic per seed.
    """
    import numpy as np
    dom = u.domain_polyhedron()
    if dom.is_bounded:
        region = dom
    elif truncation is not None:
        region = u.sublevel(truncation)
    else:
        raise UnboundedPolyhedron("unbounded domain: supply a truncation level")
    verts = region.vrep.vertices
    n = u.n
    lo = [float(min(v[i] for v in verts)) for i in range(n)]
    hi = [float(max(v[i] for v in verts)) for i in range(n)]
    box_vol = 1.0
    for a, b in zip(lo, hi):
        box_vol *= b - a
    if box_vol == 0.0:
        return 0.0, 0.0
    rng = np.random.default_rng(seed)
    pts = rng.uniform(lo, hi, size=(samples, n))
    amat = np.array([[float(c) for c in a] for a, _ in u.pieces])
    bvec = np.array([float(b) for _, b in u.pieces])
    uvals = (pts @ amat.T + bvec).max(axis=1)
    inside = np.ones(samples, dtype=bool)
    for c, d in u.domain.halfspaces:
        inside &= pts @ np.array([float(x) for x in c]) <= float(d) + 1e-12
    if truncation is not None:
        inside &= uvals <= float(truncation) + 1e-12
    f = np.where(inside, zeta.eval_array(uvals), 0.0)
    estimate = box_vol * float(f.mean())
    stderr = box_vol * float(f.std(ddof=1)) / math.sqrt(samples)
    return estimate, stderr
