"""Growth functions: piecewise-polynomial weights with optional exponential
tails, their moments, and the cone growth function psi derived from them.

A :class:`GrowthFunction` represents

    zeta(t) = left constant           on (-inf, t0]
            = polynomial piece_i(t)   on [t_i, t_{i+1}]
            = sum_k c_k t^k e^{-lam t} on [t_m, inf)   (optional tail; else 0)

with rational breakpoints and coefficients.  Purely polynomial compactly
supported instances ("polynomial-compact") admit exact rational integration;
tails are evaluated in closed form as rational * e^{-lam * a} (float).

The cone growth function of the induced integral valuation is

    psi_n(t) = n * Integral_t^inf (r - t)^(n-1) zeta(r) dr,

piecewise polynomial for polynomial-compact zeta, computed exactly here, with
the inverse relation zeta = ((-1)^n / n!) * psi_n^{(n)} checked symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

import sympy

from .reports import LawReport

Poly = tuple[Fraction, ...]  # ascending coefficients


# ---------------------------------------------------------------------------
# Exact polynomial helpers
# ---------------------------------------------------------------------------

def peval(c: Sequence, t) -> Fraction:
    t = Fraction(t)
    acc = Fraction(0)
    for coef in reversed(tuple(c)):
        acc = acc * t + coef
    return acc


def ptrim(c: Sequence) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a: Sequence, b: Sequence) -> Poly:
    n = max(len(a), len(b))
    return ptrim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                       for i in range(n)))


def pscale(s, a: Sequence) -> Poly:
    s = Fraction(s)
    return ptrim(tuple(s * x for x in a))


def pmul(a: Sequence, b: Sequence) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return ptrim(tuple(out))


def pdiff(c: Sequence) -> Poly:
    return ptrim(tuple(Fraction(i) * c[i] for i in range(1, len(c))))


def pantider(c: Sequence) -> Poly:
    return (Fraction(0),) + tuple(Fraction(x, i + 1) for i, x in enumerate(c))


def pint(c: Sequence, a, b) -> Fraction:
    q = pantider(c)
    return peval(q, b) - peval(q, a)


def tail_integral_exact(lam: Fraction, coeffs: Sequence, a: Fraction) -> Fraction:
    """R with Integral_a^inf (sum c_k t^k) e^{-lam t} dt = R * e^{-lam a}."""
    lam, a = Fraction(lam), Fraction(a)
    total = Fraction(0)
    for m, c in enumerate(coeffs):
        if c == 0:
            continue
        term = sum(Fraction(factorial(m), factorial(i)) * a ** i / lam ** (m - i + 1)
                   for i in range(m + 1))
        total += c * term
    return total


def tail_integral(lam, coeffs, a) -> float:
    return float(tail_integral_exact(lam, coeffs, a)) * math.exp(-float(lam) * float(a))


def poly_nonneg_on(c: Sequence, a, b) -> bool:
    """Exact certificate that the polynomial is >= 0 on [a, b] (b=None: +inf)."""
    c = ptrim(c)
    if not c:
        return True
    t = sympy.Symbol("t")
    p = sympy.Poly(sum(sympy.Rational(x) * t ** i for i, x in enumerate(c)), t)
    lo = sympy.Rational(a)
    hi = sympy.oo if b is None else sympy.Rational(b)
    candidates = [lo] if b is None else [lo, hi]
    for r in sympy.Poly(p.diff(t), t).real_roots():
        if lo <= r and (b is None or r <= hi):
            candidates.append(r)
    if b is None:
        if len(c) == 1:
            return c[0] >= 0
        if c[-1] < 0:
            return False
    return all(p.eval(r) >= 0 for r in candidates)


# ---------------------------------------------------------------------------
# GrowthFunction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthFunction:
    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Poly, ...]        # len(breakpoints) - 1
    left: Poly                      # on (-inf, breakpoints[0]]
    tail: tuple[Fraction, Poly] | None  # (lam, coeffs) on [breakpoints[-1], inf)
    nonnegative: bool = False

    @property
    def is_polynomial_compact(self) -> bool:
        return self.tail is None

    @property
    def sup_support(self) -> Fraction:
        """Least s with the function identically 0 on [s, inf) (tail-free only)."""
        if self.tail is not None:
            raise ValueError("tailed growth function has unbounded support")
        for i in range(len(self.pieces) - 1, -1, -1):
            if ptrim(self.pieces[i]):
                return self.breakpoints[i + 1]
        return self.breakpoints[0]

    def region_at(self, t):
        """('left'|'piece'|'tail'|'zero', payload) describing the formula at t."""
        t = Fraction(t)
        b = self.breakpoints
        # Pieces own their closed intervals: the canonical weight 1 on [0, 1]
        # evaluates to 1 at both endpoints.
        if t < b[0] or (t == b[0] and not self.pieces and self.tail is None):
            return ("left", self.left)
        for i in range(len(self.pieces)):
            if t <= b[i + 1]:
                return ("piece", self.pieces[i])
        if self.tail is not None:
            return ("tail", self.tail)
        return ("zero", ())

    def eval(self, t):
        """Exact rational in the polynomial regions; float on the tail."""
        kind, payload = self.region_at(t)
        if kind == "tail":
            lam, coeffs = payload
            return float(peval(coeffs, t)) * math.exp(-float(lam) * float(t))
        return peval(payload, t)

    def eval_float(self, t) -> float:
        return float(self.eval(t))

    def eval_array(self, ts):
        """Vectorized float evaluation (numpy array in, array out)."""
        import numpy as np
        ts = np.asarray(ts, dtype=float)
        out = np.zeros_like(ts)
        b = [float(x) for x in self.breakpoints]
        mask = ts < b[0]
        if self.left:
            out[mask] = np.polyval([float(c) for c in reversed(self.left)], ts[mask])
        for i, piece in enumerate(self.pieces):
            mask = (ts >= b[i]) & (ts <= b[i + 1])
            if piece:
                out[mask] = np.polyval([float(c) for c in reversed(piece)], ts[mask])
            else:
                out[mask] = 0.0
        mask = (ts > b[-1]) if self.pieces else (ts >= b[-1])
        if self.tail is not None:
            lam, coeffs = self.tail
            out[mask] = (np.polyval([float(c) for c in reversed(coeffs)], ts[mask])
                         * np.exp(-float(lam) * ts[mask]))
        return out

    def derivative_pieces(self, order: int) -> "GrowthFunction":
        """Piecewise order-th derivative (polynomial regions only; no tail)."""
        if self.tail is not None:
            raise ValueError("derivative_pieces requires a tail-free function")
        left, pieces = self.left, self.pieces
        for _ in range(order):
            left = pdiff(left)
            pieces = tuple(pdiff(p) for p in pieces)
        return GrowthFunction(self.breakpoints, pieces, left, None, False)

    def scaled(self, s) -> "GrowthFunction":
        return GrowthFunction(self.breakpoints, tuple(pscale(s, p) for p in self.pieces),
                              pscale(s, self.left), None if self.tail is None else
                              (self.tail[0], pscale(s, self.tail[1])), False)


def make_growth(breakpoints: Sequence, pieces: Sequence, *, left_constant=0,
                tail=None, require_nonnegative: bool = False) -> GrowthFunction:
    """Validated growth function.

    ``pieces`` are ascending-coefficient polynomials between consecutive
    breakpoints; ``left_constant`` is the value on (-inf, t0]; ``tail`` is an
    optional (lam, coeffs) exponential tail on [t_m, inf).  Continuity is
    enforced exactly at every polynomial breakpoint; a tail joining a
    polynomial piece is checked to 1e-9 (the junction value is irrational).
    A tail starting directly at t0 with no polynomial pieces is accepted as
    given (the step there is part of the definition, as in e^{-t} on [0, inf)).
    """
    bp = tuple(Fraction(b) for b in breakpoints)
    if not bp:
        raise ValueError("need at least one breakpoint")
    if any(bp[i] >= bp[i + 1] for i in range(len(bp) - 1)):
        raise ValueError("breakpoints must be strictly increasing")
    ps = tuple(ptrim(tuple(Fraction(c) for c in p)) for p in pieces)
    if len(ps) != len(bp) - 1:
        raise ValueError("need exactly one polynomial piece per breakpoint interval")
    left = ptrim((Fraction(left_constant),))
    if tail is not None:
        lam = Fraction(tail[0])
        if lam <= 0:
            raise ValueError("tail decay rate must be positive")
        tail = (lam, ptrim(tuple(Fraction(c) for c in tail[1])))
    # Continuity is enforced exactly at interior breakpoints (where two
    # polynomial pieces meet).  The junctions at the support edges (left
    # constant at t0, drop to zero or to the tail at t_m) are part of the
    # definition and may jump: the canonical weight 1 on [0, 1] jumps at both.
    for i in range(1, len(ps)):
        if peval(ps[i - 1], bp[i]) != peval(ps[i], bp[i]):
            raise ValueError(f"discontinuous at breakpoint {bp[i]}")
    nonneg = False
    if require_nonnegative:
        ok = (not left or left[0] >= 0)
        for i, p in enumerate(ps):
            ok = ok and poly_nonneg_on(p, bp[i], bp[i + 1])
        if tail is not None:
            ok = ok and poly_nonneg_on(tail[1], bp[-1], None)
        if not ok:
            raise ValueError("nonnegativity certificate failed")
        nonneg = True
    return GrowthFunction(bp, ps, left, tail, nonneg)


def zero_growth() -> GrowthFunction:
    return GrowthFunction((Fraction(0),), (), (), None, True)


# ---------------------------------------------------------------------------
# Moments
# ---------------------------------------------------------------------------

def moment(zeta: GrowthFunction, k: int):
    """Integral_0^inf t^k zeta(t) dt; exact Fraction unless a tail contributes."""
    tk = (Fraction(0),) * k + (Fraction(1),)
    total = Fraction(0)
    b = zeta.breakpoints
    if b[0] > 0 and zeta.left:
        total += pint(pmul(tk, zeta.left), 0, b[0])
    for i, p in enumerate(zeta.pieces):
        lo, hi = max(b[i], Fraction(0)), b[i + 1]
        if hi > 0 and p:
            total += pint(pmul(tk, p), max(lo, Fraction(0)), hi)
    if zeta.tail is None:
        return total
    lam, coeffs = zeta.tail
    a = max(b[-1], Fraction(0))
    return float(total) + tail_integral(lam, pmul(tk, coeffs), a)


# ---------------------------------------------------------------------------
# The cone growth function psi_n
# ---------------------------------------------------------------------------

def _kernel_full(p: Poly, c: Fraction, d: Fraction, n: int) -> Poly:
    """Poly in t: Integral_c^d (r - t)^(n-1) p(r) dr with fixed limits."""
    out: Poly = ()
    for a in range(n):
        coef = Fraction(comb(n - 1, a) * (-1) ** (n - 1 - a))
        ra_p = pmul((Fraction(0),) * a + (Fraction(1),), p)
        val = pint(ra_p, c, d)
        mono = (Fraction(0),) * (n - 1 - a) + (coef * val,)
        out = padd(out, mono)
    return out


def _kernel_partial(p: Poly, d: Fraction, n: int) -> Poly:
    """Poly in t: Integral_t^d (r - t)^(n-1) p(r) dr."""
    out: Poly = ()
    for a in range(n):
        coef = Fraction(comb(n - 1, a) * (-1) ** (n - 1 - a))
        q = pantider(pmul((Fraction(0),) * a + (Fraction(1),), p))
        inner = padd((peval(q, d),), pscale(-1, q))  # Q(d) - Q(t)
        mono = (Fraction(0),) * (n - 1 - a) + (coef,)
        out = padd(out, pmul(mono, inner))
    return out


class NumericPsi:
    """Float-path psi for tailed zeta: quadrature evaluation only."""

    def __init__(self, zeta: GrowthFunction, n: int):
        self.zeta = zeta
        self.n = n

    def eval(self, t) -> float:
        import mpmath
        t = float(t)
        n = self.n
        cuts = [t] + [float(b) for b in self.zeta.breakpoints if float(b) > t]
        f = lambda r: (r - t) ** (n - 1) * self.zeta.eval_float(float(r))
        return float(n * mpmath.quad(f, cuts + [mpmath.inf]))


def psi_from_zeta(zeta: GrowthFunction, n: int):
    """psi_n(t) = n * Integral_t^inf (r - t)^(n-1) zeta(r) dr.

    Exact piecewise polynomial (a GrowthFunction with polynomial left piece)
    for polynomial-compact zeta; a quadrature-backed :class:`NumericPsi` for
    tailed zeta.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if zeta.tail is not None:
        return NumericPsi(zeta, n)
    b = zeta.breakpoints
    m = len(zeta.pieces)
    pieces = []
    for j in range(m):
        acc = _kernel_partial(zeta.pieces[j], b[j + 1], n)
        for i in range(j + 1, m):
            acc = padd(acc, _kernel_full(zeta.pieces[i], b[i], b[i + 1], n))
        pieces.append(pscale(n, acc))
    left = _kernel_partial(zeta.left, b[0], n)
    for i in range(m):
        left = padd(left, _kernel_full(zeta.pieces[i], b[i], b[i + 1], n))
    left = pscale(n, left)
    return GrowthFunction(b, tuple(pieces), left, None, False)


def check_derivative_relation(zeta: GrowthFunction, n: int) -> LawReport:
    """zeta_n(t) = ((-1)^n / n!) d^n/dt^n psi_n(t), exact piecewise equality."""
    name = "derivative_relation"
    inputs = f"zeta bp={zeta.breakpoints} n={n}"
    if zeta.tail is not None:
        return LawReport(name, inputs, False, witness="tail (exact path requires polynomial-compact zeta)")
    psi = psi_from_zeta(zeta, n)
    rec = psi.derivative_pieces(n).scaled(Fraction((-1) ** n, factorial(n)))
    ok = rec.left == zeta.left and all(a == b for a, b in zip(rec.pieces, zeta.pieces))
    witness = None
    if not ok:
        for i, (a, b) in enumerate(zip(rec.pieces, zeta.pieces)):
            if a != b:
                witness = ("interval", i, a, b)
                break
        else:
            witness = ("left", rec.left, zeta.left)
    return LawReport(name, inputs, ok, witness=witness)


def check_psi_vanishes(zeta: GrowthFunction, n: int) -> LawReport:
    """psi_n identically 0 on [sup supp zeta, inf)."""
    name = "psi_vanishes_at_infinity"
    inputs = f"zeta bp={zeta.breakpoints} n={n}"
    if zeta.tail is not None:
        return LawReport(name, inputs, False, witness="tail: support not compact")
    psi = psi_from_zeta(zeta, n)
    s = zeta.sup_support
    ok = True
    witness = None
    for i, p in enumerate(psi.pieces):
        if psi.breakpoints[i] >= s and ptrim(p):
            ok, witness = False, ("interval", psi.breakpoints[i], p)
            break
    if ok and peval(psi.region_at(s)[1], s) != 0:
        ok, witness = False, ("value", s)
    return LawReport(name, inputs, ok, witness=witness,
                     details={"sup_support": s})


def check_moment_finiteness_of_derivative(psi: GrowthFunction, n: int) -> LawReport:
    """Integral_0^inf t^(n-1) ((-1)^n/n!) psi^{(n)}(t) dt computed exactly."""
    name = "derivative_moment_finite"
    rec = psi.derivative_pieces(n).scaled(Fraction((-1) ** n, factorial(n)))
    value = moment(rec, n - 1)
    return LawReport(name, f"psi bp={psi.breakpoints} n={n}", True,
                     left=value, right=value, details={"moment": value})
