"""Finite-strength barrier in a harmonic trap: even-parity level shifts.

A delta barrier of dimensionless strength L at the trap centre leaves
odd-parity levels untouched and shifts each even level up by an amount solving

    Gamma(3/4 - eps/2) / Gamma(1/4 - eps/2) = -L/2,

with eps the level energy in units of hbar*omega.  On each branch k the root
lies strictly between the unperturbed even level eps = 1/2 + 2k and the next
odd level eps = 3/2 + 2k, sliding from one to the other as L goes 0 -> inf.

This module exists to trace that migration; the engine cycle proper always
uses the fully-inserted limit.
"""

import math
from dataclasses import dataclass

from scipy.special import gammaln, gammasgn

from .errors import PoleError, SolverFailureError

__all__ = ["BarrierStrength", "EvenLevelSolution", "gamma_ratio",
           "even_levels", "odd_level"]

_POLE_TOL = 1e-13


@dataclass(frozen=True)
class BarrierStrength:
    """Dimensionless strength; math.inf is accepted symbolically."""

    value: float

    def __post_init__(self):
        if not (self.value >= 0.0):
            raise SolverFailureError("barrier strength must be >= 0")


@dataclass(frozen=True)
class EvenLevelSolution:
    branch: int       # k >= 0
    energy: float     # eps, units of hbar*omega
    residual: float   # |gamma_ratio(eps) + L/2| at the root


def gamma_ratio(eps):
    """Gamma(3/4 - eps/2) / Gamma(1/4 - eps/2), sign-tracked via log-gamma.

    Exactly 0.0 at denominator poles (eps = 1/2 + 2k).  Raises PoleError at
    numerator poles (eps = 3/2 + 2k), where the ratio diverges.
    """
    a = 0.75 - 0.5 * eps
    b = 0.25 - 0.5 * eps
    if a <= 0.0 and abs(a - round(a)) < _POLE_TOL:
        raise PoleError(f"gamma ratio diverges at eps = {eps}")
    if b <= 0.0 and abs(b - round(b)) < _POLE_TOL:
        return 0.0
    sign = gammasgn(a) * gammasgn(b)
    return sign * math.exp(gammaln(a) - gammaln(b))


def odd_level(branch):
    """Odd-parity level on branch k: exactly 3/2 + 2k, untouched by the barrier."""
    return 1.5 + 2.0 * branch


def _pole_slopes(branch):
    """Local expansion scales of |gamma_ratio| at the two branch endpoints.

    Near the left endpoint (denominator pole) the magnitude grows like
    left*delta; near the right endpoint (numerator pole) like right/delta.
    With |Gamma(1/2 - k)| = pi/Gamma(1/2 + k) by reflection,
    left = |Gamma(1/2 - k)|*k!/2 and right = 2*Gamma(3/2 + k)/(pi*k!).
    Used only to seed bisection brackets that enclose the root for any L.
    """
    k = branch
    log_fact = gammaln(k + 1.0)
    left = 0.5 * math.pi * math.exp(log_fact - gammaln(0.5 + k))
    right = (2.0 / math.pi) * math.exp(gammaln(1.5 + k) - log_fact)
    return left, right


def even_levels(strength, k_max, tol=1e-12):
    """Solve the shifted even levels for branches k = 0..k_max.

    Bisection between consecutive poles; the ratio is monotone there, so the
    bracket is certain once its endpoints straddle the root.  Refined until
    the interval collapses below tol (well inside the 1e-10 contract).
    Strength 0 and inf short-circuit to the exact endpoints.
    """
    if not isinstance(strength, BarrierStrength):
        strength = BarrierStrength(float(strength))
    lam = strength.value
    out = []
    for k in range(k_max + 1):
        lo_pole = 0.5 + 2.0 * k
        hi_pole = 1.5 + 2.0 * k
        if lam == 0.0:
            out.append(EvenLevelSolution(k, lo_pole, 0.0))
            continue
        if math.isinf(lam):
            out.append(EvenLevelSolution(k, hi_pole, 0.0))
            continue
        left, right = _pole_slopes(k)
        # Endpoint offsets sized so f = gamma_ratio + L/2 changes sign:
        # f(lo) ~ L/2 - left*d_lo > 0, f(hi) ~ L/2 - right/d_hi < 0.
        d_lo = min(1e-9, 0.25 * lam / left)
        d_hi = max(min(1e-9, right / lam), 4.0 * math.ulp(hi_pole))
        lo = lo_pole + d_lo
        hi = hi_pole - d_hi
        f_lo = gamma_ratio(lo) + 0.5 * lam
        f_hi = gamma_ratio(hi) + 0.5 * lam
        if not (f_lo > 0.0 and f_hi < 0.0):
            raise SolverFailureError(
                f"bracket failure on branch {k} at strength {lam:g}: "
                f"f({lo:.17g}) = {f_lo:.3g}, f({hi:.17g}) = {f_hi:.3g}")
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if gamma_ratio(mid) + 0.5 * lam > 0.0:
                lo = mid
            else:
                hi = mid
        root = 0.5 * (lo + hi)
        res = abs(gamma_ratio(root) + 0.5 * lam)
        if res > 1e-8 * max(1.0, 0.5 * lam):
            raise SolverFailureError(
                f"residual {res:.3g} too large on branch {k} at strength {lam:g}")
        out.append(EvenLevelSolution(k, root, res))
    return out
