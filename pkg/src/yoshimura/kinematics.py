"""Fold and pop-out kinematics of a single generalized Yoshimura module.

A design is the triple (n, beta, L): n rhombi around the ring, sector angle
beta between the mountain and valley creases, valley crease length L.  The
traditional flat-foldable pattern obeys beta = pi/(2n); larger beta trades
flat-foldability for a finite folded height and, once cot(beta) <= phi
(n = 3), for extra stable "popped-out" facet states.

Solvers here work one module at a time:

* ``solve_folded``  -- the all-folded ring, closed form.
* ``solve_one_pop`` -- one rhombus popped out; the kite-shaped mid-surface
  couples three angles (theta, eta, alpha) through three facet-rigidity
  relations which are solved numerically.
* ``solve_two_pop`` -- two rhombi popped out; a single transcendental
  relation in theta.

All angles are radians.  Tilt angles are evaluated from the raw vertex
coordinates (apex-to-edge-midpoint vector), not from any algebraically
reduced form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

from .errors import (
    AdmissibilityError,
    ConvergenceError,
    NoSolutionError,
    UnsupportedError,
)
from .geometry import BETA_GOLD, PHI, TAN_BETA_GOLD

#: Absolute slack used when comparing beta against analytic bounds.
BOUND_TOL = 1e-12

#: Designs whose tan(beta) sits this close below the pop-out bound are solved
#: at the bound itself; covers inputs produced by rounding the bound to a few
#: decimal places of a degree (e.g. 31.717).
POP_BOUND_SLACK = 2e-5

#: Default residual tolerance for the numeric solvers.
SOLVER_TOL = 1e-12

#: Iteration cap shared by bisection and Newton refinement.
MAX_ITER = 200


@dataclass(frozen=True)
class YoshimuraDesign:
    """A pattern: ``n`` rhombi per circumference, sector angle ``beta`` (rad), valley length ``L``."""

    n: int
    beta: float
    L: float = 1.0

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 3:
            raise ValueError(f"n must be an integer >= 3, got {self.n!r}")
        if not (0.0 < self.beta < math.pi / 2):
            raise ValueError(f"beta must lie in (0, pi/2) radians, got {self.beta!r}")
        if not self.L > 0:
            raise ValueError(f"L must be positive, got {self.L!r}")

    @property
    def flat_fold_beta(self) -> float:
        """Sector angle of the traditional flat-foldable design, pi/(2n)."""
        return math.pi / (2 * self.n)

    @property
    def w(self) -> float:
        """Facet half-height (L/2) tan(beta), in length units."""
        return 0.5 * self.L * math.tan(self.beta)

    def unit(self) -> "YoshimuraDesign":
        """Same angles, valley length rescaled so the interface triangle side is 1."""
        if self.L == 1.0:
            return self
        return YoshimuraDesign(self.n, self.beta, 1.0)


class Admissibility(Enum):
    FLAT_FOLDABLE = "flat-foldable"
    FOLDABLE_NO_POP = "foldable-no-pop"
    META_STABLE = "meta-stable"


@dataclass(frozen=True)
class FoldedState:
    """All-folded module: facet dihedral ``theta``, height ``h``, facet half-height ``w``."""

    theta: float
    h: float
    w: float


@dataclass(frozen=True)
class OnePopSolution:
    """One popped rhombus.

    ``theta`` is the dihedral of the two still-folded facet pairs, ``eta`` the
    kite half-angle at the vertex opposite the popped crease, ``alpha`` the
    kite half apex angle at the popped vertex, and ``gamma`` the (positive)
    tilt between the top and base interface triangles.
    """

    theta: float
    eta: float
    alpha: float
    gamma: float


@dataclass(frozen=True)
class TwoPopSolution:
    """Two popped rhombi: remaining folded dihedral ``theta`` and tilt magnitude ``gamma``."""

    theta: float
    gamma: float


def solve_folded(design: YoshimuraDesign) -> FoldedState:
    """Closed-form folded state: tan(beta) cos(theta) = tan(pi/2n), h = L tan(beta) sin(theta)."""
    flat = design.flat_fold_beta
    if design.beta < flat - BOUND_TOL:
        raise AdmissibilityError(
            f"beta = {math.degrees(design.beta):.4f} deg is below the flat-fold bound "
            f"{math.degrees(flat):.4f} deg for n = {design.n}: folded height would be negative"
        )
    ratio = math.tan(flat) / math.tan(design.beta)
    theta = math.acos(min(1.0, ratio))
    h = design.L * math.tan(design.beta) * math.sin(theta)
    return FoldedState(theta=theta, h=h, w=design.w)


def golden_polynomial_residual(t: float) -> float:
    """Admissibility polynomial in t = tan(beta); vanishes at t = 1/phi and t = phi.

    Factored form: (t - 1/phi)(t - phi)(5 t^4 + 4 sqrt5 t^3 - 2 t^2 - 4 sqrt5 t - 7).
    """
    s5 = math.sqrt(5.0)
    quartic = 5.0 * t**4 + 4.0 * s5 * t**3 - 2.0 * t**2 - 4.0 * s5 * t - 7.0
    return (t - 1.0 / PHI) * (t - PHI) * quartic


def classify_admissibility(design: YoshimuraDesign) -> Admissibility:
    """Classify a design against the flat-fold and pop-out bounds."""
    flat = design.flat_fold_beta
    if abs(design.beta - flat) <= BOUND_TOL:
        return Admissibility.FLAT_FOLDABLE
    if design.beta < flat:
        raise AdmissibilityError(
            f"beta below the flat-fold bound pi/(2n) = {math.degrees(flat):.4f} deg"
        )
    if design.n != 3:
        raise UnsupportedError(
            f"pop-out admissibility is only established for n = 3, got n = {design.n}"
        )
    if math.tan(design.beta) >= TAN_BETA_GOLD - POP_BOUND_SLACK:
        return Admissibility.META_STABLE
    return Admissibility.FOLDABLE_NO_POP


def _require_pop_supported(design: YoshimuraDesign) -> None:
    if design.n != 3:
        raise UnsupportedError(
            f"pop-out kinematics are only derived for n = 3, got n = {design.n}"
        )


def _require_pop_admissible(design: YoshimuraDesign) -> float:
    """Return tan(beta) after checking the pop-out lower bound arccot(phi)."""
    _require_pop_supported(design)
    t = math.tan(design.beta)
    if t < TAN_BETA_GOLD - POP_BOUND_SLACK:
        raise NoSolutionError(
            f"no pop-out solution: beta = {math.degrees(design.beta):.4f} deg is below "
            f"the admissibility bound arccot(phi) = {math.degrees(BETA_GOLD):.4f} deg"
        )
    return t


# ---------------------------------------------------------------------------
# one pop-out
# ---------------------------------------------------------------------------

def _theta_from_eta(t: float, eta: float) -> float:
    """Dihedral implied by slant-crease rigidity: tan(beta) cos(theta) = (1 - sin eta)/cos eta."""
    c = (1.0 - math.sin(eta)) / (math.cos(eta) * t)
    return math.acos(min(1.0, max(-1.0, c)))


def _alpha_from_eta(eta: float) -> float:
    """Kite apex half-angle from the closure relation sin(eta) = sin(alpha)/2."""
    return math.asin(min(1.0, 2.0 * math.sin(eta)))


def one_pop_residuals(beta: float, theta: float, eta: float, alpha: float) -> tuple[float, float, float]:
    """Residuals of the three one-pop relations (kite closure, top edge, slant crease)."""
    t = math.tan(beta)
    r_kite = math.sin(eta) - 0.5 * math.sin(alpha)
    s = 2.0 * math.cos(eta) + math.cos(alpha)
    r_edge = 2.0 * t * t * (1.0 - math.sin(theta)) + s * s - 2.0 * t * math.cos(theta) * s - 3.0
    r_slant = t * math.cos(theta) - (1.0 - math.sin(eta)) / math.cos(eta)
    return r_kite, r_edge, r_slant


def _one_pop_edge_residual(t: float, eta: float) -> float:
    """Top-edge rigidity residual as a function of eta alone (theta, alpha eliminated)."""
    theta = _theta_from_eta(t, eta)
    alpha = _alpha_from_eta(eta)
    s = 2.0 * math.cos(eta) + math.cos(alpha)
    return 2.0 * t * t * (1.0 - math.sin(theta)) + s * s - 2.0 * t * math.cos(theta) * s - 3.0


def _bracketed_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_iter: int,
) -> float:
    """Bisection on a sign change, then a few guarded Newton steps."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ConvergenceError(f"root not bracketed on [{lo}, {hi}]: f = ({flo}, {fhi})")
    iters = 0
    while hi - lo > 1e-15 and iters < max_iter:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        iters += 1
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    x = 0.5 * (lo + hi)
    # Newton polish with a centered numeric derivative; keep the bisection
    # answer whenever Newton does not improve the residual.
    for _ in range(4):
        fx = f(x)
        if abs(fx) <= tol:
            return x
        step = 1e-7 * max(1.0, abs(x))
        d = (f(x + step) - f(x - step)) / (2.0 * step)
        if d == 0.0:
            break
        x_new = x - fx / d
        if not (lo - step <= x_new <= hi + step) or abs(f(x_new)) >= abs(fx):
            break
        x = x_new
    if abs(f(x)) > tol:
        raise ConvergenceError(
            f"residual {f(x):.3e} above tolerance {tol:.1e} after {max_iter} iterations"
        )
    return x


def one_pop_tilt(beta: float, theta: float, eta: float, alpha: float) -> float:
    """Tilt angle from the popped-apex-to-edge-midpoint vector (unit valley length).

    tan(gamma/2) = (w - w sin theta) / (cos eta + cos(alpha)/2 - w cos theta),
    with w = tan(beta)/2.
    """
    w = 0.5 * math.tan(beta)
    num = w * (1.0 - math.sin(theta))
    den = math.cos(eta) + 0.5 * math.cos(alpha) - w * math.cos(theta)
    return 2.0 * math.atan2(num, den)


def two_pop_tilt(beta: float, theta: float) -> float:
    """Tilt magnitude for the two-pop class: tan(gamma/2) = w(1 - sin theta)/(1/2 + w cos theta)."""
    w = 0.5 * math.tan(beta)
    num = w * (1.0 - math.sin(theta))
    den = 0.5 + w * math.cos(theta)
    return 2.0 * math.atan2(num, den)


@lru_cache(maxsize=None)
def _solve_one_pop_cached(beta: float, tol: float, max_iter: int) -> OnePopSolution:
    t = math.tan(beta)
    if t <= TAN_BETA_GOLD + BOUND_TOL:
        # At (or within rounding slack below) the bound the folded dihedral
        # vanishes; solving the tangent case numerically would converge
        # slowly, so short-circuit to the boundary solution.
        theta = 0.0
        eta = 0.5 * math.pi - 2.0 * beta
    else:
        eta_lo = max(0.0, 0.5 * math.pi - 2.0 * beta)
        eta_hi = math.pi / 6.0
        # residual terms grow like tan^2(beta); scale the tolerance so steep
        # designs near pi/2 stay solvable at float64 conditioning
        eta = _bracketed_root(
            lambda e: _one_pop_edge_residual(t, e),
            eta_lo,
            eta_hi,
            tol * max(1.0, 2.0 * t * t),
            max_iter,
        )
        theta = _theta_from_eta(t, eta)
    alpha = _alpha_from_eta(eta)
    gamma = one_pop_tilt(beta, theta, eta, alpha)
    return OnePopSolution(theta=theta, eta=eta, alpha=alpha, gamma=gamma)


def solve_one_pop(design: YoshimuraDesign, tol: float = SOLVER_TOL, max_iter: int = MAX_ITER) -> OnePopSolution:
    """Solve the one-pop state.

    Eliminates alpha via the kite closure and theta via slant-crease rigidity,
    then finds the root of the top-edge residual over eta.  The admissible eta
    window is [max(0, pi/2 - 2 beta), pi/6]: below it the folded dihedral would
    be imaginary, above it the kite apex angle would be.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _require_pop_admissible(design)
    return _solve_one_pop_cached(design.beta, tol, max_iter)


@lru_cache(maxsize=None)
def _solve_two_pop_cached(beta: float, tol: float, max_iter: int) -> TwoPopSolution:
    t = math.tan(beta)
    if t <= TAN_BETA_GOLD + BOUND_TOL:
        theta = 0.0
    else:
        theta = _bracketed_root(
            lambda th: t * t * (1.0 - math.sin(th)) + t * math.cos(th) - 1.0,
            0.0,
            0.5 * math.pi,
            tol * max(1.0, t * t),
            max_iter,
        )
    return TwoPopSolution(theta=theta, gamma=two_pop_tilt(beta, theta))


def solve_two_pop(design: YoshimuraDesign, tol: float = SOLVER_TOL, max_iter: int = MAX_ITER) -> TwoPopSolution:
    """Solve tan^2(beta)(1 - sin theta) + tan(beta) cos(theta) = 1 for theta in [0, pi/2].

    The left side is strictly decreasing in theta, so a sign change on
    [0, pi/2] exists exactly when tan(beta) >= 1/phi.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _require_pop_admissible(design)
    return _solve_two_pop_cached(design.beta, tol, max_iter)


def two_pop_residual(beta: float, theta: float) -> float:
    """Residual of the two-pop rigidity relation."""
    t = math.tan(beta)
    return t * t * (1.0 - math.sin(theta)) + t * math.cos(theta) - 1.0
