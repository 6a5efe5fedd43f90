"""Numerical geometry of circle images f(|z| = r).

Margins quantify how far a circle image is from losing starlikeness or
convexity: they are the minimum over the circle of the angular derivative
of arg f (starlike) or of the tangent direction (convex).  Positive
margins certify the property on that circle; radius estimation locates
the sign change by a scan followed by bisection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .harmonic import HarmonicMap, eval_map, jacobian

DEGENERACY_TOL = 1e-12

#: angle counts used by the verification harness
MARGIN_ANGLES = 1024
FINITE_DIFF_ANGLES = 4096
UNIVALENCE_ANGLES = 2048


class DegenerateCurveError(ArithmeticError):
    """The image curve or its tangent vanished at a sample point."""


class RootNotFoundError(ArithmeticError):
    """No sign change was bracketed in the search interval."""


@dataclass(frozen=True)
class SamplingGrid:
    """Polar grid: circle radii and an equispaced angle count."""

    radii: tuple[float, ...]
    angles: int

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            raise ValueError("grid needs at least one radius")
        if any(not 0.0 < r < 1.0 for r in radii):
            raise ValueError("grid radii must lie strictly inside (0, 1)")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("grid radii must be strictly ascending")
        if self.angles < 64:
            raise ValueError("grid needs at least 64 angles")
        object.__setattr__(self, "radii", radii)

    def circle(self, r: float) -> np.ndarray:
        theta = np.arange(self.angles) * (2.0 * np.pi / self.angles)
        return r * np.exp(1j * theta)

    def points(self) -> np.ndarray:
        """All grid points, radius-major."""
        return np.concatenate([self.circle(r) for r in self.radii])


DEFAULT_GRID = SamplingGrid(
    radii=(0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99), angles=256
)

#: scan radii used for radius estimation (finer than the membership grid)
RADIUS_SCAN_GRID = SamplingGrid(radii=tuple(np.round(np.arange(0.05, 0.96, 0.05), 2)), angles=MARGIN_ANGLES)


@dataclass(frozen=True)
class GeometryReport:
    functional: str
    r: float
    min_margin: float
    witness_angle: float


@dataclass(frozen=True)
class RadiusEstimate:
    property: str
    lo: float
    hi: float
    tol: float

    @property
    def value(self) -> float:
        return 0.5 * (self.lo + self.hi)


def _circle(r: float, angles: int) -> tuple[np.ndarray, np.ndarray]:
    theta = np.arange(angles) * (2.0 * np.pi / angles)
    return theta, r * np.exp(1j * theta)


def _check_radius(r: float) -> None:
    if not 0.0 < r < 1.0:
        raise ValueError(f"circle radius must lie in (0, 1), got {r}")


def starlike_margin(f: HarmonicMap, r: float, angles: int = MARGIN_ANGLES) -> GeometryReport:
    """Minimum over the circle of d(arg f)/d(theta).

    The derivative equals Re[(z h' - conj(z g')) / f]; a positive minimum
    certifies that the circle image bounds a domain starlike about 0.
    """
    _check_radius(r)
    theta, z = _circle(r, angles)
    hp = f.h.derivative().evaluate(z)
    gp = f.g.derivative().evaluate(z)
    fval = f.h.evaluate(z) + np.conj(f.g.evaluate(z))
    if np.min(np.abs(fval)) < DEGENERACY_TOL:
        raise DegenerateCurveError(f"curve passes through the origin at r={r}")
    margin = np.real((z * hp - np.conj(z * gp)) / fval)
    k = int(np.argmin(margin))
    return GeometryReport("starlike", r, float(margin[k]), float(theta[k]))


def convex_margin(f: HarmonicMap, r: float, angles: int = MARGIN_ANGLES) -> GeometryReport:
    """Minimum over the circle of d(arg T)/d(theta) for the tangent T.

    T(theta) = i(z h' - conj(z g')) and T' = -[z h' + z^2 h'' +
    conj(z g' + z^2 g'')]; the margin is min Im[T'/T].  Positive margin
    certifies convexity of the circle image.
    """
    _check_radius(r)
    theta, z = _circle(r, angles)
    hp_s = f.h.derivative()
    gp_s = f.g.derivative()
    hp, hpp = hp_s.evaluate(z), hp_s.derivative().evaluate(z)
    gp, gpp = gp_s.evaluate(z), gp_s.derivative().evaluate(z)
    T = 1j * (z * hp - np.conj(z * gp))
    if np.min(np.abs(T)) < DEGENERACY_TOL:
        raise DegenerateCurveError(f"tangent vanishes on the circle r={r}")
    Tp = -(z * hp + z**2 * hpp + np.conj(z * gp + z**2 * gpp))
    margin = np.imag(Tp / T)
    k = int(np.argmin(margin))
    return GeometryReport("convex", r, float(margin[k]), float(theta[k]))


def _polygon_is_simple(w: np.ndarray) -> bool:
    """Strict segment-pair test on the closed polygon through w.

    Adjacent segments share an endpoint and are skipped; tangential
    (collinear) contacts are not counted as crossings.
    """
    m = w.size
    x, y = w.real, w.imag
    x2, y2 = np.roll(x, -1), np.roll(y, -1)

    def cross(ax, ay, bx, by):
        return ax * by - ay * bx

    for i in range(m - 2):
        j0 = i + 2
        j1 = m if i > 0 else m - 1  # segment (m-1, 0) is adjacent to segment 0
        js = np.arange(j0, j1)
        if js.size == 0:
            continue
        axv, ayv = x[i], y[i]
        bxv, byv = x2[i], y2[i]
        cxv, cyv = x[js], y[js]
        dxv, dyv = x2[js], y2[js]
        d1 = cross(cxv - axv, cyv - ayv, bxv - axv, byv - ayv)
        d2 = cross(dxv - axv, dyv - ayv, bxv - axv, byv - ayv)
        d3 = cross(axv - cxv, ayv - cyv, dxv - cxv, dyv - cyv)
        d4 = cross(bxv - cxv, byv - cyv, dxv - cxv, dyv - cyv)
        if np.any((d1 * d2 < 0) & (d3 * d4 < 0)):
            return False
    return True


def _winding_number(w: np.ndarray, about: complex) -> float:
    rel = w - about
    increments = np.angle(np.roll(rel, -1) / rel)
    return float(increments.sum() / (2.0 * np.pi))


def univalent_on_circle(f: HarmonicMap, r: float, angles: int = UNIVALENCE_ANGLES) -> bool:
    """Certify one-to-one behavior of f on |z| = r at polygon resolution.

    Requires a simple sample polygon, winding number 1 about f(0) = 0,
    and a positive Jacobian at every sample.
    """
    _check_radius(r)
    _, z = _circle(r, angles)
    w = np.asarray(eval_map(f, z))
    if np.min(np.abs(w)) < DEGENERACY_TOL:
        return False
    if np.any(jacobian(f, z) <= 0):
        return False
    if abs(_winding_number(w, 0.0) - 1.0) > 0.5:
        return False
    return _polygon_is_simple(w)


def _property_predicate(f: HarmonicMap, prop: str, angles: int):
    if prop == "starlike":
        return lambda r: starlike_margin(f, r, angles).min_margin > 0.0
    if prop == "convex":
        return lambda r: convex_margin(f, r, angles).min_margin > 0.0
    if prop == "univalent":
        return lambda r: univalent_on_circle(f, r, max(angles, UNIVALENCE_ANGLES))
    raise ValueError(f"unknown property {prop!r}")


def radius_estimate(
    f: HarmonicMap, prop: str, tol: float = 1e-4, grid: SamplingGrid = RADIUS_SCAN_GRID
) -> RadiusEstimate:
    """Empirical property radius: scan the grid radii, then bisect.

    The estimate brackets the first sign change after the largest prefix
    of passing radii; margins need not be monotone in r, so the scan
    order (ascending, first failure wins) is part of the contract.  If
    no sampled radius fails the degenerate full-disk estimate 1 is
    returned.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    holds = _property_predicate(f, prop, grid.angles)
    radii = grid.radii
    if not holds(radii[0]):
        raise ValueError(f"property {prop!r} fails already at the smallest grid radius")
    first_bad = None
    for k, r in enumerate(radii[1:], start=1):
        if not holds(r):
            first_bad = k
            break
    if first_bad is None:
        return RadiusEstimate(prop, 1.0, 1.0, tol)
    lo, hi = radii[first_bad - 1], radii[first_bad]
    while hi - lo > 2.0 * tol:
        mid = 0.5 * (lo + hi)
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return RadiusEstimate(prop, lo, hi, tol)


def smallest_positive_root(poly_coeffs, scan_step: float = 1e-3, tol: float = 1e-12) -> float:
    """First root of the polynomial in the open interval (0, 1).

    ``poly_coeffs`` are ascending (constant term first).  A fixed-step
    scan locates the first sign change, which bisection then refines;
    roots exactly at 0 or 1 are excluded.
    """
    coeffs = np.asarray(poly_coeffs, dtype=np.float64)

    def p(x: float) -> float:
        acc = 0.0
        for c in coeffs[::-1]:
            acc = acc * x + c
        return acc

    xs = np.arange(0.0, 1.0 + scan_step / 2, scan_step)
    vals = [p(x) for x in xs]
    for x, v in zip(xs[1:-1], vals[1:-1]):
        if v == 0.0:
            return float(x)
    bracket = None
    for k in range(len(xs) - 1):
        if vals[k] * vals[k + 1] < 0.0:
            bracket = (xs[k], xs[k + 1])
            break
    if bracket is None:
        raise RootNotFoundError("no sign change in (0, 1)")
    lo, hi = bracket
    flo = p(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = p(mid)
        if fm == 0.0:
            return float(mid)
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)
