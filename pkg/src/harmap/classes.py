"""Membership certificates, coefficient bounds, growth envelopes, samplers.

Two kinds of classes appear.  Grid classes are defined by a strict
pointwise inequality on derivatives (checked on a polar grid with a
positive-margin tolerance); coefficient classes are defined by an exact
weighted coefficient sum and are checked without discretization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np
from scipy.integrate import quad

from .geometry import DEFAULT_GRID, SamplingGrid
from .harmonic import HarmonicMap, slice_map
from .series import AnalyticSeries

#: positive-margin tolerance certifying a strict inequality on a closed grid
STRICTNESS_TOL = 1e-9

#: floating-point slack for the exact coefficient classes
EXACT_TOL = 1e-12

#: restricted grid for relative (_G) classes: their reference-map series
#: converge too slowly for trustworthy evaluation near |z| = 1
G_VARIANT_GRID = SamplingGrid(radii=(0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75), angles=256)


class ClassName(str, Enum):
    R_H0 = "R_H0"
    W_H0 = "W_H0"
    F_H0 = "F_H0"
    U_H0 = "U_H0"
    V_H0 = "V_H0"
    S_R = "S_R"
    R_H0_G = "R_H0_G"
    F_H0_G = "F_H0_G"


GRID_CLASSES = {ClassName.R_H0, ClassName.W_H0, ClassName.F_H0, ClassName.R_H0_G, ClassName.F_H0_G}
COEFFICIENT_CLASSES = {ClassName.U_H0, ClassName.V_H0, ClassName.S_R}


class SingularReferenceError(ArithmeticError):
    """The reference map's derivative vanishes on the test grid."""


@dataclass(frozen=True)
class ClassId:
    """A function class, with the reference series G for the _G variants."""

    name: ClassName
    reference_map: AnalyticSeries | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "name", ClassName(self.name))
        if self.name in (ClassName.R_H0_G, ClassName.F_H0_G) and self.reference_map is None:
            raise ValueError(f"{self.name.value} requires a reference map")


@dataclass(frozen=True)
class MembershipResult:
    is_member: bool
    margin: float
    witness: complex | int
    status: str  # "member" | "boundary" | "rejected"


@dataclass(frozen=True)
class BoundTable:
    class_id: ClassId
    p: Callable[[int], float]
    growth_lower: Callable[[float], float]
    growth_upper: Callable[[float], float]


@dataclass(frozen=True)
class BoundCheckReport:
    """Gap check ||a_n| - |b_n|| <= p(n) for n = 2..n_max."""

    n_max: int
    gaps: np.ndarray  # indexed from n = 2
    bounds: np.ndarray
    violations: tuple[tuple[int, float, float], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _grid_slack(f: HarmonicMap, c: ClassId, z: np.ndarray) -> np.ndarray:
    hp_s = f.h.derivative()
    gp_s = f.g.derivative()
    name = c.name
    if name is ClassName.R_H0:
        return np.real(hp_s.evaluate(z)) - np.abs(gp_s.evaluate(z))
    if name is ClassName.W_H0:
        hval = hp_s.evaluate(z) + z * hp_s.derivative().evaluate(z)
        gval = gp_s.evaluate(z) + z * gp_s.derivative().evaluate(z)
        return np.real(hval) - np.abs(gval)
    if name is ClassName.F_H0:
        return 1.0 - np.abs(hp_s.evaluate(z) - 1.0) - np.abs(gp_s.evaluate(z))
    gref = c.reference_map.derivative().evaluate(z)
    if np.min(np.abs(gref)) < 1e-12:
        raise SingularReferenceError("reference derivative vanishes on the grid")
    hq = hp_s.evaluate(z) / gref
    gq = gp_s.evaluate(z) / gref
    if name is ClassName.R_H0_G:
        return np.real(hq) - np.abs(gq)
    if name is ClassName.F_H0_G:
        return 1.0 - np.abs(hq - 1.0) - np.abs(gq)
    raise AssertionError(name)


def membership(f: HarmonicMap, c: ClassId, grid: SamplingGrid | None = None) -> MembershipResult:
    """Certify class membership; see the module docstring for semantics.

    Grid classes report the infimum of the defining slack over the grid
    with the attaining point as witness; margins in [0, tol] are flagged
    as boundary rather than rejected.  Coefficient classes report
    1 - (weighted sum) with the dominant coefficient index as witness.
    """
    if not f.is_normalized():
        raise ValueError("membership requires a normalized map")
    if c.name in GRID_CLASSES:
        if grid is None:
            grid = G_VARIANT_GRID if c.reference_map is not None else DEFAULT_GRID
        z = grid.points()
        if z.size == 0:
            raise ValueError("empty sampling grid")
        slack = _grid_slack(f, c, z)
        k = int(np.argmin(slack))
        margin = float(slack[k])
        witness: complex | int = complex(z[k])
        if margin > STRICTNESS_TOL:
            return MembershipResult(True, margin, witness, "member")
        if margin >= 0.0:
            return MembershipResult(True, margin, witness, "boundary")
        return MembershipResult(False, margin, witness, "rejected")

    n = np.arange(2, f.order + 1)
    a = f.h.coeffs[1:]
    b = f.g.coeffs[1:]
    if c.name is ClassName.S_R:
        deviation = np.maximum(np.abs(np.imag(f.h.coeffs)), np.abs(f.g.coeffs))
        k = int(np.argmax(deviation))
        margin = -float(deviation[k])
        status = "member" if margin == 0.0 else ("boundary" if margin >= -EXACT_TOL else "rejected")
        return MembershipResult(margin >= -EXACT_TOL, margin, k + 1, status)
    weight = n if c.name is ClassName.U_H0 else n**2
    contributions = weight * (np.abs(a) + np.abs(b))
    margin = float(1.0 - contributions.sum())
    witness = int(n[np.argmax(contributions)]) if n.size else 2
    if margin > STRICTNESS_TOL:
        return MembershipResult(True, margin, witness, "member")
    if margin >= -EXACT_TOL:
        return MembershipResult(True, margin, witness, "boundary")
    return MembershipResult(False, margin, witness, "rejected")


def epsilon_sweep_membership(f: HarmonicMap, analytic_test, m: int = 64) -> bool:
    """Necessary-condition sampler over slices h + eps*g at m roots of unity.

    Sound for rejection; acceptance is approximate (only m slice
    directions are inspected).
    """
    if m < 8:
        raise ValueError("sweep needs at least 8 slice directions")
    eps = np.exp(2j * np.pi * np.arange(m) / m)
    return all(analytic_test(slice_map(f, e)) for e in eps)


def _lower_R(r: float) -> float:
    return -r + 2.0 * math.log1p(r)


def _upper_R(r: float) -> float:
    return math.inf if r >= 1.0 else -r - 2.0 * math.log1p(-r)


def _log_ratio(sign: float):
    def integrand(t: float) -> float:
        if t == 0.0:
            return 1.0 if sign > 0 else -1.0
        return math.log1p(sign * t) / t

    return integrand


def _lower_W(r: float) -> float:
    val, _ = quad(_log_ratio(+1.0), 0.0, r)
    return -r + 2.0 * val


def _upper_W(r: float) -> float:
    val, _ = quad(_log_ratio(-1.0), 0.0, r)
    return -r - 2.0 * val


_ENVELOPES: dict[ClassName, tuple[Callable[[float], float], Callable[[float], float]]] = {
    ClassName.R_H0: (_lower_R, _upper_R),
    ClassName.W_H0: (_lower_W, _upper_W),
    ClassName.U_H0: (lambda r: r - r**2 / 2, lambda r: r + r**2 / 2),
    ClassName.V_H0: (lambda r: r - r**2 / 4, lambda r: r + r**2 / 4),
}

_GAP_BOUNDS: dict[ClassName, Callable[[int], float]] = {
    ClassName.R_H0: lambda n: 2.0 / n,
    ClassName.W_H0: lambda n: 2.0 / n**2,
    ClassName.U_H0: lambda n: 1.0 / n,
    ClassName.V_H0: lambda n: 1.0 / n**2,
}


def growth_envelope(c: ClassId, r: float) -> tuple[float, float]:
    """Sharp modulus envelope (lower, upper) for |f(r e^{i t})|.

    r = 1 is allowed and returns the limiting covering constant in the
    lower slot (the upper envelope may be infinite there).
    """
    name = c.name if isinstance(c, ClassId) else ClassName(c)
    if name not in _ENVELOPES:
        raise ValueError(f"no growth envelope for class {name.value}")
    if not 0.0 < r <= 1.0:
        raise ValueError("radius must lie in (0, 1]")
    lower, upper = _ENVELOPES[name]
    return lower(r), upper(r)


def bound_table(c: ClassId) -> BoundTable:
    """Per-class coefficient bound p(n) and growth envelope functions."""
    if c.name not in _GAP_BOUNDS:
        raise ValueError(f"no coefficient bound table for class {c.name.value}")
    lower, upper = _ENVELOPES[c.name]
    return BoundTable(c, _GAP_BOUNDS[c.name], lower, upper)


def coefficient_bound_check(f: HarmonicMap, table: BoundTable, n_max: int) -> BoundCheckReport:
    """Verify ||a_n| - |b_n|| <= p(n) for 2 <= n <= n_max."""
    if n_max > f.order:
        raise ValueError(f"n_max {n_max} exceeds truncation {f.order}")
    ns = np.arange(2, n_max + 1)
    gaps = np.abs(np.abs(f.h.coeffs[1:n_max]) - np.abs(f.g.coeffs[1:n_max]))
    bounds = np.array([table.p(int(n)) for n in ns])
    bad = gaps > bounds + EXACT_TOL
    violations = tuple(
        (int(n), float(g), float(bnd)) for n, g, bnd in zip(ns[bad], gaps[bad], bounds[bad])
    )
    return BoundCheckReport(n_max, gaps, bounds, violations)


def _split_complex(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def _sample_coefficient_class(c: ClassId, rng: np.random.Generator, order: int) -> HarmonicMap:
    n = np.arange(2, order + 1)
    weight = n if c.name is ClassName.U_H0 else n.astype(float) ** 2
    raw_a = _split_complex(rng, n.size) / n**2
    raw_b = 0.5 * _split_complex(rng, n.size) / n**2
    total = float(np.sum(weight * (np.abs(raw_a) + np.abs(raw_b))))
    target = rng.uniform(0.3, 1.0)
    scale = target / total
    h = np.zeros(order, dtype=np.complex128)
    g = np.zeros(order, dtype=np.complex128)
    h[0] = 1.0
    h[1:] = raw_a * scale
    g[1:] = raw_b * scale
    return HarmonicMap(AnalyticSeries(h), AnalyticSeries(g))


def _sample_derivative_class(
    c: ClassId, rng: np.random.Generator, order: int, grid: SamplingGrid
) -> HarmonicMap:
    # draw h' (or h' + z h'', or h'-1) as 1 + s*q and the g side as s*p,
    # then choose s so the grid slack hits a target in [0.1, 0.7]
    m = np.arange(1, order)
    q = _split_complex(rng, m.size) / m**2
    p = 0.4 * _split_complex(rng, m.size) / m**2
    z = grid.points()
    qv = AnalyticSeries(q).evaluate(z)
    pv = AnalyticSeries(p).evaluate(z)
    target = rng.uniform(0.1, 0.7)
    if c.name in (ClassName.F_H0, ClassName.F_H0_G):
        worst = float(np.max(np.abs(qv) + np.abs(pv)))
        s = (1.0 - target) / worst
    else:
        worst = float(np.min(np.real(qv) - np.abs(pv)))
        s = (1.0 - target) / (-worst) if worst < 0 else 1.0

    n = np.arange(2, order + 1)
    if c.name is ClassName.W_H0:
        denom = n.astype(float) ** 2  # h' + z h'' has coefficients n^2 a_n
    else:
        denom = n.astype(float)
    h = np.zeros(order, dtype=np.complex128)
    g = np.zeros(order, dtype=np.complex128)
    h[0] = 1.0
    h[1:] = s * q / denom
    g[1:] = s * p / denom

    if c.reference_map is not None:
        # relative classes: multiply the derivative data through G' so the
        # ratio h'/G' is exactly 1 + s*q at every point of the disk
        gp = c.reference_map.derivative()
        gp_poly = np.concatenate(([gp.const], gp.coeffs))
        hp_poly = np.convolve(gp_poly, np.concatenate(([1.0], s * q)))[: order ]
        gg_poly = np.convolve(gp_poly, np.concatenate(([0.0], s * p)))[: order ]
        nn = np.arange(1, order + 1)
        h = hp_poly / nn
        g = gg_poly / nn
    return HarmonicMap(AnalyticSeries(h), AnalyticSeries(g))


def sample_member(c: ClassId, seed: int, order: int = 64) -> HarmonicMap:
    """Deterministic pseudo-random member of the class.

    Coefficient classes rescale a random draw so the defining sum lands
    in [0.3, 1]; derivative classes rescale so the grid margin lands in
    [0.1, 0.7].  The output always passes :func:`membership` on the
    grid that class is certified on.
    """
    c = c if isinstance(c, ClassId) else ClassId(c)
    rng = np.random.default_rng(seed)
    if c.name in (ClassName.U_H0, ClassName.V_H0):
        return _sample_coefficient_class(c, rng, order)
    if c.name is ClassName.S_R:
        n = np.arange(2, order + 1)
        raw = rng.standard_normal(n.size) / n**2
        target = rng.uniform(0.3, 1.0)
        raw *= target / np.sum(n * np.abs(raw))
        h = np.zeros(order, dtype=np.complex128)
        h[0] = 1.0
        h[1:] = raw
        g = np.zeros(order, dtype=np.complex128)
        return HarmonicMap(AnalyticSeries(h), AnalyticSeries(g))
    if c.name in GRID_CLASSES:
        grid = G_VARIANT_GRID if c.reference_map is not None else DEFAULT_GRID
        return _sample_derivative_class(c, rng, order, grid)
    raise ValueError(f"cannot sample class {c.name.value}")
