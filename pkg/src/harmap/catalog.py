"""Named extremal maps: coefficient constructors and exact evaluators.

Every tag has a coefficient rule and a closed-form evaluator.  The two
rational harmonic maps are expanded by exact long division of their
printed numerators against (1-z)^k, carried out in integer arithmetic,
so no coefficient is a hand-typed float.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

import numpy as np
from scipy.special import spence

from .harmonic import HarmonicMap, analytic_map
from .series import AnalyticSeries, DomainError


class CatalogTag(str, Enum):
    KOEBE = "koebe"
    HALF_PLANE = "half_plane"
    HARMONIC_KOEBE = "harmonic_koebe"
    HARMONIC_HALF_PLANE = "harmonic_half_plane"
    MACGREGOR_R = "macgregor_r"
    CHICHRA_W = "chichra_w"
    U_SHARP = "u_sharp"
    U_SHARP_CONJ = "u_sharp_conj"
    V_SHARP = "v_sharp"
    V_SHARP_CONJ = "v_sharp_conj"
    ALEXANDER_PLUS_K = "alexander_plus_K"
    ALEXANDER_PLUS_L = "alexander_plus_L"


def _as_tag(tag) -> CatalogTag:
    try:
        return CatalogTag(tag)
    except ValueError:
        raise ValueError(f"unknown catalog tag {tag!r}") from None


def _rational_coeffs(numerator: dict[int, Fraction], pole_order: int, n: int) -> list[Fraction]:
    """Taylor coefficients 1..n of numerator(z) / (1-z)**pole_order.

    Uses the binomial recurrence c_m = c_{m-1} (m+k-1)/m for 1/(1-z)^k
    and convolves with the (finitely supported) numerator.
    """
    base = [Fraction(1)]
    for m in range(1, n + 1):
        base.append(base[-1] * (m + pole_order - 1) / m)
    out = []
    for j in range(1, n + 1):
        out.append(sum((c * base[j - m] for m, c in numerator.items() if m <= j), Fraction(0)))
    return out


def _to_series(fracs) -> AnalyticSeries:
    return AnalyticSeries(np.array([float(c) for c in fracs], dtype=np.complex128))


def make(tag, order: int) -> HarmonicMap:
    """Construct the named map truncated to ``order``, closed form attached."""
    tag = _as_tag(tag)
    if order < 2:
        raise ValueError("catalog maps require order >= 2")
    n = np.arange(1, order + 1, dtype=np.float64)

    if tag is CatalogTag.KOEBE:
        return analytic_map(AnalyticSeries(n.astype(np.complex128)), tag.value)
    if tag is CatalogTag.HALF_PLANE:
        return analytic_map(AnalyticSeries(np.ones(order, dtype=np.complex128)), tag.value)
    if tag is CatalogTag.MACGREGOR_R:
        c = 2.0 / n
        c[0] = 1.0
        return analytic_map(AnalyticSeries(c.astype(np.complex128)), tag.value)
    if tag is CatalogTag.CHICHRA_W:
        c = 2.0 / n**2
        c[0] = 1.0
        return analytic_map(AnalyticSeries(c.astype(np.complex128)), tag.value)

    if tag in (CatalogTag.U_SHARP, CatalogTag.V_SHARP, CatalogTag.U_SHARP_CONJ, CatalogTag.V_SHARP_CONJ):
        quad = 0.5 if tag in (CatalogTag.U_SHARP, CatalogTag.U_SHARP_CONJ) else 0.25
        h = np.zeros(order, dtype=np.complex128)
        g = np.zeros(order, dtype=np.complex128)
        h[0] = 1.0
        if tag in (CatalogTag.U_SHARP, CatalogTag.V_SHARP):
            h[1] = quad
        else:
            g[1] = quad
        return HarmonicMap(AnalyticSeries(h), AnalyticSeries(g), tag.value)

    if tag is CatalogTag.HARMONIC_KOEBE:
        a = _rational_coeffs({1: Fraction(1), 2: Fraction(-1, 2), 3: Fraction(1, 6)}, 3, order)
        b = _rational_coeffs({2: Fraction(1, 2), 3: Fraction(1, 6)}, 3, order)
        return HarmonicMap(_to_series(a), _to_series(b), tag.value)
    if tag is CatalogTag.HARMONIC_HALF_PLANE:
        a = _rational_coeffs({1: Fraction(1), 2: Fraction(-1, 2)}, 2, order)
        b = _rational_coeffs({2: Fraction(-1, 2)}, 2, order)
        return HarmonicMap(_to_series(a), _to_series(b), tag.value)

    if tag is CatalogTag.ALEXANDER_PLUS_K:
        base = make(CatalogTag.HARMONIC_KOEBE, order)
        return HarmonicMap(
            AnalyticSeries(base.h.coeffs / n), AnalyticSeries(base.g.coeffs / n), tag.value
        )
    if tag is CatalogTag.ALEXANDER_PLUS_L:
        base = make(CatalogTag.HARMONIC_HALF_PLANE, order)
        return HarmonicMap(
            AnalyticSeries(base.h.coeffs / n), AnalyticSeries(base.g.coeffs / n), tag.value
        )
    raise AssertionError(f"unhandled tag {tag}")


def _dilog(z):
    """Principal-branch dilogarithm sum z^n / n^2."""
    return spence(1.0 - np.asarray(z, dtype=np.complex128))


def _koebe(z):
    return z / (1 - z) ** 2


def _half_plane(z):
    return z / (1 - z)


def _harmonic_koebe(z):
    H = (z - z**2 / 2 + z**3 / 6) / (1 - z) ** 3
    G = (z**2 / 2 + z**3 / 6) / (1 - z) ** 3
    return H + np.conj(G)


def _harmonic_half_plane(z):
    M = (z - z**2 / 2) / (1 - z) ** 2
    N = -(z**2 / 2) / (1 - z) ** 2
    return M + np.conj(N)


def _alexander_plus_K(z):
    h = (z * (5 - 3 * z) / (1 - z) ** 2 - np.log(1 - z)) / 6
    g = (z * (3 * z - 1) / (1 - z) ** 2 - np.log(1 - z)) / 6
    return h + np.conj(g)


def _alexander_plus_L(z):
    return -np.log(np.abs(1 - z)) + 1j * np.imag(z / (1 - z))


_CLOSED_FORMS = {
    CatalogTag.KOEBE: _koebe,
    CatalogTag.HALF_PLANE: _half_plane,
    CatalogTag.MACGREGOR_R: lambda z: -z - 2 * np.log(1 - z),
    CatalogTag.CHICHRA_W: lambda z: 2 * _dilog(z) - z,
    CatalogTag.U_SHARP: lambda z: z + z**2 / 2,
    CatalogTag.U_SHARP_CONJ: lambda z: z + np.conj(z**2) / 2,
    CatalogTag.V_SHARP: lambda z: z + z**2 / 4,
    CatalogTag.V_SHARP_CONJ: lambda z: z + np.conj(z**2) / 4,
    CatalogTag.HARMONIC_KOEBE: _harmonic_koebe,
    CatalogTag.HARMONIC_HALF_PLANE: _harmonic_half_plane,
    CatalogTag.ALEXANDER_PLUS_K: _alexander_plus_K,
    CatalogTag.ALEXANDER_PLUS_L: _alexander_plus_L,
}


def eval_closed(tag, z):
    """Exact value of the tagged map at z, |z| < 1 (principal log branch)."""
    tag = _as_tag(tag)
    zz = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(zz) >= 1.0):
        raise DomainError("closed-form evaluation requires |z| < 1")
    out = np.asarray(_CLOSED_FORMS[tag](zz), dtype=np.complex128)
    return complex(out) if out.ndim == 0 else out


def all_tags() -> tuple[CatalogTag, ...]:
    return tuple(CatalogTag)
