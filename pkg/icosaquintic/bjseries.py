"""Power series root of the Bring-Jerrard quintic ``y⁵ − y + γ = 0``.

The branch with ``y(0) = 0`` is ``y = Σ C(5k, k)/(4k + 1)·γ^(4k+1)``. Its
coefficients are Fuss-Catalan numbers, which count Raney sequences; the
brute-force count is kept as an independent check.
"""

import cmath as _cmath
import fractions as _fractions
import itertools as _itertools
import math as _math
import typing as _typing

import attrs as _attrs

from .contracts import Certificate
from .errors import NoConvergence, OutsideRadius, TooLarge

Rat = _fractions.Fraction

RADIUS = 4 * 5 ** (-5 / 4)
"""Radius of convergence of the series in ``γ``."""

SAFE_RADIUS = 0.5

RESIDUAL_FLOOR = 1e-14

MAX_RANEY_LENGTH = 26

_ZETA = _cmath.exp(1j * _math.pi / 4)


def _at_least(instance: object, attribute: "_attrs.Attribute", value: int) -> None:
    if value < attribute.metadata["min"]:
        raise ValueError(f"{attribute.name} must be at least {attribute.metadata['min']}, got {value}")


@_attrs.frozen
class FussParams:
    """Indices of the Fuss-Catalan number ``ₚd_k = C(pk, k)/((p−1)k + 1)``."""

    p: int = _attrs.field(validator=_at_least, metadata={"min": 2})
    k: int = _attrs.field(validator=_at_least, metadata={"min": 0})

    @property
    def value(self) -> int:
        return fuss_catalan(self.p, self.k)


def fuss_catalan(p: int, k: int) -> int:
    """``C(pk, k)/((p−1)k + 1)``; the Catalan numbers at ``p = 2``."""
    if p < 2 or k < 0:
        raise ValueError(f"Need p >= 2 and k >= 0, got p={p}, k={k}")
    q, r = divmod(_math.comb(p * k, k), (p - 1) * k + 1)
    if r:
        raise ValueError(f"C({p * k}, {k}) is not divisible by {(p - 1) * k + 1}")
    return q


def raney_count(p: int, k: int) -> int:
    """Count sequences of ``kp + 1`` entries from ``{1, 1 − p}`` with sum 1
    and all partial sums positive.

    :raises TooLarge: If ``kp + 1`` exceeds :data:`MAX_RANEY_LENGTH`.
    """
    if p < 2 or k < 0:
        raise ValueError(f"Need p >= 2 and k >= 0, got p={p}, k={k}")
    n = k * p + 1
    if n > MAX_RANEY_LENGTH:
        raise TooLarge(f"Enumerating {n} positions exceeds {MAX_RANEY_LENGTH}")
    count = 0
    for low in _itertools.combinations(range(n), k):
        marked = set(low)
        total = 0
        for i in range(n):
            total += 1 - p if i in marked else 1
            if total <= 0:
                break
        else:
            count += 1
    return count


def series_coefficient(k: int) -> Rat:
    """Coefficient of ``γ^(4k+1)``: ``C(5k, k)/(4k + 1)``."""
    return Rat(_math.comb(5 * k, k), 4 * k + 1)


def term_ratio(k: int) -> Rat:
    """Ratio of consecutive coefficients predicted by the ``₄F₃`` form,
    argument ``5(5γ/4)⁴``."""
    up = (k + Rat(4, 5)) * (k + Rat(3, 5)) * (k + Rat(2, 5)) * (k + Rat(1, 5))
    down = (k + Rat(5, 4)) * (k + Rat(3, 4)) * (k + Rat(1, 2)) * (k + 1)
    return up / down * 5 * Rat(5, 4) ** 4


def bj_root_series(gamma: complex, tol: float = 1e-16, max_terms: int = 100_000) -> complex:
    """The root of ``y⁵ − y + γ`` with ``y(0) = 0``.

    :raises OutsideRadius: If ``|γ| > 0.5``.
    :raises NoConvergence: If ``max_terms`` terms do not suffice, or if the
        sum misses the equation by more than ``10·tol``. Tolerances below
        double rounding are raised to :data:`RESIDUAL_FLOOR` for that check.
    """
    gamma = complex(gamma)
    if abs(gamma) > SAFE_RADIUS:
        raise OutsideRadius(f"|gamma| = {abs(gamma)} exceeds {SAFE_RADIUS}")
    if gamma == 0:
        return 0j
    g4 = gamma**4
    power = gamma
    total = 0j
    small = 0
    for k in range(max_terms):
        term = float(series_coefficient(k)) * power
        total += term
        small = small + 1 if abs(term) < tol * abs(total) else 0
        if small == 3 or power * g4 == 0:
            return _checked(total, gamma, tol)
        power *= g4
    raise NoConvergence(f"Series at gamma={gamma} needs more than {max_terms} terms")


def _checked(y: complex, gamma: complex, tol: float) -> complex:
    bound = 10 * max(tol, RESIDUAL_FLOOR)
    if residual(y, gamma) > bound:
        raise NoConvergence(f"Series root at gamma={gamma} has residual {residual(y, gamma):.3g}")
    return y


def bring_jerrard_plus_root(gamma: complex, tol: float = 1e-16) -> complex:
    """A root of ``y⁵ + y + γ`` through ``y = ζw`` with ``ζ⁴ = −1``, where
    ``w⁵ − w − γ/ζ = 0``."""
    return _ZETA * bj_root_series(-complex(gamma) / _ZETA, tol)


def residual(y: complex, gamma: complex) -> float:
    """``|y⁵ − y + γ|``."""
    return abs(y**5 - y + gamma)


def verify_term_ratios(kmax: int = 20) -> Certificate:
    """Certify the coefficient ratios and the Raney counts."""
    return Certificate.collect(
        "series",
        [
            (
                "term_ratios",
                lambda: all(
                    series_coefficient(k + 1) / series_coefficient(k) == term_ratio(k)
                    for k in range(kmax)
                ),
            ),
            (
                "raney_matches_fuss",
                lambda: all(
                    raney_count(p, k) == fuss_catalan(p, k) for p in (2, 3, 5) for k in range(5)
                ),
            ),
            ("quintic_fuss", lambda: [fuss_catalan(5, k) for k in range(5)] == [1, 1, 5, 35, 285]),
        ],
    )
