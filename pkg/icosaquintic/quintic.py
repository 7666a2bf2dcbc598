"""General quintics: power sums, the quadratic Tschirnhaus reduction to
``y⁵ + 5αy² + 5βy + γ``, root back-mapping and the discriminant."""

import cmath as _cmath
import logging as _logging
import typing as _typing

import attrs as _attrs
import numpy as _np
from numpy.polynomial import Polynomial as _Polynomial
from numpy.polynomial import polynomial as _P

from .errors import AmbiguousPreimage, DegenerateImage

_logger = _logging.getLogger(__name__)

Number = _typing.Any
"""Anything supporting ring arithmetic: complex, Fraction, MPoly."""


@_attrs.frozen
class GeneralQuintic:
    """The monic quintic ``x⁵ + a1·x⁴ + a2·x³ + a3·x² + a4·x + a5``."""

    a1: complex = _attrs.field(converter=complex)
    a2: complex = _attrs.field(converter=complex)
    a3: complex = _attrs.field(converter=complex)
    a4: complex = _attrs.field(converter=complex)
    a5: complex = _attrs.field(converter=complex)

    @classmethod
    def from_roots(cls, roots: _typing.Sequence[complex]) -> "GeneralQuintic":
        c = _np.poly(_np.asarray(roots, dtype=complex))
        return cls(*c[1:])

    @property
    def coefficients(self) -> _np.ndarray:
        """All six coefficients, highest degree first."""
        return _np.array([1, self.a1, self.a2, self.a3, self.a4, self.a5], dtype=complex)


@_attrs.frozen
class CanonicalQuintic:
    """The quintic ``y⁵ + 5αy² + 5βy + γ``."""

    alpha: complex = _attrs.field(converter=complex)
    beta: complex = _attrs.field(converter=complex)
    gamma: complex = _attrs.field(converter=complex)

    @property
    def coefficients(self) -> _np.ndarray:
        return _np.array([1, 0, 0, 5 * self.alpha, 5 * self.beta, self.gamma], dtype=complex)

    @property
    def discriminant(self) -> complex:
        return discriminant(self)

    @property
    def nabla(self) -> complex:
        return nabla(self.discriminant)

    @property
    def scale(self) -> float:
        return weighted_scale(self.alpha, self.beta, self.gamma)


@_attrs.frozen
class TschirnhausRecord:
    """How a canonical quintic was obtained from a general one.

    The canonical roots are ``y = x'² + b1·x' + b2`` with ``x' = x + shift``.

    :param original: The input quintic.
    :param shift: ``a1/5``.
    :param b1: Linear coefficient of the substitution.
    :param b2: Constant coefficient of the substitution.
    :param trivial: Whether the depressed quintic was already canonical, in
        which case ``y = x'``.
    :param image: Coefficients of the transformed monic quintic, highest
        degree first.
    """

    original: GeneralQuintic
    shift: complex
    b1: complex = 0j
    b2: complex = 0j
    trivial: bool = False
    image: _typing.Tuple[complex, ...] = ()

    @property
    def depressed(self) -> _np.ndarray:
        return _depress(self.original.coefficients, self.shift)


def weighted_scale(alpha: Number, beta: Number, gamma: Number) -> float:
    """Root scale of ``y⁵ + 5αy² + 5βy + γ``: ``max(|α|^⅓, |β|^¼, |γ|^⅕)``."""
    return max(
        abs(complex(alpha)) ** (1 / 3),
        abs(complex(beta)) ** (1 / 4),
        abs(complex(gamma)) ** (1 / 5),
    )


def relative_residual(coeffs: _typing.Sequence[complex], x: complex) -> float:
    """``|P(x)| / Σ|c_k||x|^k`` for coefficients given highest degree first."""
    c = _np.asarray(coeffs, dtype=complex)
    value = abs(_np.polyval(c, x))
    scale = float(_np.polyval(_np.abs(c), abs(x)))
    if scale == 0:
        return 0.0 if value == 0 else float("inf")
    return float(value / scale)


def _newton_power_sums(a: _typing.Sequence[complex], up_to: int) -> _typing.List[complex]:
    n = len(a)
    p: _typing.List[complex] = []
    for m in range(1, up_to + 1):
        s = sum(a[j - 1] * p[m - j - 1] for j in range(1, min(m, n + 1)))
        if m <= n:
            s += m * a[m - 1]
        p.append(-s)
    return p


def power_sums(q: GeneralQuintic, up_to: int) -> _typing.List[complex]:
    """Power sums ``p_1..p_upTo`` of the roots by Newton's identities.

    :param q: The quintic.
    :param up_to: Highest power, at least 1.
    """
    if up_to < 1:
        raise ValueError(f"up_to must be positive, got {up_to}")
    return _newton_power_sums(list(q.coefficients[1:]), up_to)


def _depress(coeffs: _np.ndarray, shift: complex) -> _np.ndarray:
    poly = _Polynomial(coeffs[::-1])
    moved = poly(_Polynomial([-shift, 1]))
    c = _np.zeros(6, dtype=complex)
    c[: len(moved.coef)] = moved.coef
    d = c[::-1].copy()
    d[1] = 0
    return d


def _coefficient_scale(c: _typing.Sequence[complex]) -> float:
    return max((abs(c[k]) ** (1 / k) for k in range(1, len(c))), default=0.0)


def _relative_discriminant(sums: _typing.Sequence[complex]) -> float:
    """``|∏(r_i − r_j)²|`` from ``p_0..p_8`` via the Hankel determinant,
    normalized by the root scale."""
    hankel = _np.array([[sums[i + j] for j in range(5)] for i in range(5)], dtype=complex)
    scale = max((abs(sums[k]) ** (1 / k) for k in range(1, 9)), default=0.0)
    if scale == 0:
        return 0.0
    return float(abs(_np.linalg.det(hankel / 1.0)) / scale**20)


def _elementary(sums: _typing.Sequence[complex]) -> _typing.List[complex]:
    e = [1 + 0j]
    for k in range(1, 6):
        e.append(sum((-1) ** (i - 1) * e[k - i] * sums[i] for i in range(1, k + 1)) / k)
    return e


def _quadratic_roots(a: complex, b: complex, c: complex, tiny: float) -> _typing.List[complex]:
    """Roots of ``a·t² + b·t + c``, larger magnitude first."""
    if abs(a) <= tiny:
        if abs(b) <= tiny:
            return []
        return [-c / b]
    disc = _cmath.sqrt(b * b - 4 * a * c)
    sign = 1 if (b.conjugate() * disc).real >= 0 else -1
    q = -(b + sign * disc) / 2
    roots = [q / a]
    if q != 0:
        roots.append(c / q)
    else:
        roots.append(0j)
    return sorted(roots, key=abs, reverse=True)


def tschirnhaus_reduce(
    q: GeneralQuintic,
) -> _typing.Tuple[CanonicalQuintic, TschirnhausRecord]:
    """Reduce a quintic to canonical form.

    The quintic is depressed first. If its cubic coefficient already vanishes
    the roots lie on the quadric ``Σy = Σy² = 0`` and the depressed quintic
    is returned as is. Otherwise ``b2 = −p2/5`` and ``b1`` solves
    ``p2·b1² + 2p3·b1 + (p4 − p2²/5) = 0``, trying the larger root first.

    :raises DegenerateImage: If every admissible ``b1`` collapses distinct
        roots.
    """
    shift = q.a1 / 5
    d = _depress(q.coefficients, shift)
    rho = _coefficient_scale(d)
    if rho == 0 or abs(d[2]) <= 1e-14 * rho**2:
        rec = TschirnhausRecord(q, shift, trivial=True, image=tuple(d))
        canonical = CanonicalQuintic(d[3] / 5, d[4] / 5, d[5])
        return canonical, rec

    p = [5 + 0j] + _newton_power_sums(list(d[1:]), 16)
    original_disc = _relative_discriminant(p)
    b2 = -p[2] / 5
    candidates = _quadratic_roots(p[2], 2 * p[3], p[4] - p[2] ** 2 / 5, 1e-14 * rho**2)
    for b1 in candidates:
        sums = [5 + 0j]
        for m in range(1, 9):
            coef = _P.polypow([b2, b1, 1], m)
            sums.append(sum(c * p[k] for k, c in enumerate(coef)))
        e = _elementary(sums)
        image = tuple((-1) ** k * e[k] for k in range(6))
        image_disc = _relative_discriminant(sums)
        _logger.debug(
            "b1=%s: image discriminant %.3g (original %.3g)", b1, image_disc, original_disc
        )
        if image_disc < 1e-10 and original_disc >= 1e-10:
            continue
        canonical = CanonicalQuintic(image[3] / 5, image[4] / 5, image[5])
        rec = TschirnhausRecord(q, shift, b1, b2, False, image)
        return canonical, rec
    raise DegenerateImage(f"Tschirnhaus substitution collapses roots of {q}")


def tschirnhaus_back(y: complex, rec: TschirnhausRecord, tolerance: float = 1e-6) -> complex:
    """Map a canonical root back to a root of the original quintic.

    :raises AmbiguousPreimage: If neither solution of
        ``x² + b1·x + (b2 − y) = 0`` is a root within ``tolerance``.
    """
    if rec.trivial:
        return y - rec.shift
    depressed = rec.depressed
    disc = _cmath.sqrt(rec.b1 * rec.b1 - 4 * (rec.b2 - y))
    candidates = [(-rec.b1 + disc) / 2, (-rec.b1 - disc) / 2]
    residuals = [relative_residual(depressed, x) for x in candidates]
    best = min(range(2), key=lambda i: residuals[i])
    if residuals[best] > tolerance:
        raise AmbiguousPreimage(
            f"No preimage of y={y} within tolerance, residuals {residuals}"
        )
    return candidates[best] - rec.shift


def discriminant_value(alpha: Number, beta: Number, gamma: Number) -> Number:
    """``108α⁵γ − 135α⁴β² + 90α²βγ² − 320αβ³γ + 256β⁵ + γ⁴``.

    Works for any ring elements, including exact rationals and polynomials.
    """
    return (
        108 * alpha**5 * gamma
        - 135 * alpha**4 * beta**2
        + 90 * alpha**2 * beta * gamma**2
        - 320 * alpha * beta**3 * gamma
        + 256 * beta**5
        + gamma**4
    )


def discriminant(c: CanonicalQuintic) -> complex:
    """The discriminant, ``∏(y_i − y_j)² / 3125``."""
    return complex(discriminant_value(c.alpha, c.beta, c.gamma))


def nabla(D: complex) -> complex:
    """Principal square root; ``+i·√|D|`` on the negative real axis."""
    D = complex(D)
    if D.imag == 0 and D.real < 0:
        return complex(0, (-D.real) ** 0.5)
    return _cmath.sqrt(D)
