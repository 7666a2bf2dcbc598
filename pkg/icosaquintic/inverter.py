"""Inversion of the icosahedral quotient map.

For ``|Z|`` large the inverse is a ratio of Gauss hypergeometric series in
``1/Z``; elsewhere one root of the degree 60 equation
``H(z,1)³ − 1728·Z·f(z,1)⁵ = 0`` is taken. Either way the result is checked
against ``I(z) = Z``.
"""

import cmath as _cmath
import fractions as _fractions
import logging as _logging
import typing as _typing

import attrs as _attrs
import numpy as _np

from . import icosa as _icosa
from ._aberth import aberth as _aberth
from .contracts import SolveOptions
from .errors import InvalidC, InvalidInput, NoConvergence, OutOfSeriesDomain, PoleAtSingularPoint

_logger = _logging.getLogger(__name__)

Rat = _fractions.Fraction
Exponents = _typing.Tuple[int, int, int]

ICOSAHEDRAL_EXPONENTS: Exponents = (2, 3, 5)


@_attrs.frozen
class HypergeomParams:
    """Gauss parameters whose solution ratio inverts a triangle map.

    :param a: First upper parameter.
    :param b: Second upper parameter.
    :param c: Lower parameter.
    :param nu: Triangle exponents ``(ν₁, ν₂, ν₃)`` at ``Z = 1, 0, ∞``.
    """

    a: Rat = Rat(11, 60)
    b: Rat = Rat(-1, 60)
    c: Rat = Rat(2, 3)
    nu: Exponents = ICOSAHEDRAL_EXPONENTS

    @classmethod
    def from_exponents(cls, nu1: int, nu2: int, nu3: int) -> "HypergeomParams":
        """Solve ``a − b = 1/ν₃``, ``c − a − b = 1/ν₁``, ``1 − c = 1/ν₂``."""
        c = 1 - Rat(1, nu2)
        total = c - Rat(1, nu1)
        diff = Rat(1, nu3)
        return cls((total + diff) / 2, (total - diff) / 2, c, (nu1, nu2, nu3))


def gauss_2f1(
    a: _typing.Union[Rat, float],
    b: _typing.Union[Rat, float],
    c: _typing.Union[Rat, float],
    w: complex,
    tol: float = 1e-16,
    max_terms: int = 100_000,
) -> complex:
    """Sum ``₂F₁(a, b; c; w)`` inside ``|w| ≤ 0.9``.

    Summation stops once three consecutive terms are below ``tol`` relative
    to the partial sum.

    :raises InvalidC: If ``c`` is zero or a negative integer.
    :raises OutOfSeriesDomain: If ``|w| > 0.9``.
    :raises NoConvergence: If ``max_terms`` terms do not suffice.
    """
    if c == int(c) and c <= 0:
        raise InvalidC(f"c = {c} is a non-positive integer")
    if abs(w) > 0.9:
        raise OutOfSeriesDomain(f"|w| = {abs(w)} exceeds the series region 0.9")
    a, b, c, w = float(a), float(b), float(c), complex(w)
    total = term = 1 + 0j
    small = 0
    for n in range(max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * w
        total += term
        if term == 0:
            return total
        small = small + 1 if abs(term) < tol * abs(total) else 0
        if small == 3:
            return total
    raise NoConvergence(f"2F1({a}, {b}; {c}; {w}) needs more than {max_terms} terms")


def _fifth_root(x: complex) -> complex:
    return _cmath.exp(_cmath.log(x) / 5)


def s_inverse(
    Z: complex,
    params: HypergeomParams = HypergeomParams(),
    options: SolveOptions = SolveOptions(),
) -> complex:
    """The hypergeometric inverse

    ``s(Z) = ₂F₁(a, a−c+1; a−b+1; 1/Z) / ((1728Z)^⅕ · ₂F₁(b, b−c+1; b−a+1; 1/Z))``

    with the principal fifth root.

    :raises OutOfSeriesDomain: If ``|Z| ≤ options.series_cutoff``.
    """
    Z = complex(Z)
    if not abs(Z) > options.series_cutoff:
        raise OutOfSeriesDomain(f"|Z| = {abs(Z)} is within the cutoff {options.series_cutoff}")
    a, b, c = params.a, params.b, params.c
    w = 1 / Z
    num = gauss_2f1(a, a - c + 1, a - b + 1, w, options.series_tol, options.max_terms)
    den = gauss_2f1(b, b - c + 1, b - a + 1, w, options.series_tol, options.max_terms)
    return num / (_fifth_root(1728 * Z) * den)


def _equation_form(Z: complex) -> _np.ndarray:
    """``H³ − 1728·Z·f⁵`` as a degree 60 binary form.

    Products use ``convolve``, which keeps the vanishing ``z1¹²`` coefficient
    of ``f`` so both terms have 61 coefficients.
    """
    inv = _icosa.build_invariants()
    h = _icosa.dense_form(inv.H)
    f = _icosa.dense_form(inv.f)
    h3 = _np.convolve(_np.convolve(h, h), h)
    f2 = _np.convolve(f, f)
    f5 = _np.convolve(_np.convolve(f2, f2), f)
    return h3 - 1728 * Z * f5


def _polish(form: _np.ndarray, z: complex, steps: int = 6) -> complex:
    """Newton steps in the chart ``z`` or ``1/z``, kept while ``|g|`` drops."""
    flip = abs(z) > 1
    coeffs = form[::-1] if flip else form
    deriv = _np.polyder(coeffs)
    x = 1 / z if flip else z
    value = abs(_np.polyval(coeffs, x))
    for _ in range(steps):
        d = _np.polyval(deriv, x)
        if d == 0:
            break
        cand = x - _np.polyval(coeffs, x) / d
        cand_value = abs(_np.polyval(coeffs, cand))
        if not cand_value < value:
            break
        x, value = cand, cand_value
    return complex(1 / x if flip else x)


def round_trip_error(z: complex, Z: complex) -> float:
    """``|I(z) − Z| / max(1, |Z|)``."""
    return abs(_icosa.icos_value(z) - Z) / max(1.0, abs(Z))


def icos_equation_roots(Z: complex, options: SolveOptions = SolveOptions()) -> _np.ndarray:
    """All 60 roots of ``H(z,1)³ − 1728·Z·f(z,1)⁵``, with multiplicity.

    At ``Z = 0`` these are the 20 roots of ``H`` repeated three times.

    :raises NoConvergence: If the simultaneous iteration diverges.
    """
    Z = complex(Z)
    if not _cmath.isfinite(Z):
        raise InvalidInput(f"Z must be finite, got {Z}")
    if Z == 0:
        h = _icosa.dense_form(_icosa.build_invariants().H)
        roots = _aberth(h, max_iter=options.aberth_max_iter, seed=options.seed)
        return _np.sort_complex(_np.repeat(roots, 3))
    form = _equation_form(Z)
    roots = _aberth(form, max_iter=options.aberth_max_iter, seed=options.seed)
    polished = _np.array([_polish(form, z) for z in roots])
    return polished[_np.lexsort((polished.imag, polished.real))]


def inversion_path(Z: complex, options: SolveOptions = SolveOptions()) -> str:
    """``"series"`` above the cutoff, ``"polynomial"`` otherwise."""
    return "series" if abs(complex(Z)) > options.series_cutoff else "polynomial"


def invert_icosahedral(Z: complex, options: SolveOptions = SolveOptions()) -> complex:
    """A point ``z`` with ``I(z) = Z``.

    :raises NoConvergence: If the result misses ``Z`` by more than
        ``1e-6·max(1, |Z|)``.
    """
    Z = complex(Z)
    if not _cmath.isfinite(Z):
        raise InvalidInput(f"Z must be finite, got {Z}")
    path = inversion_path(Z, options)
    if path == "series":
        z = _polish(_equation_form(Z), s_inverse(Z, options=options))
    else:
        roots = icos_equation_roots(Z, options)
        z = min(roots, key=lambda r: round_trip_error(r, Z))
    err = round_trip_error(z, Z)
    _logger.debug("Inverted Z=%s on the %s path: z=%s, error %.3g", Z, path, z, err)
    if err > 1e-6:
        raise NoConvergence(f"Inverse of Z={Z} misses by {err}")
    return complex(z)


def schwarzian_beta0(nu: Exponents = ICOSAHEDRAL_EXPONENTS) -> Rat:
    """``(1 − 1/ν₁²)/2 + (1 − 1/ν₂²)/2 − (1 − 1/ν₃²)/2``, exactly."""
    n1, n2, n3 = (Rat(1, v * v) for v in nu)
    return ((1 - n1) + (1 - n2) - (1 - n3)) / 2


def schwarzian_rhs(Z: complex, nu: Exponents = ICOSAHEDRAL_EXPONENTS) -> complex:
    """The Schwarzian ``{s, Z}`` prescribed for an inverse of the triangle map.

    :raises PoleAtSingularPoint: At ``Z = 0`` and ``Z = 1``.
    """
    Z = complex(Z)
    if Z == 0 or Z == 1:
        raise PoleAtSingularPoint(f"Schwarzian has a pole at Z = {Z}")
    n1, n2, n3 = (1 / (v * v) for v in nu)
    return (
        (1 - n1) / (2 * (1 - Z) ** 2)
        + (1 - n2) / (2 * Z**2)
        + (1 - n1 - n2 + n3) / (2 * Z * (1 - Z))
    )


def finite_difference_schwarzian(
    fn: _typing.Callable[[complex], complex], Z: complex, h: float
) -> complex:
    """``s‴/s′ − (3/2)(s″/s′)²`` from five-point central differences."""
    Z = complex(Z)
    s2, s1, s0, sm1, sm2 = (fn(Z + k * h) for k in (2, 1, 0, -1, -2))
    d1 = (-s2 + 8 * s1 - 8 * sm1 + sm2) / (12 * h)
    d2 = (-s2 + 16 * s1 - 30 * s0 + 16 * sm1 - sm2) / (12 * h * h)
    d3 = (s2 - 2 * s1 + 2 * sm1 - sm2) / (2 * h**3)
    return d3 / d1 - 1.5 * (d2 / d1) ** 2
