"""Recovery of the five roots from a solution of the icosahedral equation.

With ``w = ε^ν z`` the roots of ``y⁵ + 5αy² + 5βy + γ`` are

    y_ν = (f/Q)(w) · m / (f1f2) + (Dcube·T / (Q·f²))(w) · n / (T1T2),

where ``Q = H/B`` and ``m``, ``n`` are the linear forms evaluated from
``α, β, γ, ∇``. Both factors in ``w`` have degree zero and are evaluated on
a normalized homogeneous pair.
"""

import functools as _functools
import logging as _logging
import typing as _typing

import attrs as _attrs
import numpy as _np
from scipy import optimize as _optimize

from . import icosa as _icosa
from . import invariantmap as _invariantmap
from ._aberth import aberth as _aberth
from .contracts import Certificate, SolveOptions
from .errors import (
    DegenerateConfiguration,
    DegenerateInput,
    InternalMismatch,
    NoConvergence,
    NotDivisible,
    RepeatedRoots,
)
from .exactfield import epsilon_power
from .inverter import icos_equation_roots, invert_icosahedral
from .polyalg import MPoly, exact_divide, transvectant_rs
from .quintic import CanonicalQuintic, discriminant_value, nabla, relative_residual, weighted_scale

_logger = _logging.getLogger(__name__)

Number = _typing.Any

LAMBDA_MU = _invariantmap.LAMBDA_MU

B_DISPLAY = MPoly(
    _icosa.VARIABLES,
    {
        (0, 8): -1,
        (1, 7): -1,
        (2, 6): -7,
        (3, 5): 7,
        (5, 3): -7,
        (6, 2): -7,
        (7, 1): 1,
        (8, 0): -1,
    },
)
DCUBE_DISPLAY = MPoly(
    _icosa.VARIABLES,
    {(6, 0): -1, (5, 1): -2, (4, 2): 5, (2, 4): 5, (1, 5): 2, (0, 6): -1},
)

_BRANCH_ORDER = ((1, 1), (-1, 1), (1, -1), (-1, -1))


@_attrs.frozen
class CubePolys:
    """Forms attached to the cube inscribed in the icosahedron.

    :param B: Degree 8, vanishing at the cube vertices; divides ``H``.
    :param Dcube: Degree 6, vanishing at the cube face centres; divides ``T``.
    :param C: ``B·Dcube``.
    :param Q: The degree 12 quotient ``H / B``.
    :param U: The degree 24 quotient ``T / Dcube``.
    """

    B: MPoly
    Dcube: MPoly
    C: MPoly
    Q: MPoly
    U: MPoly


@_functools.lru_cache(maxsize=None)
def cube_polys() -> CubePolys:
    """Build the cube forms and their quotients.

    :raises InternalMismatch: If ``B`` does not divide ``H`` or ``Dcube``
        does not divide ``T``.
    """
    inv = _icosa.build_invariants()
    try:
        Q = exact_divide(inv.H, B_DISPLAY)
        U = exact_divide(inv.T, DCUBE_DISPLAY)
    except NotDivisible as exc:
        raise InternalMismatch(f"Cube form is not a factor: {exc}") from exc
    return CubePolys(B_DISPLAY, DCUBE_DISPLAY, B_DISPLAY * DCUBE_DISPLAY, Q, U)


def verify_cube_polys() -> Certificate:
    cp = cube_polys()
    inv = _icosa.build_invariants()
    return Certificate.collect(
        "divisibility",
        [
            ("b_divides_h", lambda: cp.B * cp.Q == inv.H),
            ("dcube_divides_t", lambda: cp.Dcube * cp.U == inv.T),
            ("c_is_product", lambda: cp.C == cp.B * cp.Dcube),
            ("quotient_degrees", lambda: (cp.Q.degree, cp.U.degree) == (12, 24)),
        ],
    )


def _gordon_checks() -> _typing.Dict[str, bool]:
    sd = _invariantmap.build_segre_data()
    a = sd.alpha
    inner = transvectant_rs(a, a, 0, 2)
    return {
        "alpha_beta_03": transvectant_rs(a, sd.beta, 0, 3) == sd.N1 * 6,
        "alpha_alpha_02_n1_01": transvectant_rs(inner, sd.N1, 0, 1) == sd.M1 * 8,
    }


@_functools.lru_cache(maxsize=None)
def gordon_forms() -> _typing.Tuple[MPoly, MPoly]:
    """``(N1, M1)``, certified against transvectants of ``α`` and ``β``.

    :raises InternalMismatch: If a transvectant identity fails.
    """
    failed = [k for k, ok in _gordon_checks().items() if not ok]
    if failed:
        raise InternalMismatch(f"Gordon form identities failed: {failed}")
    sd = _invariantmap.build_segre_data()
    return sd.N1, sd.M1


def verify_gordon_forms() -> Certificate:
    sd = _invariantmap.build_segre_data()
    checks = [(k, (lambda ok=ok: ok)) for k, ok in _gordon_checks().items()]
    checks += [
        ("n1_coefficient", lambda: sd.N1.coefficient((5, 2, 1, 0)) == 7),
        ("m1_coefficient", lambda: sd.M1.coefficient((13, 0, 1, 0)) == 1),
    ]
    return Certificate.collect("transvectants", checks)


def _exact(x: Number) -> Number:
    return _invariantmap._exact(x)


def m_symmetric(a: Number, b: Number, c: Number) -> Number:
    """``11α³β + 2β²γ − αγ²``."""
    return 11 * a**3 * b + 2 * b**2 * c - a * c**2


def r_twice(a: Number, b: Number, c: Number) -> Number:
    """``2r``, the symmetric part of ``2·N1·f1²·T2``."""
    return (
        a**2 * c**5
        - a * b**2 * c**4
        + 53 * a**4 * b * c**3
        + 64 * a**7 * c**2
        - 7 * b**4 * c**3
        - 225 * a**3 * b**3 * c**2
        - 12 * a**6 * b**2 * c
        + 216 * a**9 * b
        + 717 * a**2 * b**5 * c
        - 464 * a**5 * b**4
        - 720 * a * b**7
    )


def s_twice(a: Number, b: Number, c: Number) -> Number:
    """``2s``, the antisymmetric part of ``2·N1·f1²·T2`` divided by ``∇``."""
    return (
        -(a**2) * c**3
        + 3 * a * b**2 * c**2
        - 9 * b**4 * c
        - 4 * a**4 * b * c
        - 8 * a**7
        - 80 * a**3 * b**3
    )


def linear_form_values(
    a: Number, b: Number, c: Number, nabla_value: Number
) -> _typing.Tuple[Number, Number]:
    """``m = M1·f2`` and ``n = N1·f1²·T2`` in terms of ``α, β, γ, ∇``.

    ``m = (11α³β + 2β²γ − αγ²)/2 − ∇α/2`` and ``n = r + ∇s``.
    """
    a, b, c, d = (_exact(v) for v in (a, b, c, nabla_value))
    m = m_symmetric(a, b, c) / 2 - d * a / 2
    n = r_twice(a, b, c) / 2 + d * s_twice(a, b, c) / 2
    return m, n


def verify_linear_form_identities() -> Certificate:
    """Certify the symmetric and antisymmetric parts of ``M1·f2`` and
    ``N1·f1²·T2`` under the odd action.

    The square of the antisymmetric part of ``n`` is implied by the
    antisymmetric part of ``m`` together with the coherence identity.
    """
    sd = _invariantmap.build_segre_data()
    r = _invariantmap.r_action
    a, b, c = sd.alpha, sd.beta, sd.gamma
    m1 = sd.M1 * sd.f2
    m2 = r(m1)
    n1 = sd.N1 * sd.f1**2 * sd.T2
    n2 = r(n1)
    return Certificate.collect(
        "linear_forms",
        [
            ("m_symmetric", lambda: m1 + m2 == m_symmetric(a, b, c)),
            ("m_antisymmetric", lambda: (m1 - m2) ** 2 == a**2 * discriminant_value(a, b, c)),
            ("n_symmetric", lambda: n1 + n2 == r_twice(a, b, c)),
            ("coherence", lambda: (m1 - m2) * s_twice(a, b, c) == -(a * (n1 - n2))),
        ],
    )


def _lm_binary(p: MPoly) -> MPoly:
    l1, l2, _, _ = MPoly.generators(LAMBDA_MU)
    return p.substitute({"z1": l1, "z2": l2})


def bc_matrix() -> _typing.Tuple[_typing.Tuple[MPoly, MPoly], _typing.Tuple[MPoly, MPoly]]:
    """Adjugate of the system expressing ``(M1, N1)`` through ``(m1, m2)``."""
    v = _icosa.VARIABLES
    return (
        (
            MPoly(v, {(7, 0): -1, (2, 5): 7}),
            MPoly(v, {(10, 3): 26, (5, 8): -39, (0, 13): -1}),
        ),
        (
            MPoly(v, {(5, 2): -7, (0, 7): -1}),
            MPoly(v, {(13, 0): 1, (8, 5): -39, (3, 10): -26}),
        ),
    )


def _bc_forms(nu: int) -> _typing.Tuple[MPoly, MPoly]:
    """``(b_ν, c_ν)`` from the row vector times the matrix."""
    z1, z2 = MPoly.generators(_icosa.VARIABLES)
    e = epsilon_power
    row = (z1 * e(4 * nu) - z2 * e(3 * nu), z1 * e(2 * nu) + z2 * e(nu))
    (a11, a12), (a21, a22) = bc_matrix()
    return row[0] * a11 + row[1] * a21, row[0] * a12 + row[1] * a22


def _rotated(p: MPoly, nu: int, phase: int) -> MPoly:
    z1, z2 = MPoly.generators(_icosa.VARIABLES)
    return p.substitute({"z1": z1 * epsilon_power(nu), "z2": z2}) * epsilon_power(phase)


def verify_bc_display() -> Certificate:
    """Certify the matrix form of the root formula.

    The matrix has determinant ``H``; for each ``ν`` the row vector times the
    matrix gives ``ε^ν B(ε^ν λ₁, λ₂)`` and ``ε^(3ν) C(ε^ν λ₁, λ₂)``, and
    ``y_ν·H1 = b_ν·M1 + c_ν·N1`` holds in ``(λ, μ)``.
    """
    (a11, a12), (a21, a22) = bc_matrix()
    cp = cube_polys()
    H = _icosa.build_invariants().H
    sd = _invariantmap.build_segre_data()
    forms = [_bc_forms(nu) for nu in range(5)]

    def roots_in_mn() -> bool:
        H1 = _lm_binary(H)
        for nu, (b, c) in enumerate(forms):
            if sd.y[nu] * H1 != _lm_binary(b) * sd.M1 + _lm_binary(c) * sd.N1:
                return False
        return True

    return Certificate.collect(
        "bc_display",
        [
            ("det_is_h", lambda: a11 * a22 - a12 * a21 == H),
            (
                "b_forms",
                lambda: all(b == _rotated(cp.B, nu, nu) for nu, (b, _) in enumerate(forms)),
            ),
            (
                "c_forms",
                lambda: all(c == _rotated(cp.C, nu, 3 * nu) for nu, (_, c) in enumerate(forms)),
            ),
            ("roots_in_mn", roots_in_mn),
        ],
    )


@_attrs.frozen
class Branch:
    """Which of the finitely many choices produced a root set.

    :param qsign: Sign of ``q`` in ``Z``.
    :param nabla_sign: Sign of ``∇`` in the linear forms.
    :param delta_power: ``k`` in the rotation ``z ↦ ε^k z``.
    :param z: The point on the sphere used.
    :param Z: The icosahedral invariant.
    """

    qsign: int
    nabla_sign: int
    delta_power: int = 0
    z: complex = 0j
    Z: complex = 0j

    @property
    def data(self) -> dict:
        return _attrs.asdict(self)


@_attrs.frozen
class RootSet:
    """Five roots ``y_0..y_4`` of a canonical quintic.

    :param roots: The roots in recovery order.
    :param residuals: Relative residual of each root.
    :param branch: Branch metadata; ``None`` for oracle roots.
    :param fallback: Whether the oracle produced the roots.
    """

    roots: _typing.Tuple[complex, ...] = _attrs.field(converter=tuple)
    residuals: _typing.Tuple[float, ...] = _attrs.field(converter=tuple)
    branch: _typing.Optional[Branch] = None
    fallback: bool = False

    @property
    def max_residual(self) -> float:
        return max(self.residuals)


@_functools.lru_cache(maxsize=None)
def _dense_factors() -> _typing.Dict[str, _np.ndarray]:
    inv = _icosa.build_invariants()
    cp = cube_polys()
    return {
        "f": _icosa.dense_form(inv.f),
        "T": _icosa.dense_form(inv.T),
        "Q": _icosa.dense_form(cp.Q),
        "D": _icosa.dense_form(cp.Dcube),
    }


def recover_roots(
    a: complex,
    b: complex,
    c: complex,
    nabla_value: complex,
    z: complex,
    qsign: int = 1,
    options: SolveOptions = SolveOptions(),
    *,
    nabla_sign: int = 1,
    delta_power: int = 0,
    Z: complex = 0j,
) -> RootSet:
    """Assemble ``y_0..y_4`` from a point ``z`` with ``I(z) = Z``.

    :param nabla_value: The square root of the discriminant entering the
        linear forms.
    :raises DegenerateConfiguration: If ``f1f2``, ``T1T2``, ``f(w)`` or
        ``Q(w)`` vanishes relative to its scale.
    """
    rho = weighted_scale(a, b, c)
    tol = options.degeneracy
    F, _, TT = (complex(v) for v in _invariantmap.resolvent_products(a, b, c))
    if abs(F) <= tol * rho**12:
        raise DegenerateConfiguration(f"f1f2 = {F} vanishes")
    if abs(TT) <= tol * rho**30:
        raise DegenerateConfiguration(f"T1T2 = {TT} vanishes")
    m, n = (complex(v) for v in linear_form_values(a, b, c, nabla_value))
    dense = _dense_factors()
    coeffs = CanonicalQuintic(a, b, c).coefficients
    base = _icosa.ExtComplex.of(z)
    roots = []
    for nu in range(5):
        w1, w2 = base.projective()
        w1 = w1 * complex(epsilon_power(nu))
        fv = _icosa.form_value(dense["f"], w1, w2)
        qv = _icosa.form_value(dense["Q"], w1, w2)
        if abs(fv) <= tol or abs(qv) <= tol:
            raise DegenerateConfiguration(f"z = {z} is too close to a vertex or face centre")
        tv = _icosa.form_value(dense["T"], w1, w2)
        dv = _icosa.form_value(dense["D"], w1, w2)
        roots.append(fv / qv * m / F + dv * tv / (qv * fv * fv) * n / TT)
    residuals = [relative_residual(coeffs, y) for y in roots]
    return RootSet(roots, residuals, Branch(qsign, nabla_sign, delta_power, complex(z), complex(Z)))


def oracle_roots(
    coefficients: _typing.Sequence[complex], options: SolveOptions = SolveOptions()
) -> _np.ndarray:
    """Roots from companion-matrix eigenvalues refined by simultaneous
    iteration, sorted by real then imaginary part.

    :param coefficients: Highest degree first; the leading one nonzero.
    """
    c = _np.asarray(coefficients, dtype=complex)
    if c[0] == 0:
        raise ValueError("Leading coefficient must be nonzero")
    seeds = _np.roots(c)
    # Distinct seeds keep the iteration well defined at multiple roots.
    seeds = seeds + 1e-9 * (1 + _np.abs(seeds)) * _np.exp(1j * _np.arange(len(seeds)))
    return _aberth(c, init=seeds, max_iter=options.aberth_max_iter, seed=options.seed)


def match_roots(
    a: _typing.Sequence[complex], b: _typing.Sequence[complex]
) -> _typing.Tuple[_np.ndarray, float]:
    """Reorder ``b`` to match ``a`` with minimal total distance.

    :return: The reordered ``b`` and the largest matched distance.
    """
    a = _np.asarray(a, dtype=complex)
    b = _np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"Cannot match {len(a)} roots with {len(b)}")
    cost = _np.abs(a[:, None] - b[None, :])
    rows, cols = _optimize.linear_sum_assignment(cost)
    matched = b[cols[_np.argsort(rows)]]
    return matched, float(_np.max(_np.abs(a - matched), initial=0.0))


def _oracle_root_set(c: CanonicalQuintic, options: SolveOptions) -> RootSet:
    roots = oracle_roots(c.coefficients, options)
    return RootSet(roots, [relative_residual(c.coefficients, y) for y in roots], None, True)


def _candidates(
    c: CanonicalQuintic,
    nab: complex,
    zs: _typing.Mapping[int, _typing.Sequence[complex]],
    Zs: _typing.Mapping[int, complex],
    options: SolveOptions,
    rotate: bool,
) -> _typing.List[RootSet]:
    found = []
    for nsign, qsign in _BRANCH_ORDER:
        if qsign not in zs:
            continue
        for z0 in zs[qsign]:
            for k in range(5 if rotate else 1):
                z = z0 * complex(epsilon_power(k))
                try:
                    rs = recover_roots(
                        c.alpha, c.beta, c.gamma, nsign * nab, z, qsign, options,
                        nabla_sign=nsign, delta_power=k, Z=Zs[qsign],
                    )
                except DegenerateConfiguration:
                    continue
                _logger.debug(
                    "Branch q%+d ∇%+d δ=%d z=%s: max residual %.3g",
                    qsign, nsign, k, z, rs.max_residual,
                )
                found.append(rs)
    return found


def solve_canonical(c: CanonicalQuintic, options: SolveOptions = SolveOptions()) -> RootSet:
    """Solve ``y⁵ + 5αy² + 5βy + γ`` by icosahedral inversion.

    Every sign pairing of ``q`` and ``∇`` is tried at the principal inverse
    and its rotations; if none meets ``options.tolerance`` the remaining
    roots of the degree 60 equation are tried, then the oracle.

    :raises RepeatedRoots: If all coefficients or the discriminant vanish.
    :raises DegenerateConfiguration: On a degenerate configuration when
        ``options.allow_fallback`` is off.
    """
    if c.alpha == 0 and c.beta == 0 and c.gamma == 0:
        raise RepeatedRoots("repeated roots: y⁵ = 0")
    rho = c.scale
    D = c.discriminant
    if abs(D) <= options.degeneracy * rho**20:
        raise RepeatedRoots(f"repeated roots: discriminant {D} vanishes")
    nab = nabla(D)
    try:
        Zs = {
            qsign: complex(
                _invariantmap.icosahedral_invariants(c.alpha, c.beta, c.gamma, nab, qsign, options)[0]
            )
            for qsign in (1, -1)
        }
        zs = {qsign: [invert_icosahedral(Z, options)] for qsign, Z in Zs.items()}
    except DegenerateInput as exc:
        if not options.allow_fallback:
            raise
        _logger.warning("Falling back to the oracle: %s", exc)
        return _oracle_root_set(c, options)

    found = _candidates(c, nab, zs, Zs, options, rotate=True)
    best = min(found, key=lambda rs: rs.max_residual, default=None)
    if best is None or best.max_residual > options.tolerance:
        more = {q: list(icos_equation_roots(Z, options)) for q, Z in Zs.items()}
        found += _candidates(c, nab, more, Zs, options, rotate=False)
        best = min(found, key=lambda rs: rs.max_residual, default=None)
    if best is not None and best.max_residual <= options.tolerance:
        return best
    if not options.allow_fallback:
        raise NoConvergence(f"No branch meets tolerance {options.tolerance} for {c}")
    _logger.warning("No branch meets tolerance %g for %s; using the oracle", options.tolerance, c)
    return _oracle_root_set(c, options)
