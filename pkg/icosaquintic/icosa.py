"""The icosahedron on the Riemann sphere.

Vertices, the rotation group generators in matrix and permutation form, the
invariant forms ``f``, ``H``, ``T`` in ``(z1, z2)`` and the degree 60 quotient
map ``I = H³ / (1728 f⁵)``.

.. note::
    ``H`` and ``T`` are computed from ``f`` with the Hessian and Jacobian and
    then compared with their known coefficient lists, so a mistake in either
    raises :class:`~icosaquintic.errors.InternalMismatch` at first use.
"""

import cmath as _cmath
import functools as _functools
import itertools as _itertools
import math as _math
import typing as _typing

import attrs as _attrs
import numpy as _np

from .contracts import Certificate
from .errors import InternalMismatch, NotOnSphere
from .exactfield import EPSILON, ONE, SQRT5, ZERO, CycQ, embed_complex, epsilon_power
from .polyalg import MPoly, hessian_det, jacobian_det

VARIABLES = ("z1", "z2")

EDGE_MIDPOINT_T = _math.sqrt((5 + _math.sqrt(5)) / 2) - (1 + _math.sqrt(5)) / 2
"""A real edge midpoint, ``I(t) = 1``."""

Matrix2 = _typing.Tuple[_typing.Tuple[CycQ, CycQ], _typing.Tuple[CycQ, CycQ]]
Permutation = _typing.Tuple[int, ...]


def _binary(terms: _typing.Dict[_typing.Tuple[int, int], int]) -> MPoly:
    return MPoly(VARIABLES, terms)


F_DISPLAY = _binary({(11, 1): 1, (6, 6): 11, (1, 11): -1})
H_DISPLAY = _binary(
    {(20, 0): -1, (0, 20): -1, (15, 5): 228, (5, 15): -228, (10, 10): -494}
)
T_DISPLAY = _binary(
    {
        (30, 0): 1,
        (0, 30): 1,
        (25, 5): 522,
        (5, 25): -522,
        (20, 10): -10005,
        (10, 20): -10005,
    }
)


@_attrs.frozen
class IcosInvariants:
    """The fundamental invariant forms of the icosahedral group.

    :param f: Degree 12 form vanishing at the vertices.
    :param H: Degree 20 form vanishing at the face centres.
    :param T: Degree 30 form vanishing at the edge midpoints.
    """

    f: MPoly
    """Degree 12 form vanishing at the vertices."""
    H: MPoly
    """Degree 20 form vanishing at the face centres."""
    T: MPoly
    """Degree 30 form vanishing at the edge midpoints."""


@_functools.lru_cache(maxsize=None)
def build_invariants() -> IcosInvariants:
    """Construct ``f`` and derive ``H = Hes(f)/121`` and ``T = Jac(f, H)/20``.

    :raises InternalMismatch: If a derived form differs from its known
        coefficients.
    """
    f = F_DISPLAY
    H = hessian_det(f, *VARIABLES) / 121
    if H != H_DISPLAY:
        raise InternalMismatch(f"Hessian of f gives {H}")
    T = jacobian_det(f, H, *VARIABLES) / 20
    if T != T_DISPLAY:
        raise InternalMismatch(f"Jacobian of f and H gives {T}")
    return IcosInvariants(f, H, T)


def _rotate(p: MPoly, k: int = 1) -> MPoly:
    """Substitute ``z1 ↦ ε^k z1``."""
    z1, z2 = MPoly.generators(VARIABLES)
    return p.substitute({"z1": z1 * epsilon_power(k), "z2": z2})


def verify_syzygy() -> Certificate:
    """Certify ``H³ + T² = 1728 f⁵`` and the rotation weights of the forms."""
    inv = build_invariants()
    f, H, T = inv.f, inv.H, inv.T
    return Certificate.collect(
        "syzygy",
        [
            ("h_is_hessian", lambda: hessian_det(f, *VARIABLES) == H * 121),
            ("t_is_jacobian", lambda: jacobian_det(f, H, *VARIABLES) == T * 20),
            ("syzygy", lambda: not (H**3 + T**2 - f**5 * 1728)),
            ("f_weight_one", lambda: _rotate(f) == f * EPSILON),
            ("h_rotation_invariant", lambda: _rotate(H) == H),
            ("t_rotation_invariant", lambda: _rotate(T) == T),
            (
                "spot_values",
                lambda: (f.at([1, 1]), H.at([1, 1]), T.at([1, 1]))
                == (11, -496, -20008),
            ),
        ],
    )


@_attrs.frozen
class ExtComplex:
    """A point of the Riemann sphere.

    :param value: The finite value; ignored when ``infinite`` is set.
    :param infinite: Whether the point is ``∞``.
    """

    value: complex = _attrs.field(default=0j, converter=complex)
    """The finite value."""
    infinite: bool = False
    """Whether the point is ``∞``."""

    @classmethod
    def of(cls, z: _typing.Union[complex, float, "ExtComplex"]) -> "ExtComplex":
        if isinstance(z, ExtComplex):
            return z
        z = complex(z)
        if _cmath.isinf(z):
            return INFINITY
        return cls(z)

    def __complex__(self) -> complex:
        return complex("inf") if self.infinite else self.value

    def projective(self) -> _typing.Tuple[complex, complex]:
        """Homogeneous coordinates with the larger entry equal to 1."""
        if self.infinite:
            return (1 + 0j, 0j)
        if abs(self.value) <= 1:
            return (self.value, 1 + 0j)
        return (1 + 0j, 1 / self.value)


INFINITY = ExtComplex(0j, True)


@_functools.lru_cache(maxsize=None)
def dense_form(p: MPoly) -> _np.ndarray:
    """Complex coefficients of a binary form, highest power of ``z1`` first."""
    return _np.array([embed_complex(c) for c in p.binary_coefficients()], dtype=complex)


def form_value(coeffs: _np.ndarray, z1: complex, z2: complex) -> complex:
    """Evaluate a binary form given by :func:`dense_form` at ``(z1, z2)``.

    The larger coordinate is factored out so that no power overflows.
    """
    d = len(coeffs) - 1
    if abs(z1) <= abs(z2):
        if z2 == 0:
            return 0j
        return z2**d * complex(_np.polyval(coeffs, z1 / z2))
    return z1**d * complex(_np.polyval(coeffs[::-1], z2 / z1))


def icos_value(z1: complex, z2: complex = 1) -> complex:
    """``H³ / (1728 f⁵)`` at a homogeneous point; ``inf`` at vertices."""
    inv = build_invariants()
    scale = max(abs(z1), abs(z2))
    z1, z2 = z1 / scale, z2 / scale
    fv = form_value(dense_form(inv.f), z1, z2)
    if fv == 0:
        return complex("inf")
    hv = form_value(dense_form(inv.H), z1, z2)
    return hv**3 / (1728 * fv**5)


def icos_I(z: _typing.Union[complex, float, ExtComplex]) -> ExtComplex:
    """The icosahedral quotient map ``I(z) = H(z,1)³ / (1728 f(z,1)⁵)``.

    :param z: A point of the sphere; plain numbers are finite points.
    :return: ``∞`` at the twelve vertices.
    """
    return ExtComplex.of(icos_value(*ExtComplex.of(z).projective()))


def stereographic(point: _typing.Sequence[float]) -> ExtComplex:
    """Project a unit vector from the north pole, ``(x, y, z) ↦ (x + iy)/(1 − z)``.

    :raises NotOnSphere: If ``|point|`` differs from 1 by more than ``1e-9``.
    """
    x, y, z = (float(v) for v in point)
    if abs(_math.sqrt(x * x + y * y + z * z) - 1) > 1e-9:
        raise NotOnSphere(f"Point {point} is not on the unit sphere")
    if abs(1 - z) <= 1e-12 and abs(x) <= 1e-12 and abs(y) <= 1e-12:
        return INFINITY
    return ExtComplex(complex(x, y) / (1 - z))


def _mat_mul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_pow(a: Matrix2, n: int) -> Matrix2:
    result: Matrix2 = ((ONE, ZERO), (ZERO, ONE))
    for _ in range(n):
        result = _mat_mul(result, a)
    return result


def det(a: Matrix2) -> CycQ:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def conjugate_matrix(a: Matrix2, k: int) -> Matrix2:
    """Apply ``ε ↦ ε^k`` to every entry."""
    return tuple(tuple(x.galois(k) for x in row) for row in a)  # type: ignore


def mobius(a: Matrix2, z: _typing.Union[complex, ExtComplex]) -> ExtComplex:
    """The Möbius action ``z ↦ (a z + b)/(c z + d)``."""
    (p, q), (r, s) = [[embed_complex(x) for x in row] for row in a]
    z1, z2 = ExtComplex.of(z).projective()
    w1, w2 = p * z1 + q * z2, r * z1 + s * z2
    if w2 == 0:
        return INFINITY
    return ExtComplex(w1 / w2)


def cycles_to_perm(*cycles: _typing.Sequence[int]) -> Permutation:
    """A permutation of ``{1..5}`` from disjoint cycles, as its image tuple."""
    image = list(range(1, 6))
    for cycle in cycles:
        for i, x in enumerate(cycle):
            image[x - 1] = cycle[(i + 1) % len(cycle)]
    return tuple(image)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p ∘ q``: apply ``q`` first."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def perm_order(p: Permutation) -> int:
    identity = tuple(range(1, len(p) + 1))
    q, n = p, 1
    while q != identity:
        q, n = compose(p, q), n + 1
    return n


def closure(generators: _typing.Iterable[Permutation]) -> _typing.FrozenSet[Permutation]:
    """The group generated by a set of permutations."""
    gens = list(generators)
    identity = tuple(range(1, len(gens[0]) + 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g, s in _itertools.product(frontier, gens):
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                nxt.append(h)
        frontier = nxt
    return frozenset(seen)


@_attrs.frozen
class GroupGenerators:
    """Generators of the icosahedral rotation group.

    :param S_matrix: Order 5 rotation ``diag(ε³, ε²)``.
    :param T_matrix: Order 2 rotation, ``T² = −I`` in SL(2).
    :param S_perm: Action of ``S`` on the five inscribed tetrahedra.
    :param T_perm: Action of ``T`` on the five inscribed tetrahedra.
    """

    S_matrix: Matrix2
    T_matrix: Matrix2
    S_perm: Permutation
    T_perm: Permutation


@_functools.lru_cache(maxsize=None)
def generators() -> GroupGenerators:
    e1, e2, e3, e4 = (epsilon_power(k) for k in range(1, 5))
    s = ((e3, ZERO), (ZERO, e2))
    inv_sqrt5 = SQRT5.inverse()
    t = (
        (-(e1 - e4) * inv_sqrt5, (e2 - e3) * inv_sqrt5),
        ((e2 - e3) * inv_sqrt5, (e1 - e4) * inv_sqrt5),
    )
    return GroupGenerators(s, t, cycles_to_perm((1, 2, 3, 4, 5)), cycles_to_perm((1, 2), (3, 4)))


def group_checks() -> Certificate:
    """Certify the generator relations and the order of the permutation group."""
    g = generators()
    identity: Matrix2 = ((ONE, ZERO), (ZERO, ONE))
    minus: Matrix2 = ((-ONE, ZERO), (ZERO, -ONE))
    e1, e2, e3, e4 = (epsilon_power(k) for k in range(1, 5))
    st3 = mat_pow(_mat_mul(g.S_matrix, g.T_matrix), 3)
    return Certificate.collect(
        "group",
        [
            ("sqrt5_squared", lambda: SQRT5 * SQRT5 == 5),
            ("minimal_polynomial", lambda: ONE + e1 + e2 + e3 + e4 == 0),
            (
                "minus_one_sum_of_squares",
                lambda: ((e1 - e4) / SQRT5) ** 2 + ((e2 - e3) / SQRT5) ** 2 == -1,
            ),
            ("s_fifth_power", lambda: mat_pow(g.S_matrix, 5) == identity),
            ("t_squared", lambda: mat_pow(g.T_matrix, 2) == minus),
            ("det_s", lambda: det(g.S_matrix) == 1),
            ("det_t", lambda: det(g.T_matrix) == 1),
            ("st_cubed", lambda: st3 in (identity, minus)),
            ("group_order", lambda: len(closure([g.S_perm, g.T_perm])) == 60),
            ("st_perm_order", lambda: perm_order(compose(g.S_perm, g.T_perm)) == 3),
        ],
    )


@_attrs.frozen
class VertexSet:
    """The twelve icosahedron vertices.

    :param exact: The eleven finite vertices as field elements, ``0`` first.
    :param points: All twelve vertices, ``∞`` last.
    """

    exact: _typing.Tuple[CycQ, ...]
    points: _typing.Tuple[ExtComplex, ...]


@_functools.lru_cache(maxsize=None)
def vertices() -> VertexSet:
    exact = [ZERO]
    for nu in range(5):
        rot = epsilon_power(nu)
        exact.append(rot * (epsilon_power(1) + epsilon_power(4)))
        exact.append(rot * (epsilon_power(2) + epsilon_power(3)))
    points = tuple(ExtComplex(embed_complex(v)) for v in exact) + (INFINITY,)
    return VertexSet(tuple(exact), points)


def verify_vertices() -> Certificate:
    """Certify that ``f(z, 1)`` vanishes exactly at the finite vertices."""
    f = build_invariants().f
    vs = vertices()
    return Certificate.collect(
        "vertices",
        [
            ("f_vanishes", lambda: all(not f.at([v, 1]) for v in vs.exact)),
            ("f_vanishes_at_infinity", lambda: not f.at([1, 0])),
            ("distinct", lambda: len(set(vs.exact)) == 11),
            ("degree_eleven", lambda: f.degree_in(["z1"]) == 11),
        ],
    )
