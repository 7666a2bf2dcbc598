"""Icosahedral invariants of a canonical quintic.

The root vector of ``y⁵ + 5αy² + 5βy + γ`` lies on the quadric
``Σy = Σy² = 0``, which is identified with a product of two lines through

    p1 = 5 l1 m1,  p2 = −5 l2 m1,  p3 = 5 l1 m2,  p4 = 5 l2 m2,

where ``p_k = Σ_j ε^(kj) y_j``. The icosahedral invariants of the two
rulings are closed-form expressions in ``α, β, γ`` and a square root ``∇``
of the discriminant. The formulas are written once, generically, so that
they evaluate on complex numbers, exact rationals and polynomials alike.
"""

import fractions as _fractions
import functools as _functools
import typing as _typing

import attrs as _attrs

from . import icosa as _icosa
from .contracts import Certificate, SolveOptions
from .errors import DegenerateConfiguration, InternalMismatch, RepeatedRoots
from .exactfield import epsilon_power
from .polyalg import MPoly
from .quintic import discriminant_value, weighted_scale

LAMBDA_MU = ("l1", "l2", "m1", "m2")
ABC = ("alpha", "beta", "gamma")

Number = _typing.Any


def _exact(x: Number) -> Number:
    return _fractions.Fraction(x) if isinstance(x, int) else x


def f1f2_display(a: Number, b: Number, c: Number) -> Number:
    return a**4 - b**3 + a * b * c


def h1h2_display(a: Number, b: Number, c: Number) -> Number:
    return (
        c**4
        + 40 * a**2 * b * c**2
        - 192 * a**5 * c
        - 120 * a * b**3 * c
        + 640 * a**4 * b**2
        - 144 * b**5
    )


def t1t2_display(a: Number, b: Number, c: Number) -> Number:
    return (
        c**6
        + 60 * a**2 * b * c**4
        + 576 * a**5 * c**3
        - 180 * a * b**3 * c**3
        + 648 * b**5 * c**2
        - 2760 * a**4 * b**2 * c**2
        + 7200 * a**7 * b * c
        - 1728 * a**10
        + 9360 * a**3 * b**4 * c
        - 2080 * a**6 * b**3
        - 16200 * a**2 * b**6
    )


def p_display(a: Number, b: Number, c: Number) -> Number:
    """``p = (1728 (f1f2)⁵ + (H1H2)³/1728 − (T1T2)²/1728) / 2``."""
    a, b, c = _exact(a), _exact(b), _exact(c)
    F = f1f2_display(a, b, c)
    H = h1h2_display(a, b, c)
    T = t1t2_display(a, b, c)
    return (1728 * F**5 + H**3 / 1728 - T**2 / 1728) / 2


def q_factors(a: Number, b: Number, c: Number) -> _typing.Tuple[Number, Number]:
    """The two factors whose product is ``2q``."""
    u = (
        -8 * a**5 * c
        - 40 * a**4 * b**2
        + 10 * a**2 * b * c**2
        + 45 * a * b**3 * c
        - 81 * b**5
        - c**4
    )
    v = (
        64 * a**10
        + 40 * a**7 * b * c
        - 160 * a**6 * b**3
        + a**5 * c**3
        - 5 * a**4 * b**2 * c**2
        + 5 * a**3 * b**4 * c
        - 25 * a**2 * b**6
        - b**5 * c**2
    )
    return u, v


def q_display(a: Number, b: Number, c: Number, qsign: int = 1) -> Number:
    a, b, c = _exact(a), _exact(b), _exact(c)
    u, v = q_factors(a, b, c)
    return qsign * u * v / 2


@_attrs.frozen
class ResolventValues:
    """Symmetric functions of a canonical quintic entering its invariants.

    :param f1f2: ``f(λ)·f(μ)``.
    :param h1h2: ``H(λ)·H(μ)``.
    :param t1t2: ``T(λ)·T(μ)``.
    :param p: Symmetric part of ``H(λ)³ f(μ)⁵``.
    :param q: Antisymmetric part divided by ``∇``, with sign ``qsign``.
    :param D: The discriminant ``∇²``.
    :param qsign: Sign choice of ``q``.
    """

    f1f2: Number
    h1h2: Number
    t1t2: Number
    p: Number
    q: Number
    D: Number
    qsign: int = 1


def resolvent_products(a: Number, b: Number, c: Number) -> _typing.Tuple[Number, Number, Number]:
    """``(f1f2, H1H2, T1T2)`` as polynomials in ``α, β, γ``."""
    return f1f2_display(a, b, c), h1h2_display(a, b, c), t1t2_display(a, b, c)


def p_q_values(
    a: Number, b: Number, c: Number
) -> _typing.Tuple[Number, _typing.Tuple[Number, Number]]:
    """``p`` and ``q`` for both signs, ``(q₊, q₋)``."""
    q = q_display(a, b, c)
    return p_display(a, b, c), (q, -q)


def resolvent_values(a: Number, b: Number, c: Number, qsign: int = 1) -> ResolventValues:
    F, H, T = resolvent_products(a, b, c)
    return ResolventValues(
        F, H, T, p_display(a, b, c), q_display(a, b, c, qsign), discriminant_value(a, b, c), qsign
    )


def icosahedral_invariants(
    a: Number,
    b: Number,
    c: Number,
    nabla: Number,
    qsign: int = 1,
    options: SolveOptions = SolveOptions(),
) -> _typing.Tuple[Number, Number]:
    """The invariants ``Z₁,₂ = (p ± ∇q) / (1728 (f1f2)⁵)``.

    Exact inputs give exact outputs.

    :param nabla: A square root of the discriminant.
    :param qsign: Which sign of ``q`` is paired with ``Z₁``; swapping it
        swaps the outputs.
    :raises DegenerateConfiguration: If ``f1f2`` vanishes relative to the
        coefficient scale.
    :raises RepeatedRoots: If the discriminant vanishes likewise.
    """
    values = resolvent_values(a, b, c, qsign)
    rho = weighted_scale(a, b, c)
    if abs(complex(values.f1f2)) <= options.degeneracy * rho**12:
        raise DegenerateConfiguration(f"f1f2 = {values.f1f2} vanishes for {(a, b, c)}")
    if abs(complex(values.D)) <= options.degeneracy * rho**20:
        raise RepeatedRoots(f"repeated roots: discriminant {values.D} vanishes for {(a, b, c)}")
    denom = 1728 * values.f1f2**5
    nabla = _exact(nabla)
    return (values.p + nabla * values.q) / denom, (values.p - nabla * values.q) / denom


def _lm(terms: _typing.Dict[_typing.Tuple[int, int, int, int], int]) -> MPoly:
    return MPoly(LAMBDA_MU, terms)


ALPHA_DISPLAY = _lm({(3, 0, 2, 1): -1, (2, 1, 0, 3): -1, (1, 2, 3, 0): -1, (0, 3, 1, 2): 1})
BETA_DISPLAY = _lm(
    {(4, 0, 1, 3): -1, (3, 1, 4, 0): 1, (2, 2, 2, 2): 3, (1, 3, 0, 4): -1, (0, 4, 3, 1): 1}
)
GAMMA_DISPLAY = _lm(
    {
        (5, 0, 5, 0): -1,
        (5, 0, 0, 5): -1,
        (4, 1, 3, 2): 10,
        (3, 2, 1, 4): -10,
        (2, 3, 4, 1): -10,
        (1, 4, 2, 3): -10,
        (0, 5, 5, 0): 1,
        (0, 5, 0, 5): -1,
    }
)
N1_DISPLAY = _lm({(5, 2, 1, 0): 7, (0, 7, 1, 0): 1, (7, 0, 0, 1): -1, (2, 5, 0, 1): 7})
M1_DISPLAY = _lm(
    {
        (13, 0, 1, 0): 1,
        (8, 5, 1, 0): -39,
        (3, 10, 1, 0): -26,
        (10, 3, 0, 1): -26,
        (5, 8, 0, 1): 39,
        (0, 13, 0, 1): 1,
    }
)


@_attrs.frozen
class SegreData:
    """Polynomials in ``(l1, l2, m1, m2)`` describing the root quadric.

    :param p: ``p1..p4`` of the identification.
    :param y: The roots ``y0..y4`` as bilinear forms.
    :param alpha: ``α`` in terms of the rulings.
    :param beta: ``β`` in terms of the rulings.
    :param gamma: ``γ`` in terms of the rulings.
    :param f1: ``f(l1, l2)``; likewise ``H1``, ``T1``.
    :param f2: ``f(m1, m2)``; likewise ``H2``, ``T2``.
    :param M1: Invariant form of degree 13 in ``l``, linear in ``m``.
    :param N1: Invariant form of degree 7 in ``l``, linear in ``m``.
    """

    p: _typing.Tuple[MPoly, ...]
    y: _typing.Tuple[MPoly, ...]
    alpha: MPoly
    beta: MPoly
    gamma: MPoly
    f1: MPoly
    f2: MPoly
    H1: MPoly
    H2: MPoly
    T1: MPoly
    T2: MPoly
    M1: MPoly
    N1: MPoly


def r_action(poly: MPoly) -> MPoly:
    """The odd permutation ``(1243)``: ``l1 ↦ m2, l2 ↦ −m1, m1 ↦ l1, m2 ↦ l2``."""
    l1, l2, m1, m2 = MPoly.generators(LAMBDA_MU)
    return poly.substitute({"l1": m2, "l2": -m1, "m1": l1, "m2": l2})


def matrix_action(poly: MPoly, matrix: "_icosa.Matrix2") -> MPoly:
    """Act by ``matrix`` on ``(l1, l2)`` and by its ``ε ↦ ε²`` conjugate on
    ``(m1, m2)``."""
    l1, l2, m1, m2 = MPoly.generators(LAMBDA_MU)
    (a, b), (c, d) = matrix
    (ca, cb), (cc, cd) = _icosa.conjugate_matrix(matrix, 2)
    return poly.substitute(
        {
            "l1": l1 * a + l2 * b,
            "l2": l1 * c + l2 * d,
            "m1": m1 * ca + m2 * cb,
            "m2": m1 * cc + m2 * cd,
        }
    )


def _on_pair(p: MPoly, pair: _typing.Tuple[str, str]) -> MPoly:
    gens = dict(zip(LAMBDA_MU, MPoly.generators(LAMBDA_MU)))
    return p.substitute({"z1": gens[pair[0]], "z2": gens[pair[1]]})


@_functools.lru_cache(maxsize=None)
def build_segre_data() -> SegreData:
    """Construct the bilinear root forms and derive ``α, β, γ`` from their
    power sums.

    :raises InternalMismatch: If the derived ``α, β, γ`` differ from the
        transcribed forms.
    """
    l1, l2, m1, m2 = MPoly.generators(LAMBDA_MU)
    p = (l1 * m1 * 5, l2 * m1 * -5, l1 * m2 * 5, l2 * m2 * 5)
    y = tuple(
        sum((p[k - 1] * epsilon_power(-k * j) for k in range(1, 5)), MPoly(LAMBDA_MU)) / 5
        for j in range(5)
    )
    sums = {m: sum((yj**m for yj in y), MPoly(LAMBDA_MU)) for m in (3, 4, 5)}
    alpha, beta, gamma = -sums[3] / 15, -sums[4] / 20, -sums[5] / 5
    for name, derived, shown in (
        ("alpha", alpha, ALPHA_DISPLAY),
        ("beta", beta, BETA_DISPLAY),
        ("gamma", gamma, GAMMA_DISPLAY),
    ):
        if derived != shown:
            raise InternalMismatch(f"{name} from power sums is {derived}")
    inv = _icosa.build_invariants()
    lam, mu = ("l1", "l2"), ("m1", "m2")
    return SegreData(
        p=p,
        y=y,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        f1=_on_pair(inv.f, lam),
        f2=_on_pair(inv.f, mu),
        H1=_on_pair(inv.H, lam),
        H2=_on_pair(inv.H, mu),
        T1=_on_pair(inv.T, lam),
        T2=_on_pair(inv.T, mu),
        M1=M1_DISPLAY,
        N1=N1_DISPLAY,
    )


def _iterate(fn: _typing.Callable[[MPoly], MPoly], poly: MPoly, n: int) -> MPoly:
    for _ in range(n):
        poly = fn(poly)
    return poly


def verify_product_identities() -> Certificate:
    """Certify ``f1f2``, ``H1H2`` and ``T1T2`` as polynomials in ``α, β, γ``
    and the behaviour of the odd action ``R``."""
    sd = build_segre_data()
    a, b, c = sd.alpha, sd.beta, sd.gamma
    gens = MPoly.generators(LAMBDA_MU)
    return Certificate.collect(
        "products",
        [
            ("quadric_linear", lambda: not sum(sd.y, MPoly(LAMBDA_MU))),
            ("quadric_square", lambda: not sum((v * v for v in sd.y), MPoly(LAMBDA_MU))),
            ("f1f2", lambda: sd.f1 * sd.f2 == f1f2_display(a, b, c)),
            ("h1h2", lambda: sd.H1 * sd.H2 == h1h2_display(a, b, c)),
            ("t1t2", lambda: sd.T1 * sd.T2 == t1t2_display(a, b, c)),
            ("r_fixes_abc", lambda: all(r_action(v) == v for v in (a, b, c))),
            ("r_swaps_f", lambda: r_action(sd.f1) == sd.f2 and r_action(sd.f2) == sd.f1),
            ("r_swaps_h", lambda: r_action(sd.H1) == sd.H2 and r_action(sd.H2) == sd.H1),
            ("r_swaps_t", lambda: r_action(sd.T1) == sd.T2 and r_action(sd.T2) == sd.T1),
            ("r_fourth_negates", lambda: all(_iterate(r_action, g, 4) == -g for g in gens)),
            ("r_order_four", lambda: all(_iterate(r_action, v, 4) == v for v in sd.p + sd.y)),
            ("r_squared_nontrivial", lambda: any(_iterate(r_action, g, 2) != g for g in gens)),
        ],
    )


def verify_pq_identity() -> Certificate:
    """Certify ``p² − D·q² = (H1H2)³ (f1f2)⁵`` in ``α, β, γ``."""

    def identity() -> bool:
        a, b, c = MPoly.generators(ABC)
        F, H, _ = resolvent_products(a, b, c)
        p = p_display(a, b, c)
        q = q_display(a, b, c)
        D = discriminant_value(a, b, c)
        return p * p - D * q * q == H**3 * F**5

    return Certificate.collect("pq", [("p2_minus_dq2", identity)])


def _permuted_p(y: _typing.Sequence[MPoly], sigma: _typing.Callable[[int], int], k: int) -> MPoly:
    return sum((y[sigma(j)] * epsilon_power(k * j) for j in range(5)), MPoly(LAMBDA_MU))


_T_INDEX = {0: 0, 1: 2, 2: 1, 3: 4, 4: 3}


def verify_equivariance() -> Certificate:
    """Certify that the generators act on the rulings as the permutations
    ``(12345)``, ``(12)(34)`` and ``(1243)`` act on root indices."""
    sd = build_segre_data()
    gens = _icosa.generators()

    def equivariant(act: _typing.Callable[[MPoly], MPoly], sigma: _typing.Callable[[int], int]) -> bool:
        return all(act(sd.p[k - 1]) == _permuted_p(sd.y, sigma, k) for k in range(1, 5))

    return Certificate.collect(
        "equivariance",
        [
            (
                "s_action",
                lambda: equivariant(lambda q: matrix_action(q, gens.S_matrix), lambda j: (j + 1) % 5),
            ),
            (
                "t_action",
                lambda: equivariant(lambda q: matrix_action(q, gens.T_matrix), _T_INDEX.__getitem__),
            ),
            ("r_action", lambda: equivariant(r_action, lambda j: (2 * j) % 5)),
            ("quadric", lambda: not (sd.p[0] * sd.p[3] + sd.p[1] * sd.p[2])),
        ],
    )


def segre_coordinates(roots: _typing.Sequence[complex]) -> _typing.Tuple[complex, ...]:
    """Numeric ``p1..p4`` of an ordered root vector."""
    eps = [complex(epsilon_power(k)) for k in range(5)]
    return tuple(sum(eps[(k * j) % 5] * roots[j] for j in range(5)) for k in range(1, 5))
