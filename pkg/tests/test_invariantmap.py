import cmath
from fractions import Fraction

import pytest

from icosaquintic import invariantmap, quintic
from icosaquintic.errors import DegenerateConfiguration, RepeatedRoots
from icosaquintic.icosa import icos_value
from icosaquintic.polyalg import MPoly


def test_resolvent_products_at_integers():
    assert invariantmap.resolvent_products(0, 1, 0) == (-1, -144, 0)
    assert invariantmap.resolvent_products(1, 0, 1) == (1, -191, -1151)


def test_p_and_q():
    p, (q_plus, q_minus) = invariantmap.p_q_values(1, 0, 1)
    assert p == Fraction(-3071, 2)
    assert q_plus == Fraction(-585, 2)
    assert q_minus == -q_plus
    assert invariantmap.q_display(1, 0, 1, qsign=-1) == q_minus


def test_pq_identity_at_a_point():
    a, b, c = 1, 0, 1
    values = invariantmap.resolvent_values(a, b, c)
    assert values.D == 109
    assert values.p**2 - values.D * values.q**2 == values.h1h2**3 * values.f1f2**5


def test_exact_invariants_of_pure_linear_quintic():
    z1, z2 = invariantmap.icosahedral_invariants(0, 1, 0, 16)
    assert z1 == 1
    assert z2 == 1


def test_numeric_invariants():
    root = cmath.sqrt(109)
    z1, z2 = invariantmap.icosahedral_invariants(1, 0, 1, root)
    assert z1 + z2 == pytest.approx(-3071 / 1728)
    assert z1 == pytest.approx(-2.6558398, abs=1e-6)
    assert z2 == pytest.approx(0.8786398, abs=1e-6)
    assert z1 == pytest.approx((-1535.5 - 292.5 * root) / 1728)


def test_qsign_swaps_outputs():
    root = cmath.sqrt(109)
    z1, z2 = invariantmap.icosahedral_invariants(1, 0, 1, root)
    w1, w2 = invariantmap.icosahedral_invariants(1, 0, 1, root, qsign=-1)
    assert (w1, w2) == pytest.approx((z2, z1))


def test_degenerate_configuration():
    with pytest.raises(DegenerateConfiguration):
        invariantmap.icosahedral_invariants(0, 0, 1, 1)


def test_repeated_roots():
    with pytest.raises(RepeatedRoots, match="repeated roots"):
        invariantmap.icosahedral_invariants(1, 1, 1, 0)


def test_segre_forms_reproduce_canonical_coefficients():
    sd = invariantmap.build_segre_data()
    assert sd.alpha == invariantmap.ALPHA_DISPLAY
    assert sd.beta == invariantmap.BETA_DISPLAY
    assert sd.gamma == invariantmap.GAMMA_DISPLAY
    assert sd.M1 == invariantmap.M1_DISPLAY
    assert sd.N1 == invariantmap.N1_DISPLAY


def test_line_invariants_match_closed_form(rng):
    sd = invariantmap.build_segre_data()
    for _ in range(10):
        point = list(rng.normal(size=4) + 1j * rng.normal(size=4))
        a, b, c = (form.evaluate(point) for form in (sd.alpha, sd.beta, sd.gamma))
        nab = quintic.nabla(quintic.discriminant_value(a, b, c))
        z1, z2 = invariantmap.icosahedral_invariants(a, b, c, nab)
        on_l = icos_value(point[0], point[1])
        on_m = icos_value(point[2], point[3])
        if abs(on_l - z1) > abs(on_l - z2):
            z1, z2 = z2, z1
        assert on_l == pytest.approx(z1, rel=1e-7)
        assert on_m == pytest.approx(z2, rel=1e-7)


def test_segre_coordinates_satisfy_quadric(rng):
    sd = invariantmap.build_segre_data()
    point = list(rng.normal(size=4) + 1j * rng.normal(size=4))
    roots = [y.evaluate(point) for y in sd.y]
    p1, p2, p3, p4 = invariantmap.segre_coordinates(roots)
    assert p1 * p4 + p2 * p3 == pytest.approx(0, abs=1e-9 * max(map(abs, roots)) ** 2)
    assert [p.evaluate(point) for p in sd.p] == pytest.approx([p1, p2, p3, p4])


def test_odd_action_has_order_four_on_the_quadric():
    sd = invariantmap.build_segre_data()
    for g in MPoly.generators(invariantmap.LAMBDA_MU):
        assert invariantmap.r_action(invariantmap.r_action(g)) != g
        assert invariantmap._iterate(invariantmap.r_action, g, 4) == -g
    for form in sd.p + sd.y:
        assert invariantmap._iterate(invariantmap.r_action, form, 4) == form


@pytest.mark.slow
@pytest.mark.parametrize(
    "check",
    [
        invariantmap.verify_product_identities,
        invariantmap.verify_pq_identity,
        invariantmap.verify_equivariance,
    ],
)
def test_certificates(check):
    certificate = check()
    assert certificate.passed, certificate.failures
