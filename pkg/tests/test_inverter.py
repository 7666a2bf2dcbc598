import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from icosaquintic import icosa, inverter
from icosaquintic.contracts import SolveOptions
from icosaquintic.errors import InvalidC, OutOfSeriesDomain, PoleAtSingularPoint
from icosaquintic.inverter import HypergeomParams, invert_icosahedral


def test_icosahedral_parameters():
    params = HypergeomParams()
    assert params == HypergeomParams.from_exponents(2, 3, 5)
    assert params.a - params.b == Fraction(1, 5)
    assert 1 - params.c == Fraction(1, 3)
    assert params.c - params.a - params.b == Fraction(1, 2)


def test_gauss_series():
    assert inverter.gauss_2f1(1, 1, 2, 0) == 1
    assert inverter.gauss_2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-14)
    a, b, c = Fraction(11, 60), Fraction(31, 60), Fraction(6, 5)
    for w in (0.1, -0.5 + 0.3j, 0.85j):
        expected = special.hyp2f1(float(a), float(b), float(c), w)
        assert inverter.gauss_2f1(a, b, c, w) == pytest.approx(expected, rel=1e-12)


def test_gauss_series_domain():
    with pytest.raises(InvalidC):
        inverter.gauss_2f1(1, 1, 0, 0.1)
    with pytest.raises(InvalidC):
        inverter.gauss_2f1(1, 1, -2, 0.1)
    with pytest.raises(OutOfSeriesDomain):
        inverter.gauss_2f1(1, 1, 2, 0.95)


def test_series_inverse_round_trip():
    for Z in (2, 10 + 10j, -3, 1e4j):
        z = inverter.s_inverse(Z)
        assert inverter.round_trip_error(z, Z) <= 1e-8


def test_series_inverse_asymptotics():
    Z = 1e8
    assert inverter.s_inverse(Z) == pytest.approx((1728 * Z) ** -0.2, rel=1e-6)


def test_series_inverse_cutoff():
    with pytest.raises(OutOfSeriesDomain):
        inverter.s_inverse(1)
    assert inverter.s_inverse(1.2, options=SolveOptions(series_cutoff=1.15))


@pytest.mark.parametrize("modulus", [2, 5, 10])
@pytest.mark.parametrize("angle", np.linspace(0, 2 * np.pi, 6, endpoint=False))
def test_round_trip_on_series_path(modulus, angle):
    Z = modulus * cmath.exp(1j * angle)
    assert inverter.inversion_path(Z) == "series"
    z = invert_icosahedral(Z)
    assert abs(icosa.icos_value(z) - Z) <= 1e-7 * abs(Z)


@pytest.mark.parametrize("Z", [0.5 + 0.1j, -1, 0.3j, 1])
def test_round_trip_on_polynomial_path(Z):
    assert inverter.inversion_path(Z) == "polynomial"
    z = invert_icosahedral(Z)
    assert inverter.round_trip_error(z, Z) <= 1e-6


def test_face_centre():
    z = invert_icosahedral(0)
    assert abs(icosa.icos_value(z)) <= 1e-6
    roots = inverter.icos_equation_roots(0)
    assert len(roots) == 60


def test_all_preimages():
    roots = inverter.icos_equation_roots(2)
    assert len(roots) == 60
    assert max(inverter.round_trip_error(z, 2) for z in roots) <= 1e-6
    assert len({(round(z.real, 6), round(z.imag, 6)) for z in roots}) == 60


def test_equation_form_keeps_full_degree():
    icosa.build_invariants.cache_clear()
    icosa.dense_form.cache_clear()
    form = inverter._equation_form(0.5 + 0.25j)
    assert form.shape == (61,)
    assert form[0] != 0
    z = invert_icosahedral(2)
    assert inverter.round_trip_error(z, 2) <= 1e-6


def test_edge_midpoint_is_a_preimage_of_one():
    roots = inverter.icos_equation_roots(1)
    assert min(abs(roots - icosa.EDGE_MIDPOINT_T)) <= 1e-6


def test_rotation_preserves_preimage():
    z = invert_icosahedral(3 - 2j)
    eps = cmath.exp(2j * math.pi / 5)
    for k in range(5):
        assert inverter.round_trip_error(eps**k * z, 3 - 2j) <= 1e-7


def test_non_finite_target():
    with pytest.raises(ValueError):
        invert_icosahedral(complex("inf"))


def test_schwarzian_constant():
    assert inverter.schwarzian_beta0() == Fraction(611, 1800)


def test_schwarzian_rhs():
    assert inverter.schwarzian_rhs(2) == pytest.approx(0.31638889, rel=1e-7)
    with pytest.raises(PoleAtSingularPoint):
        inverter.schwarzian_rhs(0)
    with pytest.raises(PoleAtSingularPoint):
        inverter.schwarzian_rhs(1)


@pytest.mark.parametrize("Z", [3, 5, 2 + 2j, -4 + 1j])
def test_series_inverse_solves_schwarzian_equation(Z):
    h = 1e-3 * abs(Z)
    numeric = inverter.finite_difference_schwarzian(inverter.s_inverse, Z, h)
    assert numeric == pytest.approx(inverter.schwarzian_rhs(Z), rel=1e-4)
