import cmath
import math

import pytest

from icosaquintic import icosa
from icosaquintic.errors import NotOnSphere
from icosaquintic.exactfield import EPSILON
from icosaquintic.icosa import INFINITY, ExtComplex, icos_I, icos_value


def test_invariants_derive_from_f():
    inv = icosa.build_invariants()
    assert inv.H == icosa.H_DISPLAY
    assert inv.T == icosa.T_DISPLAY
    assert inv.f.degree == 12
    assert inv.H.degree == 20
    assert inv.T.degree == 30


def test_spot_values():
    inv = icosa.build_invariants()
    assert inv.f.at([1, 1]) == 11
    assert inv.H.at([1, 1]) == -496
    assert inv.T.at([1, 1]) == -20008


@pytest.mark.parametrize(
    "check", [icosa.verify_syzygy, icosa.group_checks, icosa.verify_vertices]
)
def test_certificates(check):
    certificate = check()
    assert certificate.passed, certificate.failures


def test_vertices_map_to_infinity():
    for v in icosa.vertices().points:
        image = icos_I(v)
        assert image.infinite or abs(image.value) > 1e10
    assert icos_I(INFINITY) == INFINITY


def test_edge_midpoint():
    assert complex(icos_I(icosa.EDGE_MIDPOINT_T)) == pytest.approx(1, abs=1e-9)


def test_invariance_under_rotation(rng):
    zs = rng.normal(size=20) + 1j * rng.normal(size=20)
    eps = cmath.exp(2j * math.pi / 5)
    g = icosa.generators()
    for z in zs:
        value = icos_value(z)
        assert icos_value(eps * z) == pytest.approx(value, rel=1e-9)
        image = icosa.mobius(g.T_matrix, z)
        assert complex(icos_I(image)) == pytest.approx(value, rel=1e-9)


def test_mobius_of_rotation():
    g = icosa.generators()
    z = 0.3 + 0.2j
    assert complex(icosa.mobius(g.S_matrix, z)) == pytest.approx(complex(EPSILON) * z)


def test_group_elements():
    g = icosa.generators()
    assert icosa.perm_order(g.S_perm) == 5
    assert icosa.perm_order(g.T_perm) == 2
    assert icosa.det(icosa.mat_pow(g.S_matrix, 5)) == 1
    assert icosa.cycles_to_perm((1, 2), (3, 4)) == (2, 1, 4, 3, 5)
    assert len(icosa.closure([g.S_perm])) == 5


def test_stereographic():
    assert icosa.stereographic([0, 0, 1]) == INFINITY
    assert icosa.stereographic([0, 0, -1]) == ExtComplex(0)
    assert complex(icosa.stereographic([1, 0, 0])) == pytest.approx(1)
    with pytest.raises(NotOnSphere):
        icosa.stereographic([1, 1, 0])


def test_projective_coordinates():
    assert ExtComplex(0.5).projective() == (0.5, 1)
    assert ExtComplex(4).projective() == (1, 0.25)
    assert INFINITY.projective() == (1, 0)
    assert ExtComplex.of(complex("inf")) == INFINITY
