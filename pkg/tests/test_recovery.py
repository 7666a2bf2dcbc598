from fractions import Fraction

import numpy as np
import pytest

from icosaquintic import recovery
from icosaquintic.contracts import SolveOptions
from icosaquintic.errors import DegenerateConfiguration, RepeatedRoots
from icosaquintic.quintic import CanonicalQuintic, nabla, weighted_scale


def test_cube_forms():
    cp = recovery.cube_polys()
    assert cp.B.degree == 8
    assert cp.Dcube.degree == 6
    assert cp.Q.degree == 12
    assert cp.U.degree == 24


def test_gordon_forms():
    N1, M1 = recovery.gordon_forms()
    assert N1.coefficient((5, 2, 1, 0)) == 7
    assert M1.coefficient((13, 0, 1, 0)) == 1


@pytest.mark.parametrize(
    "check", [recovery.verify_cube_polys, recovery.verify_gordon_forms]
)
def test_fast_certificates(check):
    certificate = check()
    assert certificate.passed, certificate.failures


@pytest.mark.slow
@pytest.mark.parametrize(
    "check", [recovery.verify_linear_form_identities, recovery.verify_bc_display]
)
def test_certificates(check):
    certificate = check()
    assert certificate.passed, certificate.failures


def test_linear_form_values():
    assert recovery.linear_form_values(0, 1, 0, 16) == (0, 0)
    m, n = recovery.linear_form_values(1, 0, 1, 2)
    assert m == Fraction(-3, 2)
    assert n == Fraction(47, 2)


def test_recover_roots_rejects_vanishing_t():
    with pytest.raises(DegenerateConfiguration):
        recovery.recover_roots(0, 1, 0, 16, 0.3)


def test_oracle_roots():
    roots = recovery.oracle_roots([1, 0, 0, 0, 0, -1])
    expected = np.exp(2j * np.pi * np.arange(5) / 5)
    _, dist = recovery.match_roots(expected, roots)
    assert dist <= 1e-12
    roots = recovery.oracle_roots([1, 0, 0, 0, 5, 0])
    assert min(abs(roots)) <= 1e-12
    assert max(abs(r**4 + 5) for r in roots if abs(r) > 0.5) <= 1e-10
    with pytest.raises(ValueError):
        recovery.oracle_roots([0, 1, 2])


def test_oracle_at_double_root():
    # y⁵ + 5y² + 5y + 1 = (y + 1)²(y³ − 2y² + 3y + 1)
    roots = recovery.oracle_roots([1, 0, 0, 5, 5, 1])
    assert sum(abs(r + 1) <= 1e-6 for r in roots) == 2


def test_match_roots():
    a = [1, 2j, -3]
    b = [-3.0000001, 1, 2j]
    matched, dist = recovery.match_roots(a, b)
    assert list(matched) == [1, 2j, -3.0000001]
    assert dist == pytest.approx(1e-7)
    with pytest.raises(ValueError):
        recovery.match_roots([1], [1, 2])


def test_solve_canonical():
    c = CanonicalQuintic(1, 0, 1)
    rs = recovery.solve_canonical(c)
    assert not rs.fallback
    assert rs.max_residual <= 1e-6
    expected = [(-1535.5 + s * 292.5 * 109**0.5) / 1728 for s in (1, -1)]
    assert min(abs(rs.branch.Z - z) for z in expected) <= 1e-9
    _, dist = recovery.match_roots(recovery.oracle_roots(c.coefficients), rs.roots)
    assert dist <= 1e-6


@pytest.mark.parametrize("t", [2.0, 0.5 + 0.3j, -1j])
def test_recovery_is_scale_covariant(t):
    base = recovery.solve_canonical(CanonicalQuintic(1, 0, 1))
    br = base.branch
    nab = br.nabla_sign * nabla(CanonicalQuintic(1, 0, 1).discriminant)
    scaled = recovery.recover_roots(
        t**3, 0, t**5, t**10 * nab, br.z, br.qsign, nabla_sign=br.nabla_sign, Z=br.Z
    )
    expected = np.array(base.roots) * t
    assert np.max(np.abs(np.array(scaled.roots) - expected)) <= 1e-9 * abs(t)
    assert scaled.max_residual <= 1e-6
    rs = recovery.solve_canonical(CanonicalQuintic(t**3, 0, t**5))
    assert not rs.fallback
    _, dist = recovery.match_roots(expected, rs.roots)
    assert dist <= 1e-6 * abs(t)


def test_solve_canonical_repeated_roots():
    with pytest.raises(RepeatedRoots):
        recovery.solve_canonical(CanonicalQuintic(1, 1, 1))
    with pytest.raises(RepeatedRoots):
        recovery.solve_canonical(CanonicalQuintic(0, 0, 0))


def test_solve_canonical_degenerate_configuration():
    rs = recovery.solve_canonical(CanonicalQuintic(0, 0, 1))
    assert rs.fallback
    assert rs.branch is None
    assert max(abs(y**5 + 1) for y in rs.roots) <= 1e-10
    with pytest.raises(DegenerateConfiguration):
        recovery.solve_canonical(CanonicalQuintic(0, 0, 1), SolveOptions(allow_fallback=False))


@pytest.mark.slow
def test_random_canonical_quintics(unit_disc):
    solved = 0
    tried = 0
    while tried < 100:
        a, b, c = unit_disc(3)
        rho = weighted_scale(a, b, c)
        q = CanonicalQuintic(a, b, c)
        f1f2 = a**4 - b**3 + a * b * c
        if abs(q.discriminant) < 1e-8 * rho**20 or abs(f1f2) < 1e-8 * rho**12:
            continue
        tried += 1
        rs = recovery.solve_canonical(q)
        _, dist = recovery.match_roots(recovery.oracle_roots(q.coefficients), rs.roots)
        assert dist <= 1e-6
        solved += not rs.fallback
    assert solved >= 95
