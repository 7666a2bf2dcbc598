import numpy as np
import pytest

from icosaquintic import bjseries
from icosaquintic.bjseries import FussParams
from icosaquintic.errors import NoConvergence, OutsideRadius, TooLarge
from icosaquintic.recovery import oracle_roots


def test_fuss_catalan():
    assert [bjseries.fuss_catalan(2, k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [bjseries.fuss_catalan(5, k) for k in range(5)] == [1, 1, 5, 35, 285]
    with pytest.raises(ValueError):
        bjseries.fuss_catalan(1, 3)


def test_fuss_catalan_rejects_inexact_quotient(monkeypatch):
    monkeypatch.setattr(bjseries._math, "comb", lambda n, k: 7)
    with pytest.raises(ValueError, match="not divisible"):
        bjseries.fuss_catalan(2, 2)


def test_fuss_params():
    assert FussParams(5, 3).value == 35
    with pytest.raises(ValueError):
        FussParams(1, 0)
    with pytest.raises(ValueError):
        FussParams(3, -1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_raney_count(p):
    for k in range(4):
        assert bjseries.raney_count(p, k) == bjseries.fuss_catalan(p, k)


def test_raney_count_too_large():
    with pytest.raises(TooLarge):
        bjseries.raney_count(5, 6)


def test_term_ratio():
    assert bjseries.term_ratio(0) == 1
    assert bjseries.series_coefficient(2) == 5
    certificate = bjseries.verify_term_ratios()
    assert certificate.passed, certificate.failures


def test_series_values():
    assert bjseries.bj_root_series(0) == 0
    assert bjseries.bj_root_series(0.1) == pytest.approx(0.1000100050035, rel=1e-12)


def test_series_radius():
    assert bjseries.RADIUS == pytest.approx(0.535, abs=1e-3)
    with pytest.raises(OutsideRadius):
        bjseries.bj_root_series(0.6)


def test_series_residual(unit_disc):
    for gamma in 0.4 * unit_disc(20):
        y = bjseries.bj_root_series(gamma)
        assert bjseries.residual(y, gamma) <= 1e-12


def test_series_picks_small_root():
    gamma = 0.3 - 0.2j
    y = bjseries.bj_root_series(gamma)
    roots = oracle_roots([1, 0, 0, 0, -1, gamma])
    closest = roots[np.argmin(abs(roots))]
    assert y == pytest.approx(closest, abs=1e-10)


def test_plus_root(unit_disc):
    for gamma in 0.4 * unit_disc(10):
        y = bjseries.bring_jerrard_plus_root(gamma)
        assert abs(y**5 + y + gamma) <= 1e-12


def test_series_rejects_wrong_sum(monkeypatch):
    monkeypatch.setattr(bjseries, "series_coefficient", lambda k: bjseries.Rat(2))
    with pytest.raises(NoConvergence, match="residual"):
        bjseries.bj_root_series(0.3)


def test_series_with_loose_tolerance():
    y = bjseries.bj_root_series(0.3, tol=1e-6)
    assert bjseries.residual(y, 0.3) <= 1e-5
