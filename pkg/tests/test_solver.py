import json
import pathlib

import numpy as np
import pytest

from icosaquintic import Method, QuinticSolver, SolveOptions, SolveRequest
from icosaquintic.errors import DegenerateConfiguration, RepeatedRoots
from icosaquintic.recovery import match_roots, oracle_roots

DATA = pathlib.Path(__file__).parent / "data"


def test_fifth_roots_of_unity(solver):
    response = solver.solve_coefficients([0, 0, 0, 0, -1])
    assert response.fallback_used
    assert response.method_used is Method.ORACLE
    assert response.max_residual < 1e-10
    _, dist = match_roots(np.exp(2j * np.pi * np.arange(5) / 5), response.roots)
    assert dist < 1e-10


def test_fifth_roots_without_fallback():
    solver = QuinticSolver(SolveOptions(allow_fallback=False))
    with pytest.raises(DegenerateConfiguration):
        solver.solve_coefficients([0, 0, 0, 0, -1])


def test_icosahedral_solve(solver):
    coeffs = [0, 0, 1, 1, 0.2]
    response = solver.solve_coefficients(coeffs)
    assert response.method_used is Method.ICOSAHEDRAL
    assert not response.fallback_used
    assert response.Z is not None
    assert response.tschirnhaus["trivial"]
    assert response.max_residual < 1e-6
    _, dist = match_roots(oracle_roots([1, *coeffs]), response.roots)
    assert dist < 1e-6


def test_general_quintic(solver):
    coeffs = [1, 2, 3, 4, 5]
    response = solver.solve_coefficients(coeffs)
    assert response.max_residual < 1e-6
    assert len(response.residuals) == 5
    _, dist = match_roots(np.roots([1, *coeffs]), response.roots)
    assert dist < 1e-6


def test_roots_are_sorted(solver):
    roots = solver.solve_coefficients([1, 2, 3, 4, 5]).roots
    keys = [(r.real, r.imag) for r in roots]
    assert keys == sorted(keys)


def test_repeated_roots(solver):
    with pytest.raises(RepeatedRoots, match="repeated roots"):
        solver.solve_coefficients([0, 0, 5, 5, 1])


def test_series_method(solver):
    response = solver.solve(SolveRequest([0, 0, 0, -1, 0.1], Method.SERIES))
    assert response.method_used is Method.SERIES
    assert response.max_residual < 1e-10
    _, dist = match_roots(oracle_roots([1, 0, 0, 0, -1, 0.1]), response.roots)
    assert dist < 1e-10


def test_series_method_needs_bring_jerrard_form(solver):
    with pytest.raises(ValueError):
        solver.solve(SolveRequest([0, 0, 1, -1, 0.1], "series"))


def test_oracle_method(solver):
    response = solver.solve(SolveRequest([1, 2, 3, 4, 5], "oracle"))
    assert response.method_used is Method.ORACLE
    assert not response.fallback_used
    assert response.canonical is None


def test_request_tolerance(solver):
    response = solver.solve(SolveRequest([1, 2, 3, 4, 5], tolerance=1e-9))
    assert response.max_residual < 1e-9


@pytest.mark.slow
def test_regression_corpus(solver):
    lines = (DATA / "regression.jsonl").read_text().splitlines()
    assert len(lines) == 50
    for line in lines:
        request = SolveRequest.from_json(json.loads(line))
        response = solver.solve(request)
        expected = oracle_roots([1, *request.coefficients])
        _, dist = match_roots(expected, response.roots)
        assert dist <= 2 * request.tolerance
        assert response.max_residual <= request.tolerance
