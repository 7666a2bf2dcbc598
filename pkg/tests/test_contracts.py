import json

import pytest

from icosaquintic.contracts import Certificate, Method, SolveRequest, SolveResponse, to_json


def test_request_from_json():
    request = SolveRequest.from_json(
        {"coefficients": [[1, 0], [0, 1], 2, [-1, 0.5], 0], "method": "ORACLE"}
    )
    assert request.coefficients == (1, 1j, 2, -1 + 0.5j, 0)
    assert request.method is Method.ORACLE
    assert request.tolerance == 1e-6


def test_request_defaults():
    request = SolveRequest.from_json({"coefficients": [0, 0, 0, 0, -1]})
    assert request.method is Method.ICOSAHEDRAL


def test_malformed_requests():
    with pytest.raises(ValueError):
        SolveRequest.from_json({"method": "oracle"})
    with pytest.raises(ValueError):
        SolveRequest([1, 2, 3])
    with pytest.raises(ValueError):
        SolveRequest([0, 0, 0, 0, 1], "newton")


def test_response_json():
    response = SolveResponse([1j, 2 + 0j], [0.0, 1e-12], method_used=Method.SERIES)
    data = json.loads(response.dumps())
    assert data["roots"] == [[0.0, 1.0], [2.0, 0.0]]
    assert data["max_residual"] == 1e-12
    assert data["method_used"] == "series"
    assert data["Z"] is None


def test_certificate():
    cert = Certificate.collect("demo", [("a", lambda: True), ("b", lambda: 0)])
    assert not cert.passed
    assert cert.failures == ["b"]
    data = json.loads(to_json(cert))
    assert data["name"] == "demo"
    assert data["passed"] is False
    assert data["checks"] == {"a": True, "b": False}
    assert not Certificate("empty").passed


def test_to_json_rejects_unknown_objects():
    with pytest.raises(TypeError):
        to_json(object())


def test_floats_use_seventeen_digits():
    assert to_json(0.1) == "0.10000000000000001"
    assert to_json(256.0) == "256.0"
    assert to_json([1e-12, 2 + 0.5j]) == "[9.9999999999999998e-13, [2.0, 0.5]]"
    assert to_json({"x⁵": float("inf")}) == '{"x⁵": Infinity}'
    assert json.loads(to_json(1 / 3)) == 1 / 3
