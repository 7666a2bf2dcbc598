import pytest

from icosaquintic import certify
from icosaquintic.contracts import Certificate


def test_registry_names():
    assert list(certify.REGISTRY) == [
        "syzygy",
        "vertices",
        "group",
        "products",
        "pq",
        "equivariance",
        "divisibility",
        "transvectants",
        "linear_forms",
        "bc_display",
        "series",
    ]


def test_run_subset():
    certificates = certify.run_certificates(["group", "syzygy"])
    assert [c.name for c in certificates] == ["group", "syzygy"]
    assert all(c.passed for c in certificates)
    assert all(c.elapsed >= 0 for c in certificates)


def test_unknown_name():
    with pytest.raises(KeyError):
        certify.run_certificates(["syzygy", "missing"])


def test_format_table():
    table = certify.format_table(
        [Certificate("ok", {"a": True}), Certificate("broken", {"a": True, "b": False})]
    )
    lines = table.splitlines()
    assert lines[0].split() == ["name", "status", "seconds", "failures"]
    assert "PASS" in lines[1]
    assert lines[2].split()[1] == "FAIL"
    assert lines[2].endswith("b")


@pytest.mark.slow
def test_all_certificates_pass():
    certificates = certify.run_certificates()
    assert len(certificates) == len(certify.REGISTRY)
    failed = {c.name: c.failures for c in certificates if not c.passed}
    assert not failed
