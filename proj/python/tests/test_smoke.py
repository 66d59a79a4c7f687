"""Smoke tests for the Python module."""
import json

import pytest
import qdual


def test_catalog():
    names = qdual.catalog_names()
    assert "Uq_sl2_hat" in names and len(names) == 11


def test_normalize_and_delta():
    assert qdual.normalize("Uq_sl2_hat", "E*F - F*E") == "Gamma"
    assert qdual.delta("Uq_sl2_hat", "H", 2) == "-1 @ H + K @ H"


def test_member():
    assert qdual.member("Uq_sl2_hat", "E", 4)[0] == "NOT-MEMBER"
    assert qdual.member("Uq_sl2_hat", "(q-1)*E", 4)[0] == "MEMBER-UP-TO-BOUND"


def test_errors():
    with pytest.raises(qdual.ParseError):
        qdual.normalize("Uq_sl2_hat", "E +")


def test_run_structured():
    code, out, _ = qdual.run(["--format", "structured", "normalize", "--algebra", "Fq_SL2_hat", "--expr", "a*d - d*a"])
    assert code == 0
    assert json.loads(out)["exit_code"] == 0
