"""Smoke tests for the python bindings."""

import fractions

import pytest

sympharm = pytest.importorskip("sympharm")


def poly_terms(p, text):
    """Canonical form via the library, for value comparisons."""
    return sympharm.canonical(p, text)


def test_worked_example_decomposition():
    rep = sympharm.decompose(2, "symplectic", "z3^2*zb1^2")
    assert rep["context"]["p"] == 2
    assert rep["reassembly_ok"] is True
    parts = rep["parts"]
    assert [part["op_power"] for part in parts] == [0, 1, 2]
    assert poly_terms(2, parts[0]["component"]) == poly_terms(
        2, "1/3*z3^2*zb1^2 + 1/3*z2^2*zb4^2 + 2/3*z2*z3*zb1*zb4"
    )
    assert poly_terms(2, parts[1]["component"]) == poly_terms(
        2, "-1/2*z2*z3^2*zb1 - 1/2*z2^2*z3*zb4"
    )
    assert poly_terms(2, parts[2]["component"]) == poly_terms(2, "1/12*z2^2*z3^2")


def test_dims_concordance():
    d = sympharm.dims(2, 2, 2)
    assert d["dim_H"] == 84
    assert d["dim_HS_rank"] == 14
    assert d["dim_weyl"] == 14
    assert d["branching_sum"] == 84
    assert d["consistent"] is True


def test_apply_and_fischer():
    assert sympharm.apply_op(1, "E", "zb1") == "-z2"
    assert sympharm.apply_op(1, "Laplace", "z1*zb1 + z2*zb2") == "8"
    # T^2 is the degree parity
    assert sympharm.apply_op(2, "T^2", "z1") == "-z1"
    assert fractions.Fraction(sympharm.fischer_inner(1, "z1^2", "z1^2")) == 2


def test_basis_sizes():
    assert len(sympharm.basis(2, 2, 2, "HS")) == 14
    assert len(sympharm.basis(2, 2, 1, "HSdag")) == 0
    assert len(sympharm.basis(1, 1, 1, "H")) == 3


def test_verify_example_suite():
    ok, report = sympharm.verify("example", 2, 4)
    assert ok, report
    assert "PASS" in report
