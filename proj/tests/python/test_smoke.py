import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

import su11


def test_identity_matrix_element():
    g = su11.GroupElement.identity()
    assert su11.matrix_element(1, 0, 0, g) == 1
    assert su11.matrix_element("3/2", 2, 1, g) == 0


def test_label_forms_agree():
    g = su11.GroupElement.from_cartan(0.7, 1.0, -0.5)
    a = su11.matrix_element("3/2", 1, 2, g)
    assert su11.matrix_element(1.5, 1, 2, g) == a
    assert su11.matrix_element("1.5", 1, 2, g) == a
    assert su11.normalize_label(2.5) == "5/2"


def test_invalid_labels():
    with pytest.raises(su11.InvalidLabel):
        su11.matrix_element(0.4, 0, 0, su11.GroupElement.identity())
    with pytest.raises(su11.InvalidLabel):
        su11.matrix_element("1/2", 0, 0, su11.GroupElement.identity())


def test_group_element():
    g = su11.GroupElement.from_cartan(0.8, 1.1, -0.3)
    assert g.to_cartan() == pytest.approx((0.8, 1.1, -0.3), abs=1e-12)
    assert abs(g.determinant() - 1) < 1e-12
    e = g * g.inverse()
    assert abs(e.alpha - 1) < 1e-12 and abs(e.beta) < 1e-12
    with pytest.raises(su11.DeterminantViolation):
        su11.GroupElement.from_alpha_beta(1, 1)
    assert issubclass(su11.DeterminantViolation, su11.Error)
    assert issubclass(su11.Error, ValueError)


def test_boost_element():
    tau = 0.9
    g = su11.GroupElement.from_cartan(tau, 0, 0)
    assert su11.matrix_element(1, 0, 0, g) == pytest.approx(math.cosh(tau / 2) ** -2, rel=1e-14)
    assert su11.matrix_element_cartan(1, 0, 0, tau, 0, 0) == pytest.approx(math.cosh(tau / 2) ** -2, rel=1e-14)


def test_truncated_block_is_nearly_unitary():
    g = su11.GroupElement.from_cartan(2 * math.atanh(0.5), 0.4, 1.0)
    block = su11.truncated_operator(1, g, 60)
    assert block.shape == (60, 60)
    assert block.dtype == np.complex128
    corner = (block.conj().T @ block)[:10, :10]
    assert np.max(np.abs(corner - np.eye(10))) < 1e-8
    assert su11.unitarity_defect(1, g, 60, 10) < 1e-8


def test_characters():
    assert su11.character_compact(1, math.pi) == pytest.approx(-0.5, abs=1e-15)
    assert su11.character_compact("3/2", math.pi) == pytest.approx(0.5j, abs=1e-15)
    value, regime = su11.character(1, su11.GroupElement.from_alpha_beta(math.cosh(1), math.sinh(1)))
    assert regime == "hyperbolic_abs_convergent"
    assert value.real == pytest.approx(0.5 / math.sinh(1) / math.e, rel=1e-14)
    with pytest.raises(su11.SingularAngle):
        su11.character_compact(1, 0.0)
    with pytest.raises(su11.BoundaryConjugacyClass):
        su11.character(1, su11.GroupElement.identity())
    with pytest.raises(su11.InvalidDamping):
        su11.abel_trace(1, 1.0, 1.0)
    closed = cmath.exp(-1.5j * 2.0) / (1 - 0.5 * cmath.exp(-2.0j))
    assert su11.abel_trace("3/2", 2.0, 0.5, 200) == pytest.approx(closed, abs=1e-12)


def test_orthogonality():
    assert su11.formal_dimension(1) == 2
    assert su11.formal_dimension("3/2") == 1
    assert su11.formal_dimension(2) == Fraction(2, 3)
    r = su11.orthogonality_integral(1, 1, 0, 0, 0, 0)
    assert r["value"] == pytest.approx(2, abs=1e-12)
    assert r["angular_selected"]
    assert abs(su11.orthogonality_integral(2, 1, 0, 0, 1, 1)["value"]) < 1e-12
    mc1 = su11.monte_carlo_haar_check(1, 1, 0, 0, 0, 0, samples=100000, seed=5)
    mc2 = su11.monte_carlo_haar_check(1, 1, 0, 0, 0, 0, samples=100000, seed=5)
    assert mc1 == mc2
    assert abs(mc1["estimate"].real - 2) < 4 * mc1["std_error_re"]


def test_tensor_product():
    assert su11.decompose(1, 1, 3) == [("2", 1), ("3", 1), ("4", 1), ("5", 1)]
    assert su11.decompose(1, "3/2", 0) == [("5/2", 1)]
    assert su11.multiplicity(1, 1, 1.5) == 0
    assert su11.multiplicity("3/2", "3/2", 5) == 1
    assert su11.character_product(1, 1, math.pi) == pytest.approx(0.25, abs=1e-15)
    assert su11.verify_expansion_identity(1.3) < 1e-13


def test_quadrature():
    nodes, weights = su11.gauss_jacobi(1, 0, 0)
    assert nodes[0] == pytest.approx(0, abs=1e-15)
    assert weights[0] == pytest.approx(2)
    assert su11.gr_7391(1, 1, 0) == pytest.approx(2)
    assert su11.jacobi_p(0.5, 1.5, 1, 0.3) == pytest.approx(1.5 + 4 * (0.3 - 1) / 2)


def test_verify_suite():
    assert "all" in su11.suite_names()
    results = su11.run_suite("tensor")
    assert [r["id"] for r in results] == ["C7", "C8"]
    assert all(r["passed"] for r in results)
