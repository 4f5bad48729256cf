"""
Tests for the sphere coordinates of the n=2 orbit quotients: extended
scalars, the (alpha, beta) parameters and the eliminated relations.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.FreeAlgebra import NcPolynomial
from src.Models.errors import InvalidParameterError, InvalidScalarError
from src.PodlesSphere import (
    SIGMA,
    SIGMA_AT_ONE,
    X_MINUS,
    X_PLUS,
    X_ZERO,
    ExtendedScalar,
    parameter_invariance_check,
    parameters_to_orbit_data,
    podles_parameters,
    sphere_hilbert,
    sphere_quotient,
    symbolic_sphere,
)
from src.Scalars import FIELD, Q, to_scalar


@pytest.fixture(scope="module")
def sphere01():
    return sphere_quotient(0, 1)


class TestExtendedScalar:
    """Test arithmetic in the quartic extension K(i, s)."""

    def test_root_squares_to_sigma(self):
        s = ExtendedScalar.root()
        assert s * s == SIGMA
        assert SIGMA == Q / (Q ** 2 + 1)

    def test_imaginary_unit(self):
        i = ExtendedScalar.imaginary_unit()
        assert i * i == -1
        assert (i * ExtendedScalar.root()).to_dict() == {"i*s": "1"}

    def test_inverse(self):
        x = ExtendedScalar.root() + 1
        assert x * x.inverse() == 1
        assert (ExtendedScalar.imaginary_unit() + 2) / (ExtendedScalar.imaginary_unit() + 2) == 1

    def test_zero_has_no_inverse(self):
        with pytest.raises(InvalidScalarError):
            ExtendedScalar.zero().inverse()

    def test_rational_part(self):
        assert ExtendedScalar.lift(Q).rational_part() == Q
        with pytest.raises(InvalidScalarError):
            ExtendedScalar.root().rational_part()

    def test_hash_matches_base_field(self):
        assert hash(ExtendedScalar.lift(2)) == hash(FIELD(2))
        assert ExtendedScalar.lift(2) == FIELD(2)

    def test_specialize(self):
        s = ExtendedScalar.root().specialize_at_one()
        assert s.sigma == SIGMA_AT_ONE
        assert s * s == ExtendedScalar.lift(FIELD(1) / 2, SIGMA_AT_ONE)

    def test_mixed_fields(self):
        with pytest.raises(InvalidScalarError):
            ExtendedScalar.one() + ExtendedScalar.one(SIGMA_AT_ONE)

    def test_coordinate_count(self):
        with pytest.raises(InvalidScalarError):
            ExtendedScalar((1, 0, 0))


class TestParameters:
    def test_values(self):
        alpha, beta = podles_parameters(0, 1)
        assert not alpha
        assert beta == -(1 / Q + 1 / Q ** 3)

    def test_alpha_is_multiple_of_root(self):
        alpha, _ = podles_parameters(2, 0)
        assert alpha == ExtendedScalar.root() * (2 / Q)

    @pytest.mark.parametrize("t, d", [(2, 3), (0, 1), ("q", "q^2+1"), (1, 0)])
    def test_inverse_map(self, t, d):
        assert parameters_to_orbit_data(*podles_parameters(t, d)) == (to_scalar(t), to_scalar(d))

    def test_inverse_rejects_irrational_beta(self):
        with pytest.raises(InvalidScalarError):
            parameters_to_orbit_data(ExtendedScalar.zero(), ExtendedScalar.root())


class TestSphere:
    def test_four_rules(self, sphere01):
        assert len(sphere01.relations) == 4
        assert len(sphere01.presentation.rules) == 4

    def test_hilbert(self, sphere01):
        assert sphere_hilbert(sphere01, 4).dims == [1, 3, 5, 7, 9]

    def test_hilbert_degree(self, sphere01):
        with pytest.raises(InvalidParameterError):
            sphere_hilbert(sphere01, -1)

    def test_to_dict(self, sphere01):
        data = sphere01.to_dict()
        assert data["t"] == "0"
        assert data["d"] == "1"
        assert data["alpha"] == "0"
        assert len(data["relations"]) == 4
        assert all(text.endswith(" = 0") for text in data["relations"])

    def test_classical_sphere(self, sphere01):
        classical = sphere01.specialize_at_one()
        assert classical.at_one
        a = classical.presentation
        one = ExtendedScalar.one(SIGMA_AT_ONE)
        x_plus, x_zero, x_minus = (NcPolynomial.monomial((g,), one) for g in (X_PLUS, X_ZERO, X_MINUS))
        # x[1] x[-1] and x[-1] x[1] agree classically
        assert not a.normal_form(x_plus * x_minus - x_minus * x_plus)
        reduced = a.normal_form((x_plus * x_minus).scale(ExtendedScalar.lift(2, SIGMA_AT_ONE)) - x_zero * x_zero)
        assert reduced == NcPolynomial.constant(ExtendedScalar.lift(2, SIGMA_AT_ONE))

    def test_quantum_sphere_is_not_commutative(self, sphere01):
        a = sphere01.presentation
        one = ExtendedScalar.one()
        x_plus, x_minus = (NcPolynomial.monomial((g,), one) for g in (X_PLUS, X_MINUS))
        assert a.normal_form(x_plus * x_minus - x_minus * x_plus)

    def test_symbolic_sphere(self):
        sq = symbolic_sphere()
        assert len(sq.presentation.rules) == 4
        assert sq.t is None
        assert "t" not in sq.to_dict()
        with pytest.raises(InvalidParameterError):
            sq.specialize_at_one()


class TestParameterInvariance:
    """Test that the relations depend on (t, d) only through (alpha, beta)."""

    def test_pairs(self):
        report = parameter_invariance_check([(0, 1), (1, 1), (0, 1)])
        assert report.passed, [r.to_dict() for r in report.failures]
        assert len(report.details["pairs"]) == 3

    def test_needs_two_pairs(self):
        with pytest.raises(InvalidParameterError):
            parameter_invariance_check([(0, 1)])
