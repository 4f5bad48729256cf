"""
Tests for the reflection equation algebra L_q(M), its quantum traces and
the checks built on them.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.BraidedMatrices import (
    MatrixOverAlgebra,
    check_central,
    check_coinvariant,
    newton_constant,
    phi_tau1,
    phi_tau2,
    phi_tau2_identity,
    precedence_candidates,
    rea_presentation,
    rea_relations,
    trace_power,
    verify_rea_coaction,
)
from src.FreeAlgebra import GeneratorId, parse_polynomial
from src.Models.errors import InvalidParameterError
from src.Scalars import FIELD, Q


def l(i: int, j: int) -> GeneratorId:
    return GeneratorId("l", i, j)


class TestPresentation:
    """Test the oriented relations of L_q(M)."""

    def test_rules_n2(self, rea2):
        assert len(rea2.rules) == 6
        assert list(rea2.order.precedence) == [l(2, 2), l(1, 1), l(1, 2), l(2, 1)]

    def test_flat_n2(self, rea2):
        assert [rea2.irreducible_word_count(d) for d in range(5)] == [1, 4, 10, 20, 35]

    def test_flat_n3(self):
        a = rea_presentation(3)
        assert [a.irreducible_word_count(d) for d in range(4)] == [1, 9, 45, 165]

    def test_commutative_at_one(self):
        a = rea_presentation(2, at_one=True)
        p = parse_polynomial("l[2,1]*l[1,2] - l[1,2]*l[2,1]")
        assert not a.normal_form(p)

    def test_relations_are_weight_homogeneous(self, rea2):
        assert all(rea2.is_weight_homogeneous(r) for r in rea_relations(2))

    def test_precedence_candidates(self):
        candidates = precedence_candidates(2)
        assert candidates[0] == [l(2, 2), l(1, 1), l(1, 2), l(2, 1)]
        assert len({tuple(c) for c in candidates}) == len(candidates)

    def test_invalid_n(self):
        with pytest.raises(InvalidParameterError):
            rea_presentation(0)


class TestQuantumTrace:
    def test_trace(self, rea2):
        expected = rea2.generator(l(1, 1)).scale(Q) + rea2.generator(l(2, 2)).scale(1 / Q)
        assert trace_power(1, 2, rea2) == expected
        assert phi_tau1(rea2) == expected

    def test_trace_of_square(self, rea2):
        expected = parse_polynomial(
            "q*l[1,1]*l[1,1] + (q+q^-1)*l[1,2]*l[2,1] + (q^-3)*l[2,2]*l[2,2] + (q^-1-q^-3)*l[2,2]*l[1,1]"
        )
        assert trace_power(2, 2, rea2) == rea2.normal_form(expected)

    def test_matrix_power(self, rea2):
        generators = MatrixOverAlgebra.generator_matrix(rea2)
        assert generators.power(0).entry(1, 1) == rea2.constant(FIELD.one)
        assert generators.power(2).quantum_trace() == trace_power(2, 2, rea2)
        with pytest.raises(InvalidParameterError):
            generators.power(-1)

    def test_shape(self, rea2):
        with pytest.raises(InvalidParameterError):
            MatrixOverAlgebra(rea2, [[rea2.generator(l(1, 1))]])


class TestCentrality:
    """Test that Tr_q(L^k) commutes with every generator."""

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_trace_powers_are_central(self, rea2, k):
        central, residuals = check_central(trace_power(k, 2, rea2), 2, rea2)
        assert central
        assert residuals == {}

    def test_trace_powers_are_central_n3(self):
        a = rea_presentation(3)
        assert check_central(trace_power(2, 3, a), 3, a)[0]

    def test_plain_trace_is_not_central(self, rea2):
        plain = rea2.generator(l(1, 1)) + rea2.generator(l(2, 2))
        central, _ = check_central(plain, 2, rea2)
        assert not central

    def test_generator_residual(self, rea2):
        central, residuals = check_central(rea2.generator(l(1, 2)), 2, rea2)
        assert not central
        expected = (rea2.generator(l(2, 2)) * rea2.generator(l(1, 2))).scale(1 / Q ** 2 - 1)
        assert residuals[l(2, 2)] == rea2.normal_form(expected)


class TestCoaction:
    @pytest.mark.parametrize("k", [1, 2])
    def test_trace_powers_are_coinvariant(self, rea2, k):
        coinvariant, residual = check_coinvariant(trace_power(k, 2, rea2), 2, rea2)
        assert coinvariant
        assert not residual

    def test_generator_is_not_coinvariant(self, rea2):
        coinvariant, _ = check_coinvariant(rea2.generator(l(1, 2)), 2, rea2)
        assert not coinvariant

    def test_axioms(self):
        report = verify_rea_coaction(2)
        assert report.passed, [r.to_dict() for r in report.failures]


class TestPhiTau2:
    """Test Phi(tau_2) and the Newton identity between the nilcone generators."""

    def test_definition(self, rea2):
        expected = parse_polynomial("l[1,1]*l[2,2] - q^2*l[1,2]*l[2,1]")
        assert phi_tau2(rea2) == rea2.normal_form(expected)

    @pytest.mark.parametrize("c1, c2", [(0, 0), (1, 2), ("q", "q^2+1")])
    def test_identity(self, c1, c2):
        report = phi_tau2_identity(2, c1, c2, 3)
        assert report.passed, [r.to_dict() for r in report.failures]

    def test_newton_constant_at_zero(self):
        assert not newton_constant(FIELD.zero, FIELD.zero, Q)

    def test_only_n2(self):
        with pytest.raises(InvalidParameterError):
            phi_tau2_identity(3)
        with pytest.raises(InvalidParameterError):
            phi_tau1(rea_presentation(3))
