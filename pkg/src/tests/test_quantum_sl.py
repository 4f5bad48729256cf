"""
Tests for F_q(SL(n)): the det_q = 1 rule, the antipode, the Hopf axioms and
the adjoint coaction.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.FreeAlgebra import GeneratorId, NcPolynomial, complete, parse_polynomial
from src.Models.errors import InvalidParameterError
from src.QuantumMatrices import frt_presentation, tau
from src.QuantumSL import adjoint_coaction, antipode, coaction_target, minus_q_power, sl_presentation, verify_hopf
from src.Scalars import FIELD, Q


class TestPresentation:
    def test_dimensions(self, sl2):
        assert [sl2.irreducible_word_count(d) for d in range(3)] == [1, 4, 9]

    def test_determinant_rule(self, sl2):
        p = parse_polynomial("t[1,1]*t[2,2] - q*t[1,2]*t[2,1]")
        assert sl2.normal_form(p) == NcPolynomial.constant(1)

    def test_n3_is_closed_through_degree_six(self):
        _, report = complete(sl_presentation(3), 6)
        assert not report.added_rules

    def test_small_n(self):
        with pytest.raises(InvalidParameterError):
            sl_presentation(1)


class TestAntipode:
    """Test the antipode of F_q(SL(2))."""

    def test_generators_n2(self, sl2, gen):
        assert antipode(gen(sl2, "t", 1, 1), sl2) == gen(sl2, "t", 2, 2)
        assert antipode(gen(sl2, "t", 1, 2), sl2) == gen(sl2, "t", 1, 2).scale(-1 / Q)
        assert antipode(gen(sl2, "t", 2, 1), sl2) == gen(sl2, "t", 2, 1).scale(-Q)

    def test_anti_homomorphism(self, sl2, gen):
        t11, t12 = gen(sl2, "t", 1, 1), gen(sl2, "t", 1, 2)
        left = antipode(sl2.normal_form(t11 * t12), sl2)
        right = sl2.normal_form(antipode(t12, sl2) * antipode(t11, sl2))
        assert left == right

    def test_minus_q_power(self):
        assert minus_q_power(-1, Q) == -1 / Q
        assert minus_q_power(2, Q) == Q ** 2
        assert minus_q_power(0, Q) == 1


class TestHopf:
    def test_axioms_n2(self):
        report = verify_hopf(2)
        assert report.passed, [r.to_dict() for r in report.failures]

    def test_axioms_n3(self):
        report = verify_hopf(3)
        assert report.passed, [r.to_dict() for r in report.failures]

    def test_unsupported_size(self):
        with pytest.raises(InvalidParameterError):
            verify_hopf(4)


class TestAdjointCoaction:
    def test_quantum_trace_is_coinvariant(self, frt2):
        target = coaction_target(frt2)
        image = adjoint_coaction(tau(1, frt2), frt2, target)
        assert image == target.pure(tau(1, frt2), NcPolynomial.constant(FIELD.one))

    def test_generator_is_not_coinvariant(self, frt2):
        x12 = frt2.generator(GeneratorId("x", 1, 2))
        target = coaction_target(frt2)
        assert adjoint_coaction(x12, frt2, target) != target.pure(x12, NcPolynomial.constant(FIELD.one))

    def test_unknown_source(self, sl2, gen):
        with pytest.raises(InvalidParameterError):
            adjoint_coaction(gen(sl2, "t", 1, 1), sl2)

    @pytest.mark.parametrize("n, d", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
    def test_tau_is_coinvariant(self, n, d):
        a = frt_presentation(n)
        target = coaction_target(a)
        element = tau(d, a)
        assert adjoint_coaction(element, a, target) == target.pure(element, NcPolynomial.constant(FIELD.one))
