"""
Tests for F_q(M): relations, PBW counts, minors, coalgebra structure and characters.
"""

import os
import sys
from math import comb

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.FreeAlgebra import GeneratorId, NcPolynomial, TensorAlgebra, parse_polynomial
from src.Models.errors import InvalidParameterError, RelationViolationError
from src.Models.xi_spec import XiSpec
from src.QuantumMatrices import (
    Character,
    check_det_central,
    check_det_grouplike,
    comultiply,
    counit,
    evaluate_character,
    frt_presentation,
    frt_relations,
    quantum_determinant,
    quantum_minor,
    tau,
    tau_at_xi,
    verify_bialgebra,
)
from src.Scalars import FIELD, Q


class TestPresentation:
    def test_rule_count_n2(self, frt2):
        assert len(frt2.rules) == 6

    def test_row_commutation(self, frt2, gen):
        reduced = frt2.normal_form(gen(frt2, "x", 1, 2) * gen(frt2, "x", 1, 1))
        assert reduced == (gen(frt2, "x", 1, 1) * gen(frt2, "x", 1, 2)).scale(1 / Q)
        assert frt2.format(reduced) == "(q^-1)*x[1,1]*x[1,2]"

    def test_cross_relation(self, frt2):
        p = parse_polynomial("x[2,2]*x[1,1] - x[1,1]*x[2,2] + (q-q^-1)*x[1,2]*x[2,1]")
        assert not frt2.normal_form(p)

    @pytest.mark.parametrize("n, degrees", [(2, 5), (3, 3)])
    def test_pbw_counts(self, n, degrees):
        a = frt_presentation(n)
        size = n * n
        assert [a.irreducible_word_count(d) for d in range(degrees)] == [comb(size + d - 1, d) for d in range(degrees)]

    def test_relations_commute_at_one(self):
        a = frt_presentation(2, at_one=True)
        assert a.at_one
        x = {g: a.generator(g) for g in a.generators}
        g11, g22 = GeneratorId("x", 1, 1), GeneratorId("x", 2, 2)
        assert a.normal_form(x[g22] * x[g11] - x[g11] * x[g22]) == NcPolynomial.zero()

    def test_relations_are_entries(self):
        assert all(r for r in frt_relations(2))


class TestMinors:
    def test_determinant_n2(self, frt2):
        expected = parse_polynomial("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]")
        assert quantum_determinant(frt2) == frt2.normal_form(expected)

    def test_one_by_one_minor(self, frt2, gen):
        assert quantum_minor([2], [1], frt2) == gen(frt2, "x", 2, 1)

    def test_bad_index_sets(self, frt2):
        with pytest.raises(InvalidParameterError):
            quantum_minor([1, 2], [1], frt2)
        with pytest.raises(InvalidParameterError):
            quantum_minor([3], [1], frt2)

    def test_tau_one_is_quantum_trace(self, frt2, gen):
        expected = gen(frt2, "x", 1, 1).scale(Q) + gen(frt2, "x", 2, 2).scale(1 / Q)
        assert tau(1, frt2) == expected

    def test_tau_top_is_determinant(self):
        a = frt_presentation(3)
        assert tau(3, a) == quantum_determinant(a)

    def test_tau_range(self, frt2):
        with pytest.raises(InvalidParameterError):
            tau(3, frt2)


class TestCoalgebra:
    """Test the coproduct, the counit and the quantum determinant."""

    def test_bialgebra_axioms(self):
        report = verify_bialgebra(2)
        assert report.passed
        assert len(report.results) == 12

    def test_coproduct_of_generator(self, frt2, gen):
        pair = TensorAlgebra(frt2, frt2)
        delta = comultiply(gen(frt2, "x", 1, 2), frt2, pair)
        expected = pair.pure(gen(frt2, "x", 1, 1), gen(frt2, "x", 1, 2)) + pair.pure(
            gen(frt2, "x", 1, 2), gen(frt2, "x", 2, 2)
        )
        assert delta == expected

    def test_counit(self, frt2, gen):
        assert counit(gen(frt2, "x", 1, 1), frt2) == FIELD.one
        assert not counit(gen(frt2, "x", 1, 2), frt2)
        assert counit(quantum_determinant(frt2), frt2) == FIELD.one

    @pytest.mark.parametrize("n", [2, 3])
    def test_determinant(self, n):
        a = frt_presentation(n)
        assert check_det_central(a).passed
        assert check_det_grouplike(a).passed


class TestCharacters:
    """Test evaluation characters ev_xi."""

    def test_diagonal_character(self):
        xi = XiSpec(2, 0, [2, 3])
        assert tau_at_xi(1, xi) == 2 * Q + 3 / Q
        assert tau_at_xi(2, xi) == FIELD(6)

    def test_nilpotent_character(self):
        xi = XiSpec(2, 2, [])
        assert not tau_at_xi(1, xi)
        assert not tau_at_xi(2, xi)

    def test_evaluate(self, frt2):
        p = parse_polynomial("x[1,2]*x[2,1] + q")
        assert evaluate_character(p, [[0, 1], [0, 0]], frt2) == Q

    def test_non_character(self, frt2):
        with pytest.raises(RelationViolationError) as excinfo:
            Character(frt2, [[1, 1], [0, 1]])
        assert excinfo.value.relation

    def test_wrong_shape(self, frt2):
        with pytest.raises(InvalidParameterError):
            Character(frt2, [[1, 0, 0]])
