"""
Tests for the standard R-matrix and sparse tensor operators.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.Models.errors import InvalidParameterError
from src.RMatrix import TensorOperator, build_r, build_r_hat, check_braid, check_hecke, flip, specialize_operator
from src.Scalars import FIELD, Q


class TestBuildR:
    def test_entries_n2(self):
        r = build_r(2)
        assert len(r) == 5
        assert r.entry((1, 1), (1, 1)) == Q
        assert r.entry((1, 2), (1, 2)) == FIELD.one
        assert r.entry((2, 1), (1, 2)) == Q - 1 / Q
        assert r.entry((1, 2), (2, 1)) is None

    def test_r_hat_is_flip_times_r(self):
        assert flip(3).compose(build_r(3)) == build_r_hat(3)

    def test_identity_at_one(self):
        assert build_r(2, at_one=True) == TensorOperator.identity(2, 2)
        assert build_r_hat(2, at_one=True) == flip(2)

    def test_specialize_operator(self):
        assert specialize_operator(build_r_hat(3)) == flip(3)

    def test_invalid_size(self):
        with pytest.raises(InvalidParameterError):
            build_r(0)

    def test_json_entries(self):
        entries = build_r_hat(2).to_json()
        assert {"i": 1, "s": 2, "j": 2, "t": 1, "value": "1"} in entries
        assert entries == sorted(entries, key=lambda e: (e["i"], e["s"], e["j"], e["t"]))


class TestStructuralChecks:
    """Test the Hecke and braid relations."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_hecke(self, n):
        holds, residual = check_hecke(n)
        assert holds
        assert residual.is_zero()

    @pytest.mark.parametrize("n", [2, 3])
    def test_braid(self, n):
        holds, residual = check_braid(n)
        assert holds
        assert residual.is_zero()


class TestTensorOperator:
    def test_zero_entries_are_dropped(self):
        operator = TensorOperator(2, 1, {((1,), (1,)): FIELD.zero, ((1,), (2,)): Q})
        assert len(operator) == 1

    def test_mismatched_index(self):
        with pytest.raises(InvalidParameterError):
            TensorOperator(2, 2, {((1,), (1,)): Q})

    def test_compose_applies_right_factor_first(self):
        shift = TensorOperator(2, 1, {((2,), (1,)): FIELD.one})
        scale = TensorOperator(2, 1, {((2,), (2,)): Q})
        assert scale.compose(shift).apply({(1,): FIELD.one}) == {(2,): Q}
        assert shift.compose(scale).apply({(1,): FIELD.one}) == {}

    def test_kron(self):
        identity = TensorOperator.identity(2)
        assert identity.kron(identity) == TensorOperator.identity(2, 2)

    def test_shape_mismatch(self):
        with pytest.raises(InvalidParameterError):
            TensorOperator.identity(2, 1).compose(TensorOperator.identity(2, 2))
