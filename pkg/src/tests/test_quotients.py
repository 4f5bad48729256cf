"""
Tests for central quotients of L_q(M): Hilbert and weight tables, membership,
two-sidedness and the comparison against the classical q=1 computation.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.BraidedMatrices import trace_power
from src.FreeAlgebra import GeneratorId
from src.Models.errors import InvalidParameterError, InvalidXiSpecError
from src.Models.xi_spec import XiSpec
from src.PodlesSphere import sphere_hilbert, sphere_quotient
from src.Quotients import (
    CentralQuotient,
    check_two_sided,
    classical_oracle,
    classical_quotient,
    compare_with_oracle,
    hilbert,
    member,
    nilcone,
    nilcone_phi,
    orbit_quotient_n2,
    weight_table,
)
from src.Scalars import FIELD, Q


@pytest.fixture(scope="module")
def nilcone2():
    return nilcone(2)


class TestConstruction:
    def test_nilcone_generators(self, nilcone2):
        assert nilcone2.label == "nilcone n=2"
        assert len(nilcone2.generators) == 2
        assert all(not c for c in nilcone2.constants())

    def test_orbit_constants(self):
        qt = orbit_quotient_n2(XiSpec(2, 0, [2, 3]))
        assert qt.constants() == [2 * Q + 3 / Q, FIELD(6)]
        assert qt.to_dict()["generators"][1]["constant"] == "6"

    def test_non_central_element(self, rea2):
        with pytest.raises(InvalidParameterError):
            CentralQuotient(rea2, [(rea2.generator(GeneratorId("l", 1, 2)), 0)])

    def test_orbit_needs_n2(self):
        with pytest.raises(InvalidXiSpecError):
            orbit_quotient_n2(XiSpec(3, 0, [1, 2, 3]))
        with pytest.raises(InvalidXiSpecError):
            orbit_quotient_n2("not a spec")

    def test_nilcone_needs_n2(self):
        with pytest.raises(InvalidParameterError):
            nilcone(1)

    def test_classical_quotient_specializes_constants(self):
        qt = classical_quotient(orbit_quotient_n2(XiSpec(2, 0, [2, 3])))
        assert qt.base.at_one
        assert qt.constants() == [FIELD(5), FIELD(6)]


class TestHilbert:
    """Test Hilbert and weight tables of the quotients."""

    def test_nilcone_n2(self, nilcone2):
        assert hilbert(nilcone2, 6).dims == [1, 3, 5, 7, 9, 11, 13]

    def test_nilcone_n3(self):
        assert hilbert(nilcone(3), 3).dims == [1, 8, 35, 111]

    def test_phi_generators_give_the_same_nilcone(self, nilcone2):
        assert hilbert(nilcone_phi(2), 4) == hilbert(nilcone2, 4)

    @pytest.mark.parametrize(
        "xi",
        [XiSpec(2, 0, [2, 3]), XiSpec(2, 2, []), XiSpec(2, 1, ["q"]), XiSpec(2, 0, ["q", "q^-1"])],
    )
    def test_orbits_have_odd_dimensions(self, xi):
        assert hilbert(orbit_quotient_n2(xi), 4).dims == [1, 3, 5, 7, 9]

    def test_negative_degree(self, nilcone2):
        with pytest.raises(InvalidParameterError):
            hilbert(nilcone2, -1)

    def test_weight_table_degree_one(self, nilcone2):
        table = weight_table(nilcone2, 1)
        assert table.multiplicities == {(0, 0): 1, (1, -1): 1, (-1, 1): 1}
        assert table.total == 3

    def test_weight_tables_sum_to_hilbert(self, nilcone2):
        dims = hilbert(nilcone2, 3).dims
        assert [weight_table(nilcone2, d).total for d in range(4)] == dims


class TestOracle:
    """Test the comparison against the classical q=1 computation."""

    def test_classical_nilcone(self, nilcone2):
        table, weights = classical_oracle(nilcone2, 4)
        assert table.dims == [1, 3, 5, 7, 9]
        assert len(weights) == 5

    @pytest.mark.parametrize("quotient", [lambda: nilcone(2), lambda: orbit_quotient_n2(XiSpec(2, 0, [2, 3]))])
    def test_flatness(self, quotient):
        report = compare_with_oracle(quotient(), 4, weight_degree=2)
        assert report.passed, [r.to_dict() for r in report.failures]
        assert report.details["quantum"]["dims"] == report.details["classical"]["dims"]

    def test_flatness_n3(self):
        assert compare_with_oracle(nilcone(3), 2).passed


class TestMembership:
    def test_member(self, rea2, nilcone2):
        element = trace_power(1, 2, rea2) * rea2.generator(GeneratorId("l", 1, 2))
        assert member(element, nilcone2, 2)
        assert not member(rea2.generator(GeneratorId("l", 1, 2)), nilcone2, 2)

    def test_cap(self, rea2, nilcone2):
        element = trace_power(2, 2, rea2)
        with pytest.raises(InvalidParameterError):
            member(element, nilcone2, 1)

    def test_two_sided(self, nilcone2):
        report = check_two_sided(nilcone2, 3)
        assert report.passed
        assert len(report.results) == 4

    def test_two_sided_after_a_longer_build(self, nilcone2):
        qt = CentralQuotient(nilcone2.base, nilcone2.generators, label="nilcone copy", verify=False)
        hilbert(qt, 5)
        report = check_two_sided(qt, 3)
        assert report.passed, [r.to_dict() for r in report.failures]

    def test_member_uses_the_requested_stage(self, rea2, nilcone2):
        qt = CentralQuotient(nilcone2.base, nilcone2.generators, label="nilcone copy", verify=False)
        hilbert(qt, 5)
        span = qt.span_at(2)
        assert span.degree == 2
        assert span.ranks_by_weight(2) == qt.span().ranks_by_weight(2)
        element = trace_power(1, 2, rea2) * rea2.generator(GeneratorId("l", 1, 2))
        assert member(element, qt, 2)
        assert not member(rea2.generator(GeneratorId("l", 1, 2)), qt, 2)


class TestFlatnessAtFullDegree:
    """Test the quantum tables against the q=1 oracle at the full acceptance degrees."""

    def test_nilcone_n3(self):
        qt = nilcone(3)
        assert hilbert(qt, 3) == classical_oracle(qt, 3)[0]
        assert hilbert(qt, 3).dims == [1, 8, 35, 111]

    @pytest.mark.parametrize("xi", [XiSpec(2, 2, []), XiSpec(2, 0, [2, 3]), XiSpec(2, 1, [5])])
    def test_orbits_to_degree_five(self, xi):
        qt = orbit_quotient_n2(xi)
        assert hilbert(qt, 5) == classical_oracle(qt, 5)[0]

    def test_nilpotent_orbit_is_the_nilcone(self, rea2, nilcone2):
        orbit = orbit_quotient_n2(XiSpec(2, 2, []))
        assert all(not c for c in orbit.constants())
        assert hilbert(orbit, 5) == hilbert(nilcone2, 5)
        for k in (1, 2):
            assert member(trace_power(k, 2, rea2), orbit, 2)
        for element, _ in orbit.generators:
            assert member(element, nilcone2, 2)

    def test_weight_tables_to_degree_four(self, nilcone2):
        _, classical = classical_oracle(nilcone2, 4)
        for d in range(5):
            assert weight_table(nilcone2, d).multiplicities == classical[d].multiplicities

    def test_sphere_at_origin_matches_the_nilcone(self, nilcone2):
        dims = sphere_hilbert(sphere_quotient(0, 0), 5).dims
        assert dims == hilbert(nilcone2, 5).dims == [1, 3, 5, 7, 9, 11]
