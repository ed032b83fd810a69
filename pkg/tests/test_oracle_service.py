"""Tests for the exact value oracle."""

from denumerant.models.certificates import (
    CertificateKind,
    EquationKind,
    EvaluationRoute,
    SolutionCertificate,
)
from denumerant.partcount import PartSet
from denumerant.services.oracle_service import ValueOracle, verify_certificate


class TestValueOracle:

    def test_dp_route(self, oracle, p3):
        assert oracle.evaluate(p3, 100) == (884, EvaluationRoute.DP)

    def test_quasi_route(self, p3):
        oracle = ValueOracle(dp_budget=10)
        assert oracle.evaluate(p3, 100) == (884, EvaluationRoute.QUASI)

    def test_peel_route(self, p3):
        oracle = ValueOracle(prefer_peel=True)
        assert oracle.evaluate(p3, 20) == (44, EvaluationRoute.PEEL)

    def test_negative_argument(self, oracle, p3):
        assert oracle.value(p3, -1) == 0

    def test_sample_matches_value(self, p4):
        oracle = ValueOracle(prefer_peel=True)
        xs = [0, 5, 17, 40]
        assert oracle.sample(p4, xs) == [ValueOracle().value(p4, x) for x in xs]

    def test_check_equal_values(self, oracle, p3, p4):
        step = oracle.check(EquationKind.EQUAL_VALUES, p3, p4, 49, 27)
        assert step.ok
        assert step.value == 225

    def test_check_square(self, oracle, p5):
        assert oracle.check(EquationKind.SQUARE, p5, None, 2027, 77129).ok
        assert not oracle.check(EquationKind.SQUARE, p5, None, 2027, 77128).ok


class TestVerifyCertificate:

    def _point(self, point, value):
        return SolutionCertificate(
            equation="P_{1,2,3}(x) = P_{1,2,3,4}(y)",
            equation_kind=EquationKind.EQUAL_VALUES,
            left=PartSet.first(3),
            right=PartSet.first(4),
            kind=CertificateKind.POINT,
            point=point,
            value=value,
        )

    def test_valid_point(self):
        assert verify_certificate(self._point((49, 27), 225))

    def test_wrong_value(self):
        assert not verify_certificate(self._point((49, 27), 224))

    def test_wrong_point(self):
        assert not verify_certificate(self._point((49, 26), None))
