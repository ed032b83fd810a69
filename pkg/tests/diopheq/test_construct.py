"""Tests for the two-part construction."""

import pytest

from denumerant.diopheq.construct import a1a2_construct
from denumerant.errors import HypothesisViolated, VerificationFailed
from denumerant.partcount import PartSet, count_value
from denumerant.polyratio import RatPoly
from denumerant.services.oracle_service import ValueOracle


class MiscountingOracle(ValueOracle):
    """Reports every check as failed."""

    def check(self, *args, **kwargs):
        step = super().check(*args, **kwargs)
        return step.model_copy(update={"ok": False})


class TestA1A2Construct:

    def test_point(self, oracle):
        parts = PartSet.of(2, 3)
        cert = a1a2_construct(parts, RatPoly([1, 1, 1]), 2, oracle)
        assert cert.point == (36, 2)
        assert cert.value == 7
        assert cert.verified
        assert count_value(parts, 36) == 7

    @pytest.mark.parametrize("parts", [(3, 5), (4, 7), (1, 9)])
    def test_counts_match(self, parts, oracle):
        part_set = PartSet.of(*parts)
        f = RatPoly([0, 1, 2])
        for m in range(1, 6):
            cert = a1a2_construct(part_set, f, m, oracle)
            assert cert.verified

    def test_non_coprime(self):
        with pytest.raises(HypothesisViolated):
            a1a2_construct(PartSet.of(2, 4), RatPoly([0, 1]), 3)

    def test_three_parts(self):
        with pytest.raises(HypothesisViolated):
            a1a2_construct(PartSet.of(1, 2, 3), RatPoly([0, 1]), 3)

    def test_value_must_exceed_one(self):
        with pytest.raises(HypothesisViolated):
            a1a2_construct(PartSet.of(2, 3), RatPoly([0, 1]), 1)

    def test_non_integral_value(self):
        with pytest.raises(HypothesisViolated):
            a1a2_construct(PartSet.of(2, 3), RatPoly([0, "1/2"]), 5)

    def test_failed_check_raises(self):
        with pytest.raises(VerificationFailed):
            a1a2_construct(PartSet.of(2, 3), RatPoly([1, 1, 1]), 2, MiscountingOracle())
