"""Tests for the bounded brute-force search."""

import pytest

from denumerant.diopheq.search import brute_force_search
from denumerant.errors import BudgetExceeded
from denumerant.models.certificates import CertificateKind
from denumerant.suite import P3P5_SOLUTIONS


class TestBruteForce:

    def test_p3_p5_solutions(self, p3, p5):
        certs = brute_force_search(p3, p5, 20_000, 1_000)
        assert sorted(cert.point for cert in certs) == sorted(P3P5_SOLUTIONS)

    def test_ordered_by_value(self, p3, p4):
        certs = brute_force_search(p3, p4, 60, 60)
        assert [c.value for c in certs] == sorted(c.value for c in certs)
        assert all(c.kind == CertificateKind.POINT and c.verified for c in certs)

    def test_p3_p4_point(self, p3, p4, cache):
        certs = brute_force_search(p3, p4, 50, 30, cache=cache)
        by_point = {cert.point: cert.value for cert in certs}
        assert by_point[(49, 27)] == 225

    def test_positive_excludes_origin(self, p3, p4):
        assert (0, 0) not in {c.point for c in brute_force_search(p3, p4, 5, 5)}
        assert (0, 0) in {
            c.point for c in brute_force_search(p3, p4, 5, 5, positive=False)
        }

    def test_budget(self, p3, p4):
        with pytest.raises(BudgetExceeded):
            brute_force_search(p3, p4, 1_000, 1_000, budget=1_500)

    def test_negative_bound(self, p3, p4):
        with pytest.raises(ValueError):
            brute_force_search(p3, p4, -1, 10)
