"""Tests for the registry of claimed families."""

import pytest

from denumerant.diopheq.registry import (
    P3P4_FAMILIES,
    REGISTRY,
    registry_keys,
    run_entry,
    verify_family_registry,
)
from denumerant.errors import UnknownSelection
from denumerant.models.report import CheckStatus


def _entry(key):
    return next(entry for entry in REGISTRY if entry.key == key)


class TestRegistry:

    def test_keys_are_unique(self):
        keys = registry_keys()
        assert len(keys) == len(set(keys))
        assert {"p3p4_families", "h_vanishes", "a9_obstruction"} <= set(keys)

    def test_h_vanishes(self, oracle):
        result = run_entry(_entry("h_vanishes"), limit=3, oracle=oracle)
        assert result.status == CheckStatus.PASS
        assert result.checked == 3

    def test_nine_obstruction(self, oracle):
        result = run_entry(_entry("a9_obstruction"), oracle=oracle)
        assert result.status == CheckStatus.PASS

    def test_p4_12n8_erratum(self, oracle):
        result = run_entry(_entry("p4_12n8_squares"), limit=200, oracle=oracle)
        assert result.status == CheckStatus.PASS
        assert result.errata

    def test_p3p4_families_with_printed_erratum(self, oracle):
        result = run_entry(_entry("p3p4_families"), limit=4, oracle=oracle)
        assert result.status == CheckStatus.PASS
        assert any("y = 2(t-1)t" in text for text in result.errata)

    def test_type_two_even_family(self):
        m_of_t, n_of_t = P3P4_FAMILIES[("II", 0, 0)]
        assert (m_of_t.evaluate_int(2), n_of_t.evaluate_int(2)) == (7, 2)

    def test_pattern_selection(self, oracle):
        results = verify_family_registry("h_*", {"h_vanishes": 2}, oracle)
        assert [r.key for r in results] == ["h_vanishes"]

    def test_unknown_pattern(self):
        with pytest.raises(UnknownSelection):
            verify_family_registry("no_such_entry")

    @pytest.mark.slow
    def test_full_registry(self, oracle):
        results = verify_family_registry(oracle=oracle)
        assert all(r.status != CheckStatus.FAIL or r.informational for r in results)
