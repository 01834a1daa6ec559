import pytest

from softguess.cli.selftest import PROPERTIES, SelftestContext, exponent_limits, run_selftest
from softguess.core.pmf import make_pmf


class TestSelftest:

    def test_quick_run_passes(self):
        summary = run_selftest(seed=3, quick=True)
        failures = [(r.name, r.detail) for r in summary.properties if not r.passed]
        assert summary.passed, failures
        assert summary.failed is None
        assert {r.name for r in summary.properties} == {name for name, _, q in PROPERTIES if q}

    def test_extra_pmf(self):
        summary = run_selftest(seed=0, quick=True, extra=make_pmf([0.4, 0.3, 0.2, 0.1]))
        assert summary.passed

    @pytest.mark.slow
    def test_full_run_passes(self):
        summary = run_selftest(seed=0)
        assert summary.passed, summary.failed
        assert len(summary.properties) == len(PROPERTIES)

    @pytest.mark.slow
    def test_exponent_limits_on_uniform_bases(self):
        detail = exponent_limits(SelftestContext())
        assert "uniform bases" in detail
        assert "(1.0, 4.0)" in detail
