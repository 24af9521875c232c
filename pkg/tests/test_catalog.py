"""Structure and runner semantics of the identity catalog.

Numerical content of the entries is exercised in test_acceptance; here we
check the registry invariants and the filter/failure behavior of the runner.
"""

import pytest
from mpmath import mpf

from stieltjes import catalog
from stieltjes.catalog import (
    ALLOWED_TAGS,
    EntryOutcome,
    IdentityEntry,
    IdentityReport,
    all_entries,
    register,
    run_catalog,
)
from stieltjes.precision import DEFAULT_CONTEXT as CTX


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------

class TestCensus:
    def test_total_and_slow_counts(self):
        es = all_entries()
        assert len(es) == 71
        assert sum(1 for e in es if "slow" in e.tags) == 3

    def test_ids_unique(self):
        ids = [e.id for e in all_entries()]
        assert len(ids) == len(set(ids))

    def test_registration_order_stable(self):
        assert [e.id for e in all_entries()] == [e.id for e in all_entries()]

    def test_every_id_starts_with_its_anchor(self):
        for e in all_entries():
            assert e.id.startswith(e.paper_anchor)

    def test_tags_and_tolerances_validated(self):
        for e in all_entries():
            assert e.tags <= ALLOWED_TAGS
            assert e.lhs_route != e.rhs_route
            if e.tolerance is not None:
                assert e.tolerance_note
                assert mpf(e.tolerance) > 0

    def test_descriptions_present(self):
        for e in all_entries():
            assert e.description.strip()

    def test_most_entries_run_at_default_tolerance(self):
        assert sum(1 for e in all_entries() if e.tolerance is None) >= 30


# ---------------------------------------------------------------------------
# entry validation
# ---------------------------------------------------------------------------

def _dummy(ctx):
    return mpf(1)


class TestEntryValidation:
    def test_shared_route_label_rejected(self):
        with pytest.raises(ValueError, match="share route label"):
            IdentityEntry(id="X-1", description="d", paper_anchor="X-1",
                          lhs=_dummy, rhs=_dummy,
                          lhs_route="same", rhs_route="same",
                          tags=frozenset({"series"}))

    def test_unknown_tag_rejected(self):
        with pytest.raises(ValueError, match="unknown tags"):
            IdentityEntry(id="X-2", description="d", paper_anchor="X-2",
                          lhs=_dummy, rhs=_dummy,
                          lhs_route="a", rhs_route="b",
                          tags=frozenset({"sneaky"}))

    def test_tolerance_without_note_rejected(self):
        with pytest.raises(ValueError, match="needs a note"):
            IdentityEntry(id="X-3", description="d", paper_anchor="X-3",
                          lhs=_dummy, rhs=_dummy,
                          lhs_route="a", rhs_route="b",
                          tags=frozenset({"series"}),
                          tolerance="1e-10")

    def test_duplicate_id_rejected_by_register(self):
        all_entries()
        snapshot = list(catalog._REGISTRY)
        try:
            with pytest.raises(ValueError, match="duplicate entry id"):
                register(IdentityEntry(
                    id="I-6.21", description="d", paper_anchor="I-6.21",
                    lhs=_dummy, rhs=_dummy,
                    lhs_route="a", rhs_route="b",
                    tags=frozenset({"series"})))
        finally:
            catalog._REGISTRY[:] = snapshot


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

class TestRunner:
    def test_id_filter_runs_one_entry(self):
        report = run_catalog("I-6.21", ctx=CTX)
        assert isinstance(report, IdentityReport)
        assert report.total == 1
        out = report.outcomes[0]
        assert isinstance(out, EntryOutcome)
        assert out.entry_id == "I-6.21"
        assert out.paper_anchor == "I-6.21"
        assert out.passed
        assert out.failure is None
        assert out.abs_error <= out.tolerance
        assert out.elapsed_ms > 0

    def test_anchor_filter_groups_variants(self):
        report = run_catalog("I-2.10", ctx=CTX)
        assert report.total == 3
        assert {o.entry_id for o in report.outcomes} \
            == {"I-2.10a", "I-2.10b", "I-2.10c"}

    def test_unknown_filter_raises(self):
        with pytest.raises(ValueError, match="not a tag or entry id"):
            run_catalog("I-99.99", ctx=CTX)

    def test_tag_filter_selects_subset(self):
        es = all_entries()
        want = {e.id for e in es
                if "limit" in e.tags and "slow" not in e.tags}
        report = run_catalog("limit", ctx=CTX)
        assert {o.entry_id for o in report.outcomes} == want

    def test_slow_skipped_by_default(self):
        es = all_entries()
        slow_ids = {e.id for e in es if "slow" in e.tags}
        report = run_catalog("series", ctx=CTX)
        assert not ({o.entry_id for o in report.outcomes} & slow_ids)

    def test_id_filter_forces_slow(self):
        # naming a slow entry directly must run it; use the cheapest one
        report = run_catalog("I-8.5", ctx=CTX)
        assert report.total == 1
        assert report.outcomes[0].passed

    def test_failure_captured_not_raised(self):
        all_entries()
        snapshot = list(catalog._REGISTRY)

        def boom(ctx):
            raise RuntimeError("deliberate")

        try:
            register(IdentityEntry(
                id="X-broken", description="raises on purpose",
                paper_anchor="X-broken",
                lhs=boom, rhs=_dummy,
                lhs_route="a", rhs_route="b",
                tags=frozenset({"series"})))
            report = run_catalog("X-broken", ctx=CTX)
        finally:
            catalog._REGISTRY[:] = snapshot
        assert report.total == 1
        out = report.outcomes[0]
        assert not out.passed
        assert out.failure == "RuntimeError: deliberate"
        assert out.lhs_value is None and out.abs_error is None
        assert report.failed == 1

    def test_report_counters(self):
        report = run_catalog("I-3.10", ctx=CTX)
        assert report.total == report.passed + report.failed
        assert report.total == 10
        assert report.failed == 0
