import random

import pytest

from lascoux import verify
from lascoux.errors import DomainError, InternalAssertionError
from lascoux.verify import Check, CheckKind, PropertyOutcome, Suite, SuiteReport, Tally, run_suite


def _counting(rng: random.Random, trials: int) -> Tally:
    return Tally(passed=trials)


def _fixture(rng: random.Random, trials: int) -> Tally:
    return Tally(passed=1)


def _raising(rng: random.Random, trials: int) -> Tally:
    raise DomainError("bad sample", details={"x": 1})


def _empty(rng: random.Random, trials: int) -> Tally:
    return Tally()


@pytest.fixture
def fake_registry(monkeypatch):
    registry = {
        "counting": Check("counting", Suite.SETOPS, CheckKind.RANDOM, _counting),
        "fixture": Check("fixture", Suite.SETOPS, CheckKind.FIXTURE, _fixture),
        "other_suite": Check("other_suite", Suite.LEFTKEY, CheckKind.FIXTURE, _fixture),
    }
    monkeypatch.setattr(verify, "_REGISTRY", registry)
    return registry


class TestTally:
    def test_record(self):
        tally = Tally()
        tally.record(True, "a")
        tally.record(None, "b")
        tally.record(False, "c")
        tally.record(False, "d")
        assert (tally.passed, tally.skipped, tally.failed) == (1, 1, 2)
        assert tally.counterexample == repr("c")


class TestOutcome:
    def test_vacuous_exhaustive_check_is_not_ok(self):
        outcome = PropertyOutcome(suite=Suite.SETOPS, name="x", kind=CheckKind.EXHAUSTIVE)
        assert outcome.vacuous and not outcome.ok

    def test_random_check_without_trials_is_ok(self):
        outcome = PropertyOutcome(suite=Suite.SETOPS, name="x", kind=CheckKind.RANDOM, skipped=3)
        assert outcome.ok

    def test_report_failures(self):
        good = PropertyOutcome(suite=Suite.SETOPS, name="a", kind=CheckKind.FIXTURE, passed=1)
        bad = PropertyOutcome(suite=Suite.SETOPS, name="b", kind=CheckKind.FIXTURE, failed=1)
        report = SuiteReport(suite=Suite.SETOPS, seed=1, trials=0, outcomes=[good, bad])
        assert not report.ok
        assert report.failures == [bad]


class TestRegistry:
    def test_every_suite_has_checks(self):
        for suite in (Suite.SETOPS, Suite.LEFTKEY, Suite.INSERTION, Suite.EXPANSION):
            kinds = {c.kind for c in verify.registered_checks(suite)}
            assert CheckKind.FIXTURE in kinds or CheckKind.EXHAUSTIVE in kinds

    def test_all_is_the_union(self):
        total = sum(len(verify.registered_checks(s)) for s in Suite if s is not Suite.ALL)
        assert len(verify.registered_checks(Suite.ALL)) == total

    def test_decorator_strips_leading_underscore(self):
        assert "triangle_worked_examples" in verify._REGISTRY

    def test_duplicate_name_rejected(self):
        with pytest.raises(InternalAssertionError):
            verify.random_property("greedy_matches_recursive", Suite.SETOPS, lambda rng: None, lambda: None)


class TestRunner:
    def test_zero_trials_drops_random_checks(self, fake_registry):
        report = run_suite(Suite.SETOPS, seed=1, trials=0)
        assert [o.name for o in report.outcomes] == ["fixture"]

    def test_suite_filter_and_trials(self, fake_registry):
        report = run_suite(Suite.SETOPS, seed=1, trials=25)
        assert [o.name for o in report.outcomes] == ["counting", "fixture"]
        assert report.outcomes[0].passed == 25
        assert report.ok

    def test_all_runs_every_suite(self, fake_registry):
        report = run_suite(Suite.ALL, seed=1, trials=1)
        assert {o.suite for o in report.outcomes} == {Suite.SETOPS, Suite.LEFTKEY}

    def test_negative_trials(self, fake_registry):
        with pytest.raises(DomainError):
            run_suite(Suite.SETOPS, seed=1, trials=-1)

    def test_library_error_becomes_failure(self, fake_registry):
        fake_registry["raising"] = Check("raising", Suite.SETOPS, CheckKind.FIXTURE, _raising)
        report = run_suite(Suite.SETOPS, seed=1, trials=0)
        failure = report.failures[0]
        assert failure.name == "raising"
        assert failure.note == "DOMAIN_ERROR: bad sample"

    def test_vacuous_check_fails_the_report(self, fake_registry):
        fake_registry["empty"] = Check("empty", Suite.SETOPS, CheckKind.EXHAUSTIVE, _empty)
        assert not run_suite(Suite.SETOPS, seed=1, trials=0).ok

    def test_same_seed_same_samples(self):
        first = verify._run_check("greedy_matches_recursive", seed=9, trials=50)
        second = verify._run_check("greedy_matches_recursive", seed=9, trials=50)
        assert first == second

    def test_accepts_suite_values(self, fake_registry):
        assert run_suite("setops", seed=1, trials=0).suite is Suite.SETOPS

    def test_random_checks_redraw_samples_missing_hypotheses(self, fake_registry):
        verify.random_property("even_only", Suite.SETOPS, lambda rng: (rng.randrange(100),), lambda v: True if v % 2 == 0 else None)
        verify.random_property("never_applies", Suite.SETOPS, lambda rng: None, lambda: True)
        assert verify._run_check("even_only", seed=1, trials=50).passed == 50
        outcome = verify._run_check("never_applies", seed=1, trials=50)
        assert (outcome.passed, outcome.skipped) == (0, 50)


def test_fixture_checks_pass():
    for name in ("triangle_worked_examples", "left_key_worked_examples", "insertion_worked_examples"):
        assert verify._run_check(name, seed=1, trials=0).ok, name


def test_worked_product_verdict_labels():
    assert verify.worked_product_verdict(verify.WORKED_PRODUCT_DISPLAYED) == "18-term display"
    assert verify.worked_product_verdict(verify.WORKED_PRODUCT_WEIGHT_LIST) == "19-entry weight list"
    assert verify.worked_product_verdict(verify.ExpansionResult()) == "neither printed version"
