"""Campaign engine: registry, configuration validation, determinism,
parallel agreement, budgets, and honest failure reporting."""

import json

import pytest

from osdrazin.campaigns import (
    EXIT_BUDGET,
    EXIT_FAIL,
    EXIT_PASS,
    REGISTRY,
    BadCampaignConfig,
    CampaignConfig,
    TheoremEntry,
    UnknownTheorem,
    list_theorems,
    run_campaign,
    validate_config,
)
from osdrazin.witnesses import VerificationReport

ALL_THEOREMS = [
    "core-predicates",
    "prop-1.4",
    "prop-2.1",
    "prop-2.2",
    "thm-2.4",
    "thm-2.7-audit",
    "thm-3-regular-left",
    "thm-3-regular-right",
    "thm-3-strong-pi-left",
    "thm-3.5-left",
    "thm-3-group-left",
    "thm-3.6-left",
    "pi-binomial-probe",
    "prop-cline-left",
    "prop-cline-right",
    "cor-3.10",
    "cor-3.11",
    "thm-4.0-left",
    "thm-4.1-left",
    "thm-4.2-left",
    "thm-4.3-left",
    "thm-4.5-left",
    "thm-4-exhaustive-audit",
    "cor-4.7",
]


def _smoke_config(theorem: str) -> CampaignConfig:
    entry = REGISTRY[theorem]
    if theorem == "thm-4-exhaustive-audit":
        return CampaignConfig(theorem=theorem, trials=1, dim=2, scalar="mod:2")
    if entry.needs_finite:
        return CampaignConfig(theorem=theorem, trials=1, dim=2, scalar="mod:2")
    return CampaignConfig(theorem=theorem, trials=2, dim=2, seed=7)


class TestRegistry:
    def test_all_expected_ids_registered(self):
        assert sorted(REGISTRY) == sorted(ALL_THEOREMS)
        assert len(REGISTRY) == 24

    def test_listing_preserves_order_and_statements(self):
        listed = list_theorems()
        assert [t for t, _ in listed] == ALL_THEOREMS
        assert all(stmt.strip() for _, stmt in listed)

    def test_family_whitelists(self):
        quad = REGISTRY["thm-3.5-left"]
        assert quad.accepts_family("default")
        assert quad.accepts_family("classical")
        assert not quad.accepts_family("idempotent")
        pair = REGISTRY["thm-4.2-left"]
        assert pair.accepts_family("planted")
        assert not pair.accepts_family("classical")
        audit = REGISTRY["thm-4-exhaustive-audit"]
        assert audit.accepts_family("n=2")
        assert not audit.accepts_family("n=0")
        assert not audit.accepts_family("n=х")  # non-ascii digit rejected
        assert not audit.accepts_family("whatever")


class TestValidateConfig:
    def test_unknown_theorem(self):
        with pytest.raises(UnknownTheorem, match="registered:"):
            validate_config(CampaignConfig(theorem="thm-nope"))

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"trials": 0},
            {"dim": 0},
            {"budget_seconds": 0},
            {"budget_seconds": -2.0},
            {"scalar": "mod:1"},
            {"scalar": "septonions"},
            {"family": "idempotent"},
        ],
    )
    def test_bad_configs_rejected(self, kwargs):
        cfg = CampaignConfig(theorem="thm-3.5-left", **kwargs)
        with pytest.raises(BadCampaignConfig):
            validate_config(cfg)

    def test_finite_ring_required_for_audits(self):
        for theorem in ("thm-2.7-audit", "thm-4-exhaustive-audit"):
            with pytest.raises(BadCampaignConfig, match="mod:m"):
                validate_config(CampaignConfig(theorem=theorem, scalar="rational"))

    def test_valid_config_returns_entry(self):
        entry = validate_config(CampaignConfig(theorem="prop-1.4"))
        assert entry.theorem == "prop-1.4"


class TestRunCampaign:
    def test_small_campaign_passes(self):
        cfg = CampaignConfig(theorem="core-predicates", trials=5, dim=2)
        doc, status = run_campaign(cfg)
        assert status == EXIT_PASS
        assert doc["exit_status"] == EXIT_PASS
        assert doc["kind"] == "campaign-report"
        assert doc["trials_requested"] == 5
        assert doc["trials_run"] == 5
        assert doc["passes"] == 5
        assert doc["failures"] == 0
        assert doc["failure_details"] == []
        assert doc["budget_exhausted"] is False
        assert doc["config"]["seed"] == 0

    def test_whole_run_forces_single_trial(self):
        cfg = CampaignConfig(
            theorem="thm-2.7-audit", trials=50, dim=1, scalar="mod:6"
        )
        doc, status = run_campaign(cfg)
        assert status == EXIT_PASS
        assert doc["trials_requested"] == 1
        assert doc["trials_run"] == 1
        assert doc["indices_observed"]["elements_audited"] == {"6": 1}

    def test_byte_identical_determinism(self):
        cfg = CampaignConfig(theorem="thm-3.5-left", trials=6, dim=2, seed=11)
        doc1, _ = run_campaign(cfg)
        doc2, _ = run_campaign(cfg)
        blob1 = json.dumps(doc1, sort_keys=True)
        blob2 = json.dumps(doc2, sort_keys=True)
        assert blob1 == blob2

    def test_seed_changes_outcome_stream(self):
        doc1, _ = run_campaign(
            CampaignConfig(theorem="thm-3.5-left", trials=6, dim=2, seed=1)
        )
        doc2, _ = run_campaign(
            CampaignConfig(theorem="thm-3.5-left", trials=6, dim=2, seed=2)
        )
        assert doc1["config"]["seed"] != doc2["config"]["seed"]
        # both pass regardless of the sampled instances
        assert doc1["exit_status"] == doc2["exit_status"] == EXIT_PASS

    def test_parallel_matches_serial(self, monkeypatch):
        cfg = CampaignConfig(theorem="thm-3.5-left", trials=4, dim=2, seed=3)
        monkeypatch.delenv("OSDRAZIN_THREADS", raising=False)
        serial, _ = run_campaign(cfg)
        monkeypatch.setenv("OSDRAZIN_THREADS", "2")
        parallel, _ = run_campaign(cfg)
        assert json.dumps(serial, sort_keys=True) == json.dumps(
            parallel, sort_keys=True
        )

    def test_bad_thread_count_rejected(self, monkeypatch):
        monkeypatch.setenv("OSDRAZIN_THREADS", "two")
        with pytest.raises(BadCampaignConfig):
            run_campaign(CampaignConfig(theorem="core-predicates", trials=1, dim=1))

    def test_budget_exhaustion_is_reported(self):
        cfg = CampaignConfig(
            theorem="thm-3.5-left", trials=10**6, dim=3, budget_seconds=0.05
        )
        doc, status = run_campaign(cfg)
        assert status == EXIT_BUDGET
        assert doc["budget_exhausted"] is True
        assert doc["trials_run"] < doc["trials_requested"]
        assert any("budget exhausted" in note for note in doc["notes"])

    def test_index_histogram_shape(self):
        cfg = CampaignConfig(theorem="thm-3.5-left", trials=8, dim=2, seed=5)
        doc, _ = run_campaign(cfg)
        hist = doc["indices_observed"]["witness-index"]
        assert sum(hist.values()) == 8
        assert all(int(k) >= 0 for k in hist)

    def test_failure_reported_honestly(self):
        def failing_runner(cfg, rng):
            report = VerificationReport(instance_id=f"forced-{rng.randint(0, 9)}")
            report.check("always-true", True)
            report.check("forced-failure", rng.random() < 0.5)
            return report

        entry = TheoremEntry(
            "zz-test-forced-failure", "deliberately flaky entry", failing_runner
        )
        REGISTRY[entry.theorem] = entry
        try:
            cfg = CampaignConfig(theorem=entry.theorem, trials=20, dim=1, seed=0)
            doc, status = run_campaign(cfg)
            assert status == EXIT_FAIL
            assert doc["failures"] >= 1
            assert doc["passes"] + doc["failures"] == 20
            detail = doc["failure_details"][0]
            assert detail["report"]["ok"] is False
            failed = [
                name
                for name, good in detail["report"]["checks"]
                if not good
            ]
            assert failed == ["forced-failure"]
        finally:
            del REGISTRY[entry.theorem]

    def test_exceptions_become_failures_not_crashes(self):
        def crashing_runner(cfg, rng):
            raise ZeroDivisionError("synthetic crash")

        entry = TheoremEntry(
            "zz-test-crash", "deliberately crashing entry", crashing_runner
        )
        REGISTRY[entry.theorem] = entry
        try:
            doc, status = run_campaign(
                CampaignConfig(theorem=entry.theorem, trials=2, dim=1)
            )
            assert status == EXIT_FAIL
            assert doc["failures"] == 2
            report = doc["failure_details"][0]["report"]
            assert ("no-exception", False) in [
                tuple(c) for c in report["checks"]
            ]
            assert any("ZeroDivisionError" in n for n in doc["notes"])
        finally:
            del REGISTRY[entry.theorem]


class TestEveryTheoremSmoke:
    @pytest.mark.parametrize("theorem", ALL_THEOREMS)
    def test_runs_green(self, theorem):
        doc, status = run_campaign(_smoke_config(theorem))
        assert status == EXIT_PASS, json.dumps(doc["failure_details"], indent=2)[
            :2000
        ]
        assert doc["passes"] == doc["trials_run"]

    @pytest.mark.parametrize(
        "theorem,scalar",
        [
            ("core-predicates", "gaussian"),
            ("thm-3.5-left", "mod:5"),
            ("thm-4.2-left", "mod:7"),
            ("cor-3.10", "gaussian"),
        ],
    )
    def test_alternate_scalars(self, theorem, scalar):
        cfg = CampaignConfig(theorem=theorem, trials=2, dim=2, scalar=scalar)
        doc, status = run_campaign(cfg)
        assert status == EXIT_PASS
