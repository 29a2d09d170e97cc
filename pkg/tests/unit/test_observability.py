"""
Unit tests for configuration, logging, metrics and tracing helpers.
"""

import logging
from fractions import Fraction
from pathlib import Path

import pytest
from prometheus_client import CollectorRegistry

from src.algebra.genericity import with_redraws
from src.algebra.ring import Ring
from src.config import get_settings
from src.errors import GenericityError, RedrawsExhaustedError
from src.observability.logging import MAX_VALUE_CHARS, render_algebra, setup_logging
from src.observability.metrics import MetricsCollector, get_metrics
from src.observability.tracing import create_span, setup_tracing


class TestSettings:
    """Tests for environment configuration."""

    def test_defaults(self):
        """Budgets default to small values."""
        settings = get_settings()
        assert settings.acm_retry_budget == 5
        assert settings.projection_retry_budget == 5
        assert settings.default_seed == 0
        assert settings.metrics_file is None

    def test_environment_override(self, monkeypatch: pytest.MonkeyPatch):
        """Environment variables override defaults."""
        monkeypatch.setenv("ACM_RETRY_BUDGET", "7")
        monkeypatch.setenv("DEFAULT_SEED", "11")
        get_settings.cache_clear()
        settings = get_settings()
        assert settings.acm_retry_budget == 7
        assert settings.default_seed == 11


class TestMetrics:
    """Tests for the metrics collector."""

    def test_records(self):
        """Counters appear in the exposition output."""
        metrics = MetricsCollector(CollectorRegistry())
        metrics.record_groebner("grevlex", 12, 0.02)
        metrics.record_redraw("acm")
        metrics.record_verdict("18", "holds_strict")
        text = metrics.get_metrics().decode()
        assert 'groebner_bases_total{order="grevlex"} 1.0' in text
        assert "spair_reductions_total 12.0" in text
        assert 'genericity_redraws_total{stage="acm"} 1.0' in text
        assert 'verdicts_total{kind="18",verdict="holds_strict"} 1.0' in text

    def test_write_textfile(self, tmp_path: Path):
        """Metrics are written in the text format."""
        metrics = MetricsCollector(CollectorRegistry())
        metrics.record_redraw("center")
        target = tmp_path / "metrics.prom"
        metrics.write_textfile(str(target))
        assert "genericity_redraws_total" in target.read_text()

    def test_redraws_are_counted(self):
        """Each rejected draw increments the global counter."""
        counter = get_metrics().genericity_redraws.labels(stage="counted_stage")
        before = counter._value.get()

        def action(seed: int) -> int:
            raise GenericityError("counted_stage", "bad", seed)

        with pytest.raises(RedrawsExhaustedError):
            with_redraws(action, 0, 3)
        assert counter._value.get() == before + 3


class TestTracing:
    """Tests for span creation."""

    def test_span_without_setup(self):
        """Spans work with the default no-op provider."""
        with create_span("unit_test_span", seed=0, skipped=None):
            pass

    def test_setup_is_idempotent(self):
        """A second setup reuses the installed provider."""
        setup_tracing()
        setup_tracing()
        with create_span("unit_test_span", degree=2):
            pass


class TestLogging:
    """Tests for the logging processors."""

    def test_render_algebra(self, p2: Ring):
        """Polynomials and fractions become strings, plain values pass through."""
        t0, t1, _ = p2.gens
        event = render_algebra(
            None,
            "info",
            {"event": "Field projected", "seed": 3, "eliminant": t0**2 - t1**2, "ratio": Fraction(1, 2)},
        )
        assert event["seed"] == 3
        assert event["ratio"] == "1/2"
        assert isinstance(event["eliminant"], str)
        assert "t0" in event["eliminant"]

    def test_long_values_truncated(self, p3: Ring):
        """Large polynomials are cut to a bounded length."""
        big = sum(p3.gens, p3.zero) ** 6
        event = render_algebra(None, "info", {"event": "x", "forms": [big]})
        assert len(event["forms"][0]) <= MAX_VALUE_CHARS

    def test_setup_logging_to_stderr(self, capsys):
        """Records go to stderr only."""
        root = logging.getLogger()
        handlers, level = root.handlers, root.level
        setup_logging("INFO")
        try:
            logging.getLogger("src.test").info("Draw rejected", extra={"stage": "acm", "seed": 1})
            captured = capsys.readouterr()
        finally:
            root.handlers, root.level = handlers, level
        assert captured.out == ""
        assert "Draw rejected" in captured.err
        assert "stage" in captured.err
