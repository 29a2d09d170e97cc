"""
Prometheus metrics collection.

The tool is short-lived, so metrics are not scraped; they are written in
the text exposition format when `metrics_file` is configured.
"""

from prometheus_client import (
    CollectorRegistry,
    Counter,
    Histogram,
    generate_latest,
    write_to_textfile,
)

from src.constants import (
    METRIC_GENERICITY_REDRAWS,
    METRIC_GROEBNER_BASES,
    METRIC_GROEBNER_DURATION,
    METRIC_SPAIR_REDUCTIONS,
    METRIC_VERDICTS,
)

# Global metrics instance
_metrics: "MetricsCollector | None" = None


class MetricsCollector:
    """
    Prometheus metrics collector for algebraic computations.

    Collects metrics for:
    - Gröbner basis completions and their duration
    - S-pair reductions
    - Genericity redraws per pipeline stage
    - Verdicts per check
    """

    def __init__(self, registry: CollectorRegistry | None = None):
        """
        Initialize the metrics collector.

        Args:
            registry: Optional custom registry. A fresh one is created if not provided.
        """
        self._registry = registry or CollectorRegistry()

        self.groebner_bases = Counter(
            METRIC_GROEBNER_BASES,
            "Total number of Groebner basis completions",
            ["order"],
            registry=self._registry,
        )

        self.spair_reductions = Counter(
            METRIC_SPAIR_REDUCTIONS,
            "Total number of S-polynomials reduced",
            registry=self._registry,
        )

        self.groebner_duration = Histogram(
            METRIC_GROEBNER_DURATION,
            "Groebner basis completion time in seconds",
            ["order"],
            buckets=(0.001, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0),
            registry=self._registry,
        )

        self.genericity_redraws = Counter(
            METRIC_GENERICITY_REDRAWS,
            "Random draws rejected by post-hoc validation",
            ["stage"],
            registry=self._registry,
        )

        self.verdicts = Counter(
            METRIC_VERDICTS,
            "Verdicts produced",
            ["kind", "verdict"],
            registry=self._registry,
        )

    def record_groebner(self, order: str, spairs: int, duration_seconds: float) -> None:
        """Record one Buchberger completion."""
        self.groebner_bases.labels(order=order).inc()
        self.spair_reductions.inc(spairs)
        self.groebner_duration.labels(order=order).observe(duration_seconds)

    def record_redraw(self, stage: str) -> None:
        """Record a rejected random draw."""
        self.genericity_redraws.labels(stage=stage).inc()

    def record_verdict(self, kind: str, verdict: str) -> None:
        """Record a verdict."""
        self.verdicts.labels(kind=kind, verdict=verdict).inc()

    def get_metrics(self) -> bytes:
        """Get all metrics in Prometheus format."""
        return generate_latest(self._registry)

    def write_textfile(self, path: str) -> None:
        """Write all metrics to a file in Prometheus text format."""
        write_to_textfile(path, self._registry)


def setup_metrics() -> MetricsCollector:
    """
    Set up and return the metrics collector.

    Returns:
        MetricsCollector: The metrics collector instance.
    """
    global _metrics
    if _metrics is None:
        _metrics = MetricsCollector()
    return _metrics


def get_metrics() -> MetricsCollector:
    """
    Get the metrics collector instance, creating it on first use.

    Returns:
        MetricsCollector: The metrics collector instance.
    """
    if _metrics is None:
        return setup_metrics()
    return _metrics
