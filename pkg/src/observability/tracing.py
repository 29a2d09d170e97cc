"""
OpenTelemetry spans around the expensive pipelines.

Spans are opened unconditionally; without `setup_tracing` they go to the
no-op provider. `TRACE_CONSOLE=true` prints finished spans to stderr.
"""

import sys
from typing import Any

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import ConsoleSpanExporter, SimpleSpanProcessor
from opentelemetry.trace import Tracer

from src import __version__
from src.config import get_settings

_provider: TracerProvider | None = None


def setup_tracing(enable_console_export: bool = False) -> Tracer:
    """
    Install the SDK provider once per process.

    Args:
        enable_console_export: Export finished spans to standard error.
    """
    global _provider
    settings = get_settings()
    if _provider is None:
        resource = Resource.create(
            {"service.name": settings.service_name, "service.version": __version__}
        )
        _provider = TracerProvider(resource=resource)
        if enable_console_export:
            _provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanExporter(out=sys.stderr)))
        trace.set_tracer_provider(_provider)
    return get_tracer()


def get_tracer() -> Tracer:
    return trace.get_tracer(get_settings().service_name, __version__)


def _attribute(value: Any) -> bool | int | float | str:
    # Polynomials, orders and enums are recorded by their text form
    if isinstance(value, bool | int | float | str):
        return value
    return str(value)


def create_span(name: str, **attributes: Any) -> Any:
    """
    Open a span named after a pipeline stage.

    Args:
        name: One of the SPAN_* constants.
        **attributes: Seeds, degrees, dimensions; None values are skipped.

    Returns:
        A context manager for the span.
    """
    clean = {key: _attribute(value) for key, value in attributes.items() if value is not None}
    return get_tracer().start_as_current_span(name, attributes=clean)
