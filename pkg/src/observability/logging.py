"""
Structured logging for the toolkit.

Reports go to standard output; everything logged here goes to standard
error so reports stay byte-identical across runs. Library modules log with
`logging.getLogger(__name__)` and pass polynomials, scalars and seeds through
`extra`; the processors below make those values printable.
"""

import logging
import sys
from fractions import Fraction
from typing import Any

import structlog
from opentelemetry import trace

from src.config import get_settings

# Longest rendering of a single value in a log line
MAX_VALUE_CHARS = 200


def _plain(value: Any) -> Any:
    if isinstance(value, bool | int | float | str) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    # Polynomials are dict subclasses and render as text below
    if type(value) is dict:
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, list | tuple | set | frozenset):
        return [_plain(v) for v in value]
    text = str(value)
    if len(text) > MAX_VALUE_CHARS:
        text = text[: MAX_VALUE_CHARS - 3] + "..."
    return text


def render_algebra(logger: Any, method_name: str, event_dict: dict[str, Any]) -> dict[str, Any]:
    """Turn polynomials, domain elements and containers of them into plain values."""
    return {
        key: value if key == "event" or key.startswith("_") else _plain(value)
        for key, value in event_dict.items()
    }


def add_trace_context(logger: Any, method_name: str, event_dict: dict[str, Any]) -> dict[str, Any]:
    """Attach the current trace and span ids when a span is recording."""
    span = trace.get_current_span()
    if span and span.is_recording():
        ctx = span.get_span_context()
        event_dict["trace_id"] = format(ctx.trace_id, "032x")
        event_dict["span_id"] = format(ctx.span_id, "016x")
    return event_dict


def setup_logging(level: str | None = None) -> None:
    """
    Route stdlib and structlog records through one stderr handler.

    Args:
        level: Level name overriding LOG_LEVEL.
    """
    settings = get_settings()
    log_level = getattr(logging, (level or settings.log_level).upper(), logging.WARNING)

    shared_processors: list[Any] = [
        structlog.contextvars.merge_contextvars,
        add_trace_context,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.stdlib.ExtraAdder(),
        render_algebra,
    ]

    if settings.log_format == "json":
        renderer: Any = structlog.processors.JSONRenderer(sort_keys=True)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[*shared_processors, structlog.stdlib.ProcessorFormatter.wrap_for_formatter],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    formatter = structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=shared_processors,
        processors=[structlog.stdlib.ProcessorFormatter.remove_processors_meta, renderer],
    )
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.handlers = [handler]
    root_logger.setLevel(log_level)


def bind_context(**kwargs: Any) -> None:
    """Bind `command`, `seed` and similar keys to every following record."""
    structlog.contextvars.bind_contextvars(**kwargs)


def clear_context() -> None:
    structlog.contextvars.clear_contextvars()
