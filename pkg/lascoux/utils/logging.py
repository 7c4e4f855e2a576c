"""
Structured logging setup using loguru
JSON and pretty sinks on stderr, run identifiers and execution timing
"""

import functools
import json
import os
import sys
import time
from typing import Any, Callable, Optional, TypeVar
from uuid import uuid4

from loguru import logger

F = TypeVar("F", bound=Callable[..., Any])

VALID_LEVELS = {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}
VALID_FORMATS = {"json", "pretty"}

# Current run identifier, shared by every record while a RunContext is open
_run_id: Optional[str] = None


def set_run_id(run_id: Optional[str] = None) -> str:
    """
    Set the run identifier attached to every log record.

    Args:
        run_id: Optional identifier. If None, a short UUID is generated.

    Returns:
        str: The identifier in use.
    """
    global _run_id
    _run_id = run_id or uuid4().hex[:12]
    return _run_id


def get_run_id() -> Optional[str]:
    """Return the current run identifier, if any."""
    return _run_id


def json_sink(message: Any) -> None:
    """
    loguru sink writing one JSON object per record to stderr.

    Example:
        {"timestamp": "...", "level": "INFO", "logger": "lascoux.expansion",
         "message": "expansion done", "run_id": "3f2a9c1b7d0e",
         "context": {"module": "lascoux.expansion", "terms": 18}}
    """
    record = message.record
    data = {
        "timestamp": record["time"].isoformat(),
        "level": record["level"].name,
        "logger": record["name"],
        "message": record["message"],
        "module": record["module"],
        "function": record["function"],
        "line": record["line"],
    }

    if _run_id:
        data["run_id"] = _run_id

    if record["extra"]:
        data["context"] = dict(record["extra"])

    if record["exception"]:
        data["exception"] = {
            "type": record["exception"].type.__name__,
            "message": str(record["exception"].value),
        }

    print(json.dumps(data, default=str), file=sys.stderr)


def pretty_sink(message: Any) -> None:
    """loguru sink writing a human-readable line (plus context) to stderr."""
    record = message.record

    timestamp = record["time"].strftime("%Y-%m-%d %H:%M:%S.%f")[:-3]
    level = record["level"].name
    colors = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    reset = "\033[0m"
    color = colors.get(level, reset) if sys.stderr.isatty() else ""
    end = reset if color else ""

    output = (
        f"{timestamp} | {color}{level:<8}{end} | "
        f"{record['name']}:{record['function']}:{record['line']} - {record['message']}"
    )
    if _run_id:
        output += f"\n  run_id={_run_id}"
    for key, value in record["extra"].items():
        if key != "module":
            output += f"\n  {key}={value}"
    if record["exception"]:
        exc = record["exception"]
        output += f"\n  Exception: {exc.type.__name__}: {exc.value}"

    print(output, file=sys.stderr)


def setup_logging(
    level: str = "WARNING",
    format_type: str = "pretty",
    log_file: Optional[str] = None,
) -> None:
    """
    Initialize structured logging and enable the library's log records.

    Args:
        level: Log level name. LASCOUX_LOG_LEVEL overrides it.
        format_type: "json" or "pretty". LASCOUX_LOG_FORMAT overrides it.
        log_file: Optional file receiving a copy of every record.

    Raises:
        ValueError: If level or format_type is not recognised.

    Example:
        >>> setup_logging(level="DEBUG", format_type="json")
        >>> get_logger(__name__).info("started")
    """
    level = os.getenv("LASCOUX_LOG_LEVEL", level).upper()
    format_type = os.getenv("LASCOUX_LOG_FORMAT", format_type).lower()

    if level not in VALID_LEVELS:
        raise ValueError(f"Invalid log level: {level}. Must be one of {sorted(VALID_LEVELS)}")
    if format_type not in VALID_FORMATS:
        raise ValueError(f"Invalid format type: {format_type}. Must be 'json' or 'pretty'")

    logger.remove()
    logger.add(
        json_sink if format_type == "json" else pretty_sink,
        level=level,
        format="{message}",
        colorize=False,
    )
    if log_file:
        logger.add(
            log_file,
            level=level,
            format="{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} - {message}",
            rotation="10 MB",
        )
    logger.enable("lascoux")


def get_logger(name: str) -> Any:
    """
    Get a logger bound to a module name.

    Example:
        >>> log = get_logger(__name__)
        >>> log.bind(alpha="(1,0,2)").debug("lascoux polynomial")
    """
    return logger.bind(module=name)


class RunContext:
    """
    Context manager attaching a run identifier to all records inside it.

    Example:
        >>> with RunContext() as run_id:
        ...     expand_product(alpha, w, 3)
    """

    def __init__(self, run_id: Optional[str] = None):
        self.run_id = run_id
        self.previous_id: Optional[str] = None

    def __enter__(self) -> str:
        self.previous_id = _run_id
        return set_run_id(self.run_id)

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        global _run_id
        _run_id = self.previous_id


def log_execution_time(level: str = "DEBUG") -> Callable[[F], F]:
    """
    Decorator logging the wall time of a call.

    Args:
        level: Log level for the timing record.
    """

    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start
                logger.bind(execution_time_ms=int(elapsed * 1000)).log(
                    level.upper(), f"{func.__qualname__} executed in {elapsed:.3f}s"
                )

        return wrapper  # type: ignore[return-value]

    return decorator
