"""Shared utilities."""

from lascoux.utils.logging import (
    RunContext,
    get_logger,
    get_run_id,
    log_execution_time,
    setup_logging,
)

__all__ = [
    "RunContext",
    "get_logger",
    "get_run_id",
    "log_execution_time",
    "setup_logging",
]
