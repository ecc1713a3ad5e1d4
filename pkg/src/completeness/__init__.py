"""Complete sets, completions and minimal generating sets."""

from .complete import CompletionReport, completion_report, is_complete, minimal_generating_sets

__all__ = [
    # Types
    "CompletionReport",
    # Operations
    "completion_report",
    "is_complete",
    "minimal_generating_sets",
]
