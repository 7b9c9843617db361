"""Shared error types."""


class BudgetExceeded(RuntimeError):
    """A configured resource cap (classes, time, order) was exceeded.

    Raised instead of silently truncating results, so callers can report
    the run as incomplete rather than wrong.
    """
