"""Shared exception types."""

from __future__ import annotations


class GuardExceeded(RuntimeError):
    """A computation would exceed its iteration guard.

    Guards count loop iterations, not wall-clock time, so whether a call
    trips one is deterministic for given arguments.  ``needed`` is the exact
    iteration count the call would require, ``limit`` the active guard.
    """

    def __init__(self, what: str, needed: int, limit: int):
        self.what = what
        self.needed = needed
        self.limit = limit
        super().__init__(
            f"{what}: {needed} iterations needed, guard is {limit}"
        )
