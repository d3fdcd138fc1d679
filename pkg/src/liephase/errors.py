"""Exceptions shared across the package."""

from __future__ import annotations


class LiePhaseError(Exception):
    """Base class for errors raised by this package."""


class InsufficientPrecisionError(LiePhaseError):
    """An operation needs more tracked series precision than is available.

    Precision is a hard contract here: results are exact through the tracked
    degree and unknown beyond it, so an operation that would have to look past
    the tracked degree refuses to run instead of silently truncating.
    """

    def __init__(self, needed: int, available: int, what: str = "", min_order: int | None = None):
        self.needed = needed
        self.available = available
        self.what = what
        # Smallest starting truncation order that would make the call succeed,
        # when the caller can estimate it.
        self.min_order = min_order
        msg = f"need precision >= {needed}, have {available}"
        if what:
            msg += f" ({what})"
        if min_order is not None:
            msg += f"; rerun with truncation order N >= {min_order}"
        super().__init__(msg)
