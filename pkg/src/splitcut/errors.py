"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """An operation was refused because it would exceed a configured cap.

    Raised for vertex-count guards on the exponential engines and for the
    up-front memory estimate of the split-and-list phase.
    """
