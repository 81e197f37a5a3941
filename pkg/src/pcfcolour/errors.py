"""Shared exception and warning types."""


class RestartsExhausted(RuntimeError):
    """A randomized routine used up its restart budget without an accepted
    outcome. Carries the attempt count in ``attempts``."""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


class StrictModeWarning(UserWarning):
    """Parameters fall outside the hypotheses that back the guarantees; the
    run proceeds, but success becomes an empirical matter."""
