"""Exceptions shared across the package."""


class DomainError(ValueError):
    """Parameters fall outside the region where a representation is valid.

    The message names the violated condition, e.g. ``"Re(s) > 0"``.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        msg = f"domain violation: requires {condition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class PoleError(DomainError):
    """Evaluation requested at (or too close to) a pole."""

    def __init__(self, where, detail=""):
        self.where = where
        ValueError.__init__(self, f"pole at {where}" + (f" ({detail})" if detail else ""))
        self.condition = f"argument away from pole at {where}"
