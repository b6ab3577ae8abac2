"""
Exception hierarchy shared by services, the CLI and the HTTP layer
"""
from typing import Optional


class SigmaKError(Exception):
    """Base class for every error raised on purpose by this package"""


class GraphError(SigmaKError, ValueError):
    """Invalid graph construction or graph argument"""


class OrderOverflowError(GraphError):
    """A graph would exceed the 64-vertex cap"""


class Graph6FormatError(GraphError):
    """Malformed or truncated graph6 text"""


class NotAnEdgeError(GraphError):
    """An edge operation was given a non-adjacent pair"""


class GuardExceededError(SigmaKError, ValueError):
    """A size guard was exceeded; `setting` names the override when there is one"""

    def __init__(self, what: str, value: int, limit: int, setting: Optional[str] = None, below: bool = False):
        self.what = what
        self.value = value
        self.limit = limit
        self.setting = setting
        if below:
            message = f"{what}: {value} is below the minimum {limit}"
            hint = f" (lower {setting} to override)"
        else:
            message = f"{what}: {value} exceeds the limit {limit}"
            hint = f" (raise {setting} to override)"
        if setting:
            message += hint
        super().__init__(message)


class CountOverflowError(SigmaKError, ArithmeticError):
    """A checked Count left its range or an exact division left a remainder"""
