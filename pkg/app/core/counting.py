"""
Checked Count arithmetic

Counts are plain Python ints; every public result passes through
`checked_count` so a value outside [0, 2**COUNT_BITS) is a hard error.
"""
from typing import Optional

from app.core.config import settings
from app.core.exceptions import CountOverflowError, GuardExceededError

Count = int


def checked_count(value: int) -> Count:
    if value < 0:
        raise CountOverflowError(f"Count cannot be negative: {value}")
    if value >= settings.count_limit:
        raise CountOverflowError(
            f"Count overflow: value has {value.bit_length()} bits, limit is {settings.COUNT_BITS}"
        )
    return value


def exact_div(numerator: int, denominator: int) -> int:
    """Integer division that refuses to truncate"""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise CountOverflowError(
            f"Inexact division: {numerator} is not a multiple of {denominator}"
        )
    return quotient


def ensure_within(what: str, value: int, limit: int, setting: str) -> None:
    """Raise GuardExceededError when value > limit"""
    if value > limit:
        raise GuardExceededError(what, value, limit, setting)


def ensure_at_least(what: str, value: int, minimum: int, setting: Optional[str] = None) -> None:
    """Raise GuardExceededError when value < minimum"""
    if value < minimum:
        raise GuardExceededError(what, value, minimum, setting, below=True)
