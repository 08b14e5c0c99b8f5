"""Input validation utilities."""

import re
from typing import List, Tuple, Union

from .errors import ValidationError

_PAIR = re.compile(r'^\s*(\d+)\s*,\s*(\d+)\s*$')

def validate_pair(text: str) -> bool:
    """
    Check that a command-line pair such as "2,2" is well formed.

    Args:
        text: pair of naturals separated by a comma

    Returns:
        bool: True if valid, False otherwise
    """
    if not text or not isinstance(text, str):
        return False
    return _PAIR.match(text) is not None

def parse_pair(text: Union[str, List[int], Tuple[int, int]], field: str = "pair") -> Tuple[int, int]:
    """
    Parse "m,n" (or an already split [m, n]) into a pair of naturals.

    Raises:
        ValidationError: naming the offending field
    """
    if isinstance(text, (list, tuple)):
        if len(text) != 2 or not all(isinstance(v, int) and v >= 0 for v in text):
            raise ValidationError(f"Expected two naturals, got {text!r}", field)
        return int(text[0]), int(text[1])
    if not validate_pair(text):
        raise ValidationError(f"Expected 'm,n' with naturals m, n, got {text!r}", field)
    match = _PAIR.match(text)
    return int(match.group(1)), int(match.group(2))

def validate_label(label: str) -> bool:
    """Labels are non-empty strings without control characters."""
    if not label or not isinstance(label, str):
        return False
    return not any(ord(ch) < 32 for ch in label)

def parse_labels(text: str, field: str = "labels") -> List[str]:
    """
    Parse a comma separated label list such as "a,b,c".

    Raises:
        ValidationError: on empty, malformed or duplicate labels
    """
    if text is None:
        raise ValidationError("Missing label list", field)
    labels = [part.strip() for part in text.split(',')] if text.strip() else []
    for position, label in enumerate(labels):
        if not validate_label(label):
            raise ValidationError(f"Invalid label {label!r}", f"{field}[{position}]")
    if len(set(labels)) != len(labels):
        raise ValidationError(f"Duplicate labels in {text!r}", field)
    return labels

def validate_window(m: int, n: int, limit: int) -> bool:
    """Check that a window (m, n) is non-negative and within the configured bound."""
    try:
        return 0 <= int(m) <= limit and 0 <= int(n) <= limit
    except (ValueError, TypeError):
        return False
