"""Shared parsing and formatting helpers."""

import re
from collections.abc import Sequence


def parse_word(value: str) -> tuple[int, ...]:
    """Parse a word written as whitespace- or comma-separated generator indices.

    Handles formats like:
    - "0 4 3 5" -> (0, 4, 3, 5)
    - "0,4,3,5" -> (0, 4, 3, 5)
    - "" or "e" -> ()
    """
    value = value.strip()
    if not value or value == "e":
        return ()
    tokens = re.split(r"[\s,]+", value)
    try:
        return tuple(int(token) for token in tokens if token)
    except ValueError:
        raise ValueError(f"cannot parse word {value!r}") from None


def format_letters(letters: Sequence[int]) -> str:
    """Format a word as space-separated indices; the empty word is 'e'."""
    return " ".join(str(s) for s in letters) or "e"


def format_layers(layers: Sequence[Sequence[int]]) -> str:
    """Format Cartier-Foata layers as '(0 4)(3 5)(1)'."""
    if not layers:
        return "e"
    return "".join("(" + " ".join(str(s) for s in layer) + ")" for layer in layers)
