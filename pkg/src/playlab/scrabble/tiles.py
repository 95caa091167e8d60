"""Standard English tile values, tile counts, and the bonus-square layout.

Blank tiles are excluded: move identity (and therefore every word-level
metric) is keyed on the word string alone.  98 tiles total.
"""

from __future__ import annotations

# Bonus codes used in board layout grids.
NONE, DL, TL, DW, TW = 0, 1, 2, 3, 4

BONUS_NAMES = {NONE: "", DL: "DL", TL: "TL", DW: "DW", TW: "TW"}

LETTER_VALUES = {
    "A": 1, "B": 3, "C": 3, "D": 2, "E": 1, "F": 4, "G": 2, "H": 4, "I": 1,
    "J": 8, "K": 5, "L": 1, "M": 3, "N": 1, "O": 1, "P": 3, "Q": 10, "R": 1,
    "S": 1, "T": 1, "U": 1, "V": 4, "W": 4, "X": 8, "Y": 4, "Z": 10,
}

LETTER_COUNTS = {
    "A": 9, "B": 2, "C": 2, "D": 4, "E": 12, "F": 2, "G": 3, "H": 2, "I": 9,
    "J": 1, "K": 1, "L": 4, "M": 2, "N": 6, "O": 8, "P": 2, "Q": 1, "R": 6,
    "S": 4, "T": 6, "U": 4, "V": 2, "W": 2, "X": 1, "Y": 2, "Z": 1,
}

# Premium squares of the standard 15x15 board, upper-left quadrant
# (inclusive of the center row/column); the rest follows by symmetry.
_QUADRANT = {
    (0, 0): TW, (0, 7): TW, (7, 0): TW,
    (1, 1): DW, (2, 2): DW, (3, 3): DW, (4, 4): DW, (7, 7): DW,
    (1, 5): TL, (5, 1): TL, (5, 5): TL,
    (0, 3): DL, (3, 0): DL, (2, 6): DL, (6, 2): DL, (6, 6): DL, (3, 7): DL, (7, 3): DL,
}


def standard_bonus_layout(size: int = 15) -> list[int]:
    """Row-major bonus grid; the standard premium pattern only exists at 15."""
    grid = [NONE] * (size * size)
    if size == 15:
        for (r, c), bonus in _QUADRANT.items():
            for rr in (r, 14 - r):
                for cc in (c, 14 - c):
                    grid[rr * 15 + cc] = bonus
    else:
        grid[(size // 2) * size + size // 2] = DW  # keep the center double-word
    return grid


def letter_values_array() -> list[int]:
    """Values indexed 0..25 for A..Z."""
    return [LETTER_VALUES[chr(ord("A") + i)] for i in range(26)]


def letter_counts_array() -> list[int]:
    return [LETTER_COUNTS[chr(ord("A") + i)] for i in range(26)]
