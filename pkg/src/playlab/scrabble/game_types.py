"""Move and state value types for the word-placement domain."""

from __future__ import annotations

from dataclasses import dataclass

ACROSS = 0
DOWN = 1


@dataclass(frozen=True, order=True)
class Placement:
    """One word placement; (row, col) is the first letter of the main word."""

    row: int
    col: int
    direction: int
    word: str

    def cells(self) -> list[tuple[int, int]]:
        dr, dc = (0, 1) if self.direction == ACROSS else (1, 0)
        return [(self.row + dr * i, self.col + dc * i) for i in range(len(self.word))]


class PassMove:
    """Singleton no-op move, always legal, always listed last."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Pass"


PASS = PassMove()


class ScrabbleState:
    """Value-semantic snapshot: board, racks, bag, scores, turn bookkeeping.

    `board` is row-major, 0 for empty, 1..26 for A..Z.  Racks and bag are
    26-slot letter-count arrays.
    """

    __slots__ = (
        "board", "racks", "bag", "bag_total", "scores",
        "to_move", "passes", "tiles_on_board",
    )

    def __init__(self, board, racks, bag, bag_total, scores, to_move, passes, tiles_on_board):
        self.board = board
        self.racks = racks
        self.bag = bag
        self.bag_total = bag_total
        self.scores = scores
        self.to_move = to_move
        self.passes = passes
        self.tiles_on_board = tiles_on_board

    def copy(self) -> "ScrabbleState":
        return ScrabbleState(
            bytearray(self.board),
            [list(self.racks[0]), list(self.racks[1])],
            list(self.bag),
            self.bag_total,
            list(self.scores),
            self.to_move,
            self.passes,
            self.tiles_on_board,
        )

    def rack_counts(self, player: int) -> dict[str, int]:
        rack = self.racks[player]
        return {chr(ord("A") + i): rack[i] for i in range(26) if rack[i] > 0}
