from .dictionary import Dictionary, load_dictionary
from .game import ScrabbleGame
from .game_types import ACROSS, DOWN, PASS, Placement, ScrabbleState

__all__ = [
    "ACROSS",
    "DOWN",
    "Dictionary",
    "PASS",
    "Placement",
    "ScrabbleGame",
    "ScrabbleState",
    "load_dictionary",
]
