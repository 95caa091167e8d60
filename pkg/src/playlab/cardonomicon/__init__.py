from .cards import CardDef, CardSetError, default_cardset, load_cardset
from .game import ATTACK, END, END_TURN, HERO, PLAY, CardonomiconGame, CardonomiconState

__all__ = [
    "ATTACK",
    "CardDef",
    "CardSetError",
    "CardonomiconGame",
    "CardonomiconState",
    "END",
    "END_TURN",
    "HERO",
    "PLAY",
    "default_cardset",
    "load_cardset",
]
