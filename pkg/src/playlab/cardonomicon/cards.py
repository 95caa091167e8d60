"""Card definitions and deck-template loading for the creature-combat game."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

DECK_SIZE = 20


@dataclass(frozen=True)
class CardDef:
    name: str
    mana_cost: int
    attack: int
    health: int

    def __post_init__(self):
        if self.mana_cost < 0:
            raise ValueError(f"{self.name}: mana_cost must be >= 0")
        if self.attack < 0:
            raise ValueError(f"{self.name}: attack must be >= 0")
        if self.health < 1:
            raise ValueError(f"{self.name}: health must be >= 1")


class CardSetError(ValueError):
    pass


def load_cardset(source) -> list[CardDef]:
    """Load the 20-card deck template both players copy.

    Accepts a path, file object, or parsed JSON.  The document is either a
    list of card records or {"cards": [...]}, each record carrying name,
    mana_cost, attack, and health.
    """
    if isinstance(source, (str, bytes)):
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    elif hasattr(source, "read"):
        doc = json.load(source)
    else:
        doc = source
    if isinstance(doc, dict):
        doc = doc.get("cards")
    if not isinstance(doc, list):
        raise CardSetError("card set must be a list of records (or {'cards': [...]})")
    cards = []
    for i, rec in enumerate(doc):
        try:
            cards.append(
                CardDef(
                    name=str(rec["name"]),
                    mana_cost=int(rec["mana_cost"]),
                    attack=int(rec["attack"]),
                    health=int(rec["health"]),
                )
            )
        except KeyError as exc:
            raise CardSetError(f"card {i}: missing field {exc}") from None
        except ValueError as exc:
            raise CardSetError(f"card {i}: {exc}") from None
    if len(cards) != DECK_SIZE:
        raise CardSetError(f"card set must have exactly {DECK_SIZE} cards, got {len(cards)}")
    names = [c.name for c in cards]
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise CardSetError(f"duplicate card names: {', '.join(dupes)}")
    return cards


def default_cardset() -> list[CardDef]:
    """The shipped deck template; stats are a tunable experiment input."""
    with resources.files("playlab.data").joinpath("cards_default.json").open("r") as fh:
        return load_cardset(fh)
